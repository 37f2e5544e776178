#pragma once

#include <string>
#include <vector>

#include "hdiv/assembly.hpp"

namespace hdiv {

struct GroupDeviation {
  std::string label;
  int size = 0;
  double max_dev = 0.0;  // max |G - I| over the block
};

// Gram blocks of the families built with explicit normalization constants:
// each must equal the identity. Empty for the tensor elements, whose families
// carry no normalization. The second-kind face functions carry none either.
std::vector<GroupDeviation> orthonormal_block_deviations(const BasisSet& set);

struct DivfreeReport {
  int checked = 0;
  std::vector<int> failed_ids;
};

// Exact zero-divergence check for the curl-constructed families.
DivfreeReport check_divergence_free(const BasisSet& set);

struct TraceReport {
  int checked = 0;
  std::vector<std::string> failures;
};

// Exact normal-trace checks: zero on every non-owning facet (all facets for
// interior-type families), plus the lowest-order unit/constant trace claims.
TraceReport check_traces(const BasisSet& set);

}  // namespace hdiv
