#pragma once

#include <string>
#include <vector>

#include "hdiv/vectorfield.hpp"

namespace hdiv {

struct RankCertificate {
  int count = 0;
  int rank = 0;
  // Nullspace basis over the rationals: each vector lists one coefficient per
  // input field; empty when the family has full rank.
  std::vector<std::vector<Rational>> nullspace;
};

// Exact rank over Q of the matrix whose rows stack the monomial coefficients of
// each field's components. Nonzero real scales cannot change the rank, so the
// computation runs on the rational polynomial parts. Fast path: full row rank
// certified by a single modular elimination; otherwise exact fraction-free
// elimination with nullspace extraction.
RankCertificate coefficient_rank(const std::vector<VectorField>& fields);

// Exact rank only, via Bareiss fraction-free elimination (no modular shortcut).
int coefficient_rank_exact(const std::vector<VectorField>& fields);

// Exact rank over Q(sqrt 2) of the family f_i = a[i] + sqrt(2) * b[i], needed
// for families whose coefficients mix two incommensurable direction lengths.
// Restriction of scalars: each function becomes the two rational rows
// (A_i | 2 B_i) and (B_i | A_i); the rational rank of that stack is exactly
// twice the rank over the extension field.
int coefficient_rank_sqrt2(const std::vector<VectorField>& a,
                           const std::vector<VectorField>& b);

}  // namespace hdiv
