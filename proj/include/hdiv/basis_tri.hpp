#pragma once

#include "hdiv/basis.hpp"

namespace hdiv {

std::vector<BasisFunction> tri_edge(int p);
std::vector<BasisFunction> tri_edge_interior(int p);      // empty for p < 2
std::vector<BasisFunction> tri_interior_bubble(int p);    // empty for p < 3
BasisSet build_tri(int p);  // 1 <= p <= 6

}  // namespace hdiv
