#pragma once

#include "hdiv/basis.hpp"

namespace hdiv {

std::vector<BasisFunction> quad_edge_lowest();
std::vector<BasisFunction> quad_edge_higher(int p);
std::vector<BasisFunction> quad_interior(int p);
BasisSet build_quad(int p);  // 1 <= p <= 6

}  // namespace hdiv
