#pragma once

#include "hdiv/basis.hpp"

namespace hdiv {

std::vector<BasisFunction> hex_face_rt0();
std::vector<BasisFunction> hex_face_higher(int p);
std::vector<BasisFunction> hex_interior(int p);
BasisSet build_hex(int p);  // 1 <= p <= 4

}  // namespace hdiv
