#pragma once

#include "hdiv/basis.hpp"
#include "hdiv/rank.hpp"

namespace hdiv {

// Edge-based face functions: 12p functions for FirstKind/SecondKind, or the
// study-only AC family (p <= 4) that loses independence at p = 2.
std::vector<BasisFunction> tet_edge_face(int p, TetVariant variant);

std::vector<BasisFunction> tet_face_bubble(int p);      // empty for p < 3
std::vector<BasisFunction> tet_edge_interior(int p);    // empty for p < 2
std::vector<BasisFunction> tet_face_interior(int p);    // empty for p < 3
std::vector<BasisFunction> tet_interior_bubble(int p);  // empty for p < 4

BasisSet build_tet(int p, TetVariant variant);  // 1 <= p <= 4; variant != AC

// Exact two-part decomposition f_i = a[i] + sqrt(2) * b[i] of the second-kind
// edge-based face functions (up to per-function positive scales), for the
// exact rank certificate over Q(sqrt 2).
void tet_second_kind_parts(int p, std::vector<VectorField>& a, std::vector<VectorField>& b);

// Exact rank and rational nullspace of the AC family at order p.
RankCertificate degeneracy_certificate(int p);

}  // namespace hdiv
