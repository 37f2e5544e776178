#include "hdiv/basis_tri.hpp"

#include <cmath>
#include <stdexcept>

#include "hdiv/polynomials1d.hpp"

namespace hdiv {

std::vector<BasisFunction> tri_edge(int p) {
  const auto& ref = reference(ElementKind::Tri);
  std::vector<BasisFunction> out;
  for (const auto& e : ref.edge_data) {
    const MPoly& l1 = ref.lambda[e.ends[0]];
    const MPoly& l2 = ref.lambda[e.ends[1]];
    VectorField c1 = curl2d(l1), c2 = curl2d(l2);
    VectorField f(2);
    for (int c = 0; c < 2; ++c) f.comp[c] = l2 * c1.comp[c] - l1 * c2.comp[c];
    BasisFunction bf;
    bf.cat = Category::TriEdgeRT;
    bf.entity = e.id;
    bf.field = std::move(f);
    out.push_back(std::move(bf));
  }
  for (const auto& e : ref.edge_data) {
    const MPoly& l1 = ref.lambda[e.ends[0]];
    const MPoly& l2 = ref.lambda[e.ends[1]];
    for (int j = 0; j < p; ++j) {
      MPoly w = scaled_integrated_legendre_at(j + 2, e.param, l1 + l2);
      BasisFunction bf;
      bf.cat = Category::TriEdgeHigher;
      bf.entity = e.id;
      bf.idx = {j, 0, 0};
      bf.field = curl2d(w);
      out.push_back(std::move(bf));
    }
  }
  return out;
}

std::vector<BasisFunction> tri_edge_interior(int p) {
  std::vector<BasisFunction> out;
  if (p < 2) return out;
  const auto& ref = reference(ElementKind::Tri);
  MPoly one = MPoly::constant(2, 1);
  for (const auto& e : ref.edge_data) {
    const MPoly& l1 = ref.lambda[e.ends[0]];
    const MPoly& l2 = ref.lambda[e.ends[1]];
    double tn = 0;
    for (const auto& t : e.tangent) tn += t.get_d() * t.get_d();
    tn = std::sqrt(tn);
    for (int i = 0; i <= p - 2; ++i) {
      double Ci = std::sqrt(2.0 * (i + 2) * (i + 3) * (2 * i + 3) * (2 * i + 5));
      MPoly base = l1 * l2 * homogenized_jacobi_at(i, 0, 2, l1, one - l2);
      VectorField f(2, Ci / tn);
      for (int c = 0; c < 2; ++c) f.comp[c] = base.scaled(e.tangent[c]);
      BasisFunction bf;
      bf.cat = Category::TriEdgeInterior;
      bf.entity = e.id;
      bf.idx = {i, 0, 0};
      bf.field = std::move(f);
      out.push_back(std::move(bf));
    }
  }
  return out;
}

std::vector<BasisFunction> tri_interior_bubble(int p) {
  std::vector<BasisFunction> out;
  if (p < 3) return out;
  const auto& ref = reference(ElementKind::Tri);
  MPoly one = MPoly::constant(2, 1);
  const MPoly& l0 = ref.lambda[0];
  const MPoly& l1 = ref.lambda[1];
  const MPoly& l2 = ref.lambda[2];
  for (int m = 0; m <= p - 3; ++m)
    for (int n = 0; n <= p - 3 - m; ++n) {
      double Cmn = std::sqrt(static_cast<double>(m + 3) * (m + 4) * (2 * m + 5) *
                             (2 * m + n + 6) * (2 * m + n + 7) * (2 * m + 2 * n + 8) /
                             ((m + 1) * (m + 2) * (n + 1) * (n + 2)));
      MPoly a1 = homogenized_jacobi_at(m, 2, 2, l1, one - l0);
      MPoly a2 = compose1(jacobi(n, 2 * m + 5, 2), l0.scaled(2) - one);
      MPoly base = l0 * l1 * l2 * a1 * a2;
      for (int d = 0; d < 2; ++d) {
        VectorField f(2, Cmn);
        f.comp[d] = base;
        BasisFunction bf;
        bf.cat = Category::TriBubble;
        bf.idx = {m, n, 0};
        bf.dir = d;
        bf.field = std::move(f);
        out.push_back(std::move(bf));
      }
    }
  return out;
}

BasisSet build_tri(int p) {
  if (p < 1 || p > 6) throw std::invalid_argument("tri order must be in [1,6]");
  BasisSet set;
  set.kind = ElementKind::Tri;
  set.p = p;
  auto push = [&](std::vector<BasisFunction>&& fns) {
    for (auto& f : fns) {
      f.id = set.dimension();
      set.fns.push_back(std::move(f));
    }
  };
  push(tri_edge(p));
  push(tri_edge_interior(p));
  push(tri_interior_bubble(p));
  return set;
}

}  // namespace hdiv
