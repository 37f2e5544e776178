#include "hdiv/basis_quad.hpp"

#include <stdexcept>

#include "hdiv/polynomials1d.hpp"

namespace hdiv {

namespace {

// [-1,1] coordinates 2*xi-1, 2*eta-1.
MPoly unit_to_sym(int axis) {
  return MPoly::variable(2, axis).scaled(2) - MPoly::constant(2, 1);
}

}  // namespace

std::vector<BasisFunction> quad_edge_lowest() {
  const auto& ref = reference(ElementKind::Quad);
  std::vector<BasisFunction> out;
  for (const auto& e : ref.edge_data) {
    VectorField w = curl2d(e.param);  // constant direction
    VectorField f(2);
    for (int c = 0; c < 2; ++c) f.comp[c] = (e.extension * w.comp[c]).scaled(frac(1, 2));
    BasisFunction bf;
    bf.cat = Category::QuadEdgeRT;
    bf.entity = e.id;
    bf.field = std::move(f);
    out.push_back(std::move(bf));
  }
  return out;
}

std::vector<BasisFunction> quad_edge_higher(int p) {
  const auto& ref = reference(ElementKind::Quad);
  std::vector<BasisFunction> out;
  for (const auto& e : ref.edge_data)
    for (int j = 0; j < p; ++j) {
      MPoly u = e.extension * compose1(integrated_legendre(j + 2), e.param);
      BasisFunction bf;
      bf.cat = Category::QuadEdgeHigher;
      bf.entity = e.id;
      bf.idx = {j, 0, 0};
      bf.field = curl2d(u);
      out.push_back(std::move(bf));
    }
  return out;
}

std::vector<BasisFunction> quad_interior(int p) {
  std::vector<BasisFunction> out;
  MPoly x1 = unit_to_sym(0), y1 = unit_to_sym(1);
  auto L = [&](int n, const MPoly& arg) { return compose1(integrated_legendre(n), arg); };
  auto dL = [&](int n, const MPoly& arg) {
    return compose1(integrated_legendre(n).derivative(0), arg);
  };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      BasisFunction bf;
      bf.cat = Category::QuadInterior1;
      bf.idx = {i, j, 0};
      bf.field = curl2d(L(i + 2, x1) * L(j + 2, y1));
      out.push_back(std::move(bf));
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      VectorField f(2);
      f.comp[0] = L(i + 2, x1) * dL(j + 2, y1);
      f.comp[1] = dL(i + 2, x1) * L(j + 2, y1);
      BasisFunction bf;
      bf.cat = Category::QuadInterior2;
      bf.idx = {i, j, 0};
      bf.field = std::move(f);
      out.push_back(std::move(bf));
    }
  for (int i = 0; i < p; ++i) {
    VectorField f(2);
    f.comp[0] = L(i + 2, x1);
    BasisFunction bf;
    bf.cat = Category::QuadInterior3Xi;
    bf.idx = {i, 0, 0};
    bf.field = std::move(f);
    out.push_back(std::move(bf));
  }
  for (int i = 0; i < p; ++i) {
    VectorField f(2);
    f.comp[1] = L(i + 2, y1);
    BasisFunction bf;
    bf.cat = Category::QuadInterior3Eta;
    bf.idx = {i, 0, 0};
    bf.field = std::move(f);
    out.push_back(std::move(bf));
  }
  return out;
}

BasisSet build_quad(int p) {
  if (p < 1 || p > 6) throw std::invalid_argument("quad order must be in [1,6]");
  BasisSet set;
  set.kind = ElementKind::Quad;
  set.p = p;
  auto push = [&](std::vector<BasisFunction>&& fns) {
    for (auto& f : fns) {
      f.id = set.dimension();
      set.fns.push_back(std::move(f));
    }
  };
  push(quad_edge_lowest());
  push(quad_edge_higher(p));
  push(quad_interior(p));
  return set;
}

}  // namespace hdiv
