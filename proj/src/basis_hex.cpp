#include "hdiv/basis_hex.hpp"

#include <stdexcept>

#include "hdiv/polynomials1d.hpp"

namespace hdiv {

namespace {

MPoly unit_to_sym3(int axis) {
  return MPoly::variable(3, axis).scaled(2) - MPoly::constant(3, 1);
}

VectorField poly_times(const MPoly& s, const VectorField& v) {
  VectorField out(v.dim, v.scale);
  for (int c = 0; c < v.dim; ++c) out.comp[c] = s * v.comp[c];
  return out;
}

VectorField minus(const VectorField& a, const VectorField& b) {
  VectorField out(a.dim, a.scale);
  for (int c = 0; c < a.dim; ++c) out.comp[c] = a.comp[c] - b.comp[c];
  return out;
}

}  // namespace

std::vector<BasisFunction> hex_face_rt0() {
  const auto& ref = reference(ElementKind::Hex);
  std::vector<BasisFunction> out;
  for (const auto& f : ref.face_data) {
    VectorField v(3, f.normal_scale);
    for (int c = 0; c < 3; ++c) v.comp[c] = f.extension.scaled(f.normal_dir[c]);
    BasisFunction bf;
    bf.cat = Category::HexFaceRT;
    bf.entity = f.id;
    bf.field = std::move(v);
    out.push_back(std::move(bf));
  }
  return out;
}

std::vector<BasisFunction> hex_face_higher(int p) {
  const auto& ref = reference(ElementKind::Hex);
  std::vector<BasisFunction> out;
  auto L = [&](int n, const MPoly& arg) { return compose1(integrated_legendre(n), arg); };
  for (const auto& f : ref.face_data) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        MPoly A = L(i + 2, f.xi), B = L(j + 2, f.eta);
        VectorField inner = minus(poly_times(B, gradient(A)), poly_times(A, gradient(B)));
        BasisFunction bf;
        bf.cat = Category::HexFaceHigherIJ;
        bf.entity = f.id;
        bf.idx = {i, j, 0};
        bf.field = curl3d(poly_times(f.extension, inner));
        out.push_back(std::move(bf));
      }
    for (int i = 0; i < p; ++i) {
      BasisFunction bf;
      bf.cat = Category::HexFaceHigherI;
      bf.entity = f.id;
      bf.idx = {i, 0, 0};
      bf.field = curl3d(poly_times(f.extension * L(i + 2, f.xi), gradient(f.eta)));
      out.push_back(std::move(bf));
    }
    for (int j = 0; j < p; ++j) {
      BasisFunction bf;
      bf.cat = Category::HexFaceHigherJ;
      bf.entity = f.id;
      bf.idx = {0, j, 0};
      bf.field = curl3d(poly_times(f.extension * L(j + 2, f.eta), gradient(f.xi)));
      out.push_back(std::move(bf));
    }
  }
  return out;
}

std::vector<BasisFunction> hex_interior(int p) {
  std::vector<BasisFunction> out;
  MPoly x1 = unit_to_sym3(0), y1 = unit_to_sym3(1), z1 = unit_to_sym3(2);
  auto L = [&](int n, const MPoly& arg) { return compose1(integrated_legendre(n), arg); };
  auto l = [&](int n, const MPoly& arg) { return compose1(legendre(n), arg); };
  auto push = [&](Category cat, int sub, std::array<int, 3> idx, VectorField f) {
    BasisFunction bf;
    bf.cat = cat;
    bf.sub = sub;
    bf.idx = idx;
    bf.field = std::move(f);
    out.push_back(std::move(bf));
  };
  // Divergence-free triple-index families.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        VectorField f(3);
        f.comp[0] = (L(i + 2, x1) * l(j + 1, y1) * l(k + 1, z1)).scaled(4);
        f.comp[2] = (l(i + 1, x1) * l(j + 1, y1) * L(k + 2, z1)).scaled(-4);
        push(Category::HexInterior1, 1, {i, j, k}, std::move(f));
      }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        VectorField f(3);
        f.comp[1] = (l(i + 1, x1) * L(j + 2, y1) * l(k + 1, z1)).scaled(4);
        f.comp[2] = (l(i + 1, x1) * l(j + 1, y1) * L(k + 2, z1)).scaled(-4);
        push(Category::HexInterior1, 2, {i, j, k}, std::move(f));
      }
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) {
      VectorField f(3);
      f.comp[2] = (l(j + 1, y1) * L(k + 2, z1)).scaled(2);
      f.comp[1] = (L(j + 2, y1) * l(k + 1, z1)).scaled(-2);
      push(Category::HexInterior1, 3, {0, j, k}, std::move(f));
    }
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      VectorField f(3);
      f.comp[0] = (L(i + 2, x1) * l(k + 1, z1)).scaled(2);
      f.comp[2] = (l(i + 1, x1) * L(k + 2, z1)).scaled(-2);
      push(Category::HexInterior1, 4, {i, 0, k}, std::move(f));
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      VectorField f(3);
      f.comp[0] = (L(i + 2, x1) * l(j + 1, y1)).scaled(2);
      f.comp[1] = (l(i + 1, x1) * L(j + 2, y1)).scaled(-2);
      push(Category::HexInterior1, 5, {i, j, 0}, std::move(f));
    }
  // Symmetric-pair families.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        VectorField f(3);
        f.comp[0] = L(i + 2, x1) * l(j + 1, y1) * l(k + 1, z1);
        f.comp[1] = l(i + 1, x1) * L(j + 2, y1) * l(k + 1, z1);
        push(Category::HexInterior2, 1, {i, j, k}, std::move(f));
      }
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) {
      VectorField f(3);
      f.comp[1] = L(j + 2, y1) * l(k + 1, z1);
      f.comp[2] = l(j + 1, y1) * L(k + 2, z1);
      push(Category::HexInterior2, 2, {0, j, k}, std::move(f));
    }
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      VectorField f(3);
      f.comp[2] = l(i + 1, x1) * L(k + 2, z1);
      f.comp[0] = L(i + 2, x1) * l(k + 1, z1);
      push(Category::HexInterior2, 3, {i, 0, k}, std::move(f));
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      VectorField f(3);
      f.comp[0] = L(i + 2, x1) * l(j + 1, y1);
      f.comp[1] = l(i + 1, x1) * L(j + 2, y1);
      push(Category::HexInterior2, 4, {i, j, 0}, std::move(f));
    }
  // Single-axis families.
  for (int i = 0; i < p; ++i) {
    VectorField f(3);
    f.comp[0] = L(i + 2, x1);
    push(Category::HexInterior3, 1, {i, 0, 0}, std::move(f));
  }
  for (int j = 0; j < p; ++j) {
    VectorField f(3);
    f.comp[1] = L(j + 2, y1);
    push(Category::HexInterior3, 2, {0, j, 0}, std::move(f));
  }
  for (int k = 0; k < p; ++k) {
    VectorField f(3);
    f.comp[2] = L(k + 2, z1);
    push(Category::HexInterior3, 3, {0, 0, k}, std::move(f));
  }
  return out;
}

BasisSet build_hex(int p) {
  if (p < 1 || p > 4) throw std::invalid_argument("hex order must be in [1,4]");
  BasisSet set;
  set.kind = ElementKind::Hex;
  set.p = p;
  auto push = [&](std::vector<BasisFunction>&& fns) {
    for (auto& f : fns) {
      f.id = set.dimension();
      set.fns.push_back(std::move(f));
    }
  };
  push(hex_face_rt0());
  push(hex_face_higher(p));
  push(hex_interior(p));
  return set;
}

}  // namespace hdiv
