#include "hdiv/divfree.hpp"

#include <cmath>
#include <stdexcept>

#include "hdiv/basis_tet.hpp"
#include "hdiv/basis_tri.hpp"
#include "hdiv/polynomials1d.hpp"

namespace hdiv {

namespace {

// Exact <div a, div b> folded with the two field scales.
double div_pair(const MPoly& da, const MPoly& db, double sa, double sb, ElementKind kind) {
  return integrate_reference(da * db, kind).get_d() * sa * sb;
}

int bubble_order(ElementKind kind, int p) {
  switch (kind) {
    case ElementKind::Quad:
    case ElementKind::Hex: return std::max(2, p + 1);
    case ElementKind::Tri: return std::max(3, p + 1);
    case ElementKind::Tet: return std::max(4, p + 1);
  }
  return p + 1;
}

}  // namespace

VectorField bubble_for(ElementKind kind, int p) {
  int q = bubble_order(kind, p);
  switch (kind) {
    case ElementKind::Quad: {
      MPoly x1 = MPoly::variable(2, 0).scaled(2) - MPoly::constant(2, 1);
      MPoly y1 = MPoly::variable(2, 1).scaled(2) - MPoly::constant(2, 1);
      VectorField f(2);
      f.comp[0] = compose1(integrated_legendre(q + 1), x1) * compose1(integrated_legendre(2), y1);
      f.comp[1] = compose1(integrated_legendre(2), x1) * compose1(integrated_legendre(q + 1), y1);
      return f;
    }
    case ElementKind::Hex: {
      MPoly x1 = MPoly::variable(3, 0).scaled(2) - MPoly::constant(3, 1);
      MPoly y1 = MPoly::variable(3, 1).scaled(2) - MPoly::constant(3, 1);
      MPoly z1 = MPoly::variable(3, 2).scaled(2) - MPoly::constant(3, 1);
      auto L = [&](int n, const MPoly& a) { return compose1(integrated_legendre(n), a); };
      VectorField f(3);
      f.comp[0] = L(q + 1, x1) * L(2, y1) * L(2, z1);
      f.comp[1] = L(2, x1) * L(q + 1, y1) * L(2, z1);
      f.comp[2] = L(2, x1) * L(2, y1) * L(q + 1, z1);
      return f;
    }
    case ElementKind::Tri: {
      // Interior bubble instance (m, n) = (q-3, 0) along the first axis.
      auto fns = tri_interior_bubble(q);
      for (auto& bf : fns)
        if (bf.idx[0] == q - 3 && bf.idx[1] == 0 && bf.dir == 0) return bf.field;
      break;
    }
    case ElementKind::Tet: {
      auto fns = tet_interior_bubble(q);
      for (auto& bf : fns)
        if (bf.idx[0] == q - 4 && bf.idx[1] == 0 && bf.idx[2] == 0 && bf.dir == 0)
          return bf.field;
      break;
    }
  }
  throw std::runtime_error("no bubble instance found");
}

double divergence_norm_single(const VectorField& f, ElementKind kind) {
  MPoly d = divergence(f);
  double v = integrate_reference(d * d, kind).get_d();
  return std::abs(f.scale) * std::sqrt(std::max(0.0, v));
}

double divergence_norm(const DiscreteField& field) {
  const BasisSet& set = *field.set;
  int n = set.dimension();
  std::vector<MPoly> divs;
  divs.reserve(n);
  for (const auto& bf : set.fns) divs.push_back(divergence(bf.field));
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    if (divs[i].is_zero() || field.coeff[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (divs[j].is_zero() || field.coeff[j] == 0.0) continue;
      acc += field.coeff[i] * field.coeff[j] *
             div_pair(divs[i], divs[j], set.fns[i].field.scale, set.fns[j].field.scale, set.kind);
    }
  }
  return std::sqrt(std::max(0.0, acc));
}

AugmentationResult augment(const DiscreteField& field, int p) {
  const BasisSet& set = *field.set;
  AugmentationResult res;
  res.q = bubble_order(set.kind, p);
  VectorField chi = bubble_for(set.kind, p);
  MPoly dchi = divergence(chi);
  double denom = div_pair(dchi, dchi, chi.scale, chi.scale, set.kind);
  double cross = 0;
  int deg_u = -1;
  for (int i = 0; i < set.dimension(); ++i) {
    if (field.coeff[i] == 0.0) continue;
    MPoly di = divergence(set.fns[i].field);
    if (di.is_zero()) continue;
    deg_u = std::max(deg_u, di.total_degree());
    cross += field.coeff[i] *
             div_pair(di, dchi, set.fns[i].field.scale, chi.scale, set.kind);
  }
  res.c_chi = (denom > 0) ? -cross / denom : 0.0;
  res.before_norm = divergence_norm(field);
  double after_sq = res.before_norm * res.before_norm + 2.0 * res.c_chi * cross +
                    res.c_chi * res.c_chi * denom;
  res.after_norm = std::sqrt(std::max(0.0, after_sq));
  res.residual_degree =
      (res.after_norm <= 1e-14 * std::max(1.0, res.before_norm))
          ? -1
          : std::max(deg_u, res.c_chi != 0.0 ? dchi.total_degree() : -1);
  return res;
}

}  // namespace hdiv
