#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hdiv/basis_hex.hpp"
#include "hdiv/basis_quad.hpp"
#include "hdiv/basis_tet.hpp"
#include "hdiv/basis_tri.hpp"
#include "hdiv/checks.hpp"
#include "hdiv/divfree.hpp"

using namespace hdiv;

namespace {

// Independent numerical route for ||div(u + c*chi)||^2: tabulated divergence
// values over a quadrature rule sized from the actual divergence degrees.
struct DivTable {
  QuadratureRule rule;
  std::vector<std::vector<double>> fn_vals;  // [function][point]
  std::vector<double> chi_vals;

  DivTable(const BasisSet& set, const VectorField& chi) {
    std::vector<MPoly> divs;
    std::vector<double> scales;
    int maxdeg = 0;
    for (const auto& fn : set.fns) {
      divs.push_back(divergence(fn.field));
      scales.push_back(fn.field.scale);
      maxdeg = std::max(maxdeg, divs.back().total_degree());
    }
    MPoly dchi = divergence(chi);
    maxdeg = std::max(maxdeg, dchi.total_degree());
    rule = quadrature(set.kind, 2 * maxdeg);
    size_t npts = rule.points.size();
    fn_vals.resize(divs.size(), std::vector<double>(npts));
    chi_vals.resize(npts);
    for (size_t q = 0; q < npts; ++q) {
      const double* x = rule.points[q].data();
      for (size_t i = 0; i < divs.size(); ++i)
        fn_vals[i][q] = scales[i] * divs[i].eval_double(x);
      chi_vals[q] = chi.scale * dchi.eval_double(x);
    }
  }

  double norm2(const std::vector<double>& coef, double c) const {
    double s = 0;
    for (size_t q = 0; q < rule.points.size(); ++q) {
      double d = c * chi_vals[q];
      for (size_t i = 0; i < fn_vals.size(); ++i) d += coef[i] * fn_vals[i][q];
      s += rule.weights[q] * d * d;
    }
    return s;
  }
};

}  // namespace

TEST_CASE("control bubbles are conforming with mean-free nonzero divergence") {
  for (auto kind : {ElementKind::Quad, ElementKind::Hex, ElementKind::Tri, ElementKind::Tet}) {
    int pmax = (kind == ElementKind::Quad || kind == ElementKind::Tri) ? 6 : 4;
    const auto& el = reference(kind);
    for (int p = 1; p <= pmax; ++p) {
      VectorField chi = bubble_for(kind, p);
      MPoly d = divergence(chi);
      CHECK(!d.is_zero());
      CHECK(integrate_reference(d, kind) == 0);
      if (el.dim == 2)
        for (const auto& e : el.edge_data) CHECK(normal_trace_on_edge(chi, e).is_zero());
      else
        for (const auto& f : el.face_data) CHECK(normal_trace_on_face(chi, f).is_zero());
    }
  }
}

TEST_CASE("bubble order tracks the set order") {
  CHECK(bubble_for(ElementKind::Quad, 1).comp[0].total_degree() >= 2);
  // Rising p must rise the bubble order: divergence degree grows.
  int d3 = divergence(bubble_for(ElementKind::Tri, 3)).total_degree();
  int d5 = divergence(bubble_for(ElementKind::Tri, 5)).total_degree();
  CHECK(d5 > d3);
}

TEST_CASE("single-field divergence norm against a hand integral") {
  // v = (x^2, xy): div = 3x, integral of 9x^2 over the unit square = 3.
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  VectorField v({x * x, x * y});
  CHECK(divergence_norm_single(v, ElementKind::Quad) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  // Scale factors enter linearly.
  VectorField w({x * x, x * y}, 0.5);
  CHECK(divergence_norm_single(w, ElementKind::Quad) ==
        doctest::Approx(0.5 * std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("augmentation never increases the divergence norm and lands at the minimum") {
  std::vector<BasisSet> sets;
  sets.push_back(build_quad(2));
  sets.push_back(build_hex(2));
  sets.push_back(build_tri(2));
  sets.push_back(build_tet(2, TetVariant::FirstKind));
  for (const auto& set : sets) {
    VectorField chi = bubble_for(set.kind, set.p);
    DivTable table(set, chi);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1, 1);
    for (int rep = 0; rep < 10; ++rep) {
      DiscreteField u;
      u.set = &set;
      u.coeff.resize(set.dimension());
      for (auto& c : u.coeff) c = dist(rng);
      AugmentationResult res = augment(u, set.p);
      CHECK(res.after_norm <= res.before_norm + 1e-12);
      // Exact route against the independent quadrature route.
      double j0 = table.norm2(u.coeff, 0.0);
      double jc = table.norm2(u.coeff, res.c_chi);
      CHECK(res.before_norm * res.before_norm == doctest::Approx(j0).epsilon(1e-9));
      CHECK(res.after_norm * res.after_norm ==
            doctest::Approx(jc).epsilon(1e-9).scale(std::max(1.0, j0)));
      // One-dimensional optimality.
      CHECK(table.norm2(u.coeff, res.c_chi + 0.01) >= jc - 1e-10);
      CHECK(table.norm2(u.coeff, res.c_chi - 0.01) >= jc - 1e-10);
    }
  }
}

TEST_CASE("divergence-free input is left untouched") {
  BasisSet set = build_tri(2);
  DiscreteField u;
  u.set = &set;
  u.coeff.assign(set.dimension(), 0.0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1, 1);
  for (int i = 0; i < set.dimension(); ++i)
    if (set.fns[i].cat == Category::TriEdgeHigher) u.coeff[i] = dist(rng);
  AugmentationResult res = augment(u, set.p);
  CHECK(res.before_norm == 0.0);
  CHECK(res.c_chi == 0.0);
  CHECK(res.after_norm == 0.0);
  CHECK(res.residual_degree == -1);
}

TEST_CASE("tensor elements at order two sit at the optimum already") {
  // The bubble divergence is orthogonal to every divergence the tensor sets
  // produce, so the optimal single-bubble coefficient is exactly zero.
  for (auto kind : {ElementKind::Quad, ElementKind::Hex}) {
    BasisSet set = kind == ElementKind::Quad ? build_quad(2) : build_hex(2);
    DiscreteField u;
    u.set = &set;
    u.coeff.resize(set.dimension());
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(-1, 1);
    for (auto& c : u.coeff) c = dist(rng);
    AugmentationResult res = augment(u, set.p);
    CHECK(res.c_chi == 0.0);
    CHECK(res.after_norm == res.before_norm);
  }
}

TEST_CASE("simplex elements achieve strict reduction on generic fields") {
  for (auto kind : {ElementKind::Tri, ElementKind::Tet}) {
    BasisSet set =
        kind == ElementKind::Tri ? build_tri(2) : build_tet(2, TetVariant::FirstKind);
    DiscreteField u;
    u.set = &set;
    u.coeff.resize(set.dimension());
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1, 1);
    for (auto& c : u.coeff) c = dist(rng);
    AugmentationResult res = augment(u, set.p);
    CHECK(res.c_chi != 0.0);
    CHECK(res.after_norm < res.before_norm);
    CHECK(res.residual_degree >= 0);
  }
}
