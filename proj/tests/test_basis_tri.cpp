#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdiv/basis_tri.hpp"
#include "hdiv/checks.hpp"
#include "hdiv/rank.hpp"

using namespace hdiv;

TEST_CASE("dimension formula (p+1)(p+2)") {
  for (int p = 1; p <= 6; ++p) {
    BasisSet set = build_tri(p);
    CHECK(set.dimension() == (p + 1) * (p + 2));
    CHECK(set.dimension() == expected_dimension(ElementKind::Tri, p));
  }
  CHECK_THROWS(build_tri(0));
  CHECK_THROWS(build_tri(7));
}

TEST_CASE("family counts by order") {
  // edges: 3(p+1); edge-interior: 3(p-1); interior bubbles: (p-1)(p-2).
  for (int p = 1; p <= 6; ++p) {
    CHECK(static_cast<int>(tri_edge(p).size()) == 3 * (p + 1));
    CHECK(static_cast<int>(tri_edge_interior(p).size()) == 3 * std::max(0, p - 1));
    CHECK(static_cast<int>(tri_interior_bubble(p).size()) ==
          std::max(0, (p - 1) * (p - 2)));
  }
}

TEST_CASE("lowest-order edge functions: constant divergence and constant own trace") {
  const auto& el = reference(ElementKind::Tri);
  for (const auto& fn : tri_edge(1)) {
    if (fn.cat != Category::TriEdgeRT) continue;
    MPoly d = divergence(fn.field);
    CHECK(d.total_degree() == 0);
    Rational dv = d.terms().begin()->second;
    CHECK((dv == 2 || dv == -2));
    for (const auto& e : el.edge_data) {
      MPoly tr = normal_trace_on_edge(fn.field, e);
      if (e.id == fn.entity) {
        CHECK(tr.total_degree() == 0);
        CHECK(!tr.is_zero());
      } else {
        CHECK(tr.is_zero());
      }
    }
  }
}

TEST_CASE("higher edge functions are divergence-free with single-edge support") {
  const auto& el = reference(ElementKind::Tri);
  for (int p = 1; p <= 5; ++p)
    for (const auto& fn : tri_edge(p)) {
      if (fn.cat != Category::TriEdgeHigher) continue;
      CHECK(divergence(fn.field).is_zero());
      for (const auto& e : el.edge_data)
        if (e.id != fn.entity) CHECK(normal_trace_on_edge(fn.field, e).is_zero());
    }
}

TEST_CASE("edge-interior and bubble functions have no normal trace at all") {
  const auto& el = reference(ElementKind::Tri);
  for (int p = 2; p <= 5; ++p) {
    for (const auto& fn : tri_edge_interior(p))
      for (const auto& e : el.edge_data)
        CHECK(normal_trace_on_edge(fn.field, e).is_zero());
    for (const auto& fn : tri_interior_bubble(p))
      for (const auto& e : el.edge_data)
        CHECK(normal_trace_on_edge(fn.field, e).is_zero());
  }
}

TEST_CASE("normalized families form orthonormal blocks") {
  for (int p = 2; p <= 6; ++p) {
    double worst = 0;
    for (const auto& d : orthonormal_block_deviations(build_tri(p)))
      worst = std::max(worst, d.max_dev);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("full linear independence at every order") {
  for (int p = 1; p <= 6; ++p) {
    BasisSet set = build_tri(p);
    CHECK(coefficient_rank(set.fields()).rank == set.dimension());
  }
}

TEST_CASE("published conditioning, orders one through four") {
  // kappa(M), kappa(S) reference values, four significant digits.
  const double km[4] = {2.016e1, 8.804e1, 9.847e2, 1.286e4};
  const double ks[4] = {1.040e1, 5.959e1, 4.197e2, 8.843e3};
  for (int p = 1; p <= 4; ++p) {
    BasisSet set = build_tri(p);
    CondReport m = condition_number(mass_matrix(set, AssemblyPath::Exact), false);
    CondReport s = condition_number(stiffness_matrix(set, AssemblyPath::Exact), true);
    CHECK(m.kappa == doctest::Approx(km[p - 1]).epsilon(0.005));
    CHECK(s.kappa == doctest::Approx(ks[p - 1]).epsilon(0.005));
    CHECK(s.excluded == 2);  // the two constant fields span the stiffness kernel
  }
}

TEST_CASE("whole-set exact structure checks pass") {
  for (int p = 1; p <= 6; ++p) {
    BasisSet set = build_tri(p);
    CHECK(check_divergence_free(set).failed_ids.empty());
    CHECK(check_traces(set).failures.empty());
  }
}
