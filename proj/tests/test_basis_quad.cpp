#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdiv/basis_quad.hpp"
#include "hdiv/checks.hpp"
#include "hdiv/polynomials1d.hpp"
#include "hdiv/rank.hpp"

using namespace hdiv;

TEST_CASE("dimension formula 2(p+2)(p+1)") {
  for (int p = 1; p <= 6; ++p) {
    BasisSet set = build_quad(p);
    CHECK(set.dimension() == 2 * (p + 2) * (p + 1));
    CHECK(set.dimension() == expected_dimension(ElementKind::Quad, p));
  }
  CHECK_THROWS(build_quad(0));
  CHECK_THROWS(build_quad(7));
}

TEST_CASE("lowest-order edge functions carry unit divergence and unit normal trace") {
  const auto& el = reference(ElementKind::Quad);
  for (const auto& fn : quad_edge_lowest()) {
    CHECK(fn.cat == Category::QuadEdgeRT);
    CHECK(divergence(fn.field) == MPoly::constant(2, 1));
    for (const auto& e : el.edge_data) {
      MPoly tr = normal_trace_on_edge(fn.field, e);
      if (e.id == fn.entity) {
        CHECK(tr == MPoly::constant(1, 1));
        CHECK(tangent_trace_on_edge(fn.field, e).is_zero());
      } else {
        CHECK(tr.is_zero());
      }
    }
  }
}

TEST_CASE("higher edge functions are divergence-free with single-edge support") {
  const auto& el = reference(ElementKind::Quad);
  for (int p = 1; p <= 4; ++p)
    for (const auto& fn : quad_edge_higher(p)) {
      CHECK(divergence(fn.field).is_zero());
      for (const auto& e : el.edge_data)
        if (e.id != fn.entity) CHECK(normal_trace_on_edge(fn.field, e).is_zero());
    }
}

TEST_CASE("interior functions have no normal trace anywhere") {
  const auto& el = reference(ElementKind::Quad);
  for (int p = 1; p <= 4; ++p)
    for (const auto& fn : quad_interior(p))
      for (const auto& e : el.edge_data)
        CHECK(normal_trace_on_edge(fn.field, e).is_zero());
}

TEST_CASE("first interior type is curl-built, the others are not") {
  BasisSet set = build_quad(3);
  int t1 = 0, rest = 0;
  for (const auto& fn : set.fns) {
    if (fn.cat == Category::QuadInterior1) {
      CHECK(divergence(fn.field).is_zero());
      ++t1;
    } else if (fn.cat == Category::QuadInterior2 || fn.cat == Category::QuadInterior3Xi ||
               fn.cat == Category::QuadInterior3Eta) {
      CHECK(!divergence(fn.field).is_zero());
      ++rest;
    }
  }
  CHECK(t1 > 0);
  CHECK(rest > 0);
}

TEST_CASE("transcription pin: first higher edge function") {
  // curl of (edge blend) * (integrated Legendre of the edge parameter).
  const auto& el = reference(ElementKind::Quad);
  const auto& e0 = el.edge_data[0];
  MPoly scalar = e0.extension * compose1(integrated_legendre(2), e0.param);
  VectorField expect = curl2d(scalar);
  auto higher = quad_edge_higher(2);
  bool found = false;
  for (const auto& fn : higher)
    if (fn.entity == 0 && fn.idx[0] == 0) {
      CHECK(fn.field.comp[0] == expect.comp[0]);
      CHECK(fn.field.comp[1] == expect.comp[1]);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("full linear independence at every order") {
  for (int p = 1; p <= 6; ++p) {
    BasisSet set = build_quad(p);
    RankCertificate cert = coefficient_rank(set.fields());
    CHECK(cert.rank == set.dimension());
  }
}

TEST_CASE("whole-set exact structure checks pass") {
  for (int p = 1; p <= 4; ++p) {
    BasisSet set = build_quad(p);
    CHECK(check_divergence_free(set).failed_ids.empty());
    CHECK(check_traces(set).failures.empty());
    CHECK(orthonormal_block_deviations(set).empty());  // no normalized families
  }
}
