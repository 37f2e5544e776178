#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdiv/basis_hex.hpp"
#include "hdiv/checks.hpp"
#include "hdiv/polynomials1d.hpp"
#include "hdiv/rank.hpp"

using namespace hdiv;

TEST_CASE("dimension formula 3(p+2)(p+1)^2") {
  for (int p = 1; p <= 4; ++p) {
    BasisSet set = build_hex(p);
    CHECK(set.dimension() == 3 * (p + 2) * (p + 1) * (p + 1));
    CHECK(set.dimension() == expected_dimension(ElementKind::Hex, p));
  }
  CHECK_THROWS(build_hex(0));
  CHECK_THROWS(build_hex(5));
}

TEST_CASE("lowest-order face functions: unit divergence, unit own-face trace") {
  const auto& el = reference(ElementKind::Hex);
  auto rt = hex_face_rt0();
  CHECK(rt.size() == 6);
  for (const auto& fn : rt) {
    CHECK(divergence(fn.field) == MPoly::constant(3, 1));
    for (const auto& f : el.face_data) {
      MPoly tr = normal_trace_on_face(fn.field, f);
      if (f.id == fn.entity)
        CHECK(tr == MPoly::constant(2, 1));
      else
        CHECK(tr.is_zero());
    }
  }
}

TEST_CASE("higher face functions are divergence-free and single-face supported") {
  const auto& el = reference(ElementKind::Hex);
  for (int p = 1; p <= 3; ++p)
    for (const auto& fn : hex_face_higher(p)) {
      CHECK(divergence(fn.field).is_zero());
      for (const auto& f : el.face_data)
        if (f.id != fn.entity) CHECK(normal_trace_on_face(fn.field, f).is_zero());
    }
}

TEST_CASE("interior functions are traceless; the curl-built block is divergence-free") {
  const auto& el = reference(ElementKind::Hex);
  for (int p = 1; p <= 3; ++p)
    for (const auto& fn : hex_interior(p)) {
      for (const auto& f : el.face_data) CHECK(normal_trace_on_face(fn.field, f).is_zero());
      if (fn.cat == Category::HexInterior1) CHECK(divergence(fn.field).is_zero());
    }
  // The complementary interior types must not be divergence-free.
  int nonfree = 0;
  for (const auto& fn : hex_interior(2))
    if (fn.cat != Category::HexInterior1 && !divergence(fn.field).is_zero()) ++nonfree;
  CHECK(nonfree > 0);
}

TEST_CASE("transcription pin: one directed interior function") {
  // Third interior type, xi-directed: one integrated Legendre in the shifted
  // x coordinate times the unit x-direction.
  MPoly x1 = MPoly::variable(3, 0).scaled(2) - MPoly::constant(3, 1);
  MPoly expect = compose1(integrated_legendre(2), x1);
  bool found = false;
  for (const auto& fn : hex_interior(1)) {
    if (fn.cat != Category::HexInterior3 || fn.sub != 1) continue;
    CHECK(fn.field.comp[0] == expect);
    CHECK(fn.field.comp[1].is_zero());
    CHECK(fn.field.comp[2].is_zero());
    found = true;
  }
  CHECK(found);
}

TEST_CASE("full linear independence at every order") {
  for (int p = 1; p <= 4; ++p) {
    BasisSet set = build_hex(p);
    RankCertificate cert = coefficient_rank(set.fields());
    CHECK(cert.rank == set.dimension());
  }
}

TEST_CASE("whole-set exact structure checks pass") {
  for (int p = 1; p <= 4; ++p) {
    BasisSet set = build_hex(p);
    CHECK(check_divergence_free(set).failed_ids.empty());
    CHECK(check_traces(set).failures.empty());
    CHECK(orthonormal_block_deviations(set).empty());
  }
}
