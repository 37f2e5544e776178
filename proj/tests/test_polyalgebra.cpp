#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdiv/mpoly.hpp"
#include "hdiv/vectorfield.hpp"

using namespace hdiv;

namespace {

MPoly X(int dim, int i) { return MPoly::variable(dim, i); }

Rational Q(long n, long d = 1) { return frac(n, d); }

}  // namespace

TEST_CASE("ring operations expand exactly") {
  MPoly x = X(2, 0), y = X(2, 1);
  MPoly p = (x + y).pow(2);
  MPoly expect(2);
  expect.add_term({2, 0, 0}, 1);
  expect.add_term({1, 1, 0}, 2);
  expect.add_term({0, 2, 0}, 1);
  CHECK(p == expect);
  CHECK(p.total_degree() == 2);
  CHECK((p - expect).is_zero());
  CHECK((-p + p).is_zero());
  // (1+x)^3 binomials
  MPoly c = (MPoly::constant(1, 1) + X(1, 0)).pow(3);
  CHECK(c.terms().at({0, 0, 0}) == 1);
  CHECK(c.terms().at({1, 0, 0}) == 3);
  CHECK(c.terms().at({2, 0, 0}) == 3);
  CHECK(c.terms().at({3, 0, 0}) == 1);
}

TEST_CASE("derivative") {
  MPoly x = X(2, 0), y = X(2, 1);
  MPoly p = x * x * y.scaled(3) - x * y * y * y.scaled(2);  // 3x^2 y - 2x y^3
  MPoly dx = p.derivative(0);
  MPoly expect(2);
  expect.add_term({1, 1, 0}, 6);
  expect.add_term({0, 3, 0}, -2);
  CHECK(dx == expect);
  CHECK(MPoly::constant(2, 5).derivative(1).is_zero());
  CHECK(p.derivative(0).derivative(1) == p.derivative(1).derivative(0));
}

TEST_CASE("substitute and eval agree") {
  MPoly x = X(2, 0), y = X(2, 1);
  MPoly p = x * x + x * y.scaled(-3);
  // x -> 1 - x - y, y -> y
  MPoly one = MPoly::constant(2, 1);
  MPoly q = p.substitute({one - x - y, y});
  std::vector<Rational> pt = {Q(1, 3), Q(1, 5)};
  Rational both = q.eval(pt);
  Rational direct = p.eval({Q(1) - pt[0] - pt[1], pt[1]});
  CHECK(both == direct);
  double xd[3] = {1.0 / 3, 0.2, 0.0};
  CHECK(q.eval_double(xd) == doctest::Approx(both.get_d()).epsilon(1e-14));
}

TEST_CASE("monomial integrals over each reference domain") {
  // Square: product of 1/(e+1); cube likewise.
  CHECK(integrate_monomial({2, 1, 0}, ElementKind::Quad) == Q(1, 6));
  CHECK(integrate_monomial({1, 1, 1}, ElementKind::Hex) == Q(1, 8));
  // Simplex factorial formulas: a! b! / (a+b+2)! and a! b! c! / (a+b+c+3)!.
  CHECK(integrate_monomial({2, 1, 0}, ElementKind::Tri) == Q(1, 60));
  CHECK(integrate_monomial({0, 0, 0}, ElementKind::Tri) == Q(1, 2));
  CHECK(integrate_monomial({1, 0, 0}, ElementKind::Tet) == Q(1, 24));
  CHECK(integrate_monomial({1, 1, 1}, ElementKind::Tet) == Q(1, 720));
  CHECK(integrate_monomial({0, 0, 0}, ElementKind::Tet) == Q(1, 6));
}

TEST_CASE("polynomial integral equals the sum of its monomial integrals") {
  MPoly x = X(2, 0), y = X(2, 1);
  // (x+y)^2 over the triangle: 1/12 + 2/24 + 1/12 = 1/4.
  CHECK(integrate_reference((x + y).pow(2), ElementKind::Tri) == Q(1, 4));
  // x^2 y over the square.
  CHECK(integrate_reference(x * x * y, ElementKind::Quad) == Q(1, 6));
}

TEST_CASE("divergence of a curl vanishes identically") {
  MPoly x = X(2, 0), y = X(2, 1);
  MPoly u = x.pow(3) * y * y + x * y.scaled(7);
  CHECK(divergence(curl2d(u)).is_zero());

  MPoly a = X(3, 0), b = X(3, 1), c = X(3, 2);
  VectorField w({a * a * b, b * c.scaled(-2), a * b * c});
  CHECK(divergence(curl3d(w)).is_zero());
  // curl of a gradient vanishes too
  VectorField g = gradient(a * a * b * c);
  VectorField cg = curl3d(g);
  for (const auto& comp : cg.comp) CHECK(comp.is_zero());
}

TEST_CASE("divergence and gradient on explicit fields") {
  MPoly x = X(2, 0), y = X(2, 1);
  VectorField v({x * x, x * y});
  MPoly d = divergence(v);  // 2x + x = 3x
  MPoly expect(2);
  expect.add_term({1, 0, 0}, 3);
  CHECK(d == expect);
  VectorField g = gradient(x * y);
  CHECK(g.comp[0] == y);
  CHECK(g.comp[1] == x);
}

TEST_CASE("dot and constant cross products") {
  MPoly x = X(3, 0);
  VectorField a({x, MPoly::zero(3), MPoly::constant(3, 2)});
  VectorField b({MPoly::constant(3, 1), x, x});
  MPoly d = dot(a, b);  // x + 0 + 2x = 3x
  MPoly expect(3);
  expect.add_term({1, 0, 0}, 3);
  CHECK(d == expect);

  std::array<Rational, 3> ex{1, 0, 0}, ey{0, 1, 0};
  auto ez = cross_const(ex, ey);
  CHECK(ez[0] == 0);
  CHECK(ez[1] == 0);
  CHECK(ez[2] == 1);
  auto zz = cross_const(ex, ex);
  CHECK((zz[0] == 0 && zz[1] == 0 && zz[2] == 0));
}

TEST_CASE("const_times builds scalar times constant direction") {
  MPoly x = X(3, 0);
  VectorField v = const_times(x, {Q(2), Q(0), Q(-1)}, 0.5);
  CHECK(v.scale == 0.5);
  CHECK(v.comp[0] == x.scaled(2));
  CHECK(v.comp[1].is_zero());
  CHECK(v.comp[2] == x.scaled(-1));
}
