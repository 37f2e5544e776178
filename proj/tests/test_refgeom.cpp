#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdiv/refgeom.hpp"

using namespace hdiv;

namespace {

Rational Q(long n, long d = 1) { return frac(n, d); }

// Centroid of a vertex subset.
std::vector<Rational> centroid(const std::vector<std::vector<Rational>>& verts,
                               const std::vector<int>& ids) {
  std::vector<Rational> c(verts[0].size(), 0);
  for (int i : ids)
    for (size_t k = 0; k < c.size(); ++k) c[k] += verts[i][k];
  for (auto& v : c) v /= static_cast<long>(ids.size());
  return c;
}

double dot_d(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].get_d() * b[i].get_d();
  return s;
}

}  // namespace

TEST_CASE("vertex tables") {
  const auto& quad = reference(ElementKind::Quad);
  CHECK(quad.vertices == std::vector<std::vector<Rational>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto& tri = reference(ElementKind::Tri);
  CHECK(tri.vertices == std::vector<std::vector<Rational>>{{0, 0}, {1, 0}, {0, 1}});
  const auto& tet = reference(ElementKind::Tet);
  CHECK(tet.vertices ==
        std::vector<std::vector<Rational>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(reference(ElementKind::Hex).vertices.size() == 8);
}

TEST_CASE("simplex barycentrics partition unity and interpolate vertices") {
  for (auto kind : {ElementKind::Tri, ElementKind::Tet}) {
    const auto& el = reference(kind);
    MPoly sum(el.dim);
    for (const auto& l : el.lambda) sum = sum + l;
    CHECK(sum == MPoly::constant(el.dim, 1));
    for (size_t i = 0; i < el.lambda.size(); ++i)
      for (size_t j = 0; j < el.vertices.size(); ++j)
        CHECK(el.lambda[i].eval(el.vertices[j]) == (i == j ? Q(1) : Q(0)));
  }
}

TEST_CASE("tensor blending functions are one on their facet, zero opposite") {
  const auto& quad = reference(ElementKind::Quad);
  for (const auto& e : quad.edge_data) {
    CHECK(restrict_to_edge(e.extension, e) == MPoly::constant(1, 1));
    // Opposite edge: ids 0<->2, 1<->3.
    const auto& opp = quad.edge_data[(e.id + 2) % 4];
    CHECK(restrict_to_edge(e.extension, opp).is_zero());
  }
  const auto& hex = reference(ElementKind::Hex);
  for (const auto& f : hex.face_data) {
    CHECK(restrict_to_face(f.extension, f) == MPoly::constant(2, 1));
  }
}

TEST_CASE("edge parameters run from -1 to +1 along the edge") {
  for (auto kind : {ElementKind::Quad, ElementKind::Hex, ElementKind::Tri, ElementKind::Tet}) {
    const auto& el = reference(kind);
    for (const auto& e : el.edge_data) {
      CHECK(e.param.eval(el.vertices[e.ends[0]]) == -1);
      CHECK(e.param.eval(el.vertices[e.ends[1]]) == 1);
      // Restriction parameterizes the segment: s = 0, 1 hit the endpoints.
      for (int c = 0; c < el.dim; ++c) {
        CHECK(e.restriction[c].eval({Q(0)}) == el.vertices[e.ends[0]][c]);
        CHECK(e.restriction[c].eval({Q(1)}) == el.vertices[e.ends[1]][c]);
      }
    }
  }
}

TEST_CASE("edge normals are outward unit directions orthogonal to the edge") {
  for (auto kind : {ElementKind::Quad, ElementKind::Tri}) {
    const auto& el = reference(kind);
    std::vector<int> all(el.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    auto inner = centroid(el.vertices, all);
    for (const auto& e : el.edge_data) {
      Rational t = 0;
      for (int c = 0; c < 2; ++c) t += e.normal_dir[c] * e.tangent[c];
      CHECK(t == 0);
      auto mid = centroid(el.vertices, {e.ends[0], e.ends[1]});
      std::vector<Rational> out(2);
      for (int c = 0; c < 2; ++c) out[c] = mid[c] - inner[c];
      CHECK(dot_d(e.normal_dir, out) > 0);
      double len = 0;
      for (int c = 0; c < 2; ++c) len += e.normal_dir[c].get_d() * e.normal_dir[c].get_d();
      CHECK(std::sqrt(len) * e.normal_scale == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("face normals are outward units and faces sit in their planes") {
  for (auto kind : {ElementKind::Hex, ElementKind::Tet}) {
    const auto& el = reference(kind);
    std::vector<int> all(el.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    auto inner = centroid(el.vertices, all);
    for (const auto& f : el.face_data) {
      auto mid = centroid(el.vertices, f.verts);
      std::vector<Rational> out(3);
      for (int c = 0; c < 3; ++c) out[c] = mid[c] - inner[c];
      CHECK(dot_d(f.normal_dir, out) > 0);
      double len = 0;
      for (int c = 0; c < 3; ++c) len += f.normal_dir[c].get_d() * f.normal_dir[c].get_d();
      CHECK(std::sqrt(len) * f.normal_scale == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("tet faces are the zero sets of their opposite barycentric") {
  const auto& tet = reference(ElementKind::Tet);
  CHECK(tet.faces ==
        std::vector<std::vector<int>>{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  CHECK(tet.edges == std::vector<std::array<int, 2>>{
                         {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (const auto& f : tet.face_data) {
    CHECK(restrict_to_face(tet.lambda[f.id], f).is_zero());
    // Restriction corners hit the face vertices.
    std::vector<std::vector<Rational>> corners = {{0, 0}, {1, 0}, {0, 1}};
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 3; ++c)
        CHECK(f.restriction[c].eval(corners[k]) == tet.vertices[f.verts[k]][c]);
  }
}

TEST_CASE("normal and tangent traces on explicit fields") {
  const auto& tri = reference(ElementKind::Tri);
  // Constant field (1, 0): edge 0 runs (0,0)->(1,0) with outward normal (0,-1).
  VectorField ex({MPoly::constant(2, 1), MPoly::zero(2)});
  VectorField ey({MPoly::zero(2), MPoly::constant(2, 1)});
  const auto& e0 = tri.edge_data[0];
  CHECK(normal_trace_on_edge(ex, e0).is_zero());
  CHECK(normal_trace_on_edge(ey, e0) == MPoly::constant(1, -1));
  CHECK(tangent_trace_on_edge(ex, e0) == MPoly::constant(1, 1));
  // Hypotenuse edge 2 runs (1,0)->(0,1); unnormalized outward normal (1,1).
  const auto& e2 = tri.edge_data[2];
  CHECK(normal_trace_on_edge(ex, e2) == MPoly::constant(1, 1));
  CHECK(normal_trace_on_edge(ey, e2) == MPoly::constant(1, 1));
}
