#include "hdiv/refgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace hdiv {

namespace {

MPoly affine_line(int dim, const std::vector<Rational>& a, const std::vector<Rational>& b,
                  int coord) {
  // coordinate `coord` of a + s(b - a), as a polynomial in s
  MPoly s = MPoly::variable(1, 0);
  (void)dim;
  return s.scaled(b[coord] - a[coord]) + MPoly::constant(1, a[coord]);
}

std::vector<MPoly> edge_restriction(const std::vector<std::vector<Rational>>& verts,
                                    const std::array<int, 2>& e, int dim) {
  std::vector<MPoly> forms;
  for (int c = 0; c < dim; ++c) forms.push_back(affine_line(dim, verts[e[0]], verts[e[1]], c));
  return forms;
}

std::vector<MPoly> plane_restriction(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b,
                                     const std::vector<Rational>& c, int dim) {
  // coordinates of a + s(b - a) + t(c - a), polynomials in (s, t)
  std::vector<MPoly> forms;
  for (int k = 0; k < dim; ++k) {
    MPoly f = MPoly::variable(2, 0).scaled(b[k] - a[k]) +
              MPoly::variable(2, 1).scaled(c[k] - a[k]) + MPoly::constant(2, a[k]);
    forms.push_back(f);
  }
  return forms;
}

std::vector<Rational> const_gradient(const MPoly& a) {
  std::vector<Rational> g;
  for (int i = 0; i < a.dim(); ++i) {
    MPoly d = a.derivative(i);
    if (d.total_degree() > 0) throw std::logic_error("gradient is not constant");
    g.push_back(d.is_zero() ? Rational(0) : d.terms().begin()->second);
  }
  return g;
}

double vec_norm(const std::vector<Rational>& v) {
  double s = 0.0;
  for (const auto& c : v) s += c.get_d() * c.get_d();
  return std::sqrt(s);
}

ReferenceElement make_quad() {
  ReferenceElement el;
  el.kind = ElementKind::Quad;
  el.dim = 2;
  el.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  MPoly xi = MPoly::variable(2, 0), eta = MPoly::variable(2, 1);
  MPoly one = MPoly::constant(2, 1);
  el.lambda = {(one - xi) * (one - eta), xi * (one - eta), xi * eta, (one - xi) * eta};
  el.sigma = {(one - xi) + (one - eta), xi + (one - eta), xi + eta, (one - xi) + eta};
  el.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (size_t k = 0; k < el.edges.size(); ++k) {
    const auto& [i, j] = el.edges[k];
    EdgeData e;
    e.id = static_cast<int>(k);
    e.ends = el.edges[k];
    e.param = el.sigma[j] - el.sigma[i];
    e.extension = el.lambda[i] + el.lambda[j];
    auto tau = const_gradient(e.param);
    for (auto& c : tau) c /= 2;
    e.tangent = tau;
    e.normal_dir = const_gradient(e.extension);
    e.normal_scale = 1.0 / vec_norm(e.normal_dir);
    e.restriction = edge_restriction(el.vertices, el.edges[k], 2);
    el.edge_data.push_back(std::move(e));
  }
  return el;
}

ReferenceElement make_hex() {
  ReferenceElement el;
  el.kind = ElementKind::Hex;
  el.dim = 3;
  el.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                 {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  MPoly xi = MPoly::variable(3, 0), eta = MPoly::variable(3, 1), zeta = MPoly::variable(3, 2);
  MPoly one = MPoly::constant(3, 1);
  MPoly cx[2] = {one - xi, xi}, cy[2] = {one - eta, eta}, cz[2] = {one - zeta, zeta};
  for (const auto& v : el.vertices) {
    int a = static_cast<int>(v[0].get_d()), b = static_cast<int>(v[1].get_d()),
        c = static_cast<int>(v[2].get_d());
    el.lambda.push_back(cx[a] * cy[b] * cz[c]);
    el.sigma.push_back(cx[a] + cy[b] + cz[c]);
  }
  el.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5},
              {2, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  for (size_t k = 0; k < el.edges.size(); ++k) {
    const auto& [i, j] = el.edges[k];
    EdgeData e;
    e.id = static_cast<int>(k);
    e.ends = el.edges[k];
    e.param = el.sigma[j] - el.sigma[i];
    e.extension = el.lambda[i] + el.lambda[j];
    auto tau = const_gradient(e.param);
    for (auto& c : tau) c /= 2;
    e.tangent = tau;
    e.restriction = edge_restriction(el.vertices, el.edges[k], 3);
    el.edge_data.push_back(std::move(e));
  }
  // Face tuples loop the boundary; the first and third vertices sit on a diagonal.
  el.faces = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  for (size_t k = 0; k < el.faces.size(); ++k) {
    const auto& v = el.faces[k];
    FaceData f;
    f.id = static_cast<int>(k);
    f.verts = v;
    f.xi = el.sigma[v[0]] - el.sigma[v[1]];
    f.eta = el.sigma[v[0]] - el.sigma[v[3]];
    f.extension = el.lambda[v[0]] + el.lambda[v[1]] + el.lambda[v[2]] + el.lambda[v[3]];
    f.normal_dir = const_gradient(f.extension);
    f.normal_scale = 1.0 / vec_norm(f.normal_dir);
    f.restriction =
        plane_restriction(el.vertices[v[0]], el.vertices[v[1]], el.vertices[v[3]], 3);
    el.face_data.push_back(std::move(f));
  }
  return el;
}

ReferenceElement make_tri() {
  ReferenceElement el;
  el.kind = ElementKind::Tri;
  el.dim = 2;
  el.vertices = {{0, 0}, {1, 0}, {0, 1}};
  MPoly xi = MPoly::variable(2, 0), eta = MPoly::variable(2, 1);
  el.lambda = {MPoly::constant(2, 1) - xi - eta, xi, eta};
  el.edges = {{0, 1}, {0, 2}, {1, 2}};
  for (size_t k = 0; k < el.edges.size(); ++k) {
    const auto& [i, j] = el.edges[k];
    EdgeData e;
    e.id = static_cast<int>(k);
    e.ends = el.edges[k];
    e.param = el.lambda[j] - el.lambda[i];
    for (int c = 0; c < 2; ++c) e.tangent.push_back(el.vertices[j][c] - el.vertices[i][c]);
    // The edge is the zero set of the remaining barycentric coordinate, whose
    // gradient points inward.
    int opp = 3 - i - j;
    auto g = const_gradient(el.lambda[opp]);
    for (auto& c : g) c = -c;
    e.normal_dir = g;
    e.normal_scale = 1.0 / vec_norm(g);
    e.restriction = edge_restriction(el.vertices, el.edges[k], 2);
    el.edge_data.push_back(std::move(e));
  }
  return el;
}

ReferenceElement make_tet() {
  ReferenceElement el;
  el.kind = ElementKind::Tet;
  el.dim = 3;
  el.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  MPoly xi = MPoly::variable(3, 0), eta = MPoly::variable(3, 1), zeta = MPoly::variable(3, 2);
  el.lambda = {MPoly::constant(3, 1) - xi - eta - zeta, xi, eta, zeta};
  el.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (size_t k = 0; k < el.edges.size(); ++k) {
    const auto& [i, j] = el.edges[k];
    EdgeData e;
    e.id = static_cast<int>(k);
    e.ends = el.edges[k];
    e.param = el.lambda[j] - el.lambda[i];
    for (int c = 0; c < 3; ++c) e.tangent.push_back(el.vertices[j][c] - el.vertices[i][c]);
    e.restriction = edge_restriction(el.vertices, el.edges[k], 3);
    el.edge_data.push_back(std::move(e));
  }
  // Face j lists the vertices opposite vertex j, ascending.
  el.faces = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  for (size_t k = 0; k < el.faces.size(); ++k) {
    const auto& v = el.faces[k];
    FaceData f;
    f.id = static_cast<int>(k);
    f.verts = v;
    // Face k is the zero set of lambda_k; the outward normal is -grad(lambda_k).
    auto g = const_gradient(el.lambda[k]);
    for (auto& c : g) c = -c;
    f.normal_dir = g;
    f.normal_scale = 1.0 / vec_norm(g);
    f.restriction = plane_restriction(el.vertices[v[0]], el.vertices[v[1]], el.vertices[v[2]], 3);
    el.face_data.push_back(std::move(f));
  }
  return el;
}

}  // namespace

const ReferenceElement& reference(ElementKind kind) {
  static const ReferenceElement quad = make_quad();
  static const ReferenceElement hex = make_hex();
  static const ReferenceElement tri = make_tri();
  static const ReferenceElement tet = make_tet();
  switch (kind) {
    case ElementKind::Quad: return quad;
    case ElementKind::Hex: return hex;
    case ElementKind::Tri: return tri;
    default: return tet;
  }
}

MPoly restrict_to_edge(const MPoly& a, const EdgeData& e) { return a.substitute(e.restriction); }

MPoly restrict_to_face(const MPoly& a, const FaceData& f) { return a.substitute(f.restriction); }

MPoly normal_trace_on_edge(const VectorField& v, const EdgeData& e) {
  MPoly s(v.dim);
  for (int i = 0; i < v.dim; ++i) s = s + v.comp[i].scaled(e.normal_dir[i]);
  return restrict_to_edge(s, e);
}

MPoly normal_trace_on_face(const VectorField& v, const FaceData& f) {
  MPoly s(v.dim);
  for (int i = 0; i < v.dim; ++i) s = s + v.comp[i].scaled(f.normal_dir[i]);
  return restrict_to_face(s, f);
}

MPoly tangent_trace_on_edge(const VectorField& v, const EdgeData& e) {
  MPoly s(v.dim);
  for (int i = 0; i < v.dim; ++i) s = s + v.comp[i].scaled(e.tangent[i]);
  return restrict_to_edge(s, e);
}

}  // namespace hdiv
