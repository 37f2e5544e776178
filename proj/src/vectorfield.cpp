#include "hdiv/vectorfield.hpp"

#include <stdexcept>

namespace hdiv {

MPoly divergence(const VectorField& v) {
  if (v.dim < 2) throw std::invalid_argument("divergence needs dimension >= 2");
  MPoly r(v.dim);
  for (int k = 0; k < v.dim; ++k) r = r + v.comp[k].derivative(k);
  return r;
}

VectorField gradient(const MPoly& a) {
  VectorField g(a.dim());
  for (int i = 0; i < a.dim(); ++i) g.comp[i] = a.derivative(i);
  return g;
}

VectorField curl2d(const MPoly& u) {
  if (u.dim() != 2) throw std::invalid_argument("curl2d needs a bivariate polynomial");
  VectorField r(2);
  r.comp[0] = u.derivative(1);
  r.comp[1] = -u.derivative(0);
  return r;
}

VectorField curl3d(const VectorField& w) {
  if (w.dim != 3) throw std::invalid_argument("curl3d needs dimension 3");
  VectorField r(3, w.scale);
  r.comp[0] = w.comp[2].derivative(1) - w.comp[1].derivative(2);
  r.comp[1] = w.comp[0].derivative(2) - w.comp[2].derivative(0);
  r.comp[2] = w.comp[1].derivative(0) - w.comp[0].derivative(1);
  return r;
}

MPoly dot(const VectorField& a, const VectorField& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  MPoly r(a.dim);
  for (int i = 0; i < a.dim; ++i) r = r + a.comp[i] * b.comp[i];
  return r;
}

VectorField add(const VectorField& a, const VectorField& b) {
  if (a.dim != b.dim || a.scale != b.scale)
    throw std::invalid_argument("field addition needs matching dimension and scale");
  VectorField r(a.dim, a.scale);
  for (int i = 0; i < a.dim; ++i) r.comp[i] = a.comp[i] + b.comp[i];
  return r;
}

VectorField scale_field(const VectorField& a, const Rational& c) {
  VectorField r(a.dim, a.scale);
  for (int i = 0; i < a.dim; ++i) r.comp[i] = a.comp[i].scaled(c);
  return r;
}

VectorField const_times(const MPoly& s, const std::vector<Rational>& v, double scale) {
  VectorField r(static_cast<int>(v.size()), scale);
  for (size_t i = 0; i < v.size(); ++i) r.comp[i] = s.scaled(v[i]);
  return r;
}

std::array<Rational, 3> cross_const(const std::array<Rational, 3>& u,
                                    const std::array<Rational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace hdiv
