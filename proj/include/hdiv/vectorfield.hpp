#pragma once

#include <vector>

#include "hdiv/mpoly.hpp"

namespace hdiv {

// Vector-valued polynomial field: exact rational components times one real
// scale factor. Irrational normalization constants live only in `scale`, so
// structural checks (divergence, traces, rank) stay exact.
struct VectorField {
  int dim = 0;
  std::vector<MPoly> comp;
  double scale = 1.0;

  VectorField() = default;
  explicit VectorField(int d, double s = 1.0) : dim(d), comp(d, MPoly::zero(d)), scale(s) {}
  VectorField(std::vector<MPoly> c, double s = 1.0)
      : dim(static_cast<int>(c.size())), comp(std::move(c)), scale(s) {}
};

// scale * sum_k d(comp[k])/dx_k, reported as (MPoly, scale) via the field's scale.
MPoly divergence(const VectorField& v);

VectorField gradient(const MPoly& a);

// [du/deta, -du/dxi]
VectorField curl2d(const MPoly& u);

VectorField curl3d(const VectorField& w);

MPoly dot(const VectorField& a, const VectorField& b);  // polynomial part only

VectorField add(const VectorField& a, const VectorField& b);      // requires equal scales
VectorField scale_field(const VectorField& a, const Rational& c); // scales the polynomial part

// Constant-vector helpers.
VectorField const_times(const MPoly& s, const std::vector<Rational>& v, double scale = 1.0);
std::array<Rational, 3> cross_const(const std::array<Rational, 3>& u,
                                    const std::array<Rational, 3>& v);

}  // namespace hdiv
