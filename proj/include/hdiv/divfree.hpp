#pragma once

#include "hdiv/basis.hpp"

namespace hdiv {

struct DiscreteField {
  const BasisSet* set = nullptr;
  std::vector<double> coeff;
};

struct AugmentationResult {
  int q = 0;            // bubble order
  double c_chi = 0.0;   // augmentation coefficient
  double before_norm = 0.0;
  double after_norm = 0.0;
  int residual_degree = -1;
};

// The order-q interior bubble used for divergence control, q = max(m, p+1)
// with m = 2 (square/cube), 3 (triangle), 4 (tetrahedron). Its normal trace
// vanishes on the whole boundary, so augmentation never disturbs conformity.
VectorField bubble_for(ElementKind kind, int p);

// L2 norm over the reference element of the divergence of the field.
double divergence_norm(const DiscreteField& field);
double divergence_norm_single(const VectorField& f, ElementKind kind);

// One-parameter least-squares divergence reduction: c = -<div u, div chi> /
// <div chi, div chi>, the unique minimizer of ||div(u + c*chi)||.
AugmentationResult augment(const DiscreteField& field, int p);

}  // namespace hdiv
