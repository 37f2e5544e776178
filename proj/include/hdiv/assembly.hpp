#pragma once

#include <string>
#include <vector>

#include "hdiv/basis.hpp"

namespace hdiv {

struct QuadratureRule {
  ElementKind kind{};
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int target_degree = 0;
};

// Tensor Gauss-Legendre on the square/cube; Duffy-collapsed tensor rule on the
// simplices with a conservative per-axis point count.
QuadratureRule quadrature(ElementKind kind, int target_degree);

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n = 0) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}
  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
  }
  const std::vector<double>& data() const { return a_; }

 private:
  int n_;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
};

struct CondReport {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double kappa = 0.0;
  int excluded = 0;  // eigenvalues dropped by the zero-exclusion rule
  ElementKind kind{};
  int p = 0;
  std::string variant;
};

enum class AssemblyPath { Exact, Quadrature };

// M[a][b] = <f_a, f_b> over the reference element. The exact path forms the
// Gram through exact rational coefficient/weight products; the quadrature path
// is an independent numerical route (parallelized when OpenMP is available).
SymmetricMatrix mass_matrix(const BasisSet& set, AssemblyPath path);

// S[a][b] = Frobenius contraction of the two Jacobians, integrated.
SymmetricMatrix stiffness_matrix(const BasisSet& set, AssemblyPath path);

// All eigenvalues via cyclic Jacobi rotations; off-diagonal Frobenius norm
// below 1e-13 * ||A||_F declares convergence; throws after 100 sweeps.
Spectrum eigenvalues(const SymmetricMatrix& A);

// kappa = lambda_max / lambda_min; with exclude_zeros, eigenvalues at or below
// 1e-10 * lambda_max are dropped and counted.
CondReport condition_number(const SymmetricMatrix& A, bool exclude_zeros);

std::string to_csv(const SymmetricMatrix& A);  // row-major, 17 significant digits

// Analytic Jacobian (d x d, row i = gradient of component i) at a point.
std::vector<double> jacobian_at(const VectorField& f, const double* x);
// Central finite-difference Jacobian with the given step.
std::vector<double> jacobian_fd(const VectorField& f, const double* x, double h);

}  // namespace hdiv
