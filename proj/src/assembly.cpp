#include "hdiv/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace hdiv {

namespace {

// Gauss-Legendre nodes/weights on [0,1] via Newton iteration on P_n, carried
// in extended precision: nodes rounded to double make the rule miss exactness
// for high-degree integrands at the 1e-11 level, which the numerical assembly
// route cannot afford.
void gauss01_ld(int n, std::vector<long double>& x, std::vector<long double>& w) {
  x.assign(n, 0.0L);
  w.assign(n, 0.0L);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess on [-1,1].
    long double t = cosl(static_cast<long double>(M_PI) * (i + 0.75L) / (n + 0.5L));
    for (int it = 0; it < 200; ++it) {
      long double p0 = 1.0L, p1 = t;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      long double dp = n * (t * p1 - p0) / (t * t - 1.0L);
      long double dt = p1 / dp;
      t -= dt;
      if (fabsl(dt) < 1e-19L) break;
    }
    long double p0 = 1.0L, p1 = t;
    for (int k = 2; k <= n; ++k) {
      long double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    long double dp = n * (t * p1 - p0) / (t * t - 1.0L);
    x[i] = 0.5L * (1.0L + t);
    w[i] = 1.0L / ((1.0L - t * t) * dp * dp);
  }
}

// Tensor / Duffy-collapsed point sets from 1-D nodes, shared by the public
// double-precision rule and the internal extended-precision assembly.
template <typename T>
void build_points(ElementKind kind, const std::vector<T>& x, const std::vector<T>& w,
                  std::vector<std::array<T, 3>>& pts, std::vector<T>& wts) {
  int n = static_cast<int>(x.size());
  switch (kind) {
    case ElementKind::Quad:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          pts.push_back({x[i], x[j], T(0)});
          wts.push_back(w[i] * w[j]);
        }
      break;
    case ElementKind::Hex:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            pts.push_back({x[i], x[j], x[k]});
            wts.push_back(w[i] * w[j] * w[k]);
          }
      break;
    case ElementKind::Tri:
      // Duffy collapse (x, y) = (u, v(1-u)), Jacobian (1-u).
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          T u = x[i], v = x[j];
          pts.push_back({u, v * (T(1) - u), T(0)});
          wts.push_back(w[i] * w[j] * (T(1) - u));
        }
      break;
    case ElementKind::Tet:
      // (x, y, z) = (u, v(1-u), t(1-u)(1-v)), Jacobian (1-u)^2 (1-v).
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            T u = x[i], v = x[j], t = x[k];
            pts.push_back({u, v * (T(1) - u), t * (T(1) - u) * (T(1) - v)});
            wts.push_back(w[i] * w[j] * w[k] * (T(1) - u) * (T(1) - u) * (T(1) - v));
          }
      break;
  }
}

int axis_points(ElementKind kind, int target_degree) {
  int dim = element_dim(kind);
  return (target_degree + dim + 2 + 1) / 2 + 1;
}

// Rational coefficient to long double, both halves correctly rounded.
long double to_long_double(const Rational& q) {
  long double num = strtold(q.get_num().get_str().c_str(), nullptr);
  long double den = strtold(q.get_den().get_str().c_str(), nullptr);
  return num / den;
}

// Union monomial column index over the polynomial list.
std::map<Expo, int> monomial_columns(const std::vector<const MPoly*>& polys) {
  std::map<Expo, int> col;
  for (const MPoly* p : polys)
    for (const auto& [e, q] : p->terms()) col.emplace(e, 0);
  int k = 0;
  for (auto& [e, idx] : col) idx = k++;
  return col;
}

// Exact Gram of n fields described by `ncomp` polynomial slots per field:
// G = sum_c C_c W C_c^T with W the exact monomial-pair integral table.
// Scales are folded after the exact products.
SymmetricMatrix exact_gram(const std::vector<std::vector<MPoly>>& comps,
                           const std::vector<double>& scales, ElementKind kind) {
  int n = static_cast<int>(comps.size());
  int ncomp = n ? static_cast<int>(comps[0].size()) : 0;
  std::vector<const MPoly*> all;
  for (const auto& row : comps)
    for (const auto& p : row) all.push_back(&p);
  auto col = monomial_columns(all);
  int m = static_cast<int>(col.size());
  std::vector<Expo> mono(m);
  for (const auto& [e, idx] : col) mono[idx] = e;

  std::vector<std::vector<Rational>> W(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Expo s{};
      for (int c = 0; c < 3; ++c) s[c] = static_cast<uint8_t>(mono[i][c] + mono[j][c]);
      W[i][j] = integrate_monomial(s, kind);
      W[j][i] = W[i][j];
    }

  std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n, 0));
  std::vector<std::vector<Rational>> C(n, std::vector<Rational>(m));
  std::vector<std::vector<Rational>> T(n, std::vector<Rational>(m));
  for (int c = 0; c < ncomp; ++c) {
    bool any = false;
    for (int i = 0; i < n; ++i) {
      std::fill(C[i].begin(), C[i].end(), Rational(0));
      for (const auto& [e, q] : comps[i][c].terms()) {
        C[i][col.at(e)] = q;
        any = true;
      }
    }
    if (!any) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        Rational acc = 0;
        const auto& ci = C[i];
        for (int k = 0; k < m; ++k)
          if (ci[k] != 0) acc += ci[k] * W[k][j];
        T[i][j] = acc;
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k)
          if (C[j][k] != 0) acc += T[i][k] * C[j][k];
        G[i][j] += acc;
      }
  }
  SymmetricMatrix M(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) M.set(i, j, G[i][j].get_d() * scales[i] * scales[j]);
  return M;
}

int max_total_degree(const std::vector<std::vector<MPoly>>& comps) {
  int d = 0;
  for (const auto& row : comps)
    for (const auto& p : row) d = std::max(d, p.total_degree());
  return d;
}

// Numerical Gram over a quadrature rule; the evaluation and accumulation
// kernels parallelize across functions and entry pairs.
SymmetricMatrix quadrature_gram(const std::vector<std::vector<MPoly>>& comps,
                                const std::vector<double>& scales, ElementKind kind) {
  int n = static_cast<int>(comps.size());
  int ncomp = n ? static_cast<int>(comps[0].size()) : 0;
  int maxdeg = max_total_degree(comps);
  int naxis = axis_points(kind, 2 * maxdeg);
  std::vector<long double> x1, w1;
  gauss01_ld(naxis, x1, w1);
  std::vector<std::array<long double, 3>> pts;
  std::vector<long double> wts;
  build_points(kind, x1, w1, pts, wts);
  int npts = static_cast<int>(pts.size());

  // Flatten each component once: extended-precision coefficients plus packed
  // exponents, so the per-point loop is table lookups instead of map walks.
  struct Flat {
    std::vector<long double> coeff;
    std::vector<std::array<uint8_t, 3>> expo;
  };
  std::vector<Flat> flat(static_cast<size_t>(n) * ncomp);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < ncomp; ++c) {
      Flat& f = flat[static_cast<size_t>(i) * ncomp + c];
      for (const auto& [e, q] : comps[i][c].terms()) {
        f.coeff.push_back(to_long_double(q) * static_cast<long double>(scales[i]));
        f.expo.push_back(e);
      }
    }

  // Values rounded to double after extended-precision evaluation: the final
  // entries are bounded by the Gram diagonal, so one rounding per value is
  // harmless while expanded-coefficient cancellation is not.
  std::vector<double> vals(static_cast<size_t>(n) * npts * ncomp);
#pragma omp parallel for schedule(dynamic)
  for (int q = 0; q < npts; ++q) {
    std::array<std::vector<long double>, 3> pw;
    for (int a = 0; a < 3; ++a) {
      pw[a].resize(maxdeg + 1);
      pw[a][0] = 1.0L;
      for (int k = 1; k <= maxdeg; ++k) pw[a][k] = pw[a][k - 1] * pts[q][a];
    }
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < ncomp; ++c) {
        const Flat& f = flat[static_cast<size_t>(i) * ncomp + c];
        long double v = 0.0L;
        for (size_t t = 0; t < f.coeff.size(); ++t)
          v += f.coeff[t] * pw[0][f.expo[t][0]] * pw[1][f.expo[t][1]] * pw[2][f.expo[t][2]];
        vals[(static_cast<size_t>(i) * npts + q) * ncomp + c] = static_cast<double>(v);
      }
  }

  SymmetricMatrix M(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long double acc = 0.0L;
      const double* vi = &vals[static_cast<size_t>(i) * npts * ncomp];
      const double* vj = &vals[static_cast<size_t>(j) * npts * ncomp];
      for (int q = 0; q < npts; ++q) {
        double dp = 0;
        for (int c = 0; c < ncomp; ++c) dp += vi[q * ncomp + c] * vj[q * ncomp + c];
        acc += wts[q] * dp;
      }
      M.set(i, j, static_cast<double>(acc));
    }
  return M;
}

std::vector<std::vector<MPoly>> field_components(const BasisSet& set, std::vector<double>& scales) {
  std::vector<std::vector<MPoly>> comps;
  comps.reserve(set.fns.size());
  scales.clear();
  for (const auto& f : set.fns) {
    comps.push_back(f.field.comp);
    scales.push_back(f.field.scale);
  }
  return comps;
}

std::vector<std::vector<MPoly>> jacobian_components(const BasisSet& set,
                                                    std::vector<double>& scales) {
  int d = element_dim(set.kind);
  std::vector<std::vector<MPoly>> comps;
  comps.reserve(set.fns.size());
  scales.clear();
  for (const auto& f : set.fns) {
    std::vector<MPoly> row;
    row.reserve(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) row.push_back(f.field.comp[i].derivative(j));
    comps.push_back(std::move(row));
    scales.push_back(f.field.scale);
  }
  return comps;
}

}  // namespace

QuadratureRule quadrature(ElementKind kind, int target_degree) {
  int naxis = axis_points(kind, target_degree);
  std::vector<long double> x, w;
  gauss01_ld(naxis, x, w);
  QuadratureRule rule;
  rule.kind = kind;
  rule.target_degree = target_degree;
  std::vector<std::array<long double, 3>> pts;
  std::vector<long double> wts;
  build_points(kind, x, w, pts, wts);
  for (const auto& p : pts)
    rule.points.push_back({static_cast<double>(p[0]), static_cast<double>(p[1]),
                           static_cast<double>(p[2])});
  for (long double v : wts) rule.weights.push_back(static_cast<double>(v));
  return rule;
}

SymmetricMatrix mass_matrix(const BasisSet& set, AssemblyPath path) {
  std::vector<double> scales;
  auto comps = field_components(set, scales);
  return path == AssemblyPath::Exact ? exact_gram(comps, scales, set.kind)
                                     : quadrature_gram(comps, scales, set.kind);
}

SymmetricMatrix stiffness_matrix(const BasisSet& set, AssemblyPath path) {
  std::vector<double> scales;
  auto comps = jacobian_components(set, scales);
  return path == AssemblyPath::Exact ? exact_gram(comps, scales, set.kind)
                                     : quadrature_gram(comps, scales, set.kind);
}

Spectrum eigenvalues(const SymmetricMatrix& A) {
  int n = A.order();
  std::vector<double> a(A.data());
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  double fro = 0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  double tol = 1e-13 * (fro > 0 ? fro : 1.0);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) <= tol) {
      Spectrum s;
      s.eigenvalues.resize(n);
      for (int i = 0; i < n; ++i) s.eigenvalues[i] = at(i, i);
      std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
      return s;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  throw std::runtime_error("eigenvalue iteration failed to converge");
}

CondReport condition_number(const SymmetricMatrix& A, bool exclude_zeros) {
  Spectrum s = eigenvalues(A);
  CondReport rep;
  const auto& ev = s.eigenvalues;
  rep.lambda_max = ev.back();
  size_t lo = 0;
  if (exclude_zeros) {
    double cut = 1e-10 * rep.lambda_max;
    while (lo < ev.size() && ev[lo] <= cut) ++lo;
    rep.excluded = static_cast<int>(lo);
  }
  if (lo >= ev.size()) throw std::runtime_error("all eigenvalues excluded");
  rep.lambda_min = ev[lo];
  rep.kappa = rep.lambda_max / rep.lambda_min;
  return rep;
}

std::string to_csv(const SymmetricMatrix& A) {
  std::string out;
  char buf[40];
  for (int i = 0; i < A.order(); ++i) {
    for (int j = 0; j < A.order(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", A(i, j));
      out += buf;
      out += (j + 1 < A.order()) ? ',' : '\n';
    }
  }
  return out;
}

std::vector<double> jacobian_at(const VectorField& f, const double* x) {
  int d = f.dim;
  std::vector<double> J(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      J[static_cast<size_t>(i) * d + j] = f.scale * f.comp[i].derivative(j).eval_double(x);
  return J;
}

std::vector<double> jacobian_fd(const VectorField& f, const double* x, double h) {
  int d = f.dim;
  std::vector<double> J(static_cast<size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    double xp[3] = {x[0], x[1], x[2]}, xm[3] = {x[0], x[1], x[2]};
    xp[j] += h;
    xm[j] -= h;
    for (int i = 0; i < d; ++i)
      J[static_cast<size_t>(i) * d + j] =
          f.scale * (f.comp[i].eval_double(xp) - f.comp[i].eval_double(xm)) / (2.0 * h);
  }
  return J;
}

}  // namespace hdiv
