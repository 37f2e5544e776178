#include "hdiv/mpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace hdiv {

MPoly MPoly::constant(int dim, const Rational& c) {
  MPoly r(dim);
  if (c != 0) r.terms_[Expo{0, 0, 0}] = c;
  return r;
}

MPoly MPoly::variable(int dim, int i) {
  if (i < 0 || i >= dim) throw std::invalid_argument("variable index out of range");
  MPoly r(dim);
  Expo e{0, 0, 0};
  e[i] = 1;
  r.terms_[e] = 1;
  return r;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[0]) + e[1] + e[2]);
  return d;
}

void MPoly::add_term(const Expo& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  MPoly r(dim_);
  Rational tmp;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e{uint8_t(e1[0] + e2[0]), uint8_t(e1[1] + e2[1]), uint8_t(e1[2] + e2[2])};
      tmp = c1 * c2;
      r.add_term(e, tmp);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(dim_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
  return r;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  MPoly r = MPoly::constant(dim_, 1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

MPoly MPoly::derivative(int var) const {
  if (var < 0 || var >= dim_) throw std::invalid_argument("variable index out of range");
  MPoly r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo ee = e;
    ee[var] -= 1;
    r.add_term(ee, c * e[var]);
  }
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& forms) const {
  if (static_cast<int>(forms.size()) != dim_)
    throw std::invalid_argument("one substitution polynomial per variable required");
  int td = forms[0].dim();
  for (const auto& f : forms)
    if (f.dim() != td) throw std::invalid_argument("substitution forms disagree in dimension");

  // Power caches keep repeated exponents cheap.
  std::vector<std::vector<MPoly>> pows(dim_);
  auto powf = [&](int i, int n) -> const MPoly& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(MPoly::constant(td, 1));
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * forms[i]);
    return cache[n];
  };

  MPoly r(td);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(td, c);
    for (int i = 0; i < dim_; ++i)
      if (e[i]) t = t * powf(i, e[i]);
    r = r + t;
  }
  return r;
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

double MPoly::eval_double(const double* x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

namespace {

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace

Rational integrate_monomial(const Expo& e, ElementKind kind) {
  switch (kind) {
    case ElementKind::Quad:
      return frac(1, e[0] + 1) * frac(1, e[1] + 1);
    case ElementKind::Hex:
      return frac(1, e[0] + 1) * frac(1, e[1] + 1) * frac(1, e[2] + 1);
    case ElementKind::Tri:
      return factorial(e[0]) * factorial(e[1]) / factorial(e[0] + e[1] + 2);
    default:
      return factorial(e[0]) * factorial(e[1]) * factorial(e[2]) /
             factorial(e[0] + e[1] + e[2] + 3);
  }
}

Rational integrate_reference(const MPoly& a, ElementKind kind) {
  if (a.dim() != element_dim(kind)) throw std::invalid_argument("dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : a.terms()) s += c * integrate_monomial(e, kind);
  return s;
}

}  // namespace hdiv
