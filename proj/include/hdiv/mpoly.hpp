#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "hdiv/element.hpp"

namespace hdiv {

using Rational = mpq_class;

// Rational from numerator/denominator, reduced to lowest terms. The two-arg
// mpq constructor does not reduce, and exact comparison requires canonical
// form, so every num/den construction must go through here.
inline Rational frac(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exponent tuple; axes beyond the polynomial's dimension stay zero.
using Expo = std::array<uint8_t, 3>;

// Sparse multivariate polynomial with exact rational coefficients.
class MPoly {
 public:
  explicit MPoly(int dim = 1) : dim_(dim) {}

  static MPoly zero(int dim) { return MPoly(dim); }
  static MPoly constant(int dim, const Rational& c);
  static MPoly variable(int dim, int i);

  int dim() const { return dim_; }
  const std::map<Expo, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  void add_term(const Expo& e, const Rational& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  MPoly scaled(const Rational& c) const;
  MPoly pow(int n) const;
  MPoly derivative(int var) const;

  // Substitute variable i -> forms[i]; forms live in a common target space.
  MPoly substitute(const std::vector<MPoly>& forms) const;

  Rational eval(const std::vector<Rational>& x) const;
  double eval_double(const double* x) const;

 private:
  int dim_;
  std::map<Expo, Rational> terms_;
};

// Exact integral over the reference domain of `kind`.
// Unit square/cube: product of 1/(e_i+1); simplices: the factorial formula.
Rational integrate_reference(const MPoly& a, ElementKind kind);

// Exact integral of a single monomial over the reference domain.
Rational integrate_monomial(const Expo& e, ElementKind kind);

}  // namespace hdiv
