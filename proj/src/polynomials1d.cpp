#include "hdiv/polynomials1d.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hdiv {

namespace {
std::mutex cache_mutex;
}

MPoly legendre(int n) {
  if (n < 0) throw std::invalid_argument("legendre: n >= 0 required");
  static std::vector<MPoly> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.empty()) {
    cache.push_back(MPoly::constant(1, 1));
    cache.push_back(MPoly::variable(1, 0));
  }
  const MPoly x = MPoly::variable(1, 0);
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size()) - 1;
    // (k+1) l_{k+1} = (2k+1) x l_k - k l_{k-1}
    MPoly next = (x * cache[k]).scaled(frac(2 * k + 1, k + 1)) -
                 cache[k - 1].scaled(frac(k, k + 1));
    cache.push_back(next);
  }
  return cache[n];
}

MPoly integrated_legendre(int n) {
  if (n < 2) throw std::invalid_argument("integrated_legendre: n >= 2 required");
  MPoly l = legendre(n - 1);
  MPoly r(1);
  Rational at_minus1 = 0;  // antiderivative evaluated at -1
  for (const auto& [e, c] : l.terms()) {
    int k = e[0];
    Rational cc = c / (k + 1);
    r.add_term(Expo{uint8_t(k + 1), 0, 0}, cc);
    at_minus1 += cc * ((k + 1) % 2 == 0 ? 1 : -1);
  }
  return r - MPoly::constant(1, at_minus1);
}

MPoly scaled_integrated_legendre(int n) {
  MPoly L = integrated_legendre(n);
  MPoly r(2);  // variables (x, t); homogenize each degree-k term with t^{n-k}
  for (const auto& [e, c] : L.terms()) r.add_term(Expo{e[0], uint8_t(n - e[0]), 0}, c);
  return r;
}

MPoly jacobi(int n, int alpha, int beta) {
  if (n < 0 || alpha <= -1 || beta <= -1) throw std::invalid_argument("jacobi: bad parameters");
  static std::map<std::tuple<int, int, int>, MPoly> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(n, alpha, beta);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const MPoly x = MPoly::variable(1, 0);
  MPoly P0 = MPoly::constant(1, 1);
  MPoly result = P0;
  if (n >= 1) {
    MPoly P1 = x.scaled(frac(alpha + beta + 2, 2)) +
               MPoly::constant(1, frac(alpha - beta, 2));
    result = P1;
    for (int k = 1; k < n; ++k) {
      long a1 = 2L * (k + 1) * (k + alpha + beta + 1) * (2 * k + alpha + beta);
      long a2 = (2L * k + alpha + beta + 1) * (alpha * alpha - beta * beta);
      long a3 = (2L * k + alpha + beta) * (2 * k + alpha + beta + 1) * (2 * k + alpha + beta + 2);
      long a4 = 2L * (k + alpha) * (k + beta) * (2 * k + alpha + beta + 2);
      MPoly next = (x * P1).scaled(frac(a3, a1)) + P1.scaled(frac(a2, a1)) -
                   P0.scaled(frac(a4, a1));
      P0 = P1;
      P1 = next;
      result = P1;
    }
  }
  cache.emplace(key, result);
  return result;
}

MPoly homogenized_jacobi(int n, int alpha, int beta) {
  MPoly P = jacobi(n, alpha, beta);
  // b^n P(2a/b - 1): each x^k becomes (2a - b)^k b^{n-k}.
  MPoly two_a_minus_b(2);
  two_a_minus_b.add_term(Expo{1, 0, 0}, 2);
  two_a_minus_b.add_term(Expo{0, 1, 0}, -1);
  MPoly r(2);
  for (const auto& [e, c] : P.terms()) {
    int k = e[0];
    MPoly t = two_a_minus_b.pow(k).scaled(c);
    MPoly bpow(2);
    bpow.add_term(Expo{0, uint8_t(n - k), 0}, 1);
    r = r + t * bpow;
  }
  return r;
}

MPoly homogenized_jacobi_at(int n, int alpha, int beta, const MPoly& a, const MPoly& b) {
  return homogenized_jacobi(n, alpha, beta).substitute({a, b});
}

MPoly scaled_integrated_legendre_at(int n, const MPoly& x, const MPoly& t) {
  return scaled_integrated_legendre(n).substitute({x, t});
}

MPoly compose1(const MPoly& p, const MPoly& arg) {
  if (p.dim() != 1) throw std::invalid_argument("compose1 takes a univariate polynomial");
  return p.substitute({arg});
}

}  // namespace hdiv
