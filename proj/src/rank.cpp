#include "hdiv/rank.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace hdiv {

namespace {

// Rows = fields, columns = (component, monomial) pairs, entries exact.
std::vector<std::vector<Rational>> coefficient_rows(const std::vector<VectorField>& fields) {
  std::map<std::pair<int, Expo>, int> col;
  for (const auto& f : fields)
    for (int c = 0; c < f.dim; ++c)
      for (const auto& [e, q] : f.comp[c].terms()) col.emplace(std::make_pair(c, e), 0);
  int k = 0;
  for (auto& [key, idx] : col) idx = k++;
  std::vector<std::vector<Rational>> rows(fields.size(), std::vector<Rational>(col.size(), 0));
  for (size_t r = 0; r < fields.size(); ++r)
    for (int c = 0; c < fields[r].dim; ++c)
      for (const auto& [e, q] : fields[r].comp[c].terms())
        rows[r][col.at({c, e})] = q;
  return rows;
}

constexpr uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % kPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t mod_of(const mpz_class& z) {
  mpz_class m = z % static_cast<unsigned long>(kPrime);
  if (m < 0) m += static_cast<unsigned long>(kPrime);
  return m.get_ui();
}

// Rank over GF(p); returns -1 when a denominator collides with the prime.
int modular_rank(const std::vector<std::vector<Rational>>& rows) {
  size_t n = rows.size(), m = n ? rows[0].size() : 0;
  std::vector<std::vector<uint64_t>> a(n, std::vector<uint64_t>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      const Rational& q = rows[i][j];
      if (q == 0) continue;
      uint64_t den = mod_of(q.get_den());
      if (den == 0) return -1;
      uint64_t num = mod_of(q.get_num());
      a[i][j] = mulmod(num, powmod(den, kPrime - 2));
    }
  int rank = 0;
  for (size_t col = 0; col < m && rank < static_cast<int>(n); ++col) {
    size_t sel = n;
    for (size_t r = rank; r < n; ++r)
      if (a[r][col]) { sel = r; break; }
    if (sel == n) continue;
    std::swap(a[rank], a[sel]);
    uint64_t inv = powmod(a[rank][col], kPrime - 2);
    for (size_t j = col; j < m; ++j) a[rank][j] = mulmod(a[rank][j], inv);
    for (size_t r = 0; r < n; ++r) {
      if (static_cast<int>(r) == rank || !a[r][col]) continue;
      uint64_t f = a[r][col];
      for (size_t j = col; j < m; ++j)
        a[r][j] = (a[r][j] + kPrime - mulmod(f, a[rank][j])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination on an integer copy (rows scaled by their common
// denominator, which preserves rank).
int bareiss_rank(const std::vector<std::vector<Rational>>& rows) {
  size_t n = rows.size(), m = n ? rows[0].size() : 0;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(m, 0));
  for (size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (size_t j = 0; j < m; ++j)
      if (rows[i][j] != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rows[i][j].get_den().get_mpz_t());
    for (size_t j = 0; j < m; ++j) {
      Rational q = rows[i][j] * Rational(lcm);
      a[i][j] = q.get_num();
    }
  }
  mpz_class prev = 1;
  int rank = 0;
  for (size_t col = 0; col < m && rank < static_cast<int>(n); ++col) {
    size_t sel = n;
    for (size_t r = rank; r < n; ++r)
      if (a[r][col] != 0) { sel = r; break; }
    if (sel == n) continue;
    std::swap(a[rank], a[sel]);
    for (size_t r = rank + 1; r < n; ++r) {
      for (size_t j = col + 1; j < m; ++j)
        a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Reduced elimination with row tracking: rows that vanish reveal exact
// rational null combinations of the input fields.
std::pair<int, std::vector<std::vector<Rational>>> rref_nullspace(
    std::vector<std::vector<Rational>> rows) {
  size_t n = rows.size(), m = n ? rows[0].size() : 0;
  std::vector<std::vector<Rational>> track(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) track[i][i] = 1;
  size_t piv = 0;
  for (size_t col = 0; col < m && piv < n; ++col) {
    size_t sel = n;
    for (size_t r = piv; r < n; ++r)
      if (rows[r][col] != 0) { sel = r; break; }
    if (sel == n) continue;
    std::swap(rows[piv], rows[sel]);
    std::swap(track[piv], track[sel]);
    Rational pv = rows[piv][col];
    for (auto& x : rows[piv]) x /= pv;
    for (auto& x : track[piv]) x /= pv;
    for (size_t r = 0; r < n; ++r) {
      if (r == piv || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (size_t j = 0; j < m; ++j) rows[r][j] -= f * rows[piv][j];
      for (size_t j = 0; j < n; ++j) track[r][j] -= f * track[piv][j];
    }
    ++piv;
  }
  std::vector<std::vector<Rational>> nullspace;
  for (size_t r = piv; r < n; ++r) nullspace.push_back(track[r]);
  return {static_cast<int>(piv), std::move(nullspace)};
}

}  // namespace

int coefficient_rank_exact(const std::vector<VectorField>& fields) {
  if (fields.empty()) return 0;
  return bareiss_rank(coefficient_rows(fields));
}

int coefficient_rank_sqrt2(const std::vector<VectorField>& a,
                           const std::vector<VectorField>& b) {
  if (a.empty()) return 0;
  std::vector<VectorField> both = a;
  both.insert(both.end(), b.begin(), b.end());
  auto part_rows = coefficient_rows(both);
  size_t n = a.size(), m = part_rows[0].size();
  // Restriction of scalars for x = u + v*sqrt(2): multiplication acts on the
  // rational coordinate pair as [[u, 2v], [v, u]].
  std::vector<std::vector<Rational>> rows(2 * n, std::vector<Rational>(2 * m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      rows[2 * i][j] = part_rows[i][j];
      rows[2 * i][m + j] = 2 * part_rows[n + i][j];
      rows[2 * i + 1][j] = part_rows[n + i][j];
      rows[2 * i + 1][m + j] = part_rows[i][j];
    }
  int mr = modular_rank(rows);
  int r2 = (mr == static_cast<int>(2 * n)) ? mr : bareiss_rank(rows);
  return r2 / 2;
}

RankCertificate coefficient_rank(const std::vector<VectorField>& fields) {
  RankCertificate cert;
  cert.count = static_cast<int>(fields.size());
  if (fields.empty()) return cert;
  auto rows = coefficient_rows(fields);
  int mr = modular_rank(rows);
  if (mr == cert.count) {
    // Modular rank never exceeds the true rank, so a full modular rank is a
    // certificate of full rank.
    cert.rank = cert.count;
    return cert;
  }
  auto [rank, nullspace] = rref_nullspace(rows);
  cert.rank = rank;
  cert.nullspace = std::move(nullspace);
  return cert;
}

}  // namespace hdiv
