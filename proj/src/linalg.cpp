#include "supermod/linalg.hpp"

#include <stdexcept>

namespace supermod::linalg {

std::size_t rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Bareiss step: the division is exact.
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RatMatrix& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.numerator() * (l / x.denominator()));
    m.push_back(std::move(out));
  }
  return rank(std::move(m));
}

namespace {

// Gauss-Jordan on [A | B]; returns false if A is singular. B is overwritten with A^{-1}B.
bool gauss_jordan(RatMatrix a, RatMatrix& b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (auto& x : b[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[c][j];
      for (std::size_t j = 0; j < b[i].size(); ++j) b[i][j] -= f * b[c][j];
    }
  }
  return true;
}

void require_square(const RatMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw std::invalid_argument("matrix must be square");
  }
}

}  // namespace

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  require_square(a);
  if (b.size() != a.size()) throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix rhs;
  rhs.reserve(b.size());
  for (const auto& x : b) rhs.push_back({x});
  if (!gauss_jordan(a, rhs)) return std::nullopt;
  std::vector<Rational> x;
  x.reserve(b.size());
  for (auto& row : rhs) x.push_back(row[0]);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  RatMatrix id(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = Rational(1);
  if (!gauss_jordan(a, id)) return std::nullopt;
  return id;
}

void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<mpz_class> primitive_integer(const std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.numerator() * (l / x.denominator()));
  make_primitive(out);
  return out;
}

}  // namespace supermod::linalg
