#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "rvs/graph.hpp"

namespace rvs {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigMat = std::vector<std::vector<BigInt>>;
using RatMat = std::vector<std::vector<Rational>>;

std::int64_t narrow(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(Errc::Overflow, "exact result does not fit in int64");
  return static_cast<std::int64_t>(x);
}

// Fraction-free Bareiss elimination.
BigInt bareiss(BigMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigMat to_big(const IntMatrix& m) {
  BigMat out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::BadParams, "determinant of non-square matrix");
  return bareiss(to_big(m));
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::BadParams, "adjugate of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  const BigMat big = to_big(m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // adj(c, r) is the (r, c) cofactor.
      BigMat minor;
      minor.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<BigInt> row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
          if (j != c) row.push_back(big[i][j]);
        minor.push_back(std::move(row));
      }
      BigInt cof = bareiss(std::move(minor));
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = narrow(cof);
    }
  }
  return adj;
}

Definiteness definiteness(const IntMatrix& sym) {
  if (!sym.symmetric()) throw Error(Errc::BadParams, "definiteness needs a symmetric matrix");
  const std::size_t n = sym.rows();
  RatMat s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = sym(i, j);

  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);

  while (!active.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t a : active) {
      if (s[a][a] < 0) return {Definiteness::Kind::Indefinite, {}};
      if (!pivot && s[a][a] > 0) pivot = a;
    }
    if (!pivot) {
      // Zero diagonal on the remaining Schur complement: any off-diagonal
      // entry gives a 2x2 principal minor with negative determinant.
      for (std::size_t a : active)
        for (std::size_t b : active)
          if (s[a][b] != 0) return {Definiteness::Kind::Indefinite, {}};
      return {Definiteness::Kind::PositiveSemidefinite, integer_kernel(sym)};
    }
    const std::size_t p = *pivot;
    std::erase(active, p);
    for (std::size_t a : active) {
      if (s[a][p] == 0) continue;
      const Rational f = s[a][p] / s[p][p];
      for (std::size_t b : active) s[a][b] -= f * s[p][b];
    }
  }
  return {Definiteness::Kind::PositiveDefinite, {}};
}

std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMat a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rational lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];

    BigInt den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<BigInt> iv(cols);
    BigInt g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      iv[j] = boost::multiprecision::numerator(Rational(v[j] * den));
      g = boost::multiprecision::gcd(g, iv[j]);
    }
    std::vector<std::int64_t> out(cols);
    const auto first = std::find_if(iv.begin(), iv.end(), [](const BigInt& x) { return x != 0; });
    const BigInt sgn = (*first < 0) ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j) out[j] = narrow(iv[j] / g * sgn);
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace rvs
