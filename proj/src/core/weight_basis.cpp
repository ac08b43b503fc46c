#include "cgexact/weight_basis.hpp"

#include "cgexact/combinatorics.hpp"

namespace cgexact {

Integer CoordinateMatrix::at(long i, long j) const {
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return 0;
  return entries(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j - k));
}

std::vector<Integer> highest_weight_coords(long m, long n, long k) {
  require_structural(m, n, k, "highest_weight_coords");
  std::vector<Integer> out;
  out.reserve(k + 1);
  for (long l = 0; l <= k; ++l)
    out.push_back(sign_power(l) * binomial(m - l, k - l) * binomial(n - k + l, l));
  return out;
}

std::vector<Integer> lowest_weight_coords(long m, long n, long k) {
  require_structural(m, n, k, "lowest_weight_coords");
  const Integer scale = binomial(m + n - 2 * k, m - k);
  std::vector<Integer> out;
  out.reserve(k + 1);
  for (long l = 0; l <= k; ++l) out.push_back(sign_power(l) * scale);
  return out;
}

CoordinateMatrix coordinate_matrix(long m, long n, long k) {
  require_structural(m, n, k, "coordinate_matrix");
  const long cols = m + n - 2 * k + 1;
  CoordinateMatrix out{m, n, k, IntegerMatrix(m + 1, cols)};
  auto& e = out.entries;

  // leftmost column: highest weight vector, rows 0..k
  const auto seed = highest_weight_coords(m, n, k);
  for (long l = 0; l <= k; ++l) e(l, 0) = seed[l];

  // each column from its left neighbour and upper-left neighbour; row 0 just
  // carries the top value rightwards, rows below the trapezoid stay zero
  for (long q = 1; q < cols; ++q) {
    for (long i = 0; i <= m; ++i) {
      const long j = q + k - i;
      if (j < 0) continue;
      if (j > n) {
        e(i, q) = 0;
        continue;
      }
      e(i, q) = e(i, q - 1);
      if (i > 0) e(i, q) += e(i - 1, q - 1);
    }
  }
  return out;
}

Integer coord_unrestricted(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "coord");
  if (i < 0 || j < 0 || i + j < k) return 0;
  Integer sum = 0;
  for (long l = 0; l <= k; ++l) {
    Integer term = binomial(i + j - k, i - l);
    if (term == 0) continue;
    term *= binomial(m - l, k - l) * binomial(n - k + l, l);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Integer coord(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "coord");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return 0;
  return coord_unrestricted(m, n, k, i, j);
}

Integer coord_racah(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "coord_racah");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return 0;
  Integer sum = 0;
  for (long l = 0; l <= k; ++l) {
    Integer term = binomial(i + j - k, i - l) * binomial(m - i, k - l) * binomial(n - j, l);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

namespace {

using Series = std::vector<Integer>;

// Truncated product of two univariate series, keeping degrees 0..cap.
Series multiply(const Series& a, const Series& b, long cap) {
  Series out(cap + 1, Integer(0));
  for (long s = 0; s <= cap && s < static_cast<long>(a.size()); ++s) {
    if (a[s] == 0) continue;
    for (long t = 0; s + t <= cap && t < static_cast<long>(b.size()); ++t)
      out[s + t] += a[s] * b[t];
  }
  return out;
}

// 1 / (1 - sign*z)^power, truncated at degree cap, by repeated multiplication
// with the geometric series.
Series inverse_power(int sign, long power, long cap) {
  Series geometric(cap + 1);
  for (long d = 0; d <= cap; ++d) geometric[d] = (sign < 0 && d % 2 == 1) ? -1 : 1;
  Series out(cap + 1, Integer(0));
  out[0] = 1;
  for (long r = 0; r < power; ++r) out = multiply(out, geometric, cap);
  return out;
}

// Bivariate series in x (degree <= cap_x) and y (degree <= cap_y).
class BivariateSeries {
public:
  BivariateSeries(long cap_x, long cap_y)
      : cap_x_(cap_x), cap_y_(cap_y), data_((cap_x + 1) * (cap_y + 1), Integer(0)) {}

  Integer& at(long dx, long dy) { return data_[dx * (cap_y_ + 1) + dy]; }
  const Integer& at(long dx, long dy) const { return data_[dx * (cap_y_ + 1) + dy]; }

  // *= (x + y)
  void multiply_by_x_plus_y() {
    BivariateSeries next(cap_x_, cap_y_);
    for (long dx = 0; dx <= cap_x_; ++dx)
      for (long dy = 0; dy <= cap_y_; ++dy) {
        const Integer& v = at(dx, dy);
        if (v == 0) continue;
        if (dx + 1 <= cap_x_) next.at(dx + 1, dy) += v;
        if (dy + 1 <= cap_y_) next.at(dx, dy + 1) += v;
      }
    *this = std::move(next);
  }

  void multiply_by_series_in_x(const Series& s) {
    BivariateSeries next(cap_x_, cap_y_);
    for (long dx = 0; dx <= cap_x_; ++dx)
      for (long dy = 0; dy <= cap_y_; ++dy) {
        const Integer& v = at(dx, dy);
        if (v == 0) continue;
        for (long t = 0; dx + t <= cap_x_; ++t) next.at(dx + t, dy) += v * s[t];
      }
    *this = std::move(next);
  }

  void multiply_by_series_in_y(const Series& s) {
    BivariateSeries next(cap_x_, cap_y_);
    for (long dx = 0; dx <= cap_x_; ++dx)
      for (long dy = 0; dy <= cap_y_; ++dy) {
        const Integer& v = at(dx, dy);
        if (v == 0) continue;
        for (long t = 0; dy + t <= cap_y_; ++t) next.at(dx, dy + t) += v * s[t];
      }
    *this = std::move(next);
  }

private:
  long cap_x_;
  long cap_y_;
  std::vector<Integer> data_;
};

}  // namespace

Integer coord_generating_function(long m, long n, long k, long i, long j) {
  require_window({m, n, k, i, j}, "coord_generating_function");
  BivariateSeries f(j, i);
  f.at(0, 0) = 1;
  for (long e = 0; e < i + j - k; ++e) f.multiply_by_x_plus_y();
  f.multiply_by_series_in_x(inverse_power(+1, m - k + 1, j));
  f.multiply_by_series_in_y(inverse_power(-1, n - k + 1, i));
  return f.at(j, i);
}

}  // namespace cgexact
