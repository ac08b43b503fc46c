#include "cgexact/clebsch_gordan.hpp"

#include "cgexact/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace cgexact {

Rational CGMatrix::at(long i, long j) const {
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return 0;
  return entries(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j - k));
}

Integer normalizer(long m, long n, long k) {
  require_structural(m, n, k, "normalizer");
  Integer d = binomial(m + n - k + 1, k) * binomial(m + n - 2 * k, m - k);
  // (m+n-k+1)/(m+n-2k+1) * multinomial(m+n-k; m-k, n-k, k)
  Integer lhs = d * (m + n - 2 * k + 1);
  Integer rhs = Integer(m + n - k + 1) * multinomial(m + n - k, m - k, n - k, k);
  if (lhs != rhs)
    throw InternalError("normalizer forms disagree at m=" + std::to_string(m) +
                        " n=" + std::to_string(n) + " k=" + std::to_string(k));
  return d;
}

Rational cg(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "cg");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return 0;
  Rational out = make_rational(coord(m, n, k, m - i, n - j), normalizer(m, n, k));
  if (k % 2 == 1) out = -out;
  return out;
}

Rational cg_via_reflection(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "cg_via_reflection");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return 0;
  const long total = m + n - k;
  Integer num = multinomial2(total, m - i, n - j) * coord(m, n, k, i, j);
  Integer den = multinomial2(total, i, j) * normalizer(m, n, k);
  return make_rational(num, den);
}

CGMatrix cg_matrix(const CoordinateMatrix& coords) {
  const long m = coords.m, n = coords.n, k = coords.k;
  const std::size_t rows = coords.entries.rows();
  const std::size_t cols = coords.entries.cols();
  const Integer d = normalizer(m, n, k);
  const Integer divisor = (k % 2 == 0) ? d : Integer(-d);
  CGMatrix out{m, n, k, RationalMatrix(rows, cols)};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out.entries(r, c) = make_rational(coords.entries(rows - 1 - r, cols - 1 - c), divisor);
  return out;
}

CGMatrix cg_matrix(long m, long n, long k) { return cg_matrix(coordinate_matrix(m, n, k)); }

Decomposition decompose(long m, long n, long i, long j) {
  if (m < 0 || n < 0 || i < 0 || i > m || j < 0 || j > n)
    throw DomainError("decompose: need 0 <= i <= m and 0 <= j <= n");
  Decomposition out{m, n, i, j, {}};
  const long kmax = std::min(m, n);
  out.components.reserve(kmax + 1);
  for (long k = 0; k <= kmax; ++k) out.components.push_back(cg(m, n, k, i, j));
  return out;
}

namespace {

std::string where(long m, long n, const std::string& rest) {
  std::ostringstream os;
  os << "m=" << m << " n=" << n << " " << rest;
  return os.str();
}

}  // namespace

Report verify_orthogonality(long m, long n) {
  Report report;
  if (m < 0 || n < 0) return report;
  const long kmax = std::min(m, n);

  std::vector<CoordinateMatrix> c;
  std::vector<CGMatrix> C;
  std::vector<Integer> D;
  for (long k = 0; k <= kmax; ++k) {
    c.push_back(coordinate_matrix(m, n, k));
    C.push_back(cg_matrix(c.back()));
    D.push_back(normalizer(m, n, k));
  }
  auto present = [&](long k, long p) { return k <= p && p <= m + n - k; };

  // dimension count of the decomposition
  {
    long total = 0;
    for (long k = 0; k <= kmax; ++k) total += m + n - 2 * k + 1;
    report.family("dimension_count").check(total == (m + 1) * (n + 1), [&] {
      return where(m, n, "sum of summand dimensions " + std::to_string(total));
    });
  }

  auto& coord_dot_cg = report.family("orthogonality.coord_dot_cg");
  auto& completeness = report.family("orthogonality.cg_completeness");
  auto& reflected = report.family("orthogonality.coord_dot_reflected_coord");
  auto& weighted = report.family("orthogonality.weighted_reflected_cg_completeness");
  auto& column_dot = report.family("duality.column_dot_is_one");
  auto& inner = report.family("normalizer.reflected_pairing");

  for (long p = 0; p <= m + n; ++p) {
    const WeightRange range = weight_range(m, n, p);

    for (long k = 0; k <= kmax; ++k) {
      if (!present(k, p)) continue;
      for (long k2 = 0; k2 <= kmax; ++k2) {
        Rational dot = 0;
        Integer refl = 0;
        for (long i = range.lo; i <= range.hi; ++i) {
          const long j = p - i;
          const Integer ci = c[k].at(i, j);
          if (ci == 0) continue;
          dot += ci * C[k2].at(i, j);
          refl += ci * c[k2].at(m - i, n - j);
        }
        const bool same = k == k2;
        coord_dot_cg.check(dot == (same ? 1 : 0), [&] {
          return where(m, n, "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                 " k'=" + std::to_string(k2) + " sum=" + to_string(dot));
        });
        const Integer expected = same ? Integer(sign_power(k) * D[k]) : Integer(0);
        reflected.check(refl == expected, [&] {
          return where(m, n, "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                 " k'=" + std::to_string(k2) + " sum=" + to_string(refl));
        });
        if (same) {
          inner.check(refl == sign_power(k) * D[k], [&] {
            return where(m, n, "p=" + std::to_string(p) + " k=" + std::to_string(k));
          });
          column_dot.check(dot == 1, [&] {
            return where(m, n, "k=" + std::to_string(k) + " column " + std::to_string(p - k));
          });
        }
      }
    }

    for (long i = range.lo; i <= range.hi; ++i) {
      const long j = p - i;
      for (long i2 = range.lo; i2 <= range.hi; ++i2) {
        const long j2 = p - i2;
        Rational sum = 0;
        Rational wsum = 0;
        for (long k = 0; k <= kmax; ++k) {
          if (!present(k, p)) continue;
          sum += c[k].at(i, j) * C[k].at(i2, j2);
          Rational term = C[k].at(m - i, n - j) * C[k].at(i2, j2) * D[k];
          if (k % 2 == 0)
            wsum += term;
          else
            wsum -= term;
        }
        const bool same = i == i2;
        completeness.check(sum == (same ? 1 : 0), [&] {
          return where(m, n, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                                 ") (i',j')=(" + std::to_string(i2) + "," +
                                 std::to_string(j2) + ") sum=" + to_string(sum));
        });
        weighted.check(wsum == (same ? 1 : 0), [&] {
          return where(m, n, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                                 ") (i',j')=(" + std::to_string(i2) + "," +
                                 std::to_string(j2) + ") sum=" + to_string(wsum));
        });
      }
    }
  }

  // table entries against the closed forms, and the two cg routes
  auto& matrix_vs_sum = report.family("coordinate_matrix.matches_sum");
  auto& routes = report.family("cg.two_routes_agree");
  for (long k = 0; k <= kmax; ++k)
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= n; ++j) {
        if (!IndexTuple{m, n, k, i, j}.window_valid()) continue;
        matrix_vs_sum.check(c[k].at(i, j) == coord(m, n, k, i, j), [&] {
          return IndexTuple{m, n, k, i, j}.str();
        });
        const Rational a = C[k].at(i, j);
        routes.check(a == cg_via_reflection(m, n, k, i, j),
                     [&] { return IndexTuple{m, n, k, i, j}.str(); });
      }
  return report;
}

}  // namespace cgexact
