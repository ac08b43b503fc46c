#include "cgexact/projectors.hpp"

#include "cgexact/clebsch_gordan.hpp"
#include "cgexact/weight_basis.hpp"

#include <algorithm>
#include <initializer_list>

namespace cgexact {

namespace {

void require_weight(long m, long n, long p, const char* op) {
  if (m < 0 || n < 0 || p < 0 || p > m + n)
    throw DomainError(std::string(op) + ": need 0 <= p <= m+n, got p=" + std::to_string(p));
}

void require_summand(long m, long n, long p, long k, const char* op) {
  require_weight(m, n, p, op);
  if (!structurally_valid(m, n, k) || p < k || p > m + n - k)
    throw DomainError(std::string(op) + ": summand k=" + std::to_string(k) +
                      " does not meet weight space p=" + std::to_string(p));
}

}  // namespace

std::vector<long> summands_in_weight_space(long m, long n, long p) {
  require_weight(m, n, p, "summands_in_weight_space");
  std::vector<long> out;
  for (long k = 0; k <= std::min(m, n); ++k)
    if (k <= p && p <= m + n - k) out.push_back(k);
  return out;
}

RationalMatrix tridiagonal_ef(long m, long n, long p) {
  require_weight(m, n, p, "tridiagonal_ef");
  const WeightRange range = weight_range(m, n, p);
  const std::size_t size = range.size();
  RationalMatrix M(size, size);
  for (long i = range.lo; i <= range.hi; ++i) {
    const long j = p - i;
    const std::size_t c = i - range.lo;
    M(c, c) = (i + 1) * (m - i) + (j + 1) * (n - j);
    if (c > 0) M(c - 1, c) = i * (m - i + 1);
    if (c + 1 < size) M(c + 1, c) = j * (n - j + 1);
  }
  return M;
}

Integer ef_eigenvalue(long m, long n, long k, long p) {
  require_summand(m, n, p, k, "ef_eigenvalue");
  return Integer(m + n - p - k) * (p - k + 1);
}

Integer casimir_scalar(long n) {
  if (n < 0) throw DomainError("casimir_scalar: n must be nonnegative");
  return Integer(n) * (n + 2);
}

RationalMatrix projector(long m, long n, long p, long k) {
  require_summand(m, n, p, k, "projector");
  const RationalMatrix M = tridiagonal_ef(m, n, p);
  const Rational lambda = ef_eigenvalue(m, n, k, p);
  RationalMatrix P = RationalMatrix::identity(M.rows());
  for (long other : summands_in_weight_space(m, n, p)) {
    if (other == k) continue;
    const Rational mu = ef_eigenvalue(m, n, other, p);
    if (mu == lambda)
      throw InternalError("ef eigenvalue collision at m=" + std::to_string(m) + " n=" +
                          std::to_string(n) + " p=" + std::to_string(p));
    P = P * ((M - RationalMatrix::identity(M.rows()) * mu) * Rational(1 / (lambda - mu)));
  }
  return P;
}

RationalMatrix ProjectorFactors::outer() const {
  RationalMatrix out(column.size(), row.size());
  for (std::size_t r = 0; r < column.size(); ++r)
    for (std::size_t c = 0; c < row.size(); ++c) out(r, c) = column[r] * row[c];
  return out;
}

ProjectorFactors projector_factorization(long m, long n, long p, long k) {
  require_summand(m, n, p, k, "projector_factorization");
  const CoordinateMatrix coords = coordinate_matrix(m, n, k);
  const CGMatrix cgs = cg_matrix(coords);
  const WeightRange range = weight_range(m, n, p);
  ProjectorFactors out;
  for (long i = range.lo; i <= range.hi; ++i) {
    out.column.push_back(coords.entries(i, p - k));
    out.row.push_back(cgs.entries(i, p - k));
  }
  return out;
}

std::vector<SummandComponent> decompose_via_projectors(long m, long n, long p, long basis_index) {
  require_weight(m, n, p, "decompose_via_projectors");
  const WeightRange range = weight_range(m, n, p);
  if (basis_index < 0 || basis_index >= range.size())
    throw DomainError("decompose_via_projectors: basis index " + std::to_string(basis_index) +
                      " outside weight space of dimension " + std::to_string(range.size()));
  std::vector<SummandComponent> out;
  for (long k : summands_in_weight_space(m, n, p))
    out.push_back({k, projector(m, n, p, k).column(basis_index)});
  return out;
}

Report verify_projectors(long m, long n) {
  Report report;
  if (m < 0 || n < 0) return report;
  auto& complete = report.family("projectors.sum_is_identity");
  auto& idempotent = report.family("projectors.idempotent");
  auto& orthogonal = report.family("projectors.mutually_annihilating");
  auto& eigen = report.family("projectors.eigen_relation");
  auto& charpoly = report.family("projectors.characteristic_roots");
  auto& distinct = report.family("projectors.distinct_eigenvalues");
  auto& casimir = report.family("projectors.casimir_consistency");
  auto& factor = report.family("projectors.rank_one_factorization");

  for (long p = 0; p <= m + n; ++p) {
    const auto here = [&] {
      return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
    };
    const RationalMatrix M = tridiagonal_ef(m, n, p);
    const std::size_t size = M.rows();
    const RationalMatrix I = RationalMatrix::identity(size);
    const auto ks = summands_in_weight_space(m, n, p);

    std::vector<Integer> lambdas;
    for (long k : ks) lambdas.push_back(ef_eigenvalue(m, n, k, p));
    bool all_distinct = ks.size() == size;
    for (std::size_t a = 0; a < lambdas.size(); ++a)
      for (std::size_t b = a + 1; b < lambdas.size(); ++b)
        all_distinct = all_distinct && lambdas[a] != lambdas[b];
    distinct.check(all_distinct, here);
    if (!all_distinct) continue;

    std::vector<RationalMatrix> P;
    RationalMatrix sum(size, size);
    for (std::size_t a = 0; a < ks.size(); ++a) {
      const long k = ks[a];
      P.push_back(projector(m, n, p, k));
      const RationalMatrix& Pk = P.back();
      sum += Pk;
      const auto at_k = [&] { return here() + " k=" + std::to_string(k); };
      idempotent.check(Pk * Pk == Pk && rank(Pk) == 1, at_k);
      const Rational lambda = lambdas[a];
      eigen.check(M * Pk == Pk * lambda && Pk * M == Pk * lambda, at_k);
      charpoly.check(determinant(M - I * lambda) == 0, at_k);
      const long w = m + n - 2 * p;
      casimir.check(4 * lambdas[a] + w * w - 2 * w == casimir_scalar(m + n - 2 * k), at_k);
      factor.check(projector_factorization(m, n, p, k).outer() == Pk, at_k);
    }
    complete.check(sum == I, here);
    for (std::size_t a = 0; a < P.size(); ++a)
      for (std::size_t b = 0; b < P.size(); ++b) {
        if (a == b) continue;
        orthogonal.check((P[a] * P[b]).is_zero(), [&] {
          return here() + " k=" + std::to_string(ks[a]) + " k'=" + std::to_string(ks[b]);
        });
      }
  }
  return report;
}

namespace {

RationalMatrix scaled(long den, std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix out(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) out(r, c++) = make_rational(v, den);
    ++r;
  }
  return out;
}

}  // namespace

Report verify_worked_example() {
  Report report;
  constexpr long m = 3, n = 4, p = 3;
  const auto here = [] { return std::string("m=3 n=4 p=3"); };

  report.family("worked_example.ef_matrix")
      .check(tridiagonal_ef(m, n, p) ==
                 scaled(1, {{7, 3, 0, 0}, {6, 10, 4, 0}, {0, 6, 9, 3}, {0, 0, 4, 4}}),
             here);

  auto& eig = report.family("worked_example.eigenvalues");
  const long expected_eig[] = {16, 9, 4, 1};  // k = 0..3
  for (long k = 0; k <= 3; ++k)
    eig.check(ef_eigenvalue(m, n, k, p) == expected_eig[k],
              [&] { return here() + " k=" + std::to_string(k); });

  const RationalMatrix expected_projectors[] = {
      scaled(35, {{4, 6, 4, 1}, {12, 18, 12, 3}, {12, 18, 12, 3}, {4, 6, 4, 1}}),
      scaled(70, {{27, 9, -15, -9}, {18, 6, -10, -6}, {-45, -15, 25, 15}, {-36, -12, 20, 12}}),
      scaled(5, {{2, -1, 0, 1}, {-2, 1, 0, -1}, {0, 0, 0, 0}, {4, -2, 0, 2}}),
      scaled(10, {{1, -1, 1, -1}, {-2, 2, -2, 2}, {3, -3, 3, -3}, {-4, 4, -4, 4}}),
  };
  auto& proj = report.family("worked_example.projectors");
  for (long k = 0; k <= 3; ++k)
    proj.check(projector(m, n, p, k) == expected_projectors[k],
               [&] { return here() + " k=" + std::to_string(k); });

  // components of the third basis vector, rows indexed by k
  const RationalMatrix expected_components =
      scaled(70, {{8, 24, 24, 8}, {-15, -10, 25, 20}, {0, 0, 0, 0}, {7, -14, 21, -28}});
  auto& parts = report.family("worked_example.decomposition");
  const auto comps = decompose_via_projectors(m, n, p, 2);
  bool parts_ok = comps.size() == 4;
  std::vector<Rational> total(4, Rational(0));
  for (const auto& comp : comps) {
    for (std::size_t r = 0; r < 4; ++r) {
      parts_ok = parts_ok && comp.coords[r] == expected_components(comp.k, r);
      total[r] += comp.coords[r];
    }
  }
  parts_ok = parts_ok && total == std::vector<Rational>{0, 0, 1, 0};
  parts.check(parts_ok, here);

  const ProjectorFactors f = projector_factorization(m, n, p, 1);
  report.family("worked_example.factorization")
      .check(f.column == std::vector<Integer>{3, 2, -5, -4} &&
                 f.row == std::vector<Rational>{make_rational(9, 70), make_rational(3, 70),
                                                make_rational(-5, 70), make_rational(-3, 70)} &&
                 f.outer() == expected_projectors[1],
             here);
  return report;
}

}  // namespace cgexact
