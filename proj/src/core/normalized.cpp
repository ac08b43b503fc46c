#include "cgexact/normalized.hpp"

#include "cgexact/clebsch_gordan.hpp"
#include "cgexact/combinatorics.hpp"
#include "cgexact/weight_basis.hpp"

#include <vector>

namespace cgexact {

SignedSqrtRational::SignedSqrtRational(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  radicand_.canonicalize();
  if (radicand_ < 0) throw DomainError("negative radicand");
  if (sign_ > 1 || sign_ < -1) throw DomainError("sign must be -1, 0 or +1");
  if (radicand_ == 0) sign_ = 0;
  if (sign_ == 0) radicand_ = 0;
}

SignedSqrtRational SignedSqrtRational::from_rational(const Rational& q) {
  return {sgn(q), q * q};
}

Rational SignedSqrtRational::to_rational() const {
  Rational root;
  if (!exact_sqrt(radicand_, root))
    throw IrrationalError("sqrt(" + to_string(radicand_) + ") is irrational");
  return sign_ < 0 ? Rational(-root) : root;
}

std::string SignedSqrtRational::str() const {
  if (sign_ == 0) return "0";
  return std::string(sign_ > 0 ? "+" : "-") + "sqrt(" + to_string(radicand_) + ")";
}

std::string SignedSqrtRational::decimal(int digits) const {
  if (sign_ == 0) return to_decimal(Rational(0), digits);
  // floor(sqrt(radicand) * 10^(digits+2)) computed on integers, then rounded
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  Integer num = radicand_.get_num() * scale * scale;
  mpz_fdiv_q(num.get_mpz_t(), num.get_mpz_t(), radicand_.get_den().get_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
  Rational value = make_rational(root, scale);
  if (sign_ < 0) value = -value;
  return to_decimal(value, digits);
}

SignedSqrtRational sum_like_surds(std::span<const SignedSqrtRational> terms) {
  const SignedSqrtRational* reference = nullptr;
  for (const auto& t : terms)
    if (!t.is_zero()) {
      reference = &t;
      break;
    }
  if (!reference) return {};
  Rational total = 0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    Rational multiple;
    if (!exact_sqrt(t.radicand() / reference->radicand(), multiple))
      throw IrrationalError("terms are not rational multiples of a common surd: " + t.str() +
                            " vs " + reference->str());
    total += t.sign() * multiple;
  }
  return {sgn(total), total * total * reference->radicand()};
}

Rational basis_norm_sq(long m, long i) {
  if (m < 0 || i < 0 || i > m) throw DomainError("basis_norm_sq: need 0 <= i <= m");
  return make_rational(factorial(i), factorial(m - i));
}

Rational summand_norm_sq(long m, long n, long k, long i, long j) {
  require_window({m, n, k, i, j}, "summand_norm_sq");
  return make_rational(factorial(i + j - k) * normalizer(m, n, k), factorial(m + n - i - j - k));
}

NormData norm_data(long m, long n, long k, long i, long j) {
  require_window({m, n, k, i, j}, "norm_data");
  return {basis_norm_sq(m, i) * basis_norm_sq(n, j), summand_norm_sq(m, n, k, i, j)};
}

SignedSqrtRational wigner(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "wigner");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return {};
  Integer s = 0;
  for (long l = 0; l <= k; ++l) {
    Integer term = binomial(i + j - k, i - l) * binomial(m - l, k - l) * binomial(n - k + l, l);
    if (l % 2 == 0)
      s += term;
    else
      s -= term;
  }
  const long total = m + n - k;
  Integer num = Integer(m + n - 2 * k + 1) * multinomial2(total, m - i, n - j);
  Integer den = Integer(total + 1) * multinomial(total, m - k, n - k, k) *
                multinomial2(total, i, j);
  return {sgn(s), make_rational(num * s * s, den)};
}

SignedSqrtRational wigner_via_rational(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "wigner_via_rational");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return {};
  const Rational c = cg(m, n, k, i, j);
  const NormData norms = norm_data(m, n, k, i, j);
  return {sgn(c), norms.summand_norm_sq / norms.basis_norm_sq * c * c};
}

SignedSqrtRational racah_normalized(long m, long n, long k, long i, long j) {
  require_structural(m, n, k, "racah_normalized");
  if (!IndexTuple{m, n, k, i, j}.window_valid()) return {};
  Integer s = 0;
  for (long l = 0; l <= k; ++l) {
    Integer term = binomial(k, l) * binomial(m - k, i - l) * binomial(n - k, j - k + l);
    if (l % 2 == 0)
      s += term;
    else
      s -= term;
  }
  const long total = m + n - k;
  Integer num = Integer(m + n - 2 * k + 1) * multinomial(total, m - k, n - k, k);
  Integer den = Integer(total + 1) * multinomial2(total, m - i, n - j) *
                multinomial2(total, i, j);
  return {sgn(s), make_rational(num * s * s, den)};
}

Report verify_normalized(long m, long n, bool include_unitarity) {
  Report report;
  if (m < 0 || n < 0) return report;
  auto& routes = report.family("normalized.wigner_equals_rescaled");
  auto& racah = report.family("normalized.wigner_equals_racah");
  auto& sign = report.family("normalized.sign_matches_cg");
  const long kmax = std::min(m, n);

  for (long k = 0; k <= kmax; ++k)
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= n; ++j) {
        const IndexTuple t{m, n, k, i, j};
        if (!t.window_valid()) continue;
        const auto w = wigner(m, n, k, i, j);
        routes.check(w == wigner_via_rational(m, n, k, i, j), [&] { return t.str(); });
        racah.check(w == racah_normalized(m, n, k, i, j), [&] { return t.str(); });
        sign.check(w.sign() == sgn(cg(m, n, k, i, j)), [&] { return t.str(); });
      }

  if (!include_unitarity) return report;
  auto& unitary = report.family("normalized.orthonormality");
  for (long p = 0; p <= m + n; ++p) {
    const WeightRange range = weight_range(m, n, p);
    for (long k = 0; k <= kmax; ++k) {
      if (p < k || p > m + n - k) continue;
      for (long k2 = 0; k2 <= kmax; ++k2) {
        if (p < k2 || p > m + n - k2) continue;
        std::vector<SignedSqrtRational> terms;
        for (long i = range.lo; i <= range.hi; ++i)
          terms.push_back(wigner(m, n, k, i, p - i) * wigner(m, n, k2, i, p - i));
        bool ok = false;
        std::string detail;
        try {
          const Rational value = sum_like_surds(terms).to_rational();
          ok = value == (k == k2 ? 1 : 0);
          detail = "sum=" + to_string(value);
        } catch (const IrrationalError& e) {
          detail = e.what();
        }
        unitary.check(ok, [&] {
          return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " p=" +
                 std::to_string(p) + " k=" + std::to_string(k) + " k'=" + std::to_string(k2) +
                 " " + detail;
        });
      }
    }
  }
  return report;
}

}  // namespace cgexact
