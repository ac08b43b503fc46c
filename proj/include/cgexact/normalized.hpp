#pragma once

// Unitary (SU(2)-normalized) coefficients as exact signed square roots of
// rationals, by three routes: Wigner's sum, Racah's sum, and rescaling the
// rational coefficient by the ratio of Hermitian norms.

#include "cgexact/exact.hpp"
#include "cgexact/indices.hpp"
#include "cgexact/report.hpp"

#include <span>
#include <string>

namespace cgexact {

/// Thrown when an exact result would not be rational.
class IrrationalError : public DomainError {
public:
  using DomainError::DomainError;
};

/// sign * sqrt(radicand) with radicand >= 0 in lowest terms and sign = 0 iff
/// radicand = 0. Square factors are not extracted from the radicand.
class SignedSqrtRational {
public:
  SignedSqrtRational() = default;
  /// sign * sqrt(radicand); sign is forced to 0 when radicand is 0.
  SignedSqrtRational(int sign, Rational radicand);

  /// The rational q, written as sign(q) * sqrt(q^2).
  static SignedSqrtRational from_rational(const Rational& q);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Exact value when the radicand is a rational square; throws IrrationalError otherwise.
  Rational to_rational() const;

  /// "+sqrt(p/q)", "-sqrt(p/q)" or "0".
  std::string str() const;
  std::string decimal(int digits) const;

  SignedSqrtRational operator-() const { return {-sign_, radicand_}; }
  friend SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    return {a.sign_ * b.sign_, a.radicand_ * b.radicand_};
  }
  bool operator==(const SignedSqrtRational&) const = default;

private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

/// Sum of terms that are all rational multiples of one common surd. Throws
/// IrrationalError if two nonzero terms are not.
SignedSqrtRational sum_like_surds(std::span<const SignedSqrtRational> terms);

/// Squared Hermitian norms entering the rescaling.
struct NormData {
  Rational basis_norm_sq;    // ||f^i phi_m||^2 ||f^j phi_n||^2
  Rational summand_norm_sq;  // ||f^{i+j-k} phi_{m,n,k}||^2
};

/// ||f^i phi_m||^2 = i!/(m-i)!.
Rational basis_norm_sq(long m, long i);

/// ||f^{i+j-k} phi_{m,n,k}||^2 = (i+j-k)! D(m,n,k) / (m+n-i-j-k)!.
Rational summand_norm_sq(long m, long n, long k, long i, long j);

NormData norm_data(long m, long n, long k, long i, long j);

/// Wigner's formula in binomial form. Zero off the window.
SignedSqrtRational wigner(long m, long n, long k, long i, long j);

/// cg(m,n,k,i,j) scaled by the norm ratio. Zero off the window.
SignedSqrtRational wigner_via_rational(long m, long n, long k, long i, long j);

/// Racah's formula. Zero off the window.
SignedSqrtRational racah_normalized(long m, long n, long k, long i, long j);

/// Agreement of the three routes, sign agreement with cg, and orthonormality
/// of the unitary coefficients on every weight space of V(m) (x) V(n).
Report verify_normalized(long m, long n, bool include_unitarity = true);

}  // namespace cgexact
