#pragma once

// Rational Clebsch-Gordan coefficients C_{m,n,k}(i,j): the coordinates of
// f^i phi_m (x) f^j phi_n in the weight bases of the summands V(m+n-2k).

#include "cgexact/exact.hpp"
#include "cgexact/indices.hpp"
#include "cgexact/matrix.hpp"
#include "cgexact/report.hpp"
#include "cgexact/weight_basis.hpp"

#include <vector>

namespace cgexact {

/// Row i, column i+j-k holds C_{m,n,k}(i,j).
struct CGMatrix {
  long m = 0;
  long n = 0;
  long k = 0;
  RationalMatrix entries;

  Rational at(long i, long j) const;

  bool operator==(const CGMatrix&) const = default;
};

/// Components C_{m,n,k}(i,j) for k = 0..min(m,n), zeros included.
struct Decomposition {
  long m = 0;
  long n = 0;
  long i = 0;
  long j = 0;
  std::vector<Rational> components;
};

/// D(m,n,k) = C(m+n-k+1, k) C(m+n-2k, m-k). Cross-checked against the
/// multinomial form; a mismatch throws InternalError.
Integer normalizer(long m, long n, long k);

/// (-1)^k c(m-i, n-j) / D(m,n,k); zero off the window.
Rational cg(long m, long n, long k, long i, long j);

/// The same coefficient through the Weyl reflection:
/// multinomial(m+n-k; m-i, n-j, *) c(i,j) / (multinomial(m+n-k; i, j, *) D).
Rational cg_via_reflection(long m, long n, long k, long i, long j);

/// Coordinate matrix rotated by 180 degrees and divided by (-1)^k D(m,n,k).
CGMatrix cg_matrix(const CoordinateMatrix& coords);
CGMatrix cg_matrix(long m, long n, long k);

Decomposition decompose(long m, long n, long i, long j);

/// Exhaustive check of both orthogonality families (c against C, and c
/// against its reflection weighted by D) together with the normalizer
/// identities and the column duality of the two tables.
Report verify_orthogonality(long m, long n);

}  // namespace cgexact
