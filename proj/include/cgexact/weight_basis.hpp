#pragma once

// Integer coordinates c_{m,n,k}(i,j) of the tensor basis vector
// f^i phi_m (x) f^j phi_n in the weight vector f^{i+j-k} phi_{m,n,k} of the
// summand V(m+n-2k). Three independent routes are provided: the Pascal
// recurrence table, two closed alternating sums, and extraction from the
// two-variable generating function.

#include "cgexact/exact.hpp"
#include "cgexact/indices.hpp"
#include "cgexact/matrix.hpp"

#include <vector>

namespace cgexact {

/// The (m+1) x (m+n-2k+1) trapezoid of coordinates for one summand.
/// Row i, column i+j-k holds c_{m,n,k}(i,j); column q is the coordinate
/// vector of f^q phi_{m,n,k}. Positions outside the trapezoid are zero.
struct CoordinateMatrix {
  long m = 0;
  long n = 0;
  long k = 0;
  IntegerMatrix entries;

  /// c(i,j), or zero outside the window.
  Integer at(long i, long j) const;

  bool operator==(const CoordinateMatrix&) const = default;
};

/// Coordinates of the highest weight vector phi_{m,n,k} in B_k, indexed by l = i.
std::vector<Integer> highest_weight_coords(long m, long n, long k);

/// Coordinates of the lowest weight vector f^{m+n-2k} phi_{m,n,k} in B_{m+n-k},
/// indexed by l = i - (m-k).
std::vector<Integer> lowest_weight_coords(long m, long n, long k);

/// Builds the coordinate table column by column with Pascal's recurrence,
/// seeded from the highest weight vector.
CoordinateMatrix coordinate_matrix(long m, long n, long k);

/// Alternating triple-binomial sum; zero outside the window.
Integer coord(long m, long n, long k, long i, long j);

/// The generating-function coefficient without the upper window bounds: the
/// alternating sum for any i, j >= 0 with i+j >= k, zero otherwise. Inside the
/// window it equals coord(); the cross-summand recurrences relate these
/// continued values.
Integer coord_unrestricted(long m, long n, long k, long i, long j);

/// Alternative sum with binomials C(m-i, k-l) C(n-j, l); zero outside the window.
Integer coord_racah(long m, long n, long k, long i, long j);

/// Coefficient of x^j y^i in (x+y)^{i+j-k} / ((1-x)^{m-k+1} (1+y)^{n-k+1}),
/// by dense truncated power-series arithmetic. Requires a window-valid tuple.
Integer coord_generating_function(long m, long n, long k, long i, long j);

}  // namespace cgexact
