#pragma once

// Weight-space projectors onto the summands of V(m) (x) V(n), built from the
// tridiagonal matrix of ef on the basis B_p.
//
// Matrices use the column convention: column c holds the coordinates of the
// image of the c-th basis vector. B_p = { f^i phi_m (x) f^{p-i} phi_n } is
// ordered by increasing i, starting at i = max(0, p-n).

#include "cgexact/exact.hpp"
#include "cgexact/indices.hpp"
#include "cgexact/matrix.hpp"
#include "cgexact/report.hpp"

#include <vector>

namespace cgexact {

/// Summand indices k whose V(m+n-2k) meets the weight space p, ascending.
std::vector<long> summands_in_weight_space(long m, long n, long p);

RationalMatrix tridiagonal_ef(long m, long n, long p);

/// Eigenvalue of ef on the weight-p vector of V(m+n-2k): (m+n-p-k)(p-k+1).
Integer ef_eigenvalue(long m, long n, long k, long p);

/// Scalar by which 8 Omega = 4ef + h^2 - 2h acts on V(n): n(n+2).
Integer casimir_scalar(long n);

/// Product over the other summands k' (ascending) of (M - lambda_k' I)/(lambda_k - lambda_k').
/// Throws DomainError if k does not meet the weight space and InternalError on
/// an eigenvalue collision.
RationalMatrix projector(long m, long n, long p, long k);

/// The projector written as column * row: the coordinate vector of
/// f^{p-k} phi_{m,n,k} and the Clebsch-Gordan coefficients of B_p in that summand.
struct ProjectorFactors {
  std::vector<Integer> column;
  std::vector<Rational> row;

  RationalMatrix outer() const;
};

ProjectorFactors projector_factorization(long m, long n, long p, long k);

struct SummandComponent {
  long k;
  std::vector<Rational> coords;
};

/// Components of the basis_index-th vector of B_p (0-based) in each summand.
std::vector<SummandComponent> decompose_via_projectors(long m, long n, long p, long basis_index);

/// Spectral identities of the projectors on every weight space of V(m) (x) V(n).
Report verify_projectors(long m, long n);

/// Reproduction of the worked weight-1 example in V(3) (x) V(4).
Report verify_worked_example();

}  // namespace cgexact
