#include "cgexact/matrix.hpp"

#include <utility>

namespace cgexact {

namespace {

// Reduces `a` to row echelon form in place; returns the rank and tracks the
// determinant's sign flips and pivot product.
std::size_t eliminate(RationalMatrix& a, Rational* det) {
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(rank, c));
      if (det) *det = -*det;
    }
    const Rational p = a(rank, col);
    if (det) *det *= p;
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / p;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(RationalMatrix a) { return eliminate(a, nullptr); }

Rational determinant(RationalMatrix a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of non-square matrix");
  Rational det;
  std::size_t r = eliminate(a, &det);
  return r < a.rows() ? Rational(0) : det;
}

}  // namespace cgexact
