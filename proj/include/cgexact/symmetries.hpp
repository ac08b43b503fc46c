#pragma once

// Regge symbol, the order-72 symmetry group acting on it, the coefficient
// relations for the generating symmetries, and the recurrence audit.

#include "cgexact/exact.hpp"
#include "cgexact/indices.hpp"
#include "cgexact/report.hpp"

#include <array>
#include <set>
#include <string_view>
#include <vector>

namespace cgexact {

/// 3x3 nonnegative grid with all row and column sums equal to m+n-k.
struct ReggeSymbol {
  std::array<std::array<long, 3>, 3> grid{};

  long magic_sum() const { return grid[0][0] + grid[0][1] + grid[0][2]; }
  /// All entries nonnegative and all six line sums equal.
  bool valid() const;

  auto operator<=>(const ReggeSymbol&) const = default;
};

ReggeSymbol regge_symbol(const IndexTuple& t);
IndexTuple symbol_to_indices(const ReggeSymbol& symbol);

enum class Generator {
  C12,                // tensor transpose: swap the first two columns
  Transpose,          // plain matrix transpose of the symbol
  ModifiedTranspose,  // the transpose variant with a binomial-ratio relation
  R13,                // swap rows 1 and 3
  R23,                // swap rows 2 and 3 (Weyl group)
};

std::string_view generator_name(Generator g);

/// Index image of a window-valid tuple under a generator.
IndexTuple transform_indices(const IndexTuple& t, Generator g);

struct RelatedCoord {
  IndexTuple indices;
  Rational factor;  // c(indices) = factor * c(t)
};

/// Transformed indices with the exact factor relating the two coordinates.
RelatedCoord related_coord(Generator g, const IndexTuple& t);

/// Element of (S3 x S3) x Z2 acting on the symbol: optionally transpose, then
/// out[r][c] = src[row_perm[r]][col_perm[c]].
struct ReggeElement {
  std::array<int, 3> row_perm{0, 1, 2};
  std::array<int, 3> col_perm{0, 1, 2};
  bool transposed = false;

  ReggeSymbol apply(const ReggeSymbol& s) const;
  auto operator<=>(const ReggeElement&) const = default;
};

/// The element whose action on symbols matches the generator's index map.
ReggeElement generator_element(Generator g);

/// All 72 elements, identity first.
const std::vector<ReggeElement>& regge_group();

/// The generator word (applied left to right) used for each group element's
/// coefficient factor, in the same order as regge_group().
const std::vector<std::vector<Generator>>& regge_words();

struct OrbitMember {
  ReggeElement element;
  IndexTuple indices;
  Rational factor;  // c(indices) = factor * c(t)
};

/// Image of t under each of the 72 elements with the composed factor.
std::vector<OrbitMember> regge_orbit_members(const IndexTuple& t);

/// Distinct tuples in the orbit of t.
std::set<IndexTuple> regge_orbit(const IndexTuple& t);

/// Generator relations, symbol invariants and orbit closure for every
/// window-valid tuple of V(m) (x) V(n).
Report verify_regge(long m, long n);

/// Pascal, reverse and the four cross-summand recurrences over V(m) (x) V(n).
Report verify_recurrences(long m, long n);

}  // namespace cgexact
