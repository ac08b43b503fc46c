#pragma once

// Serializable tables: the coordinate and Clebsch-Gordan matrices of every
// summand of V(m) (x) V(n), and the projector data of one weight space.
//
// JSON is the canonical machine format. Every number, including indices, is
// written as a string ("p/q" in lowest terms, "p" for integers) so consumers
// never lose precision.

#include "cgexact/exact.hpp"
#include "cgexact/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgexact {

inline constexpr std::string_view kTableFormatVersion = "1";

struct TableBlock {
  long k = 0;
  int sign = 1;  // (-1)^k
  Integer normalizer;
  IntegerMatrix coordinates;
  RationalMatrix cg;

  bool operator==(const TableBlock&) const = default;
};

struct TableDocument {
  std::string format_version{kTableFormatVersion};
  long m = 0;
  long n = 0;
  std::vector<TableBlock> blocks;

  bool operator==(const TableDocument&) const = default;
};

/// All summands, or only `only_k`. Blocks are built on up to `threads` workers
/// (0 = default worker count) and assembled in ascending k.
TableDocument build_table(long m, long n, std::optional<long> only_k = std::nullopt,
                          unsigned threads = 0);

std::string table_to_json(const TableDocument& doc);
/// Throws DomainError on malformed or inconsistent input.
TableDocument table_from_json(std::string_view text);

/// Header m,n,k,i,j,c,C (plus j1,j2,j,m1,m2 with su2_labels); one row per
/// window-valid (k,i,j).
std::string table_to_csv(const TableDocument& doc, bool su2_labels = false);

/// Side-by-side text layout: coordinate matrix on the left, the Clebsch-Gordan
/// matrix as prefactor (-1)^k/D times an integer matrix on the right.
std::string table_to_pretty(const TableDocument& doc);

struct ProjectorBlock {
  long k = 0;
  Integer eigenvalue;
  RationalMatrix projector;
  std::vector<Integer> column;  // coordinate vector factor
  std::vector<Rational> row;    // Clebsch-Gordan factor
};

struct ProjectorDocument {
  long m = 0;
  long n = 0;
  long p = 0;
  long first_i = 0;  // i of the first basis vector of B_p
  RationalMatrix ef;
  std::vector<ProjectorBlock> blocks;
  /// decomposition[b][s]: component of basis vector b in blocks[s]; only filled
  /// when every summand is present.
  std::vector<std::vector<std::vector<Rational>>> decomposition;
};

/// Throws DomainError on an invalid weight or absent summand.
ProjectorDocument build_projectors(long m, long n, long p, std::optional<long> only_k = std::nullopt);

std::string projectors_to_json(const ProjectorDocument& doc);
std::string projectors_to_pretty(const ProjectorDocument& doc);

/// Renders a rational matrix as a common prefactor 1/L times an integer matrix.
std::string format_scaled_matrix(const RationalMatrix& a);

}  // namespace cgexact
