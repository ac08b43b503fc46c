#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>

namespace cgexact {

/// Address of one coefficient: summand V(m+n-2k) of V(m) (x) V(n), and the
/// tensor basis vector f^i phi_m (x) f^j phi_n.
struct IndexTuple {
  long m = 0;
  long n = 0;
  long k = 0;
  long i = 0;
  long j = 0;

  /// 0 <= k <= min(m, n), with m, n >= 0.
  bool structurally_valid() const { return m >= 0 && n >= 0 && k >= 0 && k <= std::min(m, n); }

  /// Structurally valid and 0 <= i <= m, 0 <= j <= n, k <= i+j <= m+n-k.
  bool window_valid() const {
    return structurally_valid() && i >= 0 && i <= m && j >= 0 && j <= n && i + j >= k &&
           i + j <= m + n - k;
  }

  auto operator<=>(const IndexTuple&) const = default;

  std::string str() const {
    return "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", k=" + std::to_string(k) +
           ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const IndexTuple& t) { return os << t.str(); }

inline bool structurally_valid(long m, long n, long k) {
  return IndexTuple{m, n, k, 0, 0}.structurally_valid();
}

/// Throws DomainError unless 0 <= k <= min(m, n).
void require_structural(long m, long n, long k, const char* op);

/// Throws DomainError unless the tuple is window-valid.
void require_window(const IndexTuple& t, const char* op);

/// Range of i for the weight space B_p: max(0, p-n) .. min(m, p).
struct WeightRange {
  long lo;
  long hi;
  long size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

inline WeightRange weight_range(long m, long n, long p) {
  return {std::max(0L, p - n), std::min(m, p)};
}

}  // namespace cgexact
