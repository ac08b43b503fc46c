#include "cgexact/indices.hpp"

#include "cgexact/exact.hpp"

namespace cgexact {

void require_structural(long m, long n, long k, const char* op) {
  if (!structurally_valid(m, n, k))
    throw DomainError(std::string(op) + ": need 0 <= k <= min(m, n), got m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void require_window(const IndexTuple& t, const char* op) {
  if (!t.window_valid())
    throw DomainError(std::string(op) + ": indices outside the valid window " + t.str());
}

}  // namespace cgexact
