#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "dmsvp/errors.hpp"
#include "dmsvp/scalar.hpp"

namespace dmsvp {

/// Cap on the number of objects an exhaustive enumeration may visit.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMinors = 2'000'000;
  static constexpr std::uint64_t kDefaultPreimages = 1'594'323;  // 3^13
  static constexpr std::uint64_t kDefaultBox = 10'000'000;

  std::uint64_t limit = kDefaultMinors;

  static EnumerationBudget minors() { return {kDefaultMinors}; }
  static EnumerationBudget preimages() { return {kDefaultPreimages}; }
  static EnumerationBudget box() { return {kDefaultBox}; }

  /// Throws EnumerationLimitError when `count` exceeds the limit.
  void require(const Integer& count, const std::string& what) const {
    if (count > Integer(limit))
      throw EnumerationLimitError(what + ": " + count.str() + " items exceed the enumeration budget of " +
                                  std::to_string(limit));
  }
};

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= Integer(n - k + i);
    r /= Integer(i);
  }
  return r;
}

inline Integer power(const Integer& base, std::uint64_t exp) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Visits every k-subset of {0, ..., n-1} in lexicographic order. The visitor
/// returns false to stop early; the function returns false iff stopped.
template <typename Visitor>
bool for_each_subset(Index n, Index k, Visitor&& visit) {
  if (k < 0 || k > n) return true;
  IndexList idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(static_cast<const IndexList&>(idx))) return false;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace dmsvp
