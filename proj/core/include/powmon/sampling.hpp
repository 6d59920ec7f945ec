#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "powmon/factorizer.hpp"
#include "powmon/finset.hpp"

namespace powmon {

/// Deterministic generators of test inputs.  Same seed, same pairs —
/// they exist so the verification suites can sample reproducibly.

/// Pairs (x, y) satisfying the separated-sum preconditions: x is a sum of
/// one or two atoms with elements within [0,6] (resampled until relatively
/// cancellative), y is a relatively cancellative set within [0,6] dilated
/// by 2*max(x)+1.
std::vector<std::pair<FinSet, FinSet>> sample_separated_pairs(Factorizer& fz,
                                                              std::uint64_t seed,
                                                              std::size_t count);

/// Pairs of relatively cancellative sets built from certified pieces:
/// atoms within [0,4] and scale-separated sums of two of them.
std::vector<std::pair<FinSet, FinSet>> sample_cancellative_pairs(Factorizer& fz,
                                                                 std::uint64_t seed,
                                                                 std::size_t count);

/// Every subset of [0, max_element] that contains 0, in mask order.
std::vector<FinSet> all_sets_within(std::uint64_t max_element);

} // namespace powmon
