#pragma once

#include <utility>
#include <vector>

#include "powmon/factorization.hpp"
#include "powmon/finset.hpp"

namespace powmon::oracle {

/// Brute-force reference implementations used to check the search engine
/// on small inputs.  They share no code with the engine: subsets are
/// scanned exhaustively and sumsets recomputed with plain set arithmetic.
/// Each function rejects inputs above its hard cap with CapError.

/// All ordered pairs (b, c) with b + c = a, both containing 0.
/// Cap: max(a) <= 12.
std::vector<std::pair<FinSet, FinSet>> naive_divisor_pairs(const FinSet& a);

/// Every factorization of a into atoms.  Cap: max(a) <= 10.
std::vector<Factorization> naive_factorizations(const FinSet& a);

/// Whether a = b + c = b + d forces c = d.  Cap: max(a) <= 10.
bool naive_relcanc(const FinSet& a);

} // namespace powmon::oracle
