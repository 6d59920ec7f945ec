#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "powmon/factorization.hpp"
#include "powmon/finset.hpp"

namespace powmon {

/// Caps on the factorization searches.  node_budget counts search-tree
/// nodes across all work done by one Factorizer; exhausting it raises
/// BudgetError rather than returning partial answers.
struct SearchLimits {
    std::uint64_t node_budget = 100'000'000;
    /// Largest element the search kernels will build bit images for; the
    /// memory for one image is max/8 bytes.
    std::uint64_t max_search_element = std::uint64_t{1} << 22;
};

/// Cache of fully computed factorization lists, keyed by the canonical
/// rendering of the set.  Internally synchronized so several Factorizer
/// instances (or threads) can share one table.
class MemoTable {
public:
    bool lookup(const std::string& key, std::vector<Factorization>& out) const;
    void store(const std::string& key, const std::vector<Factorization>& value);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::vector<Factorization>> table_;
};

/// Divisor and factorization searches over the power monoid.
///
/// b divides a when a = b + c for some c; the instance enumerates such
/// decompositions by a pruned subset search over a's lower half (every
/// divisor pair has one side with max <= max(a)/2, the other side is
/// recovered as a cofactor).  All public results are canonically sorted,
/// and rerunning a query yields the same answer regardless of memo state.
///
/// Thread-safety: queries on a shared instance may run concurrently; the
/// node budget is a single atomic shared by all of them.
class Factorizer {
public:
    explicit Factorizer(SearchLimits limits = {});
    Factorizer(std::shared_ptr<MemoTable> memo, SearchLimits limits = {});

    /// True when a = b + c for some c, i.e. b divides a.
    bool divides(const FinSet& a, const FinSet& b);

    /// All c with b + c = a, sorted shortlex.  Empty when b does not
    /// divide a.
    std::vector<FinSet> cofactors(const FinSet& a, const FinSet& b);

    /// All divisors of a, sorted shortlex.  Always contains {0} and a.
    std::vector<FinSet> divisors(const FinSet& a);

    /// a is an atom: not {0}, and a = b + c forces b or c to be {0}.
    bool is_atom(const FinSet& a);

    /// The atoms among divisors(a), sorted shortlex.
    std::vector<FinSet> atom_divisors(const FinSet& a);

    /// Every factorization of a into atoms, canonically sorted.  {0} has
    /// exactly the empty word; an atom factors only as itself.
    std::vector<Factorization> factorizations(const FinSet& a);

    /// The set of word lengths of factorizations(a).
    LengthSet length_set(const FinSet& a);

    /// Elasticity of the length set of a.
    Rational elasticity_of_set(const FinSet& a);

    const SearchLimits& limits() const noexcept { return limits_; }
    std::uint64_t nodes_used() const noexcept {
        return nodes_.load(std::memory_order_relaxed);
    }
    const std::shared_ptr<MemoTable>& memo() const noexcept { return memo_; }

    /// Implementation detail exposed for the search routines in the
    /// translation unit; not part of the supported interface.
    struct Kernel;

private:
    void charge_nodes(std::uint64_t n);

    SearchLimits limits_;
    std::shared_ptr<MemoTable> memo_;
    std::atomic<std::uint64_t> nodes_{0};
};

} // namespace powmon
