#include "powmon/factorizer.hpp"

#include <algorithm>
#include <set>

#include "powmon/errors.hpp"
#include "bits.hpp"

namespace powmon {

using detail::Bits;

bool MemoTable::lookup(const std::string& key, std::vector<Factorization>& out) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
}

void MemoTable::store(const std::string& key, const std::vector<Factorization>& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.emplace(key, value);
}

std::size_t MemoTable::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
}

namespace {
constexpr std::uint64_t kNoElement = UINT64_MAX;
} // namespace

/// Per-query context: the target set as a bit image plus the shared node
/// budget.  The two searches below hang off this.
struct Factorizer::Kernel {
    Factorizer& owner;
    const FinSet& a;
    std::uint64_t a_max;
    Bits a_bits;

    Kernel(Factorizer& fz, const FinSet& target)
        : owner(fz), a(target), a_max(target.max()) {
        if (a_max >= fz.limits_.max_search_element)
            throw BudgetError("largest element " + std::to_string(a_max) +
                              " is beyond the search cap " +
                              std::to_string(fz.limits_.max_search_element));
        a_bits = Bits::from_elements(a.elements(), a_max + 1);
    }

    void tick() { owner.charge_nodes(1); }

    /// Largest set q with b + q ⊆ a: the intersection of a shifted down by
    /// every element of b.  The maximal cofactor candidate.
    Bits quotient(const FinSet& b) const {
        Bits q = a_bits;
        for (std::uint64_t x : b.elements()) {
            if (x == 0) continue;
            if (x > a_max) { q.clear(); return q; }
            q.and_shifted_down(a_bits, x);
        }
        return q;
    }
};

namespace {

/// Enumerates divisors b of a with max(b) <= max(a)/2 ("small side").
/// Every divisor pair has one side down here, so the full divisor list is
/// this plus the cofactors of its members.
///
/// The search decides membership of each small-side element while tracking
/// q = quotient of the chosen part.  b-so-far is a divisor exactly when
/// b + q covers a.  When some element z of a is uncovered, only undecided
/// x with z - x in q can ever cover it, which both prunes and forces moves
/// (classic exact-cover branching on the smallest uncovered element).
struct LowerHalfSearch {
    Factorizer::Kernel& k;
    std::vector<std::uint64_t> pool;     // candidate elements, ascending
    std::vector<std::uint8_t> state;     // 0 undecided, 1 in, 2 out
    std::vector<std::uint64_t> included; // values currently in
    std::set<FinSet>* sink = nullptr;
    bool stop_at_nontrivial = false;
    bool found_nontrivial = false;

    explicit LowerHalfSearch(Factorizer::Kernel& kernel) : k(kernel) {
        for (std::uint64_t e : k.a.elements())
            if (e >= 1 && e <= k.a_max / 2) pool.push_back(e);
        state.assign(pool.size(), 0);
    }

    void run() {
        if (k.a_max == 0) return; // {0}: callers special-case it
        dfs(k.a_bits);            // quotient of {0} is a itself
    }

    void record() {
        if (!sink) return;
        std::vector<std::uint64_t> elems = included;
        elems.push_back(0);
        std::sort(elems.begin(), elems.end());
        sink->insert(FinSet::from_elements(std::move(elems)));
    }

    // Returns true to unwind the whole search (atom refuted).
    bool dfs(const Bits& q) {
        k.tick();
        // The quotient only shrinks along a branch.  Once it is down to
        // {0}, b + q stays inside the lower half and can never reach
        // max(a) again.
        if (q.none_beyond_zero()) return false;

        Bits covered(k.a_max + 1);
        covered.or_shifted_up(q, 0);
        for (std::uint64_t x : included) covered.or_shifted_up(q, x);

        const std::uint64_t z = covered.first_uncovered(k.a_bits);
        if (z == kNoElement) {
            record();
            if (stop_at_nontrivial && !included.empty()) {
                found_nontrivial = true;
                return true;
            }
            // Divisor found; supersets can still be divisors, so keep
            // deciding elements, smallest first.
            std::size_t idx = pool.size();
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (state[i] == 0) {
                    idx = i;
                    break;
                }
            if (idx == pool.size()) return false;
            {
                Bits q2 = q;
                q2.and_shifted_down(k.a_bits, pool[idx]);
                state[idx] = 1;
                included.push_back(pool[idx]);
                const bool stop = dfs(q2);
                included.pop_back();
                state[idx] = 0;
                if (stop) return true;
            }
            state[idx] = 2;
            const bool stop = dfs(q);
            state[idx] = 0;
            return stop;
        }

        // z is uncovered.  Feasibility first: with every undecided element
        // included the cover must close, otherwise this branch is dead.
        Bits reach = covered;
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (state[i] != 0) continue;
            reach.or_shifted_up(q, pool[i]);
            if (pool[i] <= z && q.test(z - pool[i])) cand.push_back(i);
        }
        if (!reach.contains_all(k.a_bits)) return false;
        if (cand.empty()) return false;

        // Branch on who covers z: take cand[t], having ruled out cand[<t].
        bool stop = false;
        std::size_t taken = 0;
        for (; taken < cand.size(); ++taken) {
            const std::size_t i = cand[taken];
            Bits q2 = q;
            q2.and_shifted_down(k.a_bits, pool[i]);
            state[i] = 1;
            included.push_back(pool[i]);
            stop = dfs(q2);
            included.pop_back();
            state[i] = 2;
            if (stop) break;
        }
        for (std::size_t t = 0; t < cand.size() && t <= taken; ++t) state[cand[t]] = 0;
        return stop;
    }
};

/// Enumerates all c with b + c = a for a fixed divisor b.  Candidates are
/// the elements of the quotient q(a, b); coverage grows monotonically, and
/// once a is covered every subset of the still-undecided candidates
/// extends the cover, so the tail is enumerated directly.
struct CoverSearch {
    Factorizer::Kernel& k;
    Bits tile;                          // bit image of b
    std::uint64_t tile_max;
    std::vector<std::uint64_t> pool;    // nonzero quotient elements
    std::vector<std::uint8_t> state;
    std::vector<std::uint64_t> included;
    std::set<FinSet>* sink = nullptr;
    std::size_t limit = SIZE_MAX;
    std::size_t found = 0;
    bool feasible = true;

    CoverSearch(Factorizer::Kernel& kernel, const FinSet& b) : k(kernel) {
        tile_max = b.max();
        tile = Bits::from_elements(b.elements(), tile_max + 1);
        const Bits q = k.quotient(b);
        if (!q.test(0)) {
            feasible = false; // b is not even a subset of a
            return;
        }
        for (std::uint64_t e : q.to_elements())
            if (e != 0) pool.push_back(e);
        state.assign(pool.size(), 0);
    }

    void run() {
        if (!feasible) return;
        Bits covered(k.a_max + 1);
        covered.or_shifted_up(tile, 0); // {0} is always in the cofactor
        dfs(covered);
    }

    bool full() const { return found >= limit; }

    void record() {
        ++found;
        if (!sink) return;
        std::vector<std::uint64_t> elems = included;
        elems.push_back(0);
        std::sort(elems.begin(), elems.end());
        sink->insert(FinSet::from_elements(std::move(elems)));
    }

    void dfs(const Bits& covered) {
        k.tick();
        if (full()) return;

        const std::uint64_t z = covered.first_uncovered(k.a_bits);
        if (z == kNoElement) {
            supersets(0);
            return;
        }

        Bits reach = covered;
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (state[i] != 0) continue;
            reach.or_shifted_up(tile, pool[i]);
            if (pool[i] <= z && z - pool[i] <= tile_max && tile.test(z - pool[i]))
                cand.push_back(i);
        }
        if (!reach.contains_all(k.a_bits)) return;

        std::size_t taken = 0;
        for (; taken < cand.size() && !full(); ++taken) {
            const std::size_t i = cand[taken];
            Bits covered2 = covered;
            covered2.or_shifted_up(tile, pool[i]);
            state[i] = 1;
            included.push_back(pool[i]);
            dfs(covered2);
            included.pop_back();
            state[i] = 2;
        }
        for (std::size_t t = 0; t < taken; ++t) state[cand[t]] = 0;
    }

    // Every subset of the undecided candidates past the current cover is a
    // cofactor; enumerate them all, one node per subset.
    void supersets(std::size_t from) {
        k.tick();
        if (full()) return;
        record();
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (state[i] != 0) continue;
            if (full()) return;
            state[i] = 1;
            included.push_back(pool[i]);
            supersets(i + 1);
            included.pop_back();
            state[i] = 0;
        }
    }
};

} // namespace

void Factorizer::charge_nodes(std::uint64_t n) {
    const std::uint64_t used = nodes_.fetch_add(n, std::memory_order_relaxed) + n;
    if (used > limits_.node_budget)
        throw BudgetError("search budget of " + std::to_string(limits_.node_budget) +
                          " nodes exhausted");
}

Factorizer::Factorizer(SearchLimits limits)
    : limits_(limits), memo_(std::make_shared<MemoTable>()) {}

Factorizer::Factorizer(std::shared_ptr<MemoTable> memo, SearchLimits limits)
    : limits_(limits), memo_(std::move(memo)) {
    if (!memo_) memo_ = std::make_shared<MemoTable>();
}

bool Factorizer::divides(const FinSet& a, const FinSet& b) {
    if (b.max() > a.max()) return false;
    Kernel kernel(*this, a);
    kernel.tick();
    const Bits q = kernel.quotient(b);
    if (!q.test(0)) return false;
    Bits covered(a.max() + 1);
    const Bits tile = Bits::from_elements(b.elements(), b.max() + 1);
    for (std::uint64_t y : q.to_elements()) covered.or_shifted_up(tile, y);
    return covered == kernel.a_bits;
}

std::vector<FinSet> Factorizer::cofactors(const FinSet& a, const FinSet& b) {
    if (b.max() > a.max()) return {};
    Kernel kernel(*this, a);
    std::set<FinSet> out;
    CoverSearch search(kernel, b);
    search.sink = &out;
    search.run();
    return std::vector<FinSet>(out.begin(), out.end());
}

std::vector<FinSet> Factorizer::divisors(const FinSet& a) {
    if (a.is_identity()) return {FinSet{}};
    Kernel kernel(*this, a);
    std::set<FinSet> small;
    LowerHalfSearch search(kernel);
    search.sink = &small;
    search.run();
    std::set<FinSet> all = small;
    for (const FinSet& b : small) {
        CoverSearch covers(kernel, b);
        covers.sink = &all;
        covers.run();
    }
    return std::vector<FinSet>(all.begin(), all.end());
}

bool Factorizer::is_atom(const FinSet& a) {
    if (a.is_identity()) return false;
    Kernel kernel(*this, a);
    LowerHalfSearch search(kernel);
    search.stop_at_nontrivial = true;
    search.run();
    return !search.found_nontrivial;
}

std::vector<FinSet> Factorizer::atom_divisors(const FinSet& a) {
    std::vector<FinSet> out;
    for (const FinSet& b : divisors(a))
        if (is_atom(b)) out.push_back(b);
    return out;
}

std::vector<Factorization> Factorizer::factorizations(const FinSet& a) {
    std::vector<Factorization> cached;
    const std::string key = a.render();
    if (memo_->lookup(key, cached)) return cached;

    if (a.is_identity()) {
        const std::vector<Factorization> unit{Factorization{}};
        memo_->store(key, unit);
        return unit;
    }

    // Every factorization has exactly one atom absorbing the smallest
    // nonzero element of a; branch over which atom that is.
    const std::uint64_t m = a.elements()[1];
    std::set<Factorization> words;
    for (const FinSet& atom : atom_divisors(a)) {
        if (!atom.contains(m)) continue;
        for (const FinSet& rest : cofactors(a, atom)) {
            for (const Factorization& w : factorizations(rest)) {
                charge_nodes(1);
                words.insert(w.with(atom));
            }
        }
    }
    const std::vector<Factorization> out(words.begin(), words.end());
    memo_->store(key, out);
    return out;
}

LengthSet Factorizer::length_set(const FinSet& a) {
    std::vector<std::uint64_t> lengths;
    for (const Factorization& w : factorizations(a))
        lengths.push_back(w.length());
    return LengthSet(std::move(lengths));
}

Rational Factorizer::elasticity_of_set(const FinSet& a) {
    return length_set(a).elasticity();
}

} // namespace powmon
