#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "powmon/cancellativity.hpp"
#include "powmon/factorization.hpp"
#include "powmon/factorizer.hpp"
#include "powmon/finset.hpp"
#include "powmon/rational.hpp"

namespace powmon {

/// The recursive ladder construction: a tower of stages, each adding one
/// scale n_j far beyond everything built so far (n_j >= 3 * max(D_{j-1})).
/// Stage j carries five sets.  S_j = C_j + D_j = A_j + B_j has exactly two
/// factorizations — the short word A_j + B_j and the long word
/// C_j + {0,1+n_0} + ... + {0,1+n_j} — so its length set is {2, j+2}.
struct LadderFamily {
    std::size_t index = 0;          // top stage
    std::vector<std::uint64_t> n;   // scales; n[0] = 0
    std::vector<FinSet> a, b, c, d, s;

    const FinSet& top() const noexcept { return s[index]; }
};

/// Builds the ladder with the minimal scales n_j = 3 * max(D_{j-1}).
LadderFamily build_ladder(std::size_t index);

/// Builds the ladder with caller-chosen scales n_1..n_index.  A scale
/// below three times the previous stage's max(D) raises
/// InvalidSequenceError with the offending (1-based) position.
LadderFamily build_ladder(std::size_t index, const std::vector<std::uint64_t>& scales);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail; // filled in on failure or to carry a value
};

struct FamilyReport {
    std::size_t index = 0;
    std::vector<CheckItem> items;
    std::string note;

    bool passed() const noexcept {
        for (const CheckItem& item : items)
            if (!item.passed) return false;
        return true;
    }
};

/// Full verification of the top stage: the recursion constraints, the
/// atomicity of the pieces, and the exact factorization list of S — the
/// expensive part, so expect exploding budgets for high stages.
FamilyReport verify_ladder(Factorizer& fz, const LadderFamily& fam);

/// The cheap structural certificate: recursion constraints, sumset
/// identities, and atom/“one word” checks for every stage small enough to
/// decide directly.  Stages beyond the computational cap are noted, not
/// checked; the recursion guarantees them once the checked stages hold.
FamilyReport check_ladder_invariants(Factorizer& fz, const LadderFamily& fam);

/// x + (2*max(x)+1) * y: the scale-separated sum whose length set is
/// L(x) + L(y).  Both parts must be relatively cancellative
/// (PreconditionError otherwise); the identity on either side returns the
/// other side unchanged.
FinSet compose_sum(Factorizer& fz, const FinSet& x, const FinSet& y);

/// Same construction without the cancellativity re-checks, for parts that
/// are certified by construction.
FinSet compose_sum_unchecked(const FinSet& x, const FinSet& y);

/// Left-fold of compose_sum over `constant` copies of {0,1} followed by
/// one ladder top S_{g-2} per generator g (every g must be >= 3).  The
/// result is relatively cancellative with
/// L = {constant} + sum of {2, g} over the generators; each ladder gets
/// its structural invariants checked as it is built.
FinSet from_generators(std::uint64_t constant, const std::vector<std::uint64_t>& generators);

/// The certified length set of from_generators(constant, generators).
LengthSet from_generators_lengths(std::uint64_t constant,
                                  const std::vector<std::uint64_t>& generators);

/// A set whose length set is the three-element interval {k, k+1, k+2}.
/// k = 2 and k = 3 are hand-built witnesses; higher k composes
/// {k-4} + {2,3} + {2,3} from generators.  k must be >= 2.
FinSet interval_three(std::uint64_t k);

/// A set whose elasticity is exactly q (>= 1): realizes q = n/m as the
/// two-element length set {m, n} (integers q use {2, 2q}); q = 1 yields
/// the atom {0,1}.
FinSet for_elasticity(const Rational& q);

/// All ways to peel one gap-atom off x + {0,n}: triples (A, C, D) with
/// A + C = A + D = x and C, D relatively prime (both orders listed), plus
/// the deduplicated list of the A's.
struct GapSplitStructure {
    FinSet x;
    std::uint64_t n = 0;
    std::vector<std::array<FinSet, 3>> triples; // (A, C, D)
    std::vector<FinSet> remainders;             // the distinct A's, shortlex
};

/// Requires n > 2 * max(x) (PreconditionError otherwise).
GapSplitStructure gap_split_structure(Factorizer& fz, const FinSet& x, std::uint64_t n);

/// L(x + {0,n}) predicted from the split structure alone:
/// 1 + union of L(A) over the remainders.  Never factorizes x + {0,n}.
LengthSet gap_split_lengths(Factorizer& fz, const FinSet& x, std::uint64_t n);

struct GapSplitReport {
    bool z_identity = false; // Z(x+{0,n}) matches the structural words
    bool l_identity = false; // L(x+{0,n}) = 1 + union of L(A)
    LengthSet lengths;       // L(x + {0,n}), computed directly
    std::size_t triple_count = 0;
    std::size_t remainder_count = 0;

    bool passed() const noexcept { return z_identity && l_identity; }
};

/// Checks the split structure against a direct factorization of x + {0,n}.
GapSplitReport verify_gap_split(Factorizer& fz, const FinSet& x, std::uint64_t n);

} // namespace powmon
