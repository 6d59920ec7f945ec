#pragma once

#include <optional>
#include <string>

#include "powmon/factorization.hpp"
#include "powmon/factorizer.hpp"
#include "powmon/finset.hpp"

namespace powmon {

/// A counterexample to relative cancellativity: b + c = b + d = a with
/// c != d.  The reported witness is the least one — b is the shortlex-least
/// divisor with two cofactors, and c, d are its two shortlex-least
/// cofactors.
struct RelCancWitness {
    FinSet b, c, d;
};

struct RelCancResult {
    bool relatively_cancellative = false;
    std::optional<RelCancWitness> witness; // set exactly when not cancellative

    explicit operator bool() const noexcept { return relatively_cancellative; }
};

/// a is relatively cancellative when every divisor of a has exactly one
/// cofactor: a = b + c = b + d forces c = d.
RelCancResult is_relatively_cancellative(Factorizer& fz, const FinSet& a);

/// b and c are relatively prime when {0} is their only common divisor.
bool are_relatively_prime(Factorizer& fz, const FinSet& b, const FinSet& c);

/// Sufficient criterion for relative cancellativity: any two distinct
/// factorizations of a share no atom (their word gcd is empty).  One
/// direction only — relatively cancellative sets may still fail this.
bool gcd_criterion(Factorizer& fz, const FinSet& a);

/// Checked facts about a sum x + y whose parts are relatively cancellative
/// and scale-separated (gcd of y beyond twice max(x)).  Preconditions are
/// reported, never thrown; conclusions are only computed when the
/// preconditions hold.
struct SeparatedSumReport {
    // preconditions
    bool x_cancellative = false;
    bool y_cancellative = false;
    bool gcd_separated = false; // set_gcd(y) > 2 * max(x)

    // conclusions
    bool sum_cancellative = false;
    bool z_product = false;     // Z(x+y) = concatenations Z(x) x Z(y)
    bool l_additive = false;    // L(x+y) = L(x) + L(y)

    std::optional<RelCancWitness> sum_witness; // when sum_cancellative fails
    LengthSet sum_lengths;                     // L(x+y)
    LengthSet expected_lengths;                // L(x) + L(y)

    bool preconditions_hold() const noexcept {
        return x_cancellative && y_cancellative && gcd_separated;
    }
    /// Name of the first failing precondition, or "" when all hold.
    std::string failed_precondition() const;

    bool conclusions_hold() const noexcept {
        return sum_cancellative && z_product && l_additive;
    }
    bool passed() const noexcept { return preconditions_hold() && conclusions_hold(); }
};

/// Verifies, for the given pair, that scale separation transfers
/// cancellativity and factorization structure to the sum.
SeparatedSumReport verify_separated_sum(Factorizer& fz, const FinSet& x, const FinSet& y);

} // namespace powmon
