#include "powmon/cancellativity.hpp"

#include <algorithm>
#include <set>

namespace powmon {

RelCancResult is_relatively_cancellative(Factorizer& fz, const FinSet& a) {
    // Divisors come back shortlex-sorted, so the first one with two
    // cofactors yields the least witness.
    for (const FinSet& b : fz.divisors(a)) {
        std::vector<FinSet> cs = fz.cofactors(a, b);
        if (cs.size() >= 2)
            return RelCancResult{false, RelCancWitness{b, cs[0], cs[1]}};
    }
    return RelCancResult{true, std::nullopt};
}

bool are_relatively_prime(Factorizer& fz, const FinSet& b, const FinSet& c) {
    // Walk the divisors of the side with the smaller maximum; each divisor
    // of both sides shows up there.
    const FinSet& small = b.max() <= c.max() ? b : c;
    const FinSet& large = b.max() <= c.max() ? c : b;
    for (const FinSet& d : fz.divisors(small)) {
        if (d.is_identity()) continue;
        if (fz.divides(large, d)) return false;
    }
    return true;
}

bool gcd_criterion(Factorizer& fz, const FinSet& a) {
    const std::vector<Factorization> words = fz.factorizations(a);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (!fact_gcd(words[i], words[j]).empty()) return false;
    return true;
}

std::string SeparatedSumReport::failed_precondition() const {
    if (!x_cancellative) return "x relatively cancellative";
    if (!y_cancellative) return "y relatively cancellative";
    if (!gcd_separated) return "gcd(y) > 2*max(x)";
    return "";
}

SeparatedSumReport verify_separated_sum(Factorizer& fz, const FinSet& x, const FinSet& y) {
    SeparatedSumReport report;

    const RelCancResult x_rc = is_relatively_cancellative(fz, x);
    const RelCancResult y_rc = is_relatively_cancellative(fz, y);
    report.x_cancellative = x_rc.relatively_cancellative;
    report.y_cancellative = y_rc.relatively_cancellative;
    report.gcd_separated = static_cast<unsigned __int128>(set_gcd(y)) >
                           2 * static_cast<unsigned __int128>(x.max());
    if (!report.preconditions_hold()) return report;

    const FinSet sum = sumset(x, y);

    const RelCancResult sum_rc = is_relatively_cancellative(fz, sum);
    report.sum_cancellative = sum_rc.relatively_cancellative;
    report.sum_witness = sum_rc.witness;

    const std::vector<Factorization> zx = fz.factorizations(x);
    const std::vector<Factorization> zy = fz.factorizations(y);
    const std::vector<Factorization> zsum = fz.factorizations(sum);
    std::set<Factorization> expected;
    for (const Factorization& u : zx)
        for (const Factorization& v : zy) expected.insert(u.concat(v));
    report.z_product =
        expected.size() == zsum.size() &&
        std::equal(expected.begin(), expected.end(), zsum.begin());

    report.sum_lengths = fz.length_set(sum);
    report.expected_lengths = length_sum(fz.length_set(x), fz.length_set(y));
    report.l_additive = report.sum_lengths == report.expected_lengths;

    return report;
}

} // namespace powmon
