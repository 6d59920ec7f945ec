#include "powmon/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "powmon/errors.hpp"

namespace powmon::oracle {

namespace {

constexpr std::uint64_t kPairCap = 12;
constexpr std::uint64_t kFactorizationCap = 10;
constexpr std::uint64_t kRelCancCap = 10;

void require_cap(const FinSet& a, std::uint64_t cap, const char* what) {
    if (a.max() > cap)
        throw CapError(std::string("oracle cap exceeded for ") + what + ": max(a) = " +
                       std::to_string(a.max()) + " > " + std::to_string(cap));
}

FinSet plain_sumset(const FinSet& x, const FinSet& y) {
    std::set<std::uint64_t> sums;
    for (std::uint64_t u : x.elements())
        for (std::uint64_t v : y.elements()) sums.insert(u + v);
    return FinSet::from_elements(std::vector<std::uint64_t>(sums.begin(), sums.end()));
}

/// Every subset of a that contains 0, by bitmask over the nonzero elements.
std::vector<FinSet> subsets_with_zero(const FinSet& a) {
    std::vector<std::uint64_t> rest(a.elements().begin() + 1, a.elements().end());
    std::vector<FinSet> out;
    out.reserve(std::size_t{1} << rest.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
        std::vector<std::uint64_t> elems{0};
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) elems.push_back(rest[i]);
        out.push_back(FinSet::from_elements(std::move(elems)));
    }
    return out;
}

std::vector<std::pair<FinSet, FinSet>> scan_pairs(const FinSet& a) {
    const std::vector<FinSet> subs = subsets_with_zero(a);
    std::vector<std::pair<FinSet, FinSet>> out;
    for (const FinSet& b : subs)
        for (const FinSet& c : subs)
            if (plain_sumset(b, c) == a) out.emplace_back(b, c);
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (p.first != q.first) return shortlex_less(p.first, q.first);
        return shortlex_less(p.second, q.second);
    });
    return out;
}

bool scan_is_atom(const FinSet& a) {
    if (a.is_identity()) return false;
    for (const auto& [b, c] : scan_pairs(a))
        if (!b.is_identity() && !c.is_identity()) return false;
    return true;
}

std::set<Factorization> scan_factorizations(const FinSet& a) {
    if (a.is_identity()) return {Factorization{}};
    std::set<Factorization> out;
    for (const auto& [b, c] : scan_pairs(a)) {
        if (b.is_identity() || !scan_is_atom(b)) continue;
        for (const Factorization& w : scan_factorizations(c)) out.insert(w.with(b));
    }
    return out;
}

} // namespace

std::vector<std::pair<FinSet, FinSet>> naive_divisor_pairs(const FinSet& a) {
    require_cap(a, kPairCap, "divisor pairs");
    return scan_pairs(a);
}

std::vector<Factorization> naive_factorizations(const FinSet& a) {
    require_cap(a, kFactorizationCap, "factorizations");
    const std::set<Factorization> words = scan_factorizations(a);
    return std::vector<Factorization>(words.begin(), words.end());
}

bool naive_relcanc(const FinSet& a) {
    require_cap(a, kRelCancCap, "relative cancellativity");
    std::map<FinSet, std::set<FinSet>> cofactors_by_divisor;
    for (const auto& [b, c] : scan_pairs(a)) cofactors_by_divisor[b].insert(c);
    for (const auto& [b, cs] : cofactors_by_divisor)
        if (cs.size() >= 2) return false;
    return true;
}

} // namespace powmon::oracle
