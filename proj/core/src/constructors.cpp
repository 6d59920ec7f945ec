#include "powmon/constructors.hpp"

#include <algorithm>
#include <set>

#include "powmon/errors.hpp"

namespace powmon {

namespace {

// Witness for the three-element interval {2,3,4}: an 18-element set whose
// three factorizations have lengths 4, 3 and 2.
const FinSet& interval_witness_two() {
    static const FinSet x{0, 1, 4,  5,  10, 11, 12, 14, 15,
                          16, 19, 20, 21, 22, 25, 26, 29, 30};
    return x;
}

std::uint64_t checked_scale_floor(const FinSet& d) {
    const std::uint64_t m = d.max();
    if (m > UINT64_MAX / 3) throw OverflowError("ladder scale exceeds 64 bits");
    return 3 * m;
}

LadderFamily build_ladder_impl(std::size_t index,
                               const std::vector<std::uint64_t>* scales) {
    LadderFamily fam;
    fam.index = index;
    fam.n.push_back(0);
    fam.a.push_back(FinSet{0, 1});
    fam.b.push_back(FinSet{0});
    fam.c.push_back(FinSet{0});
    fam.d.push_back(FinSet{0, 1});
    fam.s.push_back(FinSet{0, 1});

    for (std::size_t j = 1; j <= index; ++j) {
        const std::uint64_t floor = checked_scale_floor(fam.d[j - 1]);
        const std::uint64_t n = scales ? (*scales)[j - 1] : floor;
        if (n < floor)
            throw InvalidSequenceError(
                j, "scale " + std::to_string(n) + " at position " + std::to_string(j) +
                       " is below 3*max(D) = " + std::to_string(floor));
        const FinSet step{0, n + 1};
        fam.n.push_back(n);
        fam.a.push_back(set_union_shifted(fam.a[j - 1], FinSet{0}, n + 1));
        fam.b.push_back(set_union_shifted(fam.b[j - 1], fam.d[j - 1], n));
        fam.c.push_back(set_union_shifted(fam.c[j - 1], FinSet{0}, n));
        fam.d.push_back(sumset(fam.d[j - 1], step));
        fam.s.push_back(sumset(fam.c[j], fam.d[j]));
    }
    return fam;
}

/// The long word of stage j: C_j plus one two-element atom per scale.
Factorization ladder_long_word(const LadderFamily& fam, std::size_t j) {
    std::vector<FinSet> atoms;
    atoms.push_back(fam.c[j]);
    for (std::size_t t = 0; t <= j; ++t) atoms.push_back(FinSet{0, fam.n[t] + 1});
    return Factorization(std::move(atoms));
}

void push_check(FamilyReport& report, std::string name, bool ok, std::string detail = "") {
    report.items.push_back(CheckItem{std::move(name), ok, std::move(detail)});
}

/// Stage small enough for direct divisor searches?  The lower half of
/// B_j and D_j is the previous stage's set, so 2^|D_{j-1}| bounds the raw
/// subset space; keep it comfortably below the budget.
bool stage_directly_checkable(const LadderFamily& fam, std::size_t j) {
    return fam.d[j - 1].size() <= 18;
}

// skipped == nullptr means "never skip": attempt every check and let the
// budget decide.  Otherwise oversized stages are recorded there instead of
// searched.
void check_stage_structure(Factorizer& fz, const LadderFamily& fam, std::size_t j,
                           FamilyReport& report, std::vector<std::size_t>* skipped) {
    const std::string stage = "stage " + std::to_string(j);
    push_check(report, stage + ": A recursion",
               fam.a[j] == set_union_shifted(fam.a[j - 1], FinSet{0}, fam.n[j] + 1));
    push_check(report, stage + ": B recursion",
               fam.b[j] == set_union_shifted(fam.b[j - 1], fam.d[j - 1], fam.n[j]));
    push_check(report, stage + ": C recursion",
               fam.c[j] == set_union_shifted(fam.c[j - 1], FinSet{0}, fam.n[j]));
    push_check(report, stage + ": D recursion",
               fam.d[j] == sumset(fam.d[j - 1], FinSet{0, fam.n[j] + 1}));
    push_check(report, stage + ": S = C + D", fam.s[j] == sumset(fam.c[j], fam.d[j]));
    push_check(report, stage + ": A + B = C + D",
               sumset(fam.a[j], fam.b[j]) == sumset(fam.c[j], fam.d[j]));

    if (skipped && !stage_directly_checkable(fam, j)) {
        skipped->push_back(j);
        return;
    }
    push_check(report, stage + ": A is an atom", fz.is_atom(fam.a[j]));
    push_check(report, stage + ": B is an atom", fz.is_atom(fam.b[j]));
    push_check(report, stage + ": C is an atom", fz.is_atom(fam.c[j]));
    // D_j factors exactly as the product of its two-element atoms.
    const std::vector<Factorization> zd = fz.factorizations(fam.d[j]);
    std::vector<FinSet> d_atoms;
    for (std::size_t t = 0; t <= j; ++t) d_atoms.push_back(FinSet{0, fam.n[t] + 1});
    const bool d_exact = zd.size() == 1 && zd[0] == Factorization(d_atoms);
    push_check(report, stage + ": D has the single expected word", d_exact,
               d_exact ? "" : "got " + std::to_string(zd.size()) + " words");
    push_check(report, stage + ": L(D) = {" + std::to_string(j + 1) + "}",
               fz.length_set(fam.d[j]) == LengthSet::singleton(j + 1));
}

} // namespace

LadderFamily build_ladder(std::size_t index) { return build_ladder_impl(index, nullptr); }

LadderFamily build_ladder(std::size_t index, const std::vector<std::uint64_t>& scales) {
    if (scales.size() != index)
        throw DomainError("expected " + std::to_string(index) + " scales, got " +
                          std::to_string(scales.size()));
    return build_ladder_impl(index, &scales);
}

FamilyReport verify_ladder(Factorizer& fz, const LadderFamily& fam) {
    FamilyReport report;
    report.index = fam.index;

    if (fam.index == 0) {
        push_check(report, "stage 0: S = {0,1}", fam.s[0] == FinSet{0, 1});
        push_check(report, "stage 0: S is an atom", fz.is_atom(fam.s[0]));
        report.note = "stage 0 is the base atom; the two-word shape starts at stage 1";
        return report;
    }

    for (std::size_t j = 1; j <= fam.index; ++j)
        check_stage_structure(fz, fam, j, report, nullptr);

    const std::size_t i = fam.index;
    const Factorization short_word({fam.a[i], fam.b[i]});
    const Factorization long_word = ladder_long_word(fam, i);

    const std::vector<Factorization> z = fz.factorizations(fam.s[i]);
    const bool z_exact = z.size() == 2 && ((z[0] == short_word && z[1] == long_word) ||
                                           (z[0] == long_word && z[1] == short_word));
    push_check(report, "top: Z(S) is exactly the short and the long word", z_exact,
               z_exact ? "" : "got " + std::to_string(z.size()) + " words");

    std::vector<std::uint64_t> expected{2, static_cast<std::uint64_t>(i) + 2};
    push_check(report, "top: L(S) = {2," + std::to_string(i + 2) + "}",
               fz.length_set(fam.s[i]) == LengthSet(expected));

    push_check(report, "top: the two words share no atom",
               fact_gcd(short_word, long_word).empty());

    push_check(report, "top: word-gcd criterion holds", gcd_criterion(fz, fam.s[i]));

    return report;
}

FamilyReport check_ladder_invariants(Factorizer& fz, const LadderFamily& fam) {
    FamilyReport report;
    report.index = fam.index;

    push_check(report, "base stage values",
               fam.n[0] == 0 && fam.a[0] == FinSet{0, 1} && fam.b[0] == FinSet{0} &&
                   fam.c[0] == FinSet{0} && fam.d[0] == FinSet{0, 1} &&
                   fam.s[0] == FinSet{0, 1});

    bool scales_ok = fam.n.size() == fam.index + 1;
    for (std::size_t j = 1; scales_ok && j <= fam.index; ++j)
        scales_ok = fam.n[j] >= checked_scale_floor(fam.d[j - 1]);
    push_check(report, "scale constraints n_j >= 3*max(D_{j-1})", scales_ok);

    std::vector<std::size_t> skipped;
    for (std::size_t j = 1; j <= fam.index; ++j)
        check_stage_structure(fz, fam, j, report, &skipped);

    if (!skipped.empty()) {
        std::string which;
        for (std::size_t j : skipped) {
            if (!which.empty()) which += ",";
            which += std::to_string(j);
        }
        report.note = "stages " + which +
                      " beyond the direct-check cap: structure verified, "
                      "atom/word checks carried by the recursion";
    }
    return report;
}

FinSet compose_sum(Factorizer& fz, const FinSet& x, const FinSet& y) {
    if (x.is_identity()) return y;
    if (y.is_identity()) return x;
    if (!is_relatively_cancellative(fz, x))
        throw PreconditionError("x relatively cancellative",
                                "compose_sum: x = " + x.render() +
                                    " is not relatively cancellative");
    if (!is_relatively_cancellative(fz, y))
        throw PreconditionError("y relatively cancellative",
                                "compose_sum: y = " + y.render() +
                                    " is not relatively cancellative");
    return compose_sum_unchecked(x, y);
}

FinSet compose_sum_unchecked(const FinSet& x, const FinSet& y) {
    if (x.is_identity()) return y;
    if (y.is_identity()) return x;
    if (x.max() > (UINT64_MAX - 1) / 2) throw OverflowError("composition scale overflows");
    return sumset(x, dilate(y, 2 * x.max() + 1));
}

FinSet from_generators(std::uint64_t constant, const std::vector<std::uint64_t>& generators) {
    FinSet w;
    const FinSet unit_atom{0, 1};
    for (std::uint64_t i = 0; i < constant; ++i) w = compose_sum_unchecked(w, unit_atom);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g] < 3)
            throw DomainError("generator " + std::to_string(generators[g]) +
                              " at position " + std::to_string(g + 1) +
                              " must be at least 3");
        const LadderFamily fam = build_ladder(generators[g] - 2);
        Factorizer fz;
        const FamilyReport cert = check_ladder_invariants(fz, fam);
        if (!cert.passed())
            throw Error("ladder invariants failed for generator " +
                        std::to_string(generators[g]));
        w = compose_sum_unchecked(w, fam.top());
    }
    return w;
}

LengthSet from_generators_lengths(std::uint64_t constant,
                                  const std::vector<std::uint64_t>& generators) {
    LengthSet acc = LengthSet::singleton(constant);
    for (std::uint64_t g : generators) {
        if (g < 3) throw DomainError("generator must be at least 3");
        acc = length_sum(acc, LengthSet({2, g}));
    }
    return acc;
}

FinSet interval_three(std::uint64_t k) {
    if (k < 2) throw DomainError("interval start must be at least 2");
    if (k == 2) return interval_witness_two();
    if (k == 3) return sumset(interval_witness_two(), FinSet{0, 61});
    return from_generators(k - 4, {3, 3});
}

FinSet for_elasticity(const Rational& q) {
    if (q < Rational(1, 1)) throw DomainError("elasticity must be at least 1");
    if (q == Rational(1, 1)) return FinSet{0, 1};
    // Realize q = n/m as the length set {m, n}; for integer q use {2, 2q}.
    const std::uint64_t m = q.is_integer() ? 2 : q.den();
    const std::uint64_t n = q.is_integer() ? 2 * q.num() : q.num();
    return from_generators(m - 2, {n - m + 2});
}

GapSplitStructure gap_split_structure(Factorizer& fz, const FinSet& x, std::uint64_t n) {
    if (static_cast<unsigned __int128>(n) <= 2 * static_cast<unsigned __int128>(x.max()))
        throw PreconditionError("n > 2*max(x)",
                                "gap split needs n > 2*max(x); got n = " +
                                    std::to_string(n) + ", max = " +
                                    std::to_string(x.max()));
    GapSplitStructure out;
    out.x = x;
    out.n = n;
    std::set<FinSet> remainders;
    for (const FinSet& a : fz.divisors(x)) {
        const std::vector<FinSet> cs = fz.cofactors(x, a);
        bool any = false;
        for (const FinSet& c : cs)
            for (const FinSet& d : cs)
                if (are_relatively_prime(fz, c, d)) {
                    out.triples.push_back({a, c, d});
                    any = true;
                }
        if (any) remainders.insert(a);
    }
    out.remainders.assign(remainders.begin(), remainders.end());
    return out;
}

LengthSet gap_split_lengths(Factorizer& fz, const FinSet& x, std::uint64_t n) {
    const GapSplitStructure structure = gap_split_structure(fz, x, n);
    LengthSet acc;
    for (const FinSet& a : structure.remainders)
        acc = length_union(acc, fz.length_set(a));
    return acc.shifted(1);
}

GapSplitReport verify_gap_split(Factorizer& fz, const FinSet& x, std::uint64_t n) {
    const GapSplitStructure structure = gap_split_structure(fz, x, n);
    GapSplitReport report;
    report.triple_count = structure.triples.size();
    report.remainder_count = structure.remainders.size();

    // Structural side: one gap atom C ∪ (n + D) per triple, times every
    // word of the remainder.
    std::set<Factorization> expected;
    for (const auto& [a, c, d] : structure.triples) {
        const FinSet gap_atom = set_union_shifted(c, d, n);
        for (const Factorization& w : fz.factorizations(a))
            expected.insert(w.with(gap_atom));
    }

    // Direct side.
    const FinSet y = sumset(x, FinSet{0, n});
    const std::vector<Factorization> z = fz.factorizations(y);
    report.z_identity =
        expected.size() == z.size() && std::equal(expected.begin(), expected.end(), z.begin());

    report.lengths = fz.length_set(y);
    LengthSet predicted;
    for (const FinSet& a : structure.remainders)
        predicted = length_union(predicted, fz.length_set(a));
    report.l_identity = report.lengths == predicted.shifted(1);

    return report;
}

} // namespace powmon
