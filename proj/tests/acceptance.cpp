// Acceptance suite: ten numbered criteria, each printed as one PASS/FAIL
// line with its elapsed time.  A criterion fails if its checks fail OR it
// overruns its pinned time budget.  `--slow` runs the long ladder check
// (stage 3) instead of the regular list.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "powmon/cancellativity.hpp"
#include "powmon/constructors.hpp"
#include "powmon/factorizer.hpp"
#include "powmon/finset.hpp"
#include "powmon/oracle.hpp"
#include "powmon/sampling.hpp"

using namespace powmon;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

struct Criterion {
    std::string label;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& detail, const std::string& message) {
    if (!condition && detail.empty()) detail = message;
    return condition;
}

// --- criterion bodies ------------------------------------------------------

bool worked_example_fixtures(std::string& detail) {
    Factorizer fz;
    const FinSet a{0, 1, 2, 3}, b{0, 7}, c{0, 1}, d{0, 3, 6, 9}, e{0, 2};
    bool ok = true;
    ok &= check(fz.length_set(sumset(a, b)) == LengthSet({2, 3, 4}), detail,
                "L(A+B) != {2,3,4}");
    ok &= check(fz.length_set(sumset(c, d)) == LengthSet({2, 3, 4}), detail,
                "L(C+D) != {2,3,4}");
    ok &= check(fz.length_set(sumset(c, e)) == LengthSet({2, 3}), detail,
                "L(C+E) != {2,3}");
    ok &= check(!is_relatively_cancellative(fz, a), detail, "A relcanc verdict");
    ok &= check(!is_relatively_cancellative(fz, d), detail, "D relcanc verdict");
    ok &= check(static_cast<bool>(is_relatively_cancellative(fz, b)), detail,
                "B relcanc verdict");
    ok &= check(static_cast<bool>(is_relatively_cancellative(fz, c)), detail,
                "C relcanc verdict");
    ok &= check(static_cast<bool>(is_relatively_cancellative(fz, e)), detail,
                "E relcanc verdict");
    return ok;
}

bool witness_two_routes(std::string& detail) {
    Factorizer fz;
    const FinSet x = interval_three(2);
    bool ok = true;

    ok &= check(fz.length_set(x) == LengthSet({2, 3, 4}), detail, "L(X)");

    const std::vector<Factorization> expected_words{
        Factorization({FinSet{0, 10, 11}, FinSet{0, 1, 4, 5, 10, 11, 15, 19}}),
        Factorization({FinSet{0, 1}, FinSet{0, 10}, FinSet{0, 4, 10, 11, 15, 19}}),
        Factorization({FinSet{0, 1}, FinSet{0, 4}, FinSet{0, 10},
                       FinSet{0, 11, 15}})};
    ok &= check(fz.factorizations(x) == expected_words, detail, "Z(X) word list");

    const std::vector<FinSet> expected_atoms{
        FinSet{0, 1},          FinSet{0, 4},
        FinSet{0, 10},         FinSet{0, 10, 11},
        FinSet{0, 11, 15},     FinSet{0, 4, 10, 11, 15, 19},
        FinSet{0, 1, 4, 5, 10, 11, 15, 19}};
    ok &= check(fz.atom_divisors(x) == expected_atoms, detail, "atom divisors of X");

    const GapSplitStructure split = gap_split_structure(fz, x, 61);
    ok &= check(split.remainders == std::vector<FinSet>{FinSet{0, 1, 10, 11}, x},
                detail, "remainder list for (X,61)");

    // structural route, timed on its own tighter budget
    const auto structural_start = std::chrono::steady_clock::now();
    const LengthSet structural = gap_split_lengths(fz, x, 61);
    const double structural_elapsed = seconds_since(structural_start);
    ok &= check(structural == LengthSet({3, 4, 5}), detail, "structural L(Y)");
    ok &= check(structural_elapsed <= 10.0, detail, "structural route over 10s");

    // direct route: factorize Y itself
    Factorizer direct;
    ok &= check(direct.length_set(sumset(x, FinSet{0, 61})) == LengthSet({3, 4, 5}),
                detail, "direct L(Y)");
    return ok;
}

bool ladder_stage(std::size_t index, double stage_budget, std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    Factorizer fz;
    const LadderFamily fam = build_ladder(index);
    const FamilyReport report = verify_ladder(fz, fam);
    bool ok = true;
    for (const CheckItem& item : report.items)
        ok &= check(item.passed, detail,
                    "stage " + std::to_string(index) + ": " + item.name);
    ok &= check(fz.factorizations(fam.top()).size() == 2, detail, "|Z(S)| != 2");
    ok &= check(fz.length_set(fam.top()) ==
                    LengthSet({2, static_cast<std::uint64_t>(index) + 2}),
                detail, "L(S)");
    ok &= check(seconds_since(start) <= stage_budget, detail,
                "stage " + std::to_string(index) + " over budget");
    return ok;
}

bool ladders_fast(std::string& detail) {
    return ladder_stage(1, 10.0, detail) && ladder_stage(2, 10.0, detail);
}

bool ladder_slow(std::string& detail) { return ladder_stage(3, 600.0, detail); }

bool separated_sum_suite(std::string& detail) {
    Factorizer fz;
    const auto pairs = sample_separated_pairs(fz, 20250816, 100);
    bool ok = check(pairs.size() == 100, detail, "expected 100 pairs");
    for (const auto& [x, y] : pairs) {
        const SeparatedSumReport r = verify_separated_sum(fz, x, y);
        ok &= check(r.preconditions_hold(), detail,
                    "sampled pair misses a precondition: " + x.render() + ", " +
                        y.render());
        ok &= check(r.conclusions_hold(), detail,
                    "conclusion fails for " + x.render() + ", " + y.render());
        if (!ok) break;
    }
    // the two worked rejection cases
    const SeparatedSumReport r1 =
        verify_separated_sum(fz, FinSet{0, 1, 2, 3}, FinSet{0, 7});
    ok &= check(r1.failed_precondition() == "x relatively cancellative", detail,
                "violation case (A,B)");
    const SeparatedSumReport r2 = verify_separated_sum(fz, FinSet{0, 1}, FinSet{0, 2});
    ok &= check(r2.failed_precondition() == "gcd(y) > 2*max(x)", detail,
                "boundary case (C,E)");
    return ok;
}

bool compose_sum_suite(std::string& detail) {
    Factorizer fz;
    const auto pairs = sample_cancellative_pairs(fz, 424243, 50);
    bool ok = check(pairs.size() == 50, detail, "expected 50 pairs");
    for (const auto& [x, y] : pairs) {
        const FinSet w = compose_sum(fz, x, y);
        ok &= check(fz.length_set(w) == length_sum(fz.length_set(x), fz.length_set(y)),
                    detail, "length sets do not add for " + x.render() + ", " +
                                y.render());
        ok &= check(static_cast<bool>(is_relatively_cancellative(fz, w)), detail,
                    "composed sum not relatively cancellative: " + w.render());
        if (!ok) break;
    }
    return ok;
}

bool gap_split_exhaustive(std::string& detail) {
    Factorizer fz;
    const auto sets = all_sets_within(6);
    bool ok = check(sets.size() == 64, detail, "expected 64 sets");
    for (const FinSet& x : sets) {
        const GapSplitReport report = verify_gap_split(fz, x, 2 * x.max() + 1);
        ok &= check(report.z_identity, detail, "word identity fails for " + x.render());
        ok &= check(report.l_identity, detail,
                    "length identity fails for " + x.render());
        if (!ok) break;
    }
    return ok;
}

bool oracle_equivalence(std::string& detail) {
    Factorizer fz;
    bool ok = true;
    for (const FinSet& a : all_sets_within(8)) {
        std::vector<std::pair<FinSet, FinSet>> engine_pairs;
        for (const FinSet& b : fz.divisors(a))
            for (const FinSet& c : fz.cofactors(a, b)) engine_pairs.emplace_back(b, c);
        auto oracle_pairs = oracle::naive_divisor_pairs(a);
        std::sort(engine_pairs.begin(), engine_pairs.end());
        std::sort(oracle_pairs.begin(), oracle_pairs.end());
        ok &= check(engine_pairs == oracle_pairs, detail,
                    "divisor pairs differ on " + a.render());

        auto engine_words = fz.factorizations(a);
        auto oracle_words = oracle::naive_factorizations(a);
        std::sort(engine_words.begin(), engine_words.end());
        std::sort(oracle_words.begin(), oracle_words.end());
        ok &= check(engine_words == oracle_words,
                    detail, "factorizations differ on " + a.render());

        ok &= check(is_relatively_cancellative(fz, a).relatively_cancellative ==
                        oracle::naive_relcanc(a),
                    detail, "relcanc differs on " + a.render());
        if (!ok) break;
    }
    // atom test, exhaustive over the larger range
    for (const FinSet& a : all_sets_within(10)) {
        const auto words = oracle::naive_factorizations(a);
        const bool naive_atom = words.size() == 1 && words[0].length() == 1;
        ok &= check(fz.is_atom(a) == naive_atom, detail,
                    "atom test differs on " + a.render());
        if (!ok) break;
    }
    return ok;
}

bool gcd_criterion_implies_relcanc(std::string& detail) {
    Factorizer fz;
    bool ok = true;
    std::size_t holds = 0;
    for (const FinSet& a : all_sets_within(10)) {
        if (gcd_criterion(fz, a)) {
            ++holds;
            ok &= check(is_relatively_cancellative(fz, a).relatively_cancellative,
                        detail, "criterion holds but set is not cancellative: " +
                                    a.render());
        }
        if (!ok) break;
    }
    ok &= check(holds > 0, detail, "criterion never held - vacuous run");
    return ok;
}

bool elasticity_realization(std::string& detail) {
    Factorizer fz;
    const std::vector<Rational> targets{Rational(1, 1), Rational(3, 2), Rational(2, 1),
                                        Rational(5, 2), Rational(7, 3)};
    bool ok = true;
    for (const Rational& q : targets) {
        const FinSet w = for_elasticity(q);
        ok &= check(fz.elasticity_of_set(w) == q, detail,
                    "elasticity mismatch for target " + q.render());
    }
    return ok;
}

bool interval_realization(std::string& detail) {
    bool ok = true;
    for (std::uint64_t k = 2; k <= 6; ++k) {
        Factorizer fz;
        ok &= check(fz.length_set(interval_three(k)) ==
                        LengthSet({k, k + 1, k + 2}),
                    detail, "length set mismatch at k = " + std::to_string(k));
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    const bool slow = argc > 1 && std::string(argv[1]) == "--slow";

    std::vector<Criterion> criteria;
    if (slow) {
        criteria.push_back({"3s", "ladder stage 3 verifies in full", 600.0, ladder_slow});
    } else {
        criteria.push_back({"1", "worked-example length sets and verdicts", 1.0,
                            worked_example_fixtures});
        criteria.push_back({"2", "18-element witness: both routes to L(Y)", 120.0,
                            witness_two_routes});
        criteria.push_back({"3", "ladder stages 1 and 2 verify in full", 20.0,
                            ladders_fast});
        criteria.push_back({"4", "100 separated pairs pass; rejections right", 60.0,
                            separated_sum_suite});
        criteria.push_back({"5", "50 composed sums: lengths add, stay cancellative",
                            60.0, compose_sum_suite});
        criteria.push_back({"6", "gap split identities for all 64 sets in [0,6]", 60.0,
                            gap_split_exhaustive});
        criteria.push_back({"7", "oracle equivalence sweeps", 120.0, oracle_equivalence});
        criteria.push_back({"8", "word-gcd criterion implies cancellativity on [0,10]",
                            120.0, gcd_criterion_implies_relcanc});
        criteria.push_back({"9", "elasticity realized for 1, 3/2, 2, 5/2, 7/3", 120.0,
                            elasticity_realization});
        criteria.push_back({"10", "three-element intervals realized for k = 2..6",
                            180.0, interval_realization});
    }

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(start);
        if (elapsed > c.budget_seconds) {
            ok = false;
            if (detail.empty()) detail = "over time budget";
        }
        all_ok &= ok;
        std::printf("%s criterion %2s: %-48s (%.2fs / %.0fs)%s%s\n",
                    ok ? "PASS" : "FAIL", c.label.c_str(), c.name.c_str(), elapsed,
                    c.budget_seconds, detail.empty() ? "" : "  -- ",
                    detail.c_str());
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
