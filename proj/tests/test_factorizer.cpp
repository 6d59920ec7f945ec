#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"

#include "powmon/errors.hpp"
#include "powmon/factorizer.hpp"
#include "powmon/oracle.hpp"
#include "powmon/sampling.hpp"

using namespace powmon;

namespace {

std::vector<std::string> rendered(const std::vector<Factorization>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const Factorization& w : words) out.push_back(w.render());
    return out;
}

} // namespace

TEST_CASE("divides") {
    Factorizer fz;
    const FinSet a{0, 1, 2, 3};
    CHECK(fz.divides(a, FinSet{0}));
    CHECK(fz.divides(a, a));
    CHECK(fz.divides(a, FinSet{0, 1}));
    CHECK(fz.divides(a, FinSet{0, 2}));
    CHECK(fz.divides(a, FinSet{0, 1, 2}));
    CHECK_FALSE(fz.divides(a, FinSet{0, 3}));
    CHECK_FALSE(fz.divides(a, FinSet{0, 1, 3}));
    CHECK_FALSE(fz.divides(a, FinSet{0, 4}));
    CHECK_FALSE(fz.divides(FinSet{0}, FinSet{0, 1}));
}

TEST_CASE("cofactors are sorted and complete") {
    Factorizer fz;
    // both cofactors of {0,1} in {0,1,2,3}, shortlex order
    CHECK(fz.cofactors(FinSet{0, 1, 2, 3}, FinSet{0, 1}) ==
          std::vector<FinSet>{FinSet{0, 2}, FinSet{0, 1, 2}});
    CHECK(fz.cofactors(FinSet{0, 1, 2, 3}, FinSet{0, 3}).empty());
    CHECK(fz.cofactors(FinSet{0, 1, 2, 3}, FinSet{0}) ==
          std::vector<FinSet>{FinSet{0, 1, 2, 3}});
    CHECK(fz.cofactors(FinSet{0, 1}, FinSet{0, 1}) == std::vector<FinSet>{FinSet{0}});
}

TEST_CASE("divisors of the worked example") {
    Factorizer fz;
    CHECK(fz.divisors(FinSet{0, 1, 2, 3}) ==
          std::vector<FinSet>{FinSet{0}, FinSet{0, 1}, FinSet{0, 2}, FinSet{0, 1, 2},
                              FinSet{0, 1, 2, 3}});
    CHECK(fz.divisors(FinSet{0}) == std::vector<FinSet>{FinSet{0}});
    CHECK(fz.divisors(FinSet{0, 5}) == std::vector<FinSet>{FinSet{0}, FinSet{0, 5}});
}

TEST_CASE("atoms") {
    Factorizer fz;
    CHECK(fz.is_atom(FinSet{0, 1}));
    CHECK(fz.is_atom(FinSet{0, 7}));
    CHECK(fz.is_atom(FinSet{0, 2, 3}));
    CHECK(fz.is_atom(FinSet{0, 1, 2, 7, 9}));
    CHECK(fz.is_atom(FinSet{0, 1, 4, 6, 7}));
    CHECK(fz.is_atom(FinSet{0, 4, 10, 11, 15, 19}));
    CHECK(fz.is_atom(FinSet{0, 1, 4, 5, 10, 11, 15, 19}));
    CHECK_FALSE(fz.is_atom(FinSet{0}));
    CHECK_FALSE(fz.is_atom(FinSet{0, 1, 2}));
    CHECK_FALSE(fz.is_atom(FinSet{0, 3, 6, 9}));
    CHECK_FALSE(fz.is_atom(FinSet{0, 1, 10, 11}));
}

TEST_CASE("factorizations of small sets") {
    Factorizer fz;
    // identity: the empty word only
    auto words = fz.factorizations(FinSet{0});
    REQUIRE(words.size() == 1);
    CHECK(words[0].empty());
    CHECK(fz.length_set(FinSet{0}).lengths() == std::vector<std::uint64_t>{0});

    // an atom factors as itself
    words = fz.factorizations(FinSet{0, 4});
    REQUIRE(words.size() == 1);
    CHECK(words[0].render() == "{0,4}");

    CHECK(rendered(fz.factorizations(FinSet{0, 1, 2, 3})) ==
          std::vector<std::string>{"{0,1}+{0,2}", "{0,1}+{0,1}+{0,1}"});

    // {0,3,6,9} = {0,3}+{0,6} = {0,3}+{0,3}+{0,3} (arithmetic progression)
    CHECK(rendered(fz.factorizations(FinSet{0, 3, 6, 9})) ==
          std::vector<std::string>{"{0,3}+{0,6}", "{0,3}+{0,3}+{0,3}"});
}

TEST_CASE("length sets and elasticity of the worked sums") {
    Factorizer fz;
    const FinSet ab = sumset(FinSet{0, 1, 2, 3}, FinSet{0, 7});
    CHECK(fz.length_set(ab) == LengthSet({2, 3, 4}));
    CHECK(fz.elasticity_of_set(ab) == Rational(2, 1));

    const FinSet cd = sumset(FinSet{0, 1}, FinSet{0, 3, 6, 9});
    CHECK(fz.length_set(cd) == LengthSet({2, 3, 4}));

    const FinSet ce = sumset(FinSet{0, 1}, FinSet{0, 2});
    CHECK(fz.length_set(ce) == LengthSet({2, 3}));
    CHECK(fz.elasticity_of_set(ce) == Rational(3, 2));

    CHECK(fz.elasticity_of_set(FinSet{0, 1}) == Rational(1, 1));
    CHECK(fz.elasticity_of_set(FinSet{0}) == Rational(1, 1));
}

TEST_CASE("factorization lists are canonically ordered and duplicate-free") {
    Factorizer fz;
    for (const FinSet& a : all_sets_within(7)) {
        const auto words = fz.factorizations(a);
        for (std::size_t i = 0; i + 1 < words.size(); ++i) {
            CHECK(words[i] < words[i + 1]); // strict: sorted and distinct
        }
        for (const Factorization& w : words) {
            if (!w.empty()) {
                CHECK(w.sum() == a);
                for (const FinSet& atom : w.atoms()) CHECK(fz.is_atom(atom));
            }
        }
    }
}

TEST_CASE("engine matches the oracle on every set within [0,8]") {
    Factorizer fz;
    for (const FinSet& a : all_sets_within(8)) {
        // ordered divisor pairs, reconstructed from divisors() + cofactors()
        std::vector<std::pair<FinSet, FinSet>> engine_pairs;
        for (const FinSet& b : fz.divisors(a))
            for (const FinSet& c : fz.cofactors(a, b)) engine_pairs.emplace_back(b, c);
        auto oracle_pairs = oracle::naive_divisor_pairs(a);
        std::sort(engine_pairs.begin(), engine_pairs.end());
        std::sort(oracle_pairs.begin(), oracle_pairs.end());
        CHECK(engine_pairs == oracle_pairs);

        auto engine_words = fz.factorizations(a);
        auto oracle_words = oracle::naive_factorizations(a);
        std::sort(engine_words.begin(), engine_words.end());
        std::sort(oracle_words.begin(), oracle_words.end());
        CHECK(engine_words == oracle_words);
    }
}

TEST_CASE("atom test matches the oracle on every set within [0,9]") {
    Factorizer fz;
    for (const FinSet& a : all_sets_within(9)) {
        const bool naive = oracle::naive_factorizations(a).size() == 1 &&
                           !a.is_identity() &&
                           oracle::naive_factorizations(a)[0].length() == 1;
        CHECK(fz.is_atom(a) == naive);
    }
}

TEST_CASE("atomhood, length one, and exactly two divisors coincide") {
    Factorizer fz;
    for (const FinSet& a : all_sets_within(10)) {
        if (a.is_identity()) continue;
        const bool atom = fz.is_atom(a);
        const LengthSet l = fz.length_set(a);
        CHECK(atom == l.contains(1));
        CHECK(atom == (fz.divisors(a).size() == 2));
        if (!atom) CHECK(l.min() >= 2);
    }
}

TEST_CASE("node budget is enforced and reported") {
    SearchLimits limits;
    limits.node_budget = 50;
    Factorizer fz(limits);
    CHECK(fz.limits().node_budget == 50);
    CHECK_THROWS_AS(fz.factorizations(FinSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}),
                    BudgetError);
    CHECK(fz.nodes_used() >= 50);
}

TEST_CASE("max search element is enforced") {
    SearchLimits limits;
    limits.max_search_element = 100;
    Factorizer fz(limits);
    CHECK_THROWS_AS(fz.divisors(FinSet{0, 1, 101}), BudgetError);
    CHECK_NOTHROW(fz.divisors(FinSet{0, 1, 99}));
}

TEST_CASE("results are independent of memo state") {
    // a fresh instance and one with a warm memo agree
    Factorizer cold;
    Factorizer warm;
    const FinSet a = sumset(FinSet{0, 1, 2, 3}, FinSet{0, 7});
    const auto first = warm.factorizations(a);
    const auto second = warm.factorizations(a); // memo hit
    CHECK(first == second);
    CHECK(cold.factorizations(a) == first);
    CHECK(warm.memo()->size() > 0);
}

TEST_CASE("a shared memo table can be hit from several threads") {
    auto memo = std::make_shared<MemoTable>();
    std::vector<FinSet> targets;
    for (const FinSet& a : all_sets_within(7)) targets.push_back(a);

    std::vector<std::vector<LengthSet>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            Factorizer fz(memo, SearchLimits{});
            for (const FinSet& a : targets) results[t].push_back(fz.length_set(a));
        });
    }
    for (std::thread& th : threads) th.join();
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}
