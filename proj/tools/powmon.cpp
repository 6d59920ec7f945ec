// powmon — command-line arithmetic in the reduced power monoid of the
// naturals: finite 0-containing sets under sumset addition.
//
// Exit codes: 0 success / predicate true, 1 predicate false or
// verification failure, 2 malformed input, violated precondition, or an
// exhausted search budget.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "powmon/cancellativity.hpp"
#include "powmon/constructors.hpp"
#include "powmon/errors.hpp"
#include "powmon/factorizer.hpp"
#include "powmon/finset.hpp"
#include "powmon/json_io.hpp"
#include "powmon/oracle.hpp"
#include "powmon/rational.hpp"
#include "powmon/sampling.hpp"

namespace {

using namespace powmon;
using nlohmann::json;

struct GlobalOptions {
    bool json_out = false;
    std::uint64_t budget = SearchLimits{}.node_budget;

    Factorizer factorizer() const {
        SearchLimits limits;
        limits.node_budget = budget;
        return Factorizer(limits);
    }
};

void emit(const GlobalOptions& opt, const json& j, const std::string& text) {
    if (opt.json_out)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string list_lines(const std::vector<FinSet>& sets) {
    std::string out;
    for (const FinSet& s : sets) out += s.render() + '\n';
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_sumset(const GlobalOptions& opt, const std::string& a, const std::string& b) {
    const FinSet result = sumset(FinSet::parse(a), FinSet::parse(b));
    emit(opt, json(result), result.render() + '\n');
    return 0;
}

int cmd_atom(const GlobalOptions& opt, const std::string& a_text) {
    const FinSet a = FinSet::parse(a_text);
    Factorizer fz = opt.factorizer();
    if (fz.is_atom(a)) {
        emit(opt, json{{"atom", true}}, "atom\n");
        return 0;
    }
    if (a.is_identity()) {
        emit(opt, json{{"atom", false}, {"identity", true}},
             "not an atom: {0} is the identity\n");
        return 1;
    }
    // divisors come back sorted, so [1] is the least nontrivial one
    const FinSet b = fz.divisors(a)[1];
    const FinSet c = fz.cofactors(a, b)[0];
    emit(opt, json{{"atom", false}, {"decomposition", {{"b", b}, {"c", c}}}},
         "not an atom: " + a.render() + " = " + b.render() + " + " + c.render() + '\n');
    return 1;
}

int cmd_divisors(const GlobalOptions& opt, const std::string& a_text) {
    Factorizer fz = opt.factorizer();
    const std::vector<FinSet> ds = fz.divisors(FinSet::parse(a_text));
    emit(opt, json{{"divisors", ds}}, list_lines(ds));
    return 0;
}

int cmd_factorize(const GlobalOptions& opt, const std::string& a_text) {
    Factorizer fz = opt.factorizer();
    const std::vector<Factorization> words = fz.factorizations(FinSet::parse(a_text));
    std::string text;
    for (const Factorization& w : words) text += w.render() + '\n';
    emit(opt, json{{"factorizations", words}}, text);
    return 0;
}

int cmd_lengthset(const GlobalOptions& opt, const std::string& a_text) {
    Factorizer fz = opt.factorizer();
    const LengthSet l = fz.length_set(FinSet::parse(a_text));
    emit(opt, json(l), l.render() + '\n');
    return 0;
}

int cmd_elasticity(const GlobalOptions& opt, const std::string& a_text) {
    Factorizer fz = opt.factorizer();
    const Rational rho = fz.elasticity_of_set(FinSet::parse(a_text));
    emit(opt, json(rho), rho.render() + '\n');
    return 0;
}

int cmd_relcanc(const GlobalOptions& opt, const std::string& a_text) {
    Factorizer fz = opt.factorizer();
    const RelCancResult r = is_relatively_cancellative(fz, FinSet::parse(a_text));
    json j{{"relcanc", r.relatively_cancellative}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    if (r.relatively_cancellative) {
        emit(opt, j, "relatively cancellative\n");
        return 0;
    }
    emit(opt, j,
         "not relatively cancellative: b = " + r.witness->b.render() +
             " has cofactors c = " + r.witness->c.render() +
             " and d = " + r.witness->d.render() + '\n');
    return 1;
}

int cmd_relprime(const GlobalOptions& opt, const std::string& b_text,
                 const std::string& c_text) {
    const FinSet b = FinSet::parse(b_text);
    const FinSet c = FinSet::parse(c_text);
    Factorizer fz = opt.factorizer();
    // report the least nontrivial common divisor when there is one
    const FinSet& small = b.max() <= c.max() ? b : c;
    const FinSet& large = b.max() <= c.max() ? c : b;
    for (const FinSet& d : fz.divisors(small)) {
        if (d.is_identity()) continue;
        if (fz.divides(large, d)) {
            emit(opt, json{{"relprime", false}, {"common_divisor", d}},
                 "common divisor: " + d.render() + '\n');
            return 1;
        }
    }
    emit(opt, json{{"relprime", true}, {"common_divisor", nullptr}},
         "relatively prime\n");
    return 0;
}

int cmd_gcdcrit(const GlobalOptions& opt, const std::string& a_text) {
    Factorizer fz = opt.factorizer();
    const std::vector<Factorization> words = fz.factorizations(FinSet::parse(a_text));
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const Factorization shared = fact_gcd(words[i], words[j]);
            if (!shared.empty()) {
                emit(opt,
                     json{{"holds", false},
                          {"first", words[i]},
                          {"second", words[j]},
                          {"shared", shared}},
                     "criterion fails: " + words[i].render() + " and " +
                         words[j].render() + " share " + shared.render() + '\n');
                return 1;
            }
        }
    }
    emit(opt, json{{"holds", true}},
         "criterion holds: distinct factorizations share no atom\n");
    return 0;
}

std::string render_report(const FamilyReport& report) {
    std::string out;
    for (const CheckItem& item : report.items) {
        out += std::string(item.passed ? "PASS " : "FAIL ") + item.name;
        if (!item.detail.empty()) out += " (" + item.detail + ")";
        out += '\n';
    }
    if (!report.note.empty()) out += "note: " + report.note + '\n';
    out += report.passed() ? "all checks passed\n" : "some checks FAILED\n";
    return out;
}

int cmd_family(const GlobalOptions& opt, std::uint64_t index,
               const std::vector<std::uint64_t>& scales, bool verify, bool invariants) {
    const LadderFamily fam = scales.empty()
                                 ? build_ladder(index)
                                 : build_ladder(index, scales);
    json j(fam);
    std::string text;
    for (std::size_t stage = 0; stage <= fam.index; ++stage) {
        text += "stage " + std::to_string(stage) + ": n = " + std::to_string(fam.n[stage]) +
                "\n  A = " + fam.a[stage].render() + "\n  B = " + fam.b[stage].render() +
                "\n  C = " + fam.c[stage].render() + "\n  D = " + fam.d[stage].render() +
                "\n  S = " + fam.s[stage].render() + '\n';
    }
    int rc = 0;
    if (verify || invariants) {
        Factorizer fz = opt.factorizer();
        const FamilyReport report =
            verify ? verify_ladder(fz, fam) : check_ladder_invariants(fz, fam);
        j["report"] = report;
        text += render_report(report);
        rc = report.passed() ? 0 : 1;
    }
    emit(opt, j, text);
    return rc;
}

int cmd_compose(const GlobalOptions& opt, const std::string& x_text,
                const std::string& y_text) {
    Factorizer fz = opt.factorizer();
    const FinSet w = compose_sum(fz, FinSet::parse(x_text), FinSet::parse(y_text));
    emit(opt, json(w), w.render() + '\n');
    return 0;
}

int cmd_generators(const GlobalOptions& opt, std::uint64_t constant,
                   const std::vector<std::uint64_t>& gens, bool verify) {
    const FinSet w = from_generators(constant, gens);
    const LengthSet certified = from_generators_lengths(constant, gens);
    json j{{"set", w}, {"lengths", certified}};
    std::string text = w.render() + "\nlengths = " + certified.render() + " (certified)\n";
    int rc = 0;
    if (verify) {
        Factorizer fz = opt.factorizer();
        const LengthSet direct = fz.length_set(w);
        const bool ok = direct == certified;
        j["verified"] = ok;
        text += ok ? "verified: direct factorization agrees\n"
                   : "MISMATCH: direct factorization found " + direct.render() + '\n';
        rc = ok ? 0 : 1;
    }
    emit(opt, j, text);
    return rc;
}

int cmd_interval(const GlobalOptions& opt, std::uint64_t k, bool verify) {
    const FinSet w = interval_three(k);
    const LengthSet certified({k, k + 1, k + 2});
    json j{{"set", w}, {"lengths", certified}};
    std::string text = w.render() + "\nlengths = " + certified.render() + " (certified)\n";
    int rc = 0;
    if (verify) {
        Factorizer fz = opt.factorizer();
        const LengthSet direct = fz.length_set(w);
        const bool ok = direct == certified;
        j["verified"] = ok;
        text += ok ? "verified: direct factorization agrees\n"
                   : "MISMATCH: direct factorization found " + direct.render() + '\n';
        rc = ok ? 0 : 1;
    }
    emit(opt, j, text);
    return rc;
}

int cmd_construct_elasticity(const GlobalOptions& opt, const std::string& q_text,
                             bool verify) {
    const Rational q = Rational::parse(q_text);
    const FinSet w = for_elasticity(q);
    json j{{"set", w}, {"elasticity", q}};
    std::string text = w.render() + '\n';
    int rc = 0;
    if (!verify) {
        text += "rho = " + q.render() + " (certified)\n";
    } else {
        Factorizer fz = opt.factorizer();
        const Rational direct = fz.elasticity_of_set(w);
        const bool ok = direct == q;
        j["verified"] = ok;
        text += ok ? "rho = " + q.render() + " (verified)\n"
                   : "rho = " + q.render() + " (certified)\nMISMATCH: direct "
                     "factorization found " + direct.render() + '\n';
        rc = ok ? 0 : 1;
    }
    emit(opt, j, text);
    return rc;
}

int cmd_prop36(const GlobalOptions& opt, const std::string& x_text, std::uint64_t n,
               bool verify) {
    const FinSet x = FinSet::parse(x_text);
    Factorizer fz = opt.factorizer();
    if (!verify) {
        const GapSplitStructure s = gap_split_structure(fz, x, n);
        LengthSet predicted;
        for (const FinSet& a : s.remainders)
            predicted = length_union(predicted, fz.length_set(a));
        predicted = predicted.shifted(1);
        json j(s);
        j["predicted_lengths"] = predicted;
        std::string text = "triples: " + std::to_string(s.triples.size()) + '\n';
        text += "remainders:\n";
        for (const FinSet& a : s.remainders) text += "  " + a.render() + '\n';
        text += "predicted lengths of x + {0," + std::to_string(n) +
                "}: " + predicted.render() + '\n';
        emit(opt, j, text);
        return 0;
    }
    const GapSplitReport report = verify_gap_split(fz, x, n);
    std::string text;
    text += std::string(report.z_identity ? "PASS" : "FAIL") +
            " factorizations match the split structure\n";
    text += std::string(report.l_identity ? "PASS" : "FAIL") +
            " length set matches 1 + union of remainder lengths\n";
    text += "lengths: " + report.lengths.render() + '\n';
    emit(opt, json(report), text);
    return report.passed() ? 0 : 1;
}

int cmd_density(const GlobalOptions& opt, std::uint64_t max_element,
                std::uint64_t samples, std::uint64_t seed) {
    Factorizer fz = opt.factorizer();
    std::uint64_t atoms = 0;
    std::uint64_t total = 0;
    std::string mode;
    if (samples == 0) {
        if (max_element > 20)
            throw DomainError("exact atom density needs max_element <= 20; "
                              "pass --samples for larger ranges");
        for (const FinSet& s : all_sets_within(max_element)) {
            ++total;
            if (fz.is_atom(s)) ++atoms;
        }
        mode = "exact";
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            std::vector<std::uint64_t> elems{0};
            for (std::uint64_t v = 1; v <= max_element; ++v)
                if (rng() & 1) elems.push_back(v);
            ++total;
            if (fz.is_atom(FinSet::from_elements(std::move(elems)))) ++atoms;
        }
        mode = "sampled";
    }
    const double ratio = static_cast<double>(atoms) / static_cast<double>(total);
    json j{{"max_element", max_element},
           {"sets", total},
           {"atoms", atoms},
           {"ratio", ratio},
           {"mode", mode}};
    std::string text = "atoms: " + std::to_string(atoms) + " / " + std::to_string(total) +
                       " (" + std::to_string(ratio) + ", " + mode + ")\n";
    if (samples != 0) j["seed"] = seed;
    emit(opt, j, text);
    return 0;
}

// ------------------------------------------------------------ verify-paper

struct SuiteItem {
    std::string name;
    std::function<bool(Factorizer&, std::string&)> run;
};

int cmd_verify_paper(const GlobalOptions& opt, bool include_slow) {
    const FinSet set_a{0, 1, 2, 3};
    const FinSet set_b{0, 7};
    const FinSet set_c{0, 1};
    const FinSet set_d{0, 3, 6, 9};
    const FinSet set_e{0, 2};
    const FinSet witness = interval_three(2);

    std::vector<SuiteItem> items;

    items.push_back({"cancellativity verdicts of the five basic sets",
                     [&](Factorizer& fz, std::string&) {
                         return !is_relatively_cancellative(fz, set_a) &&
                                is_relatively_cancellative(fz, set_b).relatively_cancellative &&
                                is_relatively_cancellative(fz, set_c).relatively_cancellative &&
                                !is_relatively_cancellative(fz, set_d) &&
                                is_relatively_cancellative(fz, set_e).relatively_cancellative;
                     }});

    items.push_back({"scale separation of the basic pairs, boundary included",
                     [&](Factorizer&, std::string&) {
                         return set_gcd(set_b) > 2 * set_a.max() &&
                                set_gcd(set_d) > 2 * set_c.max() &&
                                set_gcd(set_e) == 2 * set_c.max();
                     }});

    const auto strict_growth = [](Factorizer& fz, const FinSet& x, const FinSet& y,
                                  const LengthSet& expect_sum,
                                  const LengthSet& expect_parts) {
        const LengthSet direct = fz.length_set(sumset(x, y));
        const LengthSet parts = length_sum(fz.length_set(x), fz.length_set(y));
        return direct == expect_sum && parts == expect_parts;
    };

    items.push_back({"L({0,1,2,3}+{0,7}) = {2,3,4}, strictly above L+L = {3,4}",
                     [&](Factorizer& fz, std::string&) {
                         return strict_growth(fz, set_a, set_b, LengthSet({2, 3, 4}),
                                              LengthSet({3, 4}));
                     }});

    items.push_back({"L({0,1}+{0,3,6,9}) = {2,3,4}, strictly above L+L = {3,4}",
                     [&](Factorizer& fz, std::string&) {
                         return strict_growth(fz, set_c, set_d, LengthSet({2, 3, 4}),
                                              LengthSet({3, 4}));
                     }});

    items.push_back({"L({0,1}+{0,2}) = {2,3}, strictly above L+L = {2}",
                     [&](Factorizer& fz, std::string&) {
                         return strict_growth(fz, set_c, set_e, LengthSet({2, 3}),
                                              LengthSet({2}));
                     }});

    items.push_back({"the short words of both sums run through one big atom",
                     [&](Factorizer& fz, std::string&) {
                         const FinSet atom1{0, 1, 2, 7, 9};
                         const FinSet atom2{0, 1, 4, 6, 7};
                         return fz.is_atom(atom1) && fz.is_atom(atom2) &&
                                sumset(set_a, set_b) == sumset(set_c, atom1) &&
                                sumset(set_c, set_d) == sumset(FinSet{0, 3}, atom2);
                     }});

    items.push_back(
        {"18-element witness: lengths {2,3,4}, 3 words, 7 atom divisors",
         [&](Factorizer& fz, std::string& detail) {
             const std::vector<Factorization> words = fz.factorizations(witness);
             const std::vector<FinSet> atoms = fz.atom_divisors(witness);
             detail = std::to_string(words.size()) + " words, " +
                      std::to_string(atoms.size()) + " atom divisors";
             return fz.length_set(witness) == LengthSet({2, 3, 4}) && words.size() == 3 &&
                    atoms.size() == 7;
         }});

    items.push_back({"gap remainders of the witness at 61",
                     [&](Factorizer& fz, std::string&) {
                         const GapSplitStructure s = gap_split_structure(fz, witness, 61);
                         return s.remainders ==
                                std::vector<FinSet>{FinSet{0, 1, 10, 11}, witness};
                     }});

    items.push_back({"witness + {0,61}: structural route and direct route agree on {3,4,5}",
                     [&](Factorizer& fz, std::string&) {
                         const GapSplitReport r = verify_gap_split(fz, witness, 61);
                         return r.passed() && r.lengths == LengthSet({3, 4, 5});
                     }});

    for (std::size_t index : {std::size_t{1}, std::size_t{2}}) {
        items.push_back({"ladder stage " + std::to_string(index) + " verifies in full",
                         [index](Factorizer& fz, std::string&) {
                             return verify_ladder(fz, build_ladder(index)).passed();
                         }});
    }
    if (include_slow) {
        items.push_back({"ladder stage 3 verifies in full",
                         [](Factorizer& fz, std::string&) {
                             return verify_ladder(fz, build_ladder(3)).passed();
                         }});
    }

    items.push_back({"25 sampled separated sums satisfy all three conclusions",
                     [&](Factorizer& fz, std::string&) {
                         for (const auto& [x, y] : sample_separated_pairs(fz, 20250816, 25))
                             if (!verify_separated_sum(fz, x, y).passed()) return false;
                         return true;
                     }});

    items.push_back({"boundary pairs are rejected for the right reason",
                     [&](Factorizer& fz, std::string&) {
                         const SeparatedSumReport r1 =
                             verify_separated_sum(fz, set_c, set_e);
                         const SeparatedSumReport r2 =
                             verify_separated_sum(fz, set_a, set_b);
                         return r1.failed_precondition() == "gcd(y) > 2*max(x)" &&
                                r2.failed_precondition() == "x relatively cancellative";
                     }});

    items.push_back({"gap split identity for every set within [0,6]",
                     [&](Factorizer& fz, std::string&) {
                         for (const FinSet& x : all_sets_within(6))
                             if (!verify_gap_split(fz, x, 2 * x.max() + 1).passed())
                                 return false;
                         return true;
                     }});

    Factorizer fz = opt.factorizer();
    json results = json::array();
    std::string text;
    bool all_ok = true;
    for (SuiteItem& item : items) {
        std::string detail;
        const bool ok = item.run(fz, detail);
        all_ok = all_ok && ok;
        text += std::string(ok ? "PASS " : "FAIL ") + item.name;
        if (!detail.empty()) text += " [" + detail + "]";
        text += '\n';
        json entry{{"name", item.name}, {"passed", ok}};
        if (!detail.empty()) entry["detail"] = detail;
        results.push_back(std::move(entry));
    }
    text += all_ok ? "all items passed\n" : "some items FAILED\n";
    emit(opt, json{{"items", results}, {"passed", all_ok}}, text);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic of finite 0-containing sets of naturals under sumset addition"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_flag("--json", opt.json_out, "emit JSON instead of text");
    app.add_option("--budget", opt.budget, "search node budget (default 100000000)")
        ->envname("POWMON_BUDGET");

    std::function<int()> action;

    // one string slot per positional keeps the lambdas below readable
    static std::string arg_a, arg_b;
    static std::uint64_t arg_index = 0, arg_n = 0, arg_k = 0, arg_constant = 0;
    static std::uint64_t arg_samples = 0, arg_seed = 0, arg_max_element = 0;
    static std::vector<std::uint64_t> arg_scales, arg_gens;
    static bool flag_verify = false, flag_invariants = false, flag_slow = false;

    const auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    {
        CLI::App* s = sub("sumset", "sumset of two sets");
        s->add_option("A", arg_a, "set literal, e.g. '{0,1,2}'")->required();
        s->add_option("B", arg_b, "set literal")->required();
        s->callback([&] { action = [&] { return cmd_sumset(opt, arg_a, arg_b); }; });
    }
    {
        CLI::App* s = sub("atom", "is the set an atom? (exit 1 when not)");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_atom(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("divisors", "all divisors, shortlex order");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_divisors(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("factorize", "all factorizations into atoms");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_factorize(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("lengthset", "set of factorization lengths");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_lengthset(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("elasticity", "max length / min length");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_elasticity(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("relcanc", "relative cancellativity (exit 1 + witness when not)");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_relcanc(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("relprime", "do the two sets share only the trivial divisor?");
        s->add_option("B", arg_a)->required();
        s->add_option("C", arg_b)->required();
        s->callback([&] { action = [&] { return cmd_relprime(opt, arg_a, arg_b); }; });
    }
    {
        CLI::App* s = sub("gcdcrit",
                          "word-gcd criterion: distinct factorizations share no atom "
                          "(sufficient, not necessary, for cancellativity)");
        s->add_option("A", arg_a)->required();
        s->callback([&] { action = [&] { return cmd_gcdcrit(opt, arg_a); }; });
    }
    {
        CLI::App* s = sub("family", "build (and optionally verify) the ladder family");
        s->add_option("INDEX", arg_index, "top stage")->required();
        s->add_option("--scales", arg_scales, "explicit scales n_1..n_INDEX")
            ->delimiter(',');
        s->add_flag("--verify", flag_verify, "full verification (factorizes S)");
        s->add_flag("--check-invariants", flag_invariants,
                    "structural certificate only (cheap)");
        s->callback([&] {
            action = [&] {
                return cmd_family(opt, arg_index, arg_scales, flag_verify, flag_invariants);
            };
        });
    }
    {
        CLI::App* s = sub("compose", "scale-separated sum x + (2*max(x)+1)*y "
                                     "(both parts must be relatively cancellative)");
        s->add_option("X", arg_a)->required();
        s->add_option("Y", arg_b)->required();
        s->callback([&] { action = [&] { return cmd_compose(opt, arg_a, arg_b); }; });
    }
    {
        CLI::App* s = sub("generators",
                          "compose CONSTANT copies of {0,1} with one ladder top per "
                          "generator; length set {CONSTANT} + sum of {2,g}");
        s->add_option("CONSTANT", arg_constant)->required();
        s->add_option("GENERATORS", arg_gens, "comma-separated, each >= 3")
            ->delimiter(',');
        s->add_flag("--verify", flag_verify, "factorize the result and compare");
        s->callback([&] {
            action = [&] { return cmd_generators(opt, arg_constant, arg_gens, flag_verify); };
        });
    }
    {
        CLI::App* s = sub("interval", "a set whose length set is {K, K+1, K+2}");
        s->add_option("K", arg_k, "interval start, >= 2")->required();
        s->add_flag("--verify", flag_verify, "factorize the result and compare");
        s->callback([&] { action = [&] { return cmd_interval(opt, arg_k, flag_verify); }; });
    }
    {
        CLI::App* s = sub("construct-elasticity", "a set with the given elasticity");
        s->add_option("Q", arg_a, "rational >= 1, e.g. 3/2")->required();
        s->add_flag("--verify", flag_verify, "factorize the result and compare");
        s->callback([&] {
            action = [&] { return cmd_construct_elasticity(opt, arg_a, flag_verify); };
        });
    }
    {
        CLI::App* s = sub("prop36", "split structure of x + {0,n} for n > 2*max(x)");
        s->add_option("X", arg_a)->required();
        s->add_option("N", arg_n)->required();
        s->add_flag("--verify", flag_verify, "check the structure against a direct "
                                             "factorization of x + {0,n}");
        s->callback([&] { action = [&] { return cmd_prop36(opt, arg_a, arg_n, flag_verify); }; });
    }
    {
        CLI::App* s = sub("verify-paper", "run the bundled verification suite");
        s->add_flag("--include-slow", flag_slow, "also verify ladder stage 3");
        s->callback([&] { action = [&] { return cmd_verify_paper(opt, flag_slow); }; });
    }
    {
        CLI::App* s = sub("density", "share of atoms among sets within [0, MAX]");
        s->add_option("MAX", arg_max_element, "largest allowed element")->required();
        s->add_option("--samples", arg_samples,
                      "sample this many random sets instead of scanning all "
                      "(required beyond MAX = 20)");
        s->add_option("--seed", arg_seed, "sampling seed (default 0)");
        s->callback([&] {
            action = [&] { return cmd_density(opt, arg_max_element, arg_samples, arg_seed); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
