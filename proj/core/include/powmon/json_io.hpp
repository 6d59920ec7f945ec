#pragma once

#include <string>

#include "json.hpp"

#include "powmon/cancellativity.hpp"
#include "powmon/constructors.hpp"
#include "powmon/factorization.hpp"
#include "powmon/finset.hpp"
#include "powmon/rational.hpp"

// JSON forms used on the wire by the command-line tool:
//   set            {"elements":[0,1,4]}
//   factorization  {"word":[{"elements":[...]}, ...]}
//   length set     {"lengths":[2,3]}
//   rational       {"num":3,"den":2}
// plus structured report objects assembled below.

namespace powmon {

inline void to_json(nlohmann::json& j, const FinSet& s) {
    j = nlohmann::json{{"elements", s.elements()}};
}

inline void to_json(nlohmann::json& j, const Factorization& w) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const FinSet& atom : w.atoms()) atoms.push_back(atom);
    j = nlohmann::json{{"word", std::move(atoms)}};
}

inline void to_json(nlohmann::json& j, const LengthSet& l) {
    j = nlohmann::json{{"lengths", l.lengths()}};
}

inline void to_json(nlohmann::json& j, const Rational& q) {
    j = nlohmann::json{{"num", q.num()}, {"den", q.den()}};
}

inline void to_json(nlohmann::json& j, const RelCancWitness& w) {
    j = nlohmann::json{{"b", w.b}, {"c", w.c}, {"d", w.d}};
}

inline void to_json(nlohmann::json& j, const SeparatedSumReport& r) {
    j = nlohmann::json{
        {"preconditions",
         {{"x_relcanc", r.x_cancellative},
          {"y_relcanc", r.y_cancellative},
          {"gcd_bound", r.gcd_separated}}},
        {"conclusions",
         {{"relcanc", r.sum_cancellative},
          {"z_product", r.z_product},
          {"l_additivity", r.l_additive}}},
    };
    if (r.sum_witness)
        j["witness"] = *r.sum_witness;
    else
        j["witness"] = nullptr;
    if (r.preconditions_hold()) {
        j["lengths"] = r.sum_lengths;
        j["expected_lengths"] = r.expected_lengths;
    }
}

inline void to_json(nlohmann::json& j, const CheckItem& item) {
    j = nlohmann::json{{"name", item.name}, {"passed", item.passed}};
    if (!item.detail.empty()) j["detail"] = item.detail;
}

inline void to_json(nlohmann::json& j, const FamilyReport& r) {
    j = nlohmann::json{{"index", r.index}, {"passed", r.passed()}, {"checks", r.items}};
    if (!r.note.empty()) j["note"] = r.note;
}

inline void to_json(nlohmann::json& j, const LadderFamily& fam) {
    const auto render_stage = [](const std::vector<FinSet>& v) {
        nlohmann::json out = nlohmann::json::array();
        for (const FinSet& s : v) out.push_back(s);
        return out;
    };
    j = nlohmann::json{{"i", fam.index},
                       {"n", fam.n},
                       {"A", render_stage(fam.a)},
                       {"B", render_stage(fam.b)},
                       {"C", render_stage(fam.c)},
                       {"D", render_stage(fam.d)},
                       {"S", render_stage(fam.s)}};
}

inline void to_json(nlohmann::json& j, const GapSplitStructure& s) {
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& [a, c, d] : s.triples)
        triples.push_back(nlohmann::json{{"A", a}, {"C", c}, {"D", d}});
    j = nlohmann::json{{"x", s.x},
                       {"n", s.n},
                       {"triples", std::move(triples)},
                       {"remainders", s.remainders}};
}

inline void to_json(nlohmann::json& j, const GapSplitReport& r) {
    j = nlohmann::json{{"z_identity", r.z_identity},
                       {"l_identity", r.l_identity},
                       {"lengths", r.lengths},
                       {"triples", r.triple_count},
                       {"remainders", r.remainder_count},
                       {"passed", r.passed()}};
}

} // namespace powmon
