#include "powmon/factorization.hpp"

#include <algorithm>

#include "powmon/errors.hpp"

namespace powmon {

Factorization::Factorization(std::vector<FinSet> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end(), max_lex_less);
}

FinSet Factorization::sum() const {
    FinSet acc;
    for (const FinSet& atom : atoms_) acc = sumset(acc, atom);
    return acc;
}

Factorization Factorization::with(const FinSet& atom) const {
    Factorization out = *this;
    const auto pos =
        std::upper_bound(out.atoms_.begin(), out.atoms_.end(), atom, max_lex_less);
    out.atoms_.insert(pos, atom);
    return out;
}

Factorization Factorization::concat(const Factorization& other) const {
    std::vector<FinSet> all = atoms_;
    all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
    return Factorization(std::move(all));
}

std::string Factorization::render() const {
    if (atoms_.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out += '+';
        out += atoms_[i].render();
    }
    return out;
}

bool operator<(const Factorization& a, const Factorization& b) noexcept {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.atoms_[i] != b.atoms_[i])
            return max_lex_less(a.atoms_[i], b.atoms_[i]);
    }
    return false;
}

Factorization fact_gcd(const Factorization& a, const Factorization& b) {
    // Both words are sorted by the same order, so multiset intersection is
    // a single linear sweep.
    std::vector<FinSet> common;
    std::size_t i = 0, j = 0;
    while (i < a.length() && j < b.length()) {
        const FinSet& x = a.atoms()[i];
        const FinSet& y = b.atoms()[j];
        if (x == y) {
            common.push_back(x);
            ++i;
            ++j;
        } else if (max_lex_less(x, y)) {
            ++i;
        } else {
            ++j;
        }
    }
    return Factorization(std::move(common));
}

LengthSet::LengthSet(std::vector<std::uint64_t> lengths) : lengths_(std::move(lengths)) {
    std::sort(lengths_.begin(), lengths_.end());
    lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
}

bool LengthSet::contains(std::uint64_t length) const noexcept {
    return std::binary_search(lengths_.begin(), lengths_.end(), length);
}

Rational LengthSet::elasticity() const {
    if (lengths_.empty() || lengths_.front() == 0) return Rational(1, 1);
    return Rational(lengths_.back(), lengths_.front());
}

LengthSet LengthSet::shifted(std::uint64_t delta) const {
    std::vector<std::uint64_t> out;
    out.reserve(lengths_.size());
    for (std::uint64_t l : lengths_) out.push_back(l + delta);
    return LengthSet(std::move(out));
}

std::string LengthSet::render() const {
    std::string out = "{";
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lengths_[i]);
    }
    out += '}';
    return out;
}

LengthSet length_sum(const LengthSet& a, const LengthSet& b) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size() * b.size());
    for (std::uint64_t u : a.lengths())
        for (std::uint64_t v : b.lengths()) out.push_back(u + v);
    return LengthSet(std::move(out));
}

LengthSet length_union(const LengthSet& a, const LengthSet& b) {
    std::vector<std::uint64_t> out = a.lengths();
    out.insert(out.end(), b.lengths().begin(), b.lengths().end());
    return LengthSet(std::move(out));
}

} // namespace powmon
