#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powmon/finset.hpp"
#include "powmon/rational.hpp"

namespace powmon {

/// A factorization: a multiset of atoms whose sumset is the factored set.
/// Stored canonically — atoms sorted by largest element, ties broken
/// lexicographically — so equal multisets compare equal.  The empty word is
/// the (only) factorization of {0}.
class Factorization {
public:
    Factorization() = default;

    explicit Factorization(std::vector<FinSet> atoms);

    const std::vector<FinSet>& atoms() const noexcept { return atoms_; }
    std::size_t length() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }

    /// Sumset of all atoms; {0} for the empty word.
    FinSet sum() const;

    /// This word extended by one more atom.
    Factorization with(const FinSet& atom) const;

    /// Multiset union of two words.
    Factorization concat(const Factorization& other) const;

    /// "{0,1}+{0,3}" — atoms joined by '+'; the empty word prints "(empty)".
    std::string render() const;

    friend bool operator==(const Factorization& a, const Factorization& b) noexcept {
        return a.atoms_ == b.atoms_;
    }
    friend bool operator!=(const Factorization& a, const Factorization& b) noexcept {
        return !(a == b);
    }
    /// Shorter words first, then componentwise by the atom order.
    friend bool operator<(const Factorization& a, const Factorization& b) noexcept;

private:
    std::vector<FinSet> atoms_;
};

/// Greatest common subword: multiset intersection.
Factorization fact_gcd(const Factorization& a, const Factorization& b);

/// The set of factorization lengths of a set.  {0} has length set {0}
/// (the empty word); atoms have {1}; everything else starts at 2.
class LengthSet {
public:
    LengthSet() = default; // empty

    explicit LengthSet(std::vector<std::uint64_t> lengths);

    static LengthSet singleton(std::uint64_t length) { return LengthSet({length}); }

    const std::vector<std::uint64_t>& lengths() const noexcept { return lengths_; }
    bool empty() const noexcept { return lengths_.empty(); }
    std::size_t size() const noexcept { return lengths_.size(); }
    std::uint64_t min() const noexcept { return lengths_.front(); }
    std::uint64_t max() const noexcept { return lengths_.back(); }
    bool contains(std::uint64_t length) const noexcept;

    /// max/min as a reduced fraction; the empty and {0} length sets have
    /// elasticity 1 by convention.
    Rational elasticity() const;

    /// Every length increased by delta.
    LengthSet shifted(std::uint64_t delta) const;

    std::string render() const;

    friend bool operator==(const LengthSet& a, const LengthSet& b) noexcept {
        return a.lengths_ == b.lengths_;
    }
    friend bool operator!=(const LengthSet& a, const LengthSet& b) noexcept {
        return !(a == b);
    }

private:
    std::vector<std::uint64_t> lengths_;
};

/// Elementwise sums { u + v } of two length sets.
LengthSet length_sum(const LengthSet& a, const LengthSet& b);

/// Union of two length sets.
LengthSet length_union(const LengthSet& a, const LengthSet& b);

} // namespace powmon
