#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace powmon {

/// A finite set of nonnegative integers containing 0 — one element of the
/// reduced power monoid of the naturals under sumset addition.  {0} is the
/// identity.
///
/// Values are immutable and canonically stored as a strictly increasing
/// element vector.  While max() stays below bit_block_threshold() a 64-bit
/// block image is kept alongside for constant-time membership tests.
class FinSet {
public:
    /// The identity {0}.
    FinSet();

    /// Normalizing constructor: sorts, removes duplicates, and requires 0
    /// to be present (InvalidSetError otherwise).
    FinSet(std::initializer_list<std::uint64_t> elems);

    /// Same normalization as the initializer-list constructor.
    static FinSet from_elements(std::vector<std::uint64_t> elems);

    /// Reads "{0,1,4}" with optional whitespace between tokens.  Duplicates
    /// collapse; an empty literal or one without 0 is rejected.
    static FinSet parse(std::string_view text);

    const std::vector<std::uint64_t>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    std::uint64_t max() const noexcept { return elems_.back(); }
    bool contains(std::uint64_t value) const noexcept;
    bool is_identity() const noexcept { return elems_.size() == 1; }

    bool has_bit_blocks() const noexcept { return !blocks_.empty(); }
    /// Bit image, one bit per integer in [0, max()]; empty when max() is at
    /// or above the threshold.
    const std::vector<std::uint64_t>& bit_blocks() const noexcept { return blocks_; }

    /// Canonical "{a,b,c}" form; parse(render()) round-trips.
    std::string render() const;

    friend bool operator==(const FinSet& a, const FinSet& b) noexcept {
        return a.elems_ == b.elems_;
    }

    static std::uint64_t bit_block_threshold() noexcept;
    /// Applies to sets constructed afterwards; existing values are unchanged.
    static void set_bit_block_threshold(std::uint64_t threshold) noexcept;

private:
    struct Trusted {};
    FinSet(std::vector<std::uint64_t> sorted_unique, Trusted);

    void build_blocks();

    std::vector<std::uint64_t> elems_;
    std::vector<std::uint64_t> blocks_;

    friend FinSet sumset(const FinSet&, const FinSet&);
    friend FinSet dilate(const FinSet&, std::uint64_t);
    friend FinSet set_union(const FinSet&, const FinSet&);
    friend FinSet set_union_shifted(const FinSet&, const FinSet&, std::uint64_t);
};

/// a + b = { x + y : x in a, y in b }.  Throws OverflowError if any sum
/// would wrap 64 bits.
FinSet sumset(const FinSet& a, const FinSet& b);

/// factor * a, elementwise.  factor must be >= 1.
FinSet dilate(const FinSet& a, std::uint64_t factor);

/// Plain set union (both arguments contain 0, so the result does too).
FinSet set_union(const FinSet& a, const FinSet& b);

/// a ∪ (offset + b).  Only a needs to contribute the 0.
FinSet set_union_shifted(const FinSet& a, const FinSet& b, std::uint64_t offset);

/// gcd of all elements; 0 for the identity {0}.
std::uint64_t set_gcd(const FinSet& a);

/// Order by cardinality first, then lexicographically on the element
/// sequence.  This is the library's canonical order on sets: witness
/// selection and every sorted listing use it.
bool shortlex_less(const FinSet& a, const FinSet& b) noexcept;

/// Order by largest element first, then lexicographically.  Canonical
/// order of atoms inside a factorization word.
bool max_lex_less(const FinSet& a, const FinSet& b) noexcept;

/// operator< is shortlex, so ordered containers agree with the canonical
/// listings everywhere.
inline bool operator<(const FinSet& a, const FinSet& b) noexcept {
    return shortlex_less(a, b);
}

inline bool operator!=(const FinSet& a, const FinSet& b) noexcept { return !(a == b); }

} // namespace powmon
