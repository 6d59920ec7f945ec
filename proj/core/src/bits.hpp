#pragma once

// Internal dynamic bitset over [0, capacity).  Just enough operations for
// the sumset and divisor-search kernels; not installed.

#include <bit>
#include <cstdint>
#include <vector>

namespace powmon::detail {

class Bits {
public:
    Bits() = default;

    explicit Bits(std::uint64_t capacity)
        : nbits_(capacity), words_((capacity + 63) / 64, 0) {}

    static Bits from_elements(const std::vector<std::uint64_t>& elems, std::uint64_t capacity) {
        Bits b(capacity);
        for (std::uint64_t e : elems) b.set(e);
        return b;
    }

    std::uint64_t capacity() const noexcept { return nbits_; }

    void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::uint64_t i) const noexcept {
        if (i >= nbits_) return false;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    /// *this &= (src >> shift), i.e. keep bit i only if src has bit i+shift.
    void and_shifted_down(const Bits& src, std::uint64_t shift) noexcept {
        const std::uint64_t word_shift = shift >> 6;
        const unsigned bit_shift = static_cast<unsigned>(shift & 63);
        const std::size_t n = words_.size();
        const std::size_t m = src.words_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + word_shift;
            std::uint64_t lo = j < m ? src.words_[j] : 0;
            std::uint64_t hi = (bit_shift && j + 1 < m) ? src.words_[j + 1] : 0;
            const std::uint64_t shifted =
                bit_shift ? (lo >> bit_shift) | (hi << (64 - bit_shift)) : lo;
            words_[i] &= shifted;
        }
    }

    /// *this |= (src << shift).  Bits pushed past capacity() are dropped;
    /// callers size the target so nothing real is lost.
    void or_shifted_up(const Bits& src, std::uint64_t shift) noexcept {
        const std::uint64_t word_shift = shift >> 6;
        const unsigned bit_shift = static_cast<unsigned>(shift & 63);
        const std::size_t n = words_.size();
        const std::size_t m = src.words_.size();
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t i = j + word_shift;
            if (i >= n) break;
            if (bit_shift == 0) {
                words_[i] |= src.words_[j];
            } else {
                words_[i] |= src.words_[j] << bit_shift;
                if (i + 1 < n) words_[i + 1] |= src.words_[j] >> (64 - bit_shift);
            }
        }
    }

    bool operator==(const Bits& other) const noexcept { return words_ == other.words_; }

    bool contains_all(const Bits& other) const noexcept {
        const std::size_t m = other.words_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t w = i < words_.size() ? words_[i] : 0;
            if ((other.words_[i] & ~w) != 0) return false;
        }
        return true;
    }

    /// Smallest bit set in (other & ~*this); UINT64_MAX when covered.
    std::uint64_t first_uncovered(const Bits& other) const noexcept {
        const std::size_t m = other.words_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t w = i < words_.size() ? words_[i] : 0;
            const std::uint64_t missing = other.words_[i] & ~w;
            if (missing != 0)
                return (static_cast<std::uint64_t>(i) << 6) +
                       static_cast<std::uint64_t>(std::countr_zero(missing));
        }
        return UINT64_MAX;
    }

    /// True when no bit other than possibly bit 0 is set.
    bool none_beyond_zero() const noexcept {
        if (words_.empty()) return true;
        if ((words_[0] & ~std::uint64_t{1}) != 0) return false;
        for (std::size_t i = 1; i < words_.size(); ++i)
            if (words_[i] != 0) return false;
        return true;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::vector<std::uint64_t> to_elements() const {
        std::vector<std::uint64_t> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                const unsigned b = static_cast<unsigned>(std::countr_zero(w));
                out.push_back((static_cast<std::uint64_t>(i) << 6) + b);
                w &= w - 1;
            }
        }
        return out;
    }

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace powmon::detail
