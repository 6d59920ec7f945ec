#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace powmon {

/// Nonnegative rational in lowest terms.  Small value type used for
/// elasticities; comparisons cross-multiply in 128 bits, so they never
/// overflow for ratios of 64-bit values.
class Rational {
public:
    Rational() = default; // 1/1

    /// Reduces num/den.  den == 0 is a DomainError.
    Rational(std::uint64_t num, std::uint64_t den);

    /// Accepts "p" or "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string render() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 1;
};

} // namespace powmon
