#include "powmon/rational.hpp"

#include <charconv>
#include <numeric>

#include "powmon/errors.hpp"

namespace powmon {

namespace {

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw OverflowError("number does not fit in 64 bits: '" + std::string(text) + "'");
    if (ec != std::errc() || ptr != last)
        throw ParseError("expected a nonnegative integer, got '" + std::string(text) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty rational");
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) return Rational(parse_u64(body), 1);
    const std::uint64_t p = parse_u64(trim(body.substr(0, slash)));
    const std::uint64_t q = parse_u64(trim(body.substr(slash + 1)));
    if (q == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string Rational::render() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace powmon
