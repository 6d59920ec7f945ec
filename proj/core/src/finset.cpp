#include "powmon/finset.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <queue>
#include <tuple>

#include "powmon/errors.hpp"
#include "bits.hpp"

namespace powmon {

namespace {

std::atomic<std::uint64_t> g_bit_block_threshold{4096};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("element sum exceeds 64 bits");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("element product exceeds 64 bits");
    return r;
}

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> elems) {
    if (elems.empty()) throw InvalidSetError("a set must be nonempty and contain 0");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.front() != 0) throw InvalidSetError("a set must contain 0");
    return elems;
}

} // namespace

FinSet::FinSet() : elems_{0} { build_blocks(); }

FinSet::FinSet(std::initializer_list<std::uint64_t> elems)
    : elems_(normalized(std::vector<std::uint64_t>(elems))) {
    build_blocks();
}

FinSet::FinSet(std::vector<std::uint64_t> sorted_unique, Trusted)
    : elems_(std::move(sorted_unique)) {
    build_blocks();
}

FinSet FinSet::from_elements(std::vector<std::uint64_t> elems) {
    FinSet s(normalized(std::move(elems)), Trusted{});
    return s;
}

void FinSet::build_blocks() {
    if (elems_.back() < g_bit_block_threshold.load(std::memory_order_relaxed)) {
        blocks_.assign((elems_.back() + 64) / 64, 0);
        for (std::uint64_t e : elems_) blocks_[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
}

bool FinSet::contains(std::uint64_t value) const noexcept {
    if (!blocks_.empty()) {
        if (value > elems_.back()) return false;
        return (blocks_[value >> 6] >> (value & 63)) & 1;
    }
    return std::binary_search(elems_.begin(), elems_.end(), value);
}

FinSet FinSet::parse(std::string_view text) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '{')
        throw ParseError("set literal must start with '{': '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint64_t> elems;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
        throw InvalidSetError("empty set literal; every set contains 0");
    }
    while (true) {
        skip_ws();
        const std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (start == i)
            throw ParseError("expected a nonnegative integer in set literal: '" +
                             std::string(text) + "'");
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
        if (ec == std::errc::result_out_of_range)
            throw OverflowError("set element does not fit in 64 bits");
        if (ec != std::errc() || ptr != text.data() + i)
            throw ParseError("bad integer in set literal");
        elems.push_back(value);
        skip_ws();
        if (i >= text.size())
            throw ParseError("unterminated set literal: '" + std::string(text) + "'");
        if (text[i] == ',') {
            ++i;
            continue;
        }
        if (text[i] == '}') {
            ++i;
            break;
        }
        throw ParseError("unexpected character in set literal: '" + std::string(text) + "'");
    }
    skip_ws();
    if (i != text.size())
        throw ParseError("trailing characters after set literal: '" + std::string(text) + "'");
    return from_elements(std::move(elems));
}

std::string FinSet::render() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    out += '}';
    return out;
}

std::uint64_t FinSet::bit_block_threshold() noexcept {
    return g_bit_block_threshold.load(std::memory_order_relaxed);
}

void FinSet::set_bit_block_threshold(std::uint64_t threshold) noexcept {
    g_bit_block_threshold.store(threshold, std::memory_order_relaxed);
}

// Largest result for which sumset materializes bit vectors.  2^22 bits is
// half a megabyte of scratch; results spread wider than that fall back to
// the merge, which never allocates proportionally to max().
constexpr std::uint64_t kDenseSumsetLimit = std::uint64_t{1} << 22;

FinSet sumset(const FinSet& a, const FinSet& b) {
    const std::uint64_t result_max = checked_add(a.max(), b.max());

    // Fast path: the result is narrow enough to live in a bit vector, so
    // the sum is a union of shifted copies of the larger operand's image.
    const FinSet* small = a.size() <= b.size() ? &a : &b;
    const FinSet* large = a.size() <= b.size() ? &b : &a;
    if (result_max < kDenseSumsetLimit) {
        detail::Bits src = detail::Bits::from_elements(large->elements(), large->max() + 1);
        detail::Bits acc(result_max + 1);
        for (std::uint64_t x : small->elements()) acc.or_shifted_up(src, x);
        return FinSet(acc.to_elements(), FinSet::Trusted{});
    }

    // Merge path: |b| ascending streams (a shifted by each element of b),
    // combined through a min-heap, duplicates dropped on the fly.
    using Entry = std::tuple<std::uint64_t, std::size_t, std::size_t>; // value, ai, bi
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    const auto& av = a.elements();
    const auto& bv = b.elements();
    for (std::size_t j = 0; j < bv.size(); ++j)
        heap.emplace(checked_add(av[0], bv[j]), std::size_t{0}, j);
    std::vector<std::uint64_t> out;
    while (!heap.empty()) {
        auto [value, ai, bi] = heap.top();
        heap.pop();
        if (out.empty() || out.back() != value) out.push_back(value);
        if (ai + 1 < av.size()) heap.emplace(checked_add(av[ai + 1], bv[bi]), ai + 1, bi);
    }
    return FinSet(std::move(out), FinSet::Trusted{});
}

FinSet dilate(const FinSet& a, std::uint64_t factor) {
    if (factor == 0) throw DomainError("dilation factor must be >= 1");
    std::vector<std::uint64_t> out;
    out.reserve(a.size());
    for (std::uint64_t e : a.elements()) out.push_back(checked_mul(e, factor));
    return FinSet(std::move(out), FinSet::Trusted{});
}

FinSet set_union(const FinSet& a, const FinSet& b) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                   b.elements().end(), std::back_inserter(out));
    return FinSet(std::move(out), FinSet::Trusted{});
}

FinSet set_union_shifted(const FinSet& a, const FinSet& b, std::uint64_t offset) {
    std::vector<std::uint64_t> shifted;
    shifted.reserve(b.size());
    for (std::uint64_t e : b.elements()) shifted.push_back(checked_add(e, offset));
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + shifted.size());
    std::set_union(a.elements().begin(), a.elements().end(), shifted.begin(), shifted.end(),
                   std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return FinSet(std::move(out), FinSet::Trusted{});
}

std::uint64_t set_gcd(const FinSet& a) {
    std::uint64_t g = 0;
    for (std::uint64_t e : a.elements()) g = std::gcd(g, e);
    return g;
}

bool shortlex_less(const FinSet& a, const FinSet& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
}

bool max_lex_less(const FinSet& a, const FinSet& b) noexcept {
    if (a.max() != b.max()) return a.max() < b.max();
    return a.elements() < b.elements();
}

} // namespace powmon
