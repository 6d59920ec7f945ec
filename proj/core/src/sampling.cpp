#include "powmon/sampling.hpp"

#include <random>

#include "powmon/cancellativity.hpp"
#include "powmon/constructors.hpp"
#include "powmon/errors.hpp"

namespace powmon {

std::vector<FinSet> all_sets_within(std::uint64_t max_element) {
    if (max_element >= 62) throw DomainError("subset scan beyond 2^62 sets");
    std::vector<FinSet> out;
    out.reserve(std::size_t{1} << max_element);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << max_element); ++mask) {
        std::vector<std::uint64_t> elems{0};
        for (std::uint64_t v = 1; v <= max_element; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) elems.push_back(v);
        out.push_back(FinSet::from_elements(std::move(elems)));
    }
    return out;
}

namespace {

std::vector<FinSet> atoms_within(Factorizer& fz, std::uint64_t max_element) {
    std::vector<FinSet> out;
    for (const FinSet& s : all_sets_within(max_element))
        if (fz.is_atom(s)) out.push_back(s);
    return out;
}

std::vector<FinSet> cancellative_within(Factorizer& fz, std::uint64_t max_element) {
    std::vector<FinSet> out;
    for (const FinSet& s : all_sets_within(max_element))
        if (!s.is_identity() && is_relatively_cancellative(fz, s)) out.push_back(s);
    return out;
}

} // namespace

std::vector<std::pair<FinSet, FinSet>> sample_separated_pairs(Factorizer& fz,
                                                              std::uint64_t seed,
                                                              std::size_t count) {
    const std::vector<FinSet> atoms = atoms_within(fz, 6);
    const std::vector<FinSet> cancellative = cancellative_within(fz, 6);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_set(0, cancellative.size() - 1);

    std::vector<std::pair<FinSet, FinSet>> out;
    while (out.size() < count) {
        FinSet x = atoms[pick_atom(rng)];
        if (rng() & 1) x = sumset(x, atoms[pick_atom(rng)]);
        if (!is_relatively_cancellative(fz, x)) continue;
        const FinSet& base = cancellative[pick_set(rng)];
        out.emplace_back(x, dilate(base, 2 * x.max() + 1));
    }
    return out;
}

std::vector<std::pair<FinSet, FinSet>> sample_cancellative_pairs(Factorizer& fz,
                                                                 std::uint64_t seed,
                                                                 std::size_t count) {
    std::vector<FinSet> pieces = atoms_within(fz, 4);
    std::mt19937_64 rng(seed);
    const std::size_t atom_count = pieces.size();
    std::uniform_int_distribution<std::size_t> pick_atom(0, atom_count - 1);
    for (int i = 0; i < 8; ++i)
        pieces.push_back(
            compose_sum_unchecked(pieces[pick_atom(rng)], pieces[pick_atom(rng)]));

    std::uniform_int_distribution<std::size_t> pick_piece(0, pieces.size() - 1);
    std::vector<std::pair<FinSet, FinSet>> out;
    out.reserve(count);
    while (out.size() < count)
        out.emplace_back(pieces[pick_piece(rng)], pieces[pick_piece(rng)]);
    return out;
}

} // namespace powmon
