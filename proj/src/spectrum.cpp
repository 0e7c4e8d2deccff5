// spectrum.cpp -- merged clocked spectra and tensor products.
#include "ssot/spectrum.hpp"

#include <algorithm>
#include <tuple>

namespace ssot {

namespace {

// A flat basis state of a combined system, remembering where it came from.
struct TaggedState {
    double energy;
    int tag;            // clock block, or unused
    std::size_t origin; // flat index in the source enumeration
};

// Sort tagged states by energy (ties keep enumeration order), group exactly
// equal energies into degenerate levels, and return the levels plus the map
// from each origin index to its merged flat index.
std::pair<std::vector<Level>, std::vector<std::size_t>>
merge_levels(std::vector<TaggedState>& states, std::vector<int>* clock_out) {
    std::stable_sort(states.begin(), states.end(),
                     [](const TaggedState& a, const TaggedState& b) { return a.energy < b.energy; });
    std::vector<Level> levels;
    std::vector<std::size_t> origin_to_flat(states.size());
    if (clock_out) clock_out->resize(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (levels.empty() || states[i].energy != levels.back().energy)
            levels.push_back({states[i].energy, 0});
        ++levels.back().degeneracy;
        origin_to_flat[states[i].origin] = i;
        if (clock_out) (*clock_out)[i] = states[i].tag;
    }
    return {std::move(levels), std::move(origin_to_flat)};
}

} // namespace

ClockedSpectrum extend_with_clock(const HamiltonianSpectrum& h1, const HamiltonianSpectrum& h2) {
    if (h1.dimension() != h2.dimension())
        throw std::invalid_argument("extend_with_clock: blocks must share one system dimension");
    const std::size_t d1 = h1.dimension();
    const std::size_t d2 = h2.dimension();
    std::vector<TaggedState> states;
    states.reserve(d1 + d2);
    for (std::size_t b = 0; b < d1; ++b) states.push_back({h1.basis_energy(b), 0, b});
    for (std::size_t b = 0; b < d2; ++b) states.push_back({h2.basis_energy(b), 1, d1 + b});

    std::vector<int> clock;
    auto [levels, origin_to_flat] = merge_levels(states, &clock);

    ClockedSpectrum cs{HamiltonianSpectrum(std::move(levels)), std::move(clock), {}, {}};
    cs.block0.assign(origin_to_flat.begin(), origin_to_flat.begin() + d1);
    cs.block1.assign(origin_to_flat.begin() + d1, origin_to_flat.end());
    return cs;
}

ProductSpectrum tensor_product(const HamiltonianSpectrum& a, const HamiltonianSpectrum& b) {
    const std::size_t da = a.dimension();
    const std::size_t db = b.dimension();
    const std::vector<double> ea = a.basis_energies();
    const std::vector<double> eb = b.basis_energies();
    std::vector<TaggedState> states;
    states.reserve(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) states.push_back({ea[i] + eb[j], 0, i * db + j});

    auto [levels, origin_to_flat] = merge_levels(states, nullptr);
    return ProductSpectrum{HamiltonianSpectrum(std::move(levels)), std::move(origin_to_flat), da,
                           db};
}

} // namespace ssot
