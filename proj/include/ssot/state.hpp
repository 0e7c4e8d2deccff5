// state.hpp -- classical (block-diagonal) states over a Hamiltonian basis.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssot/spectrum.hpp"

namespace ssot {

// Populations below this threshold are treated as outside the support.
inline constexpr double support_tolerance = 1e-12;
// |sum(p) - 1| allowed at construction.
inline constexpr double normalization_tolerance = 1e-9;

// A state diagonal in the energy eigenbasis: one population per flat basis
// state of the spectrum it was validated against.
class BlockDiagonalState {
public:
    BlockDiagonalState(const HamiltonianSpectrum& h, std::vector<double> populations)
        : populations_(std::move(populations)) {
        if (populations_.size() != h.dimension())
            throw std::invalid_argument("state: expected " + std::to_string(h.dimension()) +
                                        " populations, got " +
                                        std::to_string(populations_.size()));
        double total = 0.0;
        for (std::size_t i = 0; i < populations_.size(); ++i) {
            if (!(populations_[i] >= 0.0) || !std::isfinite(populations_[i]))
                throw std::invalid_argument("state: population " + std::to_string(i) +
                                            " is negative or not finite");
            total += populations_[i];
        }
        if (std::abs(total - 1.0) > normalization_tolerance)
            throw std::invalid_argument("state: populations sum to " + std::to_string(total) +
                                        ", expected 1 within tolerance");
    }

    const std::vector<double>& populations() const { return populations_; }
    double population(std::size_t b) const { return populations_.at(b); }
    std::size_t dimension() const { return populations_.size(); }

    bool in_support(std::size_t b) const { return populations_.at(b) > support_tolerance; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < populations_.size(); ++i)
            if (populations_[i] > support_tolerance) s.push_back(i);
        return s;
    }

private:
    std::vector<double> populations_;
};

// All population on one basis state.
inline BlockDiagonalState pure_basis_state(const HamiltonianSpectrum& h, std::size_t b) {
    if (b >= h.dimension()) throw std::invalid_argument("pure_basis_state: index out of range");
    std::vector<double> p(h.dimension(), 0.0);
    p[b] = 1.0;
    return BlockDiagonalState(h, p);
}

// Product of two states on the product spectrum built from the same factors.
inline BlockDiagonalState product_state(const BlockDiagonalState& sa, const BlockDiagonalState& sb,
                                        const ProductSpectrum& prod) {
    if (sa.dimension() != prod.dim_a || sb.dimension() != prod.dim_b)
        throw std::invalid_argument("product_state: factor dimensions do not match the product");
    std::vector<double> p(prod.spectrum.dimension(), 0.0);
    for (std::size_t a = 0; a < prod.dim_a; ++a)
        for (std::size_t b = 0; b < prod.dim_b; ++b)
            p[prod.index[a * prod.dim_b + b]] += sa.population(a) * sb.population(b);
    return BlockDiagonalState(prod.spectrum, p);
}

// Embed a state of one clock block into the merged clocked spectrum.
inline BlockDiagonalState embed_clock_block(const BlockDiagonalState& s, const ClockedSpectrum& cs,
                                            int block) {
    const std::vector<std::size_t>& map = (block == 0) ? cs.block0 : cs.block1;
    if (block != 0 && block != 1)
        throw std::invalid_argument("embed_clock_block: clock block must be 0 or 1");
    if (s.dimension() != map.size())
        throw std::invalid_argument("embed_clock_block: state dimension does not match the block");
    std::vector<double> p(cs.spectrum.dimension(), 0.0);
    for (std::size_t b = 0; b < map.size(); ++b) p[map[b]] = s.population(b);
    return BlockDiagonalState(cs.spectrum, p);
}

} // namespace ssot
