// spectrum.hpp -- finite Hamiltonian spectra with degeneracies, products, and clock extensions.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssot {

struct Level {
    double energy = 0.0;
    std::size_t degeneracy = 1;
};

// A finite Hamiltonian given by its distinct energy levels in strictly
// increasing order.  Basis states are indexed level-major: level 0 occupies
// flat indices [0, g_0), level 1 the next g_1 slots, and so on.
class HamiltonianSpectrum {
public:
    explicit HamiltonianSpectrum(std::vector<Level> levels) : levels_(std::move(levels)) {
        if (levels_.empty()) throw std::invalid_argument("spectrum: needs at least one level");
        dimension_ = 0;
        offsets_.reserve(levels_.size());
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (levels_[i].degeneracy == 0)
                throw std::invalid_argument("spectrum: level " + std::to_string(i) +
                                            " has zero degeneracy");
            if (i > 0 && !(levels_[i].energy > levels_[i - 1].energy))
                throw std::invalid_argument("spectrum: energies must be strictly increasing");
            offsets_.push_back(dimension_);
            dimension_ += levels_[i].degeneracy;
        }
    }

    static HamiltonianSpectrum qubit(double omega) {
        if (!(omega > 0.0)) throw std::invalid_argument("qubit: level splitting must be positive");
        return HamiltonianSpectrum({{0.0, 1}, {omega, 1}});
    }

    const std::vector<Level>& levels() const { return levels_; }
    std::size_t level_count() const { return levels_.size(); }
    std::size_t dimension() const { return dimension_; }

    double level_energy(std::size_t level) const { return levels_.at(level).energy; }
    std::size_t degeneracy(std::size_t level) const { return levels_.at(level).degeneracy; }
    std::size_t basis_offset(std::size_t level) const { return offsets_.at(level); }

    std::size_t level_of_basis(std::size_t b) const {
        if (b >= dimension_) throw std::out_of_range("spectrum: basis index out of range");
        std::size_t lo = 0, hi = levels_.size();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            (offsets_[mid] <= b ? lo : hi) = mid;
        }
        return lo;
    }

    double basis_energy(std::size_t b) const { return levels_[level_of_basis(b)].energy; }

    // Per-basis-state energies, flattened.
    std::vector<double> basis_energies() const {
        std::vector<double> es;
        es.reserve(dimension_);
        for (const Level& lv : levels_)
            for (std::size_t g = 0; g < lv.degeneracy; ++g) es.push_back(lv.energy);
        return es;
    }

private:
    std::vector<Level> levels_;
    std::vector<std::size_t> offsets_;
    std::size_t dimension_ = 0;
};

// Two Hamiltonians merged onto one fixed spectrum with a two-state clock
// register: H = H1 (x) |0><0| + H2 (x) |1><1|.  block0[b] gives the flat basis
// index in `spectrum` occupied by basis state b of H1 (clock at 0); block1
// does the same for H2 (clock at 1).  Exactly equal energies from the two
// blocks coalesce into one degenerate level; clock[f] tags each merged basis
// state with the block it came from.
struct ClockedSpectrum {
    HamiltonianSpectrum spectrum;
    std::vector<int> clock;
    std::vector<std::size_t> block0;
    std::vector<std::size_t> block1;
};

ClockedSpectrum extend_with_clock(const HamiltonianSpectrum& h1, const HamiltonianSpectrum& h2);

// Tensor product of two spectra.  index[a * dim(B) + b] maps the pair of flat
// basis indices (a, b) to a flat basis index of the product spectrum.  As with
// the clock extension, only exactly equal sums coalesce.
struct ProductSpectrum {
    HamiltonianSpectrum spectrum;
    std::vector<std::size_t> index;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;

    std::size_t pair_index(std::size_t a, std::size_t b) const {
        if (a >= dim_a || b >= dim_b) throw std::out_of_range("product: pair index out of range");
        return index[a * dim_b + b];
    }
};

ProductSpectrum tensor_product(const HamiltonianSpectrum& a, const HamiltonianSpectrum& b);

} // namespace ssot
