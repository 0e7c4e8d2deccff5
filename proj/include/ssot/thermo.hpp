// thermo.hpp -- single-shot free energies, beta-ordering, and thermo-majorization.
#pragma once

#include <cstddef>
#include <vector>

#include "ssot/spectrum.hpp"
#include "ssot/state.hpp"

namespace ssot {

// Default tolerance for curve-dominance comparisons (absolute, in the
// population coordinate).
inline constexpr double curve_tolerance = 1e-10;
// Relative spread of lambda_i * exp(beta E_i) under which a state counts as
// reversibly extractable (single-shot and average work coincide).
inline constexpr double reversible_tolerance = 1e-9;

struct StateFunctionals {
    double energy = 0.0;
    double entropy = 0.0;      // Shannon entropy of the populations, in nats
    double free_energy = 0.0;  // E - T S
};

// Thermal (Gibbs) state at temperature T > 0.
BlockDiagonalState gibbs_state(const HamiltonianSpectrum& h, double t);

// Thermal populations restricted to a subset of levels (all basis states of
// each listed level), renormalized.  `levels` must be nonempty; duplicates are
// ignored.
BlockDiagonalState restricted_thermal_state(const HamiltonianSpectrum& h,
                                            const std::vector<std::size_t>& levels, double t);

// Thermal populations restricted to an arbitrary set of basis states.
BlockDiagonalState restricted_thermal_state_basis(const HamiltonianSpectrum& h,
                                                  const std::vector<std::size_t>& basis, double t);

// log of the partition function at temperature T.
double log_partition_function(const HamiltonianSpectrum& h, double t);

// Equilibrium free energy -T ln Z.
double thermal_free_energy(const HamiltonianSpectrum& h, double t);

StateFunctionals state_functionals(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                   double t);

// Single-shot free energies: F_0 = -T ln sum_{supp} e^{-beta E_i} (support
// taken per basis state) and F_inf = T max_i ln(lambda_i e^{beta E_i}).
double min_free_energy(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t);
double max_free_energy(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t);

// Deterministic single-shot work of extraction F_0(rho) - F(thermal) and of
// formation F_inf(rho) - F(thermal).
double extractable_work(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t);
double work_of_formation(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t);

// Basis permutation sorting lambda_i e^{beta E_i} in decreasing order.  Ties
// (relative agreement 1e-12 on the log of the key) are broken by increasing
// energy, then by increasing basis index, so a thermal state always maps to
// the identity permutation.
std::vector<std::size_t> beta_order(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                    double t);

// Piecewise-linear concave majorization curve: partial sums of populations in
// beta order against partial sums of e^{-beta E}.  xs is strictly increasing
// and starts at 0; ys starts at 0 and ends at 1.
struct ThermoCurve {
    std::vector<double> xs;
    std::vector<double> ys;

    double evaluate(double x) const;
};

ThermoCurve lorenz_curve(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t);

// True when rho's curve dominates sigma's everywhere (checked at the union of
// breakpoints; both curves are concave piecewise-linear, so that suffices),
// within `tol` in the population coordinate.
bool thermo_majorizes(const BlockDiagonalState& rho, const BlockDiagonalState& sigma,
                      const HamiltonianSpectrum& h, double t, double tol = curve_tolerance);

// True when all supported lambda_i e^{beta E_i} agree to relative tolerance,
// i.e. the state is thermal on its support and extraction is reversible.
bool is_reversible(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t,
                   double rel_tol = reversible_tolerance);

// Relative entropy D(rho || gibbs(h, t)) in nats.
double relative_entropy_to_thermal(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                   double t);

} // namespace ssot
