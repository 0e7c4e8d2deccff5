// manybody.hpp -- correlated N-qubit working media in the log domain.
#pragma once

#include <cstddef>
#include <vector>

#include "ssot/cycles.hpp"

namespace ssot {

// ln of the restricted partition function Z_k = sum_{m<=k} C(N,m) e^{-m beta omega}
// for N two-level systems with gap omega, keeping excitation numbers up to k.
// Stable for N well beyond 10^6 (log-gamma + log-sum-exp throughout).
double log_restricted_partition(std::size_t n, std::size_t k, double beta, double omega);

// Per-qubit excitation probability of the correlated state supported on
// excitation numbers m <= k with thermal-like weights:
//   p_k = sum_{m<=k} m C(N,m) e^{-m x} / (N sum_{m<=k} C(N,m) e^{-m x}),
// with x = beta*omega.
double local_pk(std::size_t n, std::size_t k, double beta_omega);

// Energy, entropy, free energy of the correlated state at temperature t.
StateFunctionals correlated_functionals(std::size_t n, std::size_t k, double omega, double t);

// Lower tail of the binomial distribution, B = P[Bin(N, p) <= k], exactly and
// through the large-deviation sandwich
//   e^{-N D(q||p)} / sqrt(8 N q (1-q))  <=  B  <=  e^{-N D(q||p)},  q = k/N < p.
// The log variant stays finite where B itself underflows (N ~ 10^5).
double log_binomial_tail(std::size_t n, std::size_t k, double p);
double binomial_tail_exact(std::size_t n, std::size_t k, double p);

struct TailBounds {
    double lower = 0.0;
    double upper = 0.0;
};

TailBounds binomial_tail_bounds(std::size_t n, std::size_t k, double p);

// Total correlations per particle, I/N = h(p_k) - S/N, of the correlated
// state; zero when k = N (product thermal state), positive otherwise.
double correlations_per_particle(std::size_t n, std::size_t k, double beta, double omega);

// Four-stroke cycle whose corners are correlated states with support cutoffs
// k (A, D) and l (B, C) at the two bath temperatures, evaluated entirely in
// the log domain.  Matches nonequilibrium_cycle on the explicit spectrum.
struct ManyBodyCycleResult {
    CycleReport report;
    double w_per_particle = 0.0;
};

ManyBodyCycleResult manybody_cycle(std::size_t n, std::size_t k, std::size_t l, double omega,
                                   double t_hot, double t_cold);

struct ScanRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    double eta = 0.0;
    double eta_carnot = 0.0;
    double w_per_particle = 0.0;
    double corr_per_particle = 0.0;
};

// manybody_cycle across a list of system sizes with cutoff fractions q < r:
// k = floor(q N), l = floor(r N), clamped to the smallest admissible cycle
// (k >= 1, l >= k+1) so small N remain well defined.  Correlations are
// reported for the hot-bath corner state.
std::vector<ScanRow> convergence_scan(const std::vector<std::size_t>& ns, double q, double r,
                                      double omega, double t_hot, double t_cold,
                                      unsigned threads = 1);

// Local (per-particle) free energy f(q, beta) = q*omega - h(q)/beta of an
// uncorrelated qubit with excitation probability q; the scan's W/N converges
// to f(q,b_h) - f(r,b_h) - f(q,b_c) + f(r,b_c).
double local_free_energy(double q, double beta, double omega);

} // namespace ssot
