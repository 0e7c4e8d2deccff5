// manybody.cpp -- log-domain asymptotics for correlated N-qubit media.
#include "ssot/manybody.hpp"

#include <cmath>
#include <stdexcept>

#include "ssot/logmath.hpp"
#include "ssot/parallel.hpp"

namespace ssot {

namespace {

void check_cutoff(std::size_t n, std::size_t k) {
    if (n < 1) throw std::invalid_argument("correlated ensemble: N must be at least 1");
    if (k > n) throw std::invalid_argument("correlated ensemble: cutoff k exceeds N");
}

// ln sum_{m<=k} C(N,m) e^{-m x} and ln sum_{m<=k} m C(N,m) e^{-m x}.
double log_weight_sum(std::size_t n, std::size_t k, double x, bool weight_by_m) {
    std::vector<double> terms;
    terms.reserve(k + 1);
    for (std::size_t m = weight_by_m ? 1 : 0; m <= k; ++m) {
        double t = log_choose(n, m) - double(m) * x;
        if (weight_by_m) t += std::log(double(m));
        terms.push_back(t);
    }
    return log_sum_exp(terms);
}

} // namespace

double log_restricted_partition(std::size_t n, std::size_t k, double beta, double omega) {
    check_cutoff(n, k);
    if (!(beta > 0.0) || !(omega > 0.0))
        throw std::domain_error("log_restricted_partition: beta and omega must be positive");
    return log_weight_sum(n, k, beta * omega, false);
}

double local_pk(std::size_t n, std::size_t k, double beta_omega) {
    check_cutoff(n, k);
    if (k == 0) return 0.0;
    const double log_num = log_weight_sum(n, k, beta_omega, true);
    const double log_den = log_weight_sum(n, k, beta_omega, false);
    return std::exp(log_num - log_den) / double(n);
}

StateFunctionals correlated_functionals(std::size_t n, std::size_t k, double omega, double t) {
    if (!(t > 0.0)) throw std::domain_error("correlated_functionals: temperature must be positive");
    const double beta = 1.0 / t;
    const double log_z = log_restricted_partition(n, k, beta, omega);
    const double energy = double(n) * local_pk(n, k, beta * omega) * omega;
    const double entropy = log_z + beta * energy;
    return {energy, entropy, energy - t * entropy};
}

double log_binomial_tail(std::size_t n, std::size_t k, double p) {
    check_cutoff(n, k);
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("log_binomial_tail: p must lie in (0, 1)");
    std::vector<double> terms;
    terms.reserve(k + 1);
    for (std::size_t m = 0; m <= k; ++m)
        terms.push_back(log_choose(n, m) + double(m) * std::log(p) +
                        double(n - m) * std::log1p(-p));
    return log_sum_exp(terms);
}

double binomial_tail_exact(std::size_t n, std::size_t k, double p) {
    return std::exp(log_binomial_tail(n, k, p));
}

TailBounds binomial_tail_bounds(std::size_t n, std::size_t k, double p) {
    check_cutoff(n, k);
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("binomial_tail_bounds: p must lie in (0, 1)");
    const double q = double(k) / double(n);
    if (!(q > 0.0) || !(q < p))
        throw std::domain_error("binomial_tail_bounds: bounds require 0 < k/N < p");
    const double d = binary_relative_entropy(q, p);
    const double upper = std::exp(-double(n) * d);
    const double lower = upper / std::sqrt(8.0 * double(n) * q * (1.0 - q));
    return {lower, upper};
}

double correlations_per_particle(std::size_t n, std::size_t k, double beta, double omega) {
    if (!(beta > 0.0)) throw std::domain_error("correlations_per_particle: beta must be positive");
    const StateFunctionals f = correlated_functionals(n, k, omega, 1.0 / beta);
    const double pk = local_pk(n, k, beta * omega);
    return binary_entropy(pk) - f.entropy / double(n);
}

ManyBodyCycleResult manybody_cycle(std::size_t n, std::size_t k, std::size_t l, double omega,
                                   double t_hot, double t_cold) {
    if (n < 2)
        throw std::domain_error("manybody_cycle: at least two particles are needed for a cycle");
    if (!(k >= 1 && k < l && l <= n))
        throw std::invalid_argument("manybody_cycle: cutoffs must satisfy 1 <= k < l <= N");
    if (!(t_cold > 0.0) || !(t_hot > t_cold))
        throw std::domain_error("manybody_cycle: need T_hot > T_cold > 0");
    if (!(omega > 0.0)) throw std::domain_error("manybody_cycle: omega must be positive");

    const StateFunctionals a = correlated_functionals(n, k, omega, t_hot);
    const StateFunctionals b = correlated_functionals(n, l, omega, t_hot);
    const StateFunctionals c = correlated_functionals(n, l, omega, t_cold);
    const StateFunctionals d = correlated_functionals(n, k, omega, t_cold);

    CycleReport r;
    r.eta_carnot = carnot_efficiency(t_hot, t_cold);
    const double w_ab = a.free_energy - b.free_energy;
    const double w_cd = c.free_energy - d.free_energy;
    r.strokes = {
        {"AB", t_hot, w_ab, b.energy - a.energy, (b.energy - a.energy) + w_ab},
        {"BC", t_cold, 0.0, c.energy - b.energy, c.energy - b.energy},
        {"CD", t_cold, w_cd, d.energy - c.energy, (d.energy - c.energy) + w_cd},
        {"DA", t_hot, 0.0, a.energy - d.energy, a.energy - d.energy},
    };
    r.w_cycle = w_ab + w_cd;
    r.q_hot = r.strokes[0].heat_absorbed + r.strokes[3].heat_absorbed;
    r.q_cold = -(r.strokes[1].heat_absorbed + r.strokes[2].heat_absorbed);
    r.eta = (r.q_hot != 0.0) ? r.w_cycle / r.q_hot : 0.0;
    r.q_irr_bc = b.energy - c.energy;
    r.q_irr_da = a.energy - d.energy;
    return {r, r.w_cycle / double(n)};
}

std::vector<ScanRow> convergence_scan(const std::vector<std::size_t>& ns, double q, double r,
                                      double omega, double t_hot, double t_cold,
                                      unsigned threads) {
    if (!(q > 0.0 && q < r && r <= 1.0))
        throw std::domain_error("convergence_scan: need 0 < q < r <= 1");
    const double p_hot = std::exp(-omega / t_hot) / (1.0 + std::exp(-omega / t_hot));
    const double p_cold = std::exp(-omega / t_cold) / (1.0 + std::exp(-omega / t_cold));
    if (!(r < std::min(p_hot, p_cold)))
        throw std::domain_error("convergence_scan: r must stay below both thermal occupations");

    std::vector<ScanRow> rows(ns.size());
    parallel_for(ns.size(), threads, [&](std::size_t i) {
        const std::size_t n = ns[i];
        // floor(q*N) with a nudge against representation error; clamp so the
        // smallest sizes still give an admissible k < l pair.
        std::size_t k = std::size_t(std::floor(q * double(n) + 1e-9));
        if (k < 1) k = 1;
        std::size_t l = std::size_t(std::floor(r * double(n) + 1e-9));
        if (l < k + 1) l = k + 1;
        if (l > n)
            throw std::domain_error("convergence_scan: N too small for the requested cutoffs");
        const ManyBodyCycleResult res = manybody_cycle(n, k, l, omega, t_hot, t_cold);
        rows[i] = {n,
                   k,
                   l,
                   res.report.eta,
                   res.report.eta_carnot,
                   res.w_per_particle,
                   correlations_per_particle(n, k, 1.0 / t_hot, omega)};
    });
    return rows;
}

double local_free_energy(double q, double beta, double omega) {
    if (!(beta > 0.0)) throw std::domain_error("local_free_energy: beta must be positive");
    return q * omega - binary_entropy(q) / beta;
}

} // namespace ssot
