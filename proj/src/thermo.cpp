// thermo.cpp -- single-shot free energies, beta-ordering, thermo-majorization.
#include "ssot/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "ssot/logmath.hpp"

namespace ssot {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

void check_temperature(double t) {
    if (!(t > 0.0)) throw std::domain_error("temperature must be positive");
}

// Per-basis-state log weights -beta E_i.
std::vector<double> log_weights(const HamiltonianSpectrum& h, double t) {
    std::vector<double> lw = h.basis_energies();
    for (double& e : lw) e = -e / t;
    return lw;
}

// ln(lambda_i) + beta E_i per basis state, -inf off the support.
std::vector<double> log_keys(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                             double t) {
    const std::vector<double> es = h.basis_energies();
    std::vector<double> lk(rho.dimension(), neg_inf);
    for (std::size_t i = 0; i < rho.dimension(); ++i)
        if (rho.in_support(i)) lk[i] = std::log(rho.population(i)) + es[i] / t;
    return lk;
}

} // namespace

BlockDiagonalState gibbs_state(const HamiltonianSpectrum& h, double t) {
    check_temperature(t);
    const std::vector<double> lw = log_weights(h, t);
    const double lz = log_sum_exp(lw);
    std::vector<double> p(lw.size());
    for (std::size_t i = 0; i < lw.size(); ++i) p[i] = std::exp(lw[i] - lz);
    return BlockDiagonalState(h, p);
}

BlockDiagonalState restricted_thermal_state(const HamiltonianSpectrum& h,
                                            const std::vector<std::size_t>& levels, double t) {
    check_temperature(t);
    if (levels.empty())
        throw std::invalid_argument("restricted_thermal_state: empty level subset");
    std::set<std::size_t> uniq(levels.begin(), levels.end());
    std::vector<std::size_t> basis;
    for (std::size_t lvl : uniq) {
        if (lvl >= h.level_count())
            throw std::invalid_argument("restricted_thermal_state: level index out of range");
        for (std::size_t g = 0; g < h.degeneracy(lvl); ++g)
            basis.push_back(h.basis_offset(lvl) + g);
    }
    return restricted_thermal_state_basis(h, basis, t);
}

BlockDiagonalState restricted_thermal_state_basis(const HamiltonianSpectrum& h,
                                                  const std::vector<std::size_t>& basis,
                                                  double t) {
    check_temperature(t);
    if (basis.empty())
        throw std::invalid_argument("restricted_thermal_state: empty basis subset");
    std::set<std::size_t> uniq(basis.begin(), basis.end());
    std::vector<double> lw;
    lw.reserve(uniq.size());
    for (std::size_t b : uniq) {
        if (b >= h.dimension())
            throw std::invalid_argument("restricted_thermal_state: basis index out of range");
        lw.push_back(-h.basis_energy(b) / t);
    }
    const double lz = log_sum_exp(lw);
    std::vector<double> p(h.dimension(), 0.0);
    std::size_t j = 0;
    for (std::size_t b : uniq) p[b] = std::exp(lw[j++] - lz);
    return BlockDiagonalState(h, p);
}

double log_partition_function(const HamiltonianSpectrum& h, double t) {
    check_temperature(t);
    return log_sum_exp(log_weights(h, t));
}

double thermal_free_energy(const HamiltonianSpectrum& h, double t) {
    return -t * log_partition_function(h, t);
}

StateFunctionals state_functionals(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                   double t) {
    check_temperature(t);
    if (rho.dimension() != h.dimension())
        throw std::invalid_argument("state_functionals: state does not match the spectrum");
    const std::vector<double> es = h.basis_energies();
    double e = 0.0, s = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i) {
        e += rho.population(i) * es[i];
        s -= xlogx(rho.population(i));
    }
    return {e, s, e - t * s};
}

double min_free_energy(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t) {
    check_temperature(t);
    const std::vector<double> es = h.basis_energies();
    std::vector<double> lw;
    for (std::size_t i = 0; i < rho.dimension(); ++i)
        if (rho.in_support(i)) lw.push_back(-es[i] / t);
    if (lw.empty()) throw std::domain_error("min_free_energy: state has empty support");
    return -t * log_sum_exp(lw);
}

double max_free_energy(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t) {
    check_temperature(t);
    const std::vector<double> lk = log_keys(rho, h, t);
    double m = neg_inf;
    for (double k : lk) m = std::max(m, k);
    return t * m;
}

double extractable_work(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t) {
    return min_free_energy(rho, h, t) - thermal_free_energy(h, t);
}

double work_of_formation(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t) {
    return max_free_energy(rho, h, t) - thermal_free_energy(h, t);
}

std::vector<std::size_t> beta_order(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                    double t) {
    check_temperature(t);
    const std::vector<double> es = h.basis_energies();
    const std::vector<double> lk = log_keys(rho, h, t);
    std::vector<std::size_t> order(rho.dimension());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lk[a] != lk[b]) return lk[a] > lk[b];
        if (es[a] != es[b]) return es[a] < es[b];
        return a < b;
    });
    // Coalesce runs whose log keys agree with the run head to 1e-12 and
    // re-sort each run by (energy, index): exp(-beta E) * exp(beta E) noise
    // must not scramble the thermal state's identity ordering.
    std::size_t run = 0;
    auto close = [&](double a, double b) {
        return std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= 1e-12;
    };
    for (std::size_t i = 1; i <= order.size(); ++i) {
        if (i < order.size() && close(lk[order[i]], lk[order[run]])) continue;
        std::sort(order.begin() + run, order.begin() + i, [&](std::size_t a, std::size_t b) {
            if (es[a] != es[b]) return es[a] < es[b];
            return a < b;
        });
        run = i;
    }
    return order;
}

double ThermoCurve::evaluate(double x) const {
    if (xs.empty()) throw std::invalid_argument("curve: empty");
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t j = std::size_t(it - xs.begin());
    const double x0 = xs[j - 1], x1 = xs[j];
    const double t = (x - x0) / (x1 - x0);
    return ys[j - 1] + t * (ys[j] - ys[j - 1]);
}

ThermoCurve lorenz_curve(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t) {
    const std::vector<std::size_t> order = beta_order(rho, h, t);
    const std::vector<double> es = h.basis_energies();
    ThermoCurve c;
    c.xs.reserve(order.size() + 1);
    c.ys.reserve(order.size() + 1);
    c.xs.push_back(0.0);
    c.ys.push_back(0.0);
    double x = 0.0, y = 0.0;
    for (std::size_t i : order) {
        x += std::exp(-es[i] / t);
        y += rho.population(i);
        c.xs.push_back(x);
        c.ys.push_back(y);
    }
    return c;
}

bool thermo_majorizes(const BlockDiagonalState& rho, const BlockDiagonalState& sigma,
                      const HamiltonianSpectrum& h, double t, double tol) {
    if (rho.dimension() != sigma.dimension())
        throw std::invalid_argument("thermo_majorizes: states live on different spectra");
    const ThermoCurve ca = lorenz_curve(rho, h, t);
    const ThermoCurve cb = lorenz_curve(sigma, h, t);
    // Both curves are concave piecewise-linear, so dominance at the union of
    // breakpoints is dominance everywhere.
    for (double x : ca.xs)
        if (ca.evaluate(x) < cb.evaluate(x) - tol) return false;
    for (double x : cb.xs)
        if (ca.evaluate(x) < cb.evaluate(x) - tol) return false;
    return true;
}

bool is_reversible(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t,
                   double rel_tol) {
    const std::vector<double> lk = log_keys(rho, h, t);
    double lo = std::numeric_limits<double>::infinity(), hi = neg_inf;
    for (double k : lk) {
        if (!std::isfinite(k)) continue;
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    // Relative spread of the keys equals the spread of their logs to first
    // order; rel_tol is small enough for the two to be interchangeable.
    return hi - lo <= rel_tol;
}

double relative_entropy_to_thermal(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                   double t) {
    check_temperature(t);
    const double lz = log_partition_function(h, t);
    const std::vector<double> es = h.basis_energies();
    double d = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i) {
        const double p = rho.population(i);
        if (p <= 0.0) continue;
        d += p * (std::log(p) + es[i] / t + lz);
    }
    return d;
}

} // namespace ssot
