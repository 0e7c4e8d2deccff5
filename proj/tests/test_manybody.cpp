// test_manybody.cpp -- correlated N-qubit ensembles, tail bounds, and the convergence scan.
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "oracles.hpp"
#include "ssot/cycles.hpp"
#include "ssot/manybody.hpp"
#include "ssot/spectrum.hpp"

using namespace ssot;

namespace {

unsigned long long choose_exact(std::size_t n, std::size_t m) {
    unsigned long long c = 1;
    for (std::size_t i = 0; i < m; ++i) c = c * (n - i) / (i + 1);
    return c;
}

// Collective spectrum of N two-level systems: E = m*omega with multiplicity C(N,m).
HamiltonianSpectrum collective_spectrum(std::size_t n, double omega) {
    std::vector<Level> levels;
    for (std::size_t m = 0; m <= n; ++m)
        levels.push_back({double(m) * omega, std::size_t(choose_exact(n, m))});
    return HamiltonianSpectrum(levels);
}

std::vector<std::size_t> levels_up_to(std::size_t k) {
    std::vector<std::size_t> u;
    for (std::size_t m = 0; m <= k; ++m) u.push_back(m);
    return u;
}

} // namespace

TEST_CASE("restricted partition function matches a direct sum") {
    CHECK(std::abs(log_restricted_partition(2, 1, 1.0, 1.0) - 0.551444713932) <= 1e-11);
    CHECK(std::abs(local_pk(2, 1, 1.0) - 0.211941557617) <= 1e-11);

    // independent arithmetic, no log-gamma anywhere
    const double x = 0.7;
    const double z = 1.0 + 5.0 * std::exp(-x) + 10.0 * std::exp(-2.0 * x) +
                     10.0 * std::exp(-3.0 * x);
    const double num = 5.0 * std::exp(-x) + 20.0 * std::exp(-2.0 * x) +
                       30.0 * std::exp(-3.0 * x);
    CHECK(std::abs(log_restricted_partition(5, 3, 0.7, 1.0) - std::log(z)) <= 1e-12);
    CHECK(std::abs(local_pk(5, 3, 0.7) - num / (5.0 * z)) <= 1e-12);
}

TEST_CASE("local excitation probability spans its closed-form limits") {
    CHECK(local_pk(9, 0, 1.3) == 0.0);
    const double y = std::exp(-0.9);
    CHECK(std::abs(local_pk(7, 7, 0.9) - y / (1.0 + y)) <= 1e-12);
}

TEST_CASE("binomial tail sits inside its large-deviation sandwich") {
    CHECK(std::abs(binomial_tail_exact(100, 20, 0.3) - 0.0164628532419) <= 1e-11);
    const TailBounds b = binomial_tail_bounds(100, 20, 0.3);
    CHECK(std::abs(b.lower - 0.00674317511442) <= 1e-11);
    CHECK(std::abs(b.upper - 0.0762903176021) <= 1e-11);

    for (std::size_t n : {50u, 200u, 1000u}) {
        for (double p : {0.25, 0.3, 0.45}) {
            const std::size_t k = std::size_t(std::floor(0.2 * double(n) + 1e-9));
            const double exact = binomial_tail_exact(n, k, p);
            const TailBounds s = binomial_tail_bounds(n, k, p);
            CHECK(s.lower <= exact * (1.0 + 1e-12));
            CHECK(exact <= s.upper * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("tail rate residual decays with system size") {
    const double p = 0.3, q = 0.2;
    const double d = q * std::log(q / p) + (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
    const double frozen[] = {0.0153343950698, 0.00259482781534, 0.000373378578886,
                             4.88378609854e-05};
    double prev = 1e9;
    std::size_t n = 100;
    for (int i = 0; i < 4; ++i, n *= 10) {
        const double residual = -log_binomial_tail(n, n / 5, p) / double(n) - d;
        CHECK(std::abs(residual - frozen[i]) <= 1e-9);
        CHECK(residual < prev);
        prev = residual;
    }
}

TEST_CASE("correlations are positive below the cutoff and vanish at it") {
    CHECK(std::abs(correlations_per_particle(2, 1, 1.0, 1.0) - 0.0288538394422) <= 1e-11);
    for (std::size_t k : {1u, 3u, 6u}) CHECK(correlations_per_particle(8, k, 0.8, 1.2) > 0.0);
    CHECK(std::abs(correlations_per_particle(8, 8, 0.8, 1.2)) <= 1e-10);
}

TEST_CASE("log-domain cycle matches the explicit collective spectrum") {
    const double omega = 1.0, th = 2.0, tc = 1.0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const HamiltonianSpectrum h = collective_spectrum(n, omega);
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t l = k + 1; l <= n; ++l) {
                const ManyBodyCycleResult res = manybody_cycle(n, k, l, omega, th, tc);
                const CycleReport ref =
                    nonequilibrium_cycle(h, levels_up_to(k), levels_up_to(l), th, tc);
                CHECK(std::abs(res.report.w_cycle - ref.w_cycle) <= 1e-9);
                CHECK(std::abs(res.report.q_hot - ref.q_hot) <= 1e-9);
                CHECK(std::abs(res.report.q_cold - ref.q_cold) <= 1e-9);
                CHECK(std::abs(res.report.eta - ref.eta) <= 1e-9);
                CHECK(std::abs(res.report.q_irr_bc - ref.q_irr_bc) <= 1e-9);
                CHECK(std::abs(res.report.q_irr_da - ref.q_irr_da) <= 1e-9);
                CHECK(std::abs(res.w_per_particle - res.report.w_cycle / double(n)) <= 1e-15);
            }
        }
    }
}

TEST_CASE("convergence scan reproduces the frozen trajectory") {
    const std::vector<std::size_t> ns = {4, 16, 64, 256, 1024, 4096};
    const std::vector<ScanRow> rows = convergence_scan(ns, 0.1, 0.2, 1.0, 2.0, 1.0, 1);
    REQUIRE(rows.size() == 6);

    const std::size_t ks[] = {1, 1, 6, 25, 102, 409};
    const std::size_t ls[] = {2, 3, 12, 51, 204, 819};
    const double etas[] = {0.440339718618, 0.490724661056, 0.493020857505,
                           0.497277578728, 0.499185599723, 0.499784731515};
    const double wpns[] = {0.177620307876, 0.227495784361, 0.167260664158,
                           0.178030379047, 0.174716580797, 0.175475277061};
    const double corrs[] = {0.0704888866669, 0.0411833443245, 0.0198513109546,
                            0.00750664885466, 0.00254106244662, 0.000803706504804};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i].n == ns[i]);
        CHECK(rows[i].k == ks[i]);
        CHECK(rows[i].l == ls[i]);
        CHECK(rows[i].eta_carnot == 0.5);
        CHECK(std::abs(rows[i].eta - etas[i]) <= 1e-9);
        CHECK(std::abs(rows[i].w_per_particle - wpns[i]) <= 1e-9);
        CHECK(std::abs(rows[i].corr_per_particle - corrs[i]) <= 1e-9);
        if (i > 0) {
            CHECK(rows[i].eta > rows[i - 1].eta);
            CHECK(rows[i].corr_per_particle < rows[i - 1].corr_per_particle);
        }
    }

    // the per-particle work converges to the local free-energy difference
    const double df = local_free_energy(0.1, 0.5, 1.0) - local_free_energy(0.2, 0.5, 1.0) +
                      local_free_energy(0.2, 1.0, 1.0) - local_free_energy(0.1, 1.0, 1.0);
    CHECK(std::abs(df - 0.175319450147) <= 1e-11);
    CHECK(std::abs(rows[5].w_per_particle - df) / df <= 0.02);

    const std::vector<ScanRow> threaded = convergence_scan(ns, 0.1, 0.2, 1.0, 2.0, 1.0, 2);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(threaded[i].eta == rows[i].eta);
        CHECK(threaded[i].w_per_particle == rows[i].w_per_particle);
        CHECK(threaded[i].corr_per_particle == rows[i].corr_per_particle);
    }
}

TEST_CASE("many-body interfaces validate their inputs") {
    CHECK_THROWS_AS(manybody_cycle(1, 1, 1, 1.0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(manybody_cycle(4, 0, 2, 1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(manybody_cycle(4, 2, 2, 1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(manybody_cycle(4, 2, 5, 1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(manybody_cycle(4, 1, 2, 1.0, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(manybody_cycle(4, 1, 2, 0.0, 2.0, 1.0), std::domain_error);

    CHECK_THROWS_AS(convergence_scan({4}, 0.2, 0.1, 1.0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(convergence_scan({4}, 0.0, 0.2, 1.0, 2.0, 1.0), std::domain_error);
    // r must be below the cold-bath thermal occupation 1/(1+e) = 0.2689
    CHECK_THROWS_AS(convergence_scan({64}, 0.1, 0.27, 1.0, 2.0, 1.0), std::domain_error);

    CHECK_THROWS_AS(binomial_tail_bounds(100, 0, 0.3), std::domain_error);
    CHECK_THROWS_AS(binomial_tail_bounds(100, 40, 0.3), std::domain_error);
    CHECK_THROWS_AS(binomial_tail_bounds(100, 20, 0.0), std::domain_error);
    CHECK_THROWS_AS(binomial_tail_bounds(100, 20, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_binomial_tail(10, 11, 0.5), std::invalid_argument);

    CHECK_THROWS_AS(log_restricted_partition(4, 2, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_restricted_partition(4, 2, 1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(correlated_functionals(4, 2, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(correlations_per_particle(4, 2, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(local_free_energy(0.1, 0.0, 1.0), std::domain_error);
}
