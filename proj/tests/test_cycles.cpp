// test_cycles.cpp -- four-stroke engines, refrigerators, and clock feasibility.
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "ssot/cycles.hpp"
#include "ssot/spectrum.hpp"
#include "ssot/state.hpp"
#include "ssot/thermo.hpp"

using namespace ssot;

TEST_CASE("qubit engine reproduces the frozen reference numbers") {
    const CycleReport r = qubit_engine(5.0, 1.0, 2.0, 1.0);
    CHECK(std::abs(r.w_cycle - 0.483828160746) <= 1e-9);
    CHECK(std::abs(r.q_hot - 1.13445091395) <= 1e-9);
    CHECK(std::abs(r.q_cold - 0.650622753206) <= 1e-9);
    CHECK(std::abs(r.eta - 0.426486641948) <= 1e-9);
    CHECK(r.eta_carnot == 0.5);
    CHECK(std::abs(r.q_irr_bc - 0.108599247428) <= 1e-9);
    CHECK(std::abs(r.q_irr_da - 0.345826645485) <= 1e-9);
}

TEST_CASE("stroke records carry labels, baths, and heat bookkeeping") {
    const CycleReport r = qubit_engine(5.0, 1.0, 2.0, 1.0);
    REQUIRE(r.strokes.size() == 4);
    CHECK(r.strokes[0].label == "AB");
    CHECK(r.strokes[1].label == "BC");
    CHECK(r.strokes[2].label == "CD");
    CHECK(r.strokes[3].label == "DA");
    CHECK(r.strokes[0].t_bath == 2.0);
    CHECK(r.strokes[1].t_bath == 1.0);
    CHECK(r.strokes[2].t_bath == 1.0);
    CHECK(r.strokes[3].t_bath == 2.0);
    CHECK(r.strokes[1].work_extracted == 0.0);
    CHECK(r.strokes[3].work_extracted == 0.0);

    double w_sum = 0.0, de_sum = 0.0;
    for (const StrokeRecord& s : r.strokes) {
        CHECK(std::abs(s.heat_absorbed - (s.delta_e + s.work_extracted)) <= 1e-12);
        w_sum += s.work_extracted;
        de_sum += s.delta_e;
    }
    CHECK(std::abs(w_sum - r.w_cycle) <= 1e-12);
    CHECK(std::abs(de_sum) <= 1e-12);
    CHECK(std::abs(r.q_hot - (r.strokes[0].heat_absorbed + r.strokes[3].heat_absorbed)) <= 1e-12);
    CHECK(std::abs(r.q_cold + (r.strokes[1].heat_absorbed + r.strokes[2].heat_absorbed)) <= 1e-12);
}

TEST_CASE("engine matches the closed-form oracle across parameters") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const double w1 = rng.uniform(0.05, 8.0);
        const double w2 = rng.uniform(0.05, 8.0);
        const double tc = rng.uniform(0.3, 1.5);
        const double th = tc * rng.uniform(1.5, 3.0);
        const CycleReport r = qubit_engine(w1, w2, th, tc);
        const oracle::EngineNumbers o = oracle::qubit_engine_closed_form(w1, w2, th, tc);
        CHECK(std::abs(r.w_cycle - o.w) <= 1e-11);
        CHECK(std::abs(r.q_hot - o.q_hot) <= 1e-11);
        CHECK(std::abs(r.q_cold - o.q_cold) <= 1e-11);
        CHECK(std::abs(r.eta_carnot - o.eta_c) <= 1e-12);
        CHECK(std::abs(r.w_cycle - (r.q_hot - r.q_cold)) <= 1e-10);
    }
}

TEST_CASE("carnot gap equals the dissipation identity") {
    // T_h q_cold - T_c q_hot = T_h T_c [D(rho_B || tau_c) + D(rho_D || tau_h)]
    oracle::Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const double w1 = rng.uniform(0.1, 6.0);
        const double w2 = rng.uniform(0.1, 6.0);
        const double tc = rng.uniform(0.3, 1.5);
        const double th = tc * rng.uniform(1.5, 3.0);
        const CycleReport r = qubit_engine(w1, w2, th, tc);

        const HamiltonianSpectrum h1 = HamiltonianSpectrum::qubit(w1);
        const HamiltonianSpectrum h2 = HamiltonianSpectrum::qubit(w2);
        const double d_b = relative_entropy_to_thermal(gibbs_state(h2, th), h2, tc);
        const double d_d = relative_entropy_to_thermal(gibbs_state(h1, tc), h1, th);
        CHECK(std::abs(th * r.q_cold - tc * r.q_hot - th * tc * (d_b + d_d)) <= 1e-10);
        if (r.q_hot > 1e-9) CHECK(r.eta <= r.eta_carnot + 1e-12);
    }
}

TEST_CASE("nonequilibrium cycle reproduces the frozen example") {
    const HamiltonianSpectrum h({{0.0, 1}, {1.0, 2}, {2.0, 1}});
    const CycleReport r = nonequilibrium_cycle(h, {0, 1}, {0, 1, 2}, 2.0, 1.0);
    CHECK(std::abs(r.w_cycle - 0.232475736781) <= 1e-9);
    CHECK(std::abs(r.q_hot - 0.638752620247) <= 1e-9);
    CHECK(std::abs(r.q_cold - 0.406276883467) <= 1e-9);
    CHECK(std::abs(r.eta - 0.363952693753) <= 1e-9);
    CHECK(std::abs(r.q_irr_bc - 0.217198494856) <= 1e-9);
    CHECK(std::abs(r.q_irr_da - 0.124254122888) <= 1e-9);
}

TEST_CASE("identical level subsets extract no work") {
    const HamiltonianSpectrum h({{0.0, 1}, {1.0, 2}, {2.0, 1}});
    const CycleReport r = nonequilibrium_cycle(h, {0, 2}, {0, 2}, 2.0, 1.0);
    CHECK(r.w_cycle == 0.0);
    CHECK(r.eta == 0.0);
    CHECK(r.q_hot > 0.0);
}

TEST_CASE("degenerate single-level cycle is rejected") {
    const HamiltonianSpectrum h({{0.7, 1}});
    CHECK_THROWS_AS(nonequilibrium_cycle(h, {0}, {0}, 2.0, 1.0), std::domain_error);
}

TEST_CASE("cycle validation rejects bad subsets and baths") {
    const HamiltonianSpectrum h({{0.0, 1}, {1.0, 2}, {2.0, 1}});
    CHECK_THROWS_AS(nonequilibrium_cycle(h, {}, {0}, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(nonequilibrium_cycle(h, {0}, {5}, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(nonequilibrium_cycle(h, {0}, {1}, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(nonequilibrium_cycle(h, {0}, {1}, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(qubit_engine(0.0, 1.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("refrigerator reproduces the frozen reference numbers") {
    const RefrigeratorReport r = qubit_refrigerator(5.0, 1.0, 2.0, 1.0);
    CHECK(std::abs(r.w_input - 0.483828160746) <= 1e-9);
    CHECK(std::abs(r.q_cold_extracted - 0.196196860293) <= 1e-9);
    CHECK(std::abs(r.cop - 0.405509385792) <= 1e-9);
    CHECK(r.cop_carnot == 1.0);

    REQUIRE(r.strokes.size() == 4);
    CHECK(r.strokes[0].label == "AD");
    CHECK(r.strokes[1].label == "DC");
    CHECK(r.strokes[2].label == "CB");
    CHECK(r.strokes[3].label == "BA");
    CHECK(r.strokes[0].t_bath == 1.0);
    CHECK(r.strokes[1].t_bath == 1.0);
    CHECK(r.strokes[2].t_bath == 2.0);
    CHECK(r.strokes[3].t_bath == 2.0);

    // reversing the engine costs exactly the work the engine produced
    const CycleReport engine = qubit_engine(5.0, 1.0, 2.0, 1.0);
    CHECK(std::abs(r.w_input - engine.w_cycle) <= 1e-12);
    CHECK(std::abs(r.q_hot_dumped - (r.q_cold_extracted + r.w_input)) <= 1e-10);
}

TEST_CASE("refrigerator without work input is rejected") {
    CHECK_THROWS_AS(qubit_refrigerator(5.0, 5.0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("cop stays below the carnot limit on random draws") {
    oracle::Rng rng(23);
    int kept = 0;
    while (kept < 300) {
        const double w1 = rng.uniform(0.05, 8.0);
        const double w2 = rng.uniform(0.05, 8.0);
        const double tc = rng.uniform(0.3, 1.5);
        const double th = tc * rng.uniform(1.5, 3.0);
        if (qubit_engine(w1, w2, th, tc).w_cycle <= 1e-6) continue;
        ++kept;
        const RefrigeratorReport r = qubit_refrigerator(w1, w2, th, tc);
        CHECK(r.w_input > 0.0);
        CHECK(r.cop < r.cop_carnot);
        const oracle::FridgeNumbers o = oracle::qubit_fridge_closed_form(w1, w2, th, tc);
        // w_input can sit just above the 1e-6 draw floor, so round-off in the
        // two routes is amplified by up to 1/w_input in the quotient
        CHECK(std::abs(r.cop - o.cop) <= 1e-8);
    }
}

TEST_CASE("clock stroke is feasible exactly up to the free energy drop") {
    const double th = 2.0;
    const HamiltonianSpectrum h1 = HamiltonianSpectrum::qubit(5.0);
    const HamiltonianSpectrum h2 = HamiltonianSpectrum::qubit(1.0);
    const ClockedSpectrum cs = extend_with_clock(h1, h2);
    const double w_ab = thermal_free_energy(h1, th) - thermal_free_energy(h2, th);
    REQUIRE(w_ab > 0.0);

    const auto stroke_feasible = [&](double w) {
        const HamiltonianSpectrum battery({{0.0, 1}, {w, 1}});
        const ProductSpectrum joint = tensor_product(cs.spectrum, battery);
        const BlockDiagonalState init = product_state(
            embed_clock_block(gibbs_state(h1, th), cs, 0), pure_basis_state(battery, 0), joint);
        const BlockDiagonalState fin = product_state(
            embed_clock_block(gibbs_state(h2, th), cs, 1), pure_basis_state(battery, 1), joint);
        return thermo_majorizes(init, fin, joint.spectrum, th);
    };
    CHECK(stroke_feasible(w_ab));
    CHECK_FALSE(stroke_feasible(w_ab + 1e-6));
}

TEST_CASE("compression stroke is feasible exactly down to the work paid") {
    const double tc = 1.0;
    const HamiltonianSpectrum h1 = HamiltonianSpectrum::qubit(5.0);
    const HamiltonianSpectrum h2 = HamiltonianSpectrum::qubit(1.0);
    const ClockedSpectrum cs = extend_with_clock(h1, h2);
    // C -> D costs work: F_C - F_D < 0, the battery pays |W|
    const double w_cd = thermal_free_energy(h2, tc) - thermal_free_energy(h1, tc);
    REQUIRE(w_cd < 0.0);

    const auto stroke_feasible = [&](double paid) {
        const HamiltonianSpectrum battery({{0.0, 1}, {paid, 1}});
        const ProductSpectrum joint = tensor_product(cs.spectrum, battery);
        const BlockDiagonalState init = product_state(
            embed_clock_block(gibbs_state(h2, tc), cs, 1), pure_basis_state(battery, 1), joint);
        const BlockDiagonalState fin = product_state(
            embed_clock_block(gibbs_state(h1, tc), cs, 0), pure_basis_state(battery, 0), joint);
        return thermo_majorizes(init, fin, joint.spectrum, tc);
    };
    CHECK(stroke_feasible(-w_cd));
    CHECK_FALSE(stroke_feasible(-w_cd - 1e-6));
}

TEST_CASE("clock-extended cycle reproduces the equilibrium report") {
    const ClockedSpectrum cs = extend_with_clock(HamiltonianSpectrum::qubit(5.0),
                                                 HamiltonianSpectrum::qubit(1.0));
    const CycleReport direct = qubit_engine(5.0, 1.0, 2.0, 1.0);
    const CycleReport clocked =
        nonequilibrium_cycle_basis(cs.spectrum, cs.block0, cs.block1, 2.0, 1.0);
    CHECK(std::abs(clocked.w_cycle - direct.w_cycle) <= 1e-9);
    CHECK(std::abs(clocked.q_hot - direct.q_hot) <= 1e-9);
    CHECK(std::abs(clocked.q_cold - direct.q_cold) <= 1e-9);
    CHECK(std::abs(clocked.eta - direct.eta) <= 1e-9);
    CHECK(std::abs(clocked.q_irr_bc - direct.q_irr_bc) <= 1e-9);
    CHECK(std::abs(clocked.q_irr_da - direct.q_irr_da) <= 1e-9);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(clocked.strokes[i].label == direct.strokes[i].label);
        CHECK(std::abs(clocked.strokes[i].work_extracted - direct.strokes[i].work_extracted) <=
              1e-9);
    }
}

TEST_CASE("equilibrium cycle requires matching block dimensions") {
    const HamiltonianSpectrum h1 = HamiltonianSpectrum::qubit(5.0);
    const HamiltonianSpectrum h3({{0.0, 1}, {1.0, 1}, {2.0, 1}});
    CHECK_THROWS_AS(equilibrium_cycle(h1, h3, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(extend_with_clock(h1, h3), std::invalid_argument);
}
