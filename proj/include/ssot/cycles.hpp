// cycles.hpp -- four-stroke engine and refrigerator cycles between two baths.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssot/spectrum.hpp"
#include "ssot/thermo.hpp"

namespace ssot {

struct StrokeRecord {
    std::string label;            // e.g. "AB"
    double t_bath = 0.0;          // bath the stroke is in contact with
    double work_extracted = 0.0;  // positive when the stroke delivers work
    double delta_e = 0.0;         // system energy change over the stroke
    double heat_absorbed = 0.0;   // delta_e + work_extracted
};

struct CycleReport {
    std::vector<StrokeRecord> strokes;
    double w_cycle = 0.0;    // net work out per cycle
    double q_hot = 0.0;      // heat absorbed from the hot bath
    double q_cold = 0.0;     // heat dumped into the cold bath
    double eta = 0.0;        // w_cycle / q_hot
    double eta_carnot = 0.0; // 1 - t_cold / t_hot
    double q_irr_bc = 0.0;   // heat irreversibly released equilibrating B -> C
    double q_irr_da = 0.0;   // heat irreversibly absorbed equilibrating D -> A
};

double carnot_efficiency(double t_hot, double t_cold);

// Equilibrium cycle: A = gibbs(H1, Th), B = gibbs(H2, Th), C = gibbs(H2, Tc),
// D = gibbs(H1, Tc).  Driven strokes A->B and C->D extract the free-energy
// drop deterministically; B->C and D->A are full thermalizations.
CycleReport equilibrium_cycle(const HamiltonianSpectrum& h1, const HamiltonianSpectrum& h2,
                              double t_hot, double t_cold);

// Two-level working medium with splittings omega1 (hot side) and omega2.
CycleReport qubit_engine(double omega1, double omega2, double t_hot, double t_cold);

// Cycle between restricted thermal states: corners carry thermal populations
// confined to level subsets U (hot-side spectrum restriction) and V, at the
// two bath temperatures.  U = V gives a zero-work cycle; a single level with
// U = V = {that level} leaves nothing to drive and is rejected.
CycleReport nonequilibrium_cycle(const HamiltonianSpectrum& h, const std::vector<std::size_t>& u,
                                 const std::vector<std::size_t>& v, double t_hot, double t_cold);

// Same cycle with the restriction given per basis state instead of per level.
CycleReport nonequilibrium_cycle_basis(const HamiltonianSpectrum& h,
                                       const std::vector<std::size_t>& u_basis,
                                       const std::vector<std::size_t>& v_basis, double t_hot,
                                       double t_cold);

struct RefrigeratorReport {
    std::vector<StrokeRecord> strokes;
    double w_input = 0.0;           // work consumed per cycle
    double q_cold_extracted = 0.0;  // net heat removed from the cold bath
    double q_hot_dumped = 0.0;      // net heat released into the hot bath
    double cop = 0.0;               // q_cold_extracted / w_input
    double cop_carnot = 0.0;        // t_cold / (t_hot - t_cold)
};

// The equilibrium cycle traversed in reverse (A->D->C->B->A) with the bath
// contacts swapped, pumping heat from the cold bath.  Equal splittings make
// the cycle degenerate (no work input) and are rejected.
RefrigeratorReport refrigerator_cycle(const HamiltonianSpectrum& h1,
                                      const HamiltonianSpectrum& h2, double t_hot, double t_cold);

RefrigeratorReport qubit_refrigerator(double omega1, double omega2, double t_hot, double t_cold);

} // namespace ssot
