// cycles.cpp -- four-stroke cycle bookkeeping from corner-state functionals.
#include "ssot/cycles.hpp"

#include <cmath>
#include <stdexcept>

namespace ssot {

namespace {

void check_bath_order(double t_hot, double t_cold) {
    if (!(t_cold > 0.0)) throw std::domain_error("cycle: cold temperature must be positive");
    if (!(t_hot > t_cold))
        throw std::domain_error("cycle: hot temperature must exceed cold temperature");
}

void check_same_dimension(const HamiltonianSpectrum& h1, const HamiltonianSpectrum& h2) {
    if (h1.dimension() != h2.dimension())
        throw std::invalid_argument("cycle: the two Hamiltonians must share one system dimension");
}

struct Corner {
    double e = 0.0;
    double s = 0.0;
    double f = 0.0;
};

Corner corner_of(const BlockDiagonalState& rho, const HamiltonianSpectrum& h, double t) {
    const StateFunctionals sf = state_functionals(rho, h, t);
    return {sf.energy, sf.entropy, sf.free_energy};
}

// Assemble the engine report from the four corner states.  Driven strokes
// extract the free-energy drop at their bath temperature; thermalization
// strokes exchange heat only.
CycleReport four_stroke(const Corner& a, const Corner& b, const Corner& c, const Corner& d,
                        double t_hot, double t_cold) {
    CycleReport r;
    r.eta_carnot = carnot_efficiency(t_hot, t_cold);

    const double w_ab = a.f - b.f;
    const double w_cd = c.f - d.f;
    r.strokes = {
        {"AB", t_hot, w_ab, b.e - a.e, (b.e - a.e) + w_ab},
        {"BC", t_cold, 0.0, c.e - b.e, c.e - b.e},
        {"CD", t_cold, w_cd, d.e - c.e, (d.e - c.e) + w_cd},
        {"DA", t_hot, 0.0, a.e - d.e, a.e - d.e},
    };

    r.w_cycle = w_ab + w_cd;
    r.q_hot = r.strokes[0].heat_absorbed + r.strokes[3].heat_absorbed;
    r.q_cold = -(r.strokes[1].heat_absorbed + r.strokes[2].heat_absorbed);
    r.eta = (r.q_hot != 0.0) ? r.w_cycle / r.q_hot : 0.0;
    r.q_irr_bc = b.e - c.e;
    r.q_irr_da = a.e - d.e;
    return r;
}

} // namespace

double carnot_efficiency(double t_hot, double t_cold) {
    check_bath_order(t_hot, t_cold);
    return 1.0 - t_cold / t_hot;
}

CycleReport equilibrium_cycle(const HamiltonianSpectrum& h1, const HamiltonianSpectrum& h2,
                              double t_hot, double t_cold) {
    check_bath_order(t_hot, t_cold);
    check_same_dimension(h1, h2);
    const Corner a = corner_of(gibbs_state(h1, t_hot), h1, t_hot);
    const Corner b = corner_of(gibbs_state(h2, t_hot), h2, t_hot);
    const Corner c = corner_of(gibbs_state(h2, t_cold), h2, t_cold);
    const Corner d = corner_of(gibbs_state(h1, t_cold), h1, t_cold);
    return four_stroke(a, b, c, d, t_hot, t_cold);
}

CycleReport qubit_engine(double omega1, double omega2, double t_hot, double t_cold) {
    return equilibrium_cycle(HamiltonianSpectrum::qubit(omega1),
                             HamiltonianSpectrum::qubit(omega2), t_hot, t_cold);
}

CycleReport nonequilibrium_cycle(const HamiltonianSpectrum& h, const std::vector<std::size_t>& u,
                                 const std::vector<std::size_t>& v, double t_hot, double t_cold) {
    check_bath_order(t_hot, t_cold);
    if (u.empty() || v.empty())
        throw std::invalid_argument("nonequilibrium_cycle: level subsets must be nonempty");
    if (h.level_count() == 1 && u.size() == 1 && v.size() == 1 && u[0] == v[0])
        throw std::domain_error("nonequilibrium_cycle: degenerate cycle on a single level");
    const Corner a = corner_of(restricted_thermal_state(h, u, t_hot), h, t_hot);
    const Corner b = corner_of(restricted_thermal_state(h, v, t_hot), h, t_hot);
    const Corner c = corner_of(restricted_thermal_state(h, v, t_cold), h, t_cold);
    const Corner d = corner_of(restricted_thermal_state(h, u, t_cold), h, t_cold);
    return four_stroke(a, b, c, d, t_hot, t_cold);
}

CycleReport nonequilibrium_cycle_basis(const HamiltonianSpectrum& h,
                                       const std::vector<std::size_t>& u_basis,
                                       const std::vector<std::size_t>& v_basis, double t_hot,
                                       double t_cold) {
    check_bath_order(t_hot, t_cold);
    if (u_basis.empty() || v_basis.empty())
        throw std::invalid_argument("nonequilibrium_cycle: basis subsets must be nonempty");
    const Corner a = corner_of(restricted_thermal_state_basis(h, u_basis, t_hot), h, t_hot);
    const Corner b = corner_of(restricted_thermal_state_basis(h, v_basis, t_hot), h, t_hot);
    const Corner c = corner_of(restricted_thermal_state_basis(h, v_basis, t_cold), h, t_cold);
    const Corner d = corner_of(restricted_thermal_state_basis(h, u_basis, t_cold), h, t_cold);
    return four_stroke(a, b, c, d, t_hot, t_cold);
}

RefrigeratorReport refrigerator_cycle(const HamiltonianSpectrum& h1,
                                      const HamiltonianSpectrum& h2, double t_hot,
                                      double t_cold) {
    check_bath_order(t_hot, t_cold);
    check_same_dimension(h1, h2);
    const Corner a = corner_of(gibbs_state(h1, t_hot), h1, t_hot);
    const Corner b = corner_of(gibbs_state(h2, t_hot), h2, t_hot);
    const Corner c = corner_of(gibbs_state(h2, t_cold), h2, t_cold);
    const Corner d = corner_of(gibbs_state(h1, t_cold), h1, t_cold);

    RefrigeratorReport r;
    r.cop_carnot = t_cold / (t_hot - t_cold);

    // Reverse traversal A->D->C->B->A: driven strokes now consume work, the
    // cold contact covers A->D and D->C, the hot contact C->B and B->A.
    const double w_dc = d.f - c.f;
    const double w_ba = b.f - a.f;
    r.strokes = {
        {"AD", t_cold, 0.0, d.e - a.e, d.e - a.e},
        {"DC", t_cold, w_dc, c.e - d.e, (c.e - d.e) + w_dc},
        {"CB", t_hot, 0.0, b.e - c.e, b.e - c.e},
        {"BA", t_hot, w_ba, a.e - b.e, (a.e - b.e) + w_ba},
    };

    r.w_input = -(w_dc + w_ba);
    if (!(r.w_input > 1e-12))
        throw std::domain_error("refrigerator_cycle: cycle consumes no work (degenerate)");
    r.q_cold_extracted = r.strokes[0].heat_absorbed + r.strokes[1].heat_absorbed;
    r.q_hot_dumped = -(r.strokes[2].heat_absorbed + r.strokes[3].heat_absorbed);
    r.cop = r.q_cold_extracted / r.w_input;
    return r;
}

RefrigeratorReport qubit_refrigerator(double omega1, double omega2, double t_hot, double t_cold) {
    return refrigerator_cycle(HamiltonianSpectrum::qubit(omega1),
                              HamiltonianSpectrum::qubit(omega2), t_hot, t_cold);
}

} // namespace ssot
