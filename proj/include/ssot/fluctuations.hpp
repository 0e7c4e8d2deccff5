// fluctuations.hpp -- bounded-fluctuation average work extraction on thermalization strokes.
#pragma once

#include <cstddef>
#include <vector>

#include "ssot/cycles.hpp"
#include "ssot/spectrum.hpp"
#include "ssot/state.hpp"

namespace ssot {

// Uniform ladder of battery energy levels.  Must bracket 0, the battery's
// initial level.
class BatteryGrid {
public:
    BatteryGrid(double w_min, double w_max, std::size_t n_levels);

    const std::vector<double>& levels() const { return levels_; }
    std::size_t n_levels() const { return levels_.size(); }
    std::size_t zero_index() const { return zero_index_; }
    double w_min() const { return levels_.front(); }
    double w_max() const { return levels_.back(); }
    double spacing() const { return spacing_; }

private:
    std::vector<double> levels_;
    std::size_t zero_index_ = 0;
    double spacing_ = 0.0;
};

// Distribution of extracted work over the battery ladder.  Support stays
// within [mean - delta_w, mean + delta_w].
struct WorkDistribution {
    std::vector<double> probabilities;
    double mean = 0.0;
    double delta_w = 0.0;
};

struct BoundedWorkResult {
    double avg_work = 0.0;
    WorkDistribution distribution;
};

// Maximum average work a thermalization stroke can deposit in the battery
// when every work outcome must stay within delta_w of the mean.  The system
// starts in rho and ends in gibbs_state(h, t_bath); the battery starts in the
// grid's zero level and ends in the returned distribution.  The search runs
// over translation-covariant couplings (the battery sees only energy shifts),
// which keeps the deterministic (delta_w = 0, up to grid placement) and
// unbounded (avg -> free-energy difference) limits exact and guarantees
// feasibility of the returned distribution under thermo-majorization.
// Always feasible: doing nothing gives avg_work = 0.
BoundedWorkResult max_avg_work_bounded(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                       double t_bath, double delta_w, const BatteryGrid& grid);

// Qubit engine cycle with bounded-fluctuation work also drawn from the two
// thermalization strokes.  The deterministic stroke works are unchanged; the
// B->C and D->A strokes additionally deliver their bounded average works, and
// heats are re-derived from the same energy bookkeeping.
struct FluctuationCyclePoint {
    double delta_w = 0.0;
    double w_bc_avg = 0.0;
    double w_da_avg = 0.0;
    double eta = 0.0;
    double eta_carnot = 0.0;
    CycleReport report;
};

FluctuationCyclePoint fluctuation_cycle(double omega1, double omega2, double t_hot, double t_cold,
                                        double delta_w, const BatteryGrid& grid);

// One fluctuation_cycle per delta_w value; points are independent and may be
// evaluated concurrently (threads >= 1).
std::vector<FluctuationCyclePoint> fluctuation_sweep(double omega1, double omega2, double t_hot,
                                                     double t_cold,
                                                     const std::vector<double>& delta_ws,
                                                     const BatteryGrid& grid,
                                                     unsigned threads = 1);

} // namespace ssot
