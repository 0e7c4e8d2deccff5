// fluctuations.cpp -- constrained search for bounded-fluctuation average work.
#include "ssot/fluctuations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssot/parallel.hpp"
#include "ssot/thermo.hpp"

namespace ssot {

namespace {

// Slack for feasibility comparisons; all loads are O(Z) = O(1..dim).
constexpr double load_slack = 1e-12;
// Slack for the support-window validity check.
constexpr double window_slack = 1e-12;
// Window values below this are round-off residue of a true zero optimum; the
// exact do-nothing solution (battery parked at level 0) is returned instead.
constexpr double zero_clamp = 1e-12;

struct Row {
    double lam; // population of the system basis state
    double c;   // its Gibbs weight e^{-beta E}
};

// Greedy state for one support window [lo, hi] of the battery ladder.  Every
// supported system state starts with its whole row at level lo; marginal
// moves k -> k+1 are executed in decreasing order of work gained per unit of
// Gibbs-weight budget.  The move ratios decrease along each row (the map
// w -> e^{beta w} is convex), so the greedy walk solves the linear program
// exactly; a final partial move lands on the budget boundary.
struct RunResult {
    bool feasible = false;
    double m_max = 0.0;                // unconstrained-mean optimum of the window
    std::vector<std::size_t> row_at;   // per-row level after the walk
    int partial_row = -1;              // row split between partial_k and partial_k+1
    std::size_t partial_k = 0;
    double partial_theta = 0.0;
};

RunResult solve_window(const std::vector<Row>& rows, const std::vector<double>& w,
                       const std::vector<double>& ew, std::size_t lo, std::size_t hi,
                       double lmax, bool track_rows) {
    RunResult res;
    double load0 = 0.0, lam_total = 0.0;
    for (const Row& r : rows) {
        load0 += r.c;
        lam_total += r.lam;
    }
    load0 *= ew[lo];
    if (load0 > lmax * (1.0 + load_slack) + load_slack) return res; // window too expensive
    double budget = std::max(lmax - load0, 0.0);
    double obj = lam_total * w[lo];

    std::vector<std::size_t> at(rows.size(), lo);
    while (true) {
        // Among rows not yet at the top, pick the best marginal move.
        int best = -1;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (at[i] >= hi) continue;
            const std::size_t k = at[i];
            const double dload = rows[i].c * (ew[k + 1] - ew[k]);
            const double ratio = rows[i].lam * (w[k + 1] - w[k]) / dload;
            if (best < 0 || ratio > best_ratio) {
                best = int(i);
                best_ratio = ratio;
            }
        }
        if (best < 0) break;
        const std::size_t k = at[best];
        const double dload = rows[best].c * (ew[k + 1] - ew[k]);
        const double dobj = rows[best].lam * (w[k + 1] - w[k]);
        if (dload <= budget) {
            budget -= dload;
            obj += dobj;
            at[best] = k + 1;
        } else {
            const double theta = budget / dload;
            obj += theta * dobj;
            res.partial_row = best;
            res.partial_k = k;
            res.partial_theta = theta;
            break;
        }
    }
    res.feasible = true;
    res.m_max = obj;
    if (track_rows) res.row_at = std::move(at);
    return res;
}

} // namespace

BatteryGrid::BatteryGrid(double w_min, double w_max, std::size_t n_levels) {
    if (!(w_min < w_max)) throw std::invalid_argument("battery grid: w_min must be below w_max");
    if (n_levels < 2) throw std::invalid_argument("battery grid: needs at least two levels");
    spacing_ = (w_max - w_min) / double(n_levels - 1);
    const double k = std::round(-w_min / spacing_);
    if (k < 0.0 || k > double(n_levels - 1) || std::abs(w_min + k * spacing_) > 1e-9)
        throw std::invalid_argument("battery grid: must contain the initial level 0");
    zero_index_ = std::size_t(k);
    levels_.resize(n_levels);
    for (std::size_t i = 0; i < n_levels; ++i) levels_[i] = w_min + double(i) * spacing_;
    levels_.back() = w_max;
    levels_[zero_index_] = 0.0;
}

BoundedWorkResult max_avg_work_bounded(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                                       double t_bath, double delta_w, const BatteryGrid& grid) {
    if (!(t_bath > 0.0)) throw std::domain_error("max_avg_work_bounded: bath temperature must be positive");
    if (!(delta_w >= 0.0)) throw std::invalid_argument("max_avg_work_bounded: delta_w must be nonnegative");
    if (rho.dimension() != h.dimension())
        throw std::invalid_argument("max_avg_work_bounded: state does not match the spectrum");

    const double beta = 1.0 / t_bath;
    const std::vector<double>& w = grid.levels();
    const std::size_t n = w.size();
    std::vector<double> ew(n);
    for (std::size_t j = 0; j < n; ++j) ew[j] = std::exp(beta * w[j]);

    const std::vector<double> es = h.basis_energies();
    std::vector<Row> rows;
    double z_out = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i) {
        const double c = std::exp(-beta * es[i]);
        if (rho.in_support(i))
            rows.push_back({rho.population(i), c});
        else
            z_out += c;
    }
    // Budget available to the supported rows: the total Gibbs weight minus
    // what the unpopulated states consume when parked at the grid bottom.
    double c_supp = 0.0;
    for (const Row& r : rows) c_supp += r.c;
    const double lmax = c_supp + z_out * (1.0 - ew.front());

    // Enumerate candidate support windows [lo, hi] no wider than 2*delta_w;
    // within each, the optimum is the greedy walk capped by the window's
    // mean-centering bound.
    double best_value = 0.0;
    std::size_t best_lo = grid.zero_index(), best_hi = grid.zero_index();
    bool have_best = false;
    for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = lo; hi < n && w[hi] - w[lo] <= 2.0 * delta_w + window_slack; ++hi) {
            const RunResult run = solve_window(rows, w, ew, lo, hi, lmax, false);
            if (!run.feasible) continue;
            const double v = std::min(run.m_max, w[lo] + delta_w);
            if (v < w[hi] - delta_w - window_slack) continue; // cannot center the window
            if (!have_best || v > best_value) {
                have_best = true;
                best_value = v;
                best_lo = lo;
                best_hi = hi;
            }
        }
    }

    BoundedWorkResult out;
    out.distribution.delta_w = delta_w;
    out.distribution.probabilities.assign(n, 0.0);
    if (!have_best || best_value <= zero_clamp) {
        // Doing nothing is always feasible: the battery stays at level 0.
        out.avg_work = 0.0;
        out.distribution.mean = 0.0;
        out.distribution.probabilities[grid.zero_index()] = 1.0;
        return out;
    }

    const RunResult run = solve_window(rows, w, ew, best_lo, best_hi, lmax, true);
    double lam_total = 0.0;
    for (const Row& r : rows) lam_total += r.lam;
    std::vector<double>& q = out.distribution.probabilities;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (int(i) == run.partial_row) {
            q[run.partial_k] += rows[i].lam * (1.0 - run.partial_theta);
            q[run.partial_k + 1] += rows[i].lam * run.partial_theta;
        } else {
            q[run.row_at[i]] += rows[i].lam;
        }
    }
    const double v = std::min(run.m_max, w[best_lo] + delta_w);
    if (run.m_max > v) {
        // Blend with "everything at the window bottom" to pull the mean down
        // to the centering cap; both endpoints are feasible, and feasibility
        // is preserved under mixing.
        const double t = (v - w[best_lo]) / (run.m_max - w[best_lo]);
        for (double& p : q) p *= t;
        q[best_lo] += (1.0 - t) * lam_total;
    }
    double total = 0.0;
    for (double p : q) total += p;
    for (double& p : q) p /= total;
    double mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) mean += q[j] * w[j];
    out.avg_work = mean;
    out.distribution.mean = mean;
    return out;
}

FluctuationCyclePoint fluctuation_cycle(double omega1, double omega2, double t_hot, double t_cold,
                                        double delta_w, const BatteryGrid& grid) {
    const HamiltonianSpectrum h1 = HamiltonianSpectrum::qubit(omega1);
    const HamiltonianSpectrum h2 = HamiltonianSpectrum::qubit(omega2);
    CycleReport r = qubit_engine(omega1, omega2, t_hot, t_cold);

    // The thermalization strokes start in the other bath's Gibbs state and
    // may now deposit bounded-fluctuation work of their own.
    const BoundedWorkResult bc =
        max_avg_work_bounded(gibbs_state(h2, t_hot), h2, t_cold, delta_w, grid);
    const BoundedWorkResult da =
        max_avg_work_bounded(gibbs_state(h1, t_cold), h1, t_hot, delta_w, grid);

    r.strokes[1].work_extracted = bc.avg_work;
    r.strokes[1].heat_absorbed = r.strokes[1].delta_e + bc.avg_work;
    r.strokes[3].work_extracted = da.avg_work;
    r.strokes[3].heat_absorbed = r.strokes[3].delta_e + da.avg_work;
    r.w_cycle += bc.avg_work + da.avg_work;
    r.q_hot = r.strokes[0].heat_absorbed + r.strokes[3].heat_absorbed;
    r.q_cold = -(r.strokes[1].heat_absorbed + r.strokes[2].heat_absorbed);
    r.eta = (r.q_hot != 0.0) ? r.w_cycle / r.q_hot : 0.0;

    return {delta_w, bc.avg_work, da.avg_work, r.eta, r.eta_carnot, r};
}

std::vector<FluctuationCyclePoint> fluctuation_sweep(double omega1, double omega2, double t_hot,
                                                     double t_cold,
                                                     const std::vector<double>& delta_ws,
                                                     const BatteryGrid& grid, unsigned threads) {
    std::vector<FluctuationCyclePoint> points(delta_ws.size());
    parallel_for(delta_ws.size(), threads, [&](std::size_t i) {
        points[i] = fluctuation_cycle(omega1, omega2, t_hot, t_cold, delta_ws[i], grid);
    });
    return points;
}

} // namespace ssot
