// io.hpp -- JSON/CSV serialization for reports and state files.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ssot/cycles.hpp"
#include "ssot/fluctuations.hpp"
#include "ssot/manybody.hpp"
#include "ssot/spectrum.hpp"
#include "ssot/state.hpp"

namespace ssot {

// All floating-point output uses 12 significant digits.
std::string format_real(double x);

// --- input -----------------------------------------------------------------

// {"energies": [...], "degeneracies": [...], "populations": [...]}
// degeneracies default to all-ones; populations are flattened in
// (level, degeneracy-index) order.  Malformed content raises
// std::invalid_argument naming the offending key.
std::pair<HamiltonianSpectrum, BlockDiagonalState> parse_state_json(const std::string& text);

// Same schema without the populations key (populations ignored if present).
HamiltonianSpectrum parse_spectrum_json(const std::string& text);

// Reads a whole file; missing/unreadable file raises std::invalid_argument.
std::string read_text_file(const std::string& path);

// --- report serialization ----------------------------------------------------

std::string cycle_report_json(const CycleReport& r);
std::string refrigerator_report_json(const RefrigeratorReport& r);

struct StateCheckReport {
    double temperature = 0.0;
    double energy = 0.0;
    double entropy = 0.0;
    double free_energy = 0.0;
    double min_free_energy = 0.0;
    double max_free_energy = 0.0;
    double extractable_work = 0.0;
    double work_of_formation = 0.0;
    bool reversible = false;
};

StateCheckReport check_state(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                             double t);
std::string state_check_json(const StateCheckReport& r);

// CSV rows (header + one line per entry, LF endings, '.' decimals).
std::string engine_sweep_csv(const std::vector<std::array<double, 4>>& params,
                             const std::vector<CycleReport>& reports);
std::string fluctuation_sweep_csv(const std::vector<FluctuationCyclePoint>& points);
std::string convergence_scan_csv(const std::vector<ScanRow>& rows);

// Re-parse an emitted CycleReport (round-trip used by invariant re-checks).
CycleReport parse_cycle_report_json(const std::string& text);

} // namespace ssot
