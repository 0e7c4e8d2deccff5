// ssot_main.cpp -- command-line front end: engines, sweeps, scans, state checks.
#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ssot/cycles.hpp"
#include "ssot/fluctuations.hpp"
#include "ssot/io.hpp"
#include "ssot/manybody.hpp"
#include "ssot/parallel.hpp"
#include "ssot/thermo.hpp"

namespace {

using namespace ssot;

// "start:stop:count" with inclusive endpoints, or a single value.
std::vector<double> parse_range(const std::string& text, const std::string& key) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ':')) parts.push_back(token);
    const auto to_real = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument(key + ": cannot parse '" + s + "' as a number");
        }
    };
    if (parts.size() == 1) return {to_real(parts[0])};
    if (parts.size() != 3)
        throw std::invalid_argument(key + ": expected a value or start:stop:count");
    const double start = to_real(parts[0]);
    const double stop = to_real(parts[1]);
    long count = 0;
    try {
        std::size_t used = 0;
        count = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument(key + ": count must be an integer");
    }
    if (count < 1) throw std::invalid_argument(key + ": count must be at least 1");
    std::vector<double> values(static_cast<std::size_t>(count));
    if (count == 1) {
        values[0] = start;
        return values;
    }
    const double step = (stop - start) / double(count - 1);
    for (long i = 0; i < count; ++i) values[std::size_t(i)] = start + double(i) * step;
    values.back() = stop; // inclusive endpoints, exactly
    return values;
}

unsigned thread_budget() {
    const char* env = std::getenv("SSOT_THREADS");
    if (env == nullptr || *env == '\0') {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : std::min(hw, 4u);
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1)
        throw std::invalid_argument("SSOT_THREADS: must be a positive integer");
    return unsigned(v);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Single-shot thermodynamics of finite block-diagonal states"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write output to this file instead of stdout")
        ->capture_default_str();

    // --- check-state ---------------------------------------------------------
    auto* cs = app.add_subcommand("check-state", "Single-shot functionals of a state file");
    std::string cs_in;
    double cs_temp = 1.0;
    cs->add_option("--in", cs_in, "State JSON file")->required();
    cs->add_option("--temp", cs_temp, "Bath temperature")->required();

    // --- qubit-engine --------------------------------------------------------
    auto* qe = app.add_subcommand("qubit-engine", "Two-level four-stroke engine");
    std::string qe_w1 = "5", qe_w2 = "1", qe_th = "2", qe_tc = "1", qe_format = "auto";
    qe->add_option("--w1", qe_w1, "Hot-stroke splitting (value or start:stop:count)");
    qe->add_option("--w2", qe_w2, "Cold-stroke splitting (value or start:stop:count)");
    qe->add_option("--thot", qe_th, "Hot bath temperature (value or range)");
    qe->add_option("--tcold", qe_tc, "Cold bath temperature (value or range)");
    qe->add_option("--format", qe_format, "auto|json|csv")->capture_default_str();

    // --- noneq-cycle ---------------------------------------------------------
    auto* nc = app.add_subcommand("noneq-cycle", "Cycle between restricted thermal states");
    std::string nc_in;
    std::vector<std::size_t> nc_u, nc_v;
    double nc_th = 2.0, nc_tc = 1.0;
    nc->add_option("--in", nc_in, "Spectrum JSON file")->required();
    nc->add_option("--u", nc_u, "Level subset U (comma separated)")
        ->required()
        ->delimiter(',');
    nc->add_option("--v", nc_v, "Level subset V (comma separated)")
        ->required()
        ->delimiter(',');
    nc->add_option("--thot", nc_th, "Hot bath temperature");
    nc->add_option("--tcold", nc_tc, "Cold bath temperature");

    // --- refrigerator --------------------------------------------------------
    auto* fr = app.add_subcommand("refrigerator", "Reversed qubit cycle pumping heat");
    double fr_w1 = 5.0, fr_w2 = 1.0, fr_th = 2.0, fr_tc = 1.0;
    fr->add_option("--w1", fr_w1, "Hot-side splitting");
    fr->add_option("--w2", fr_w2, "Cold-side splitting");
    fr->add_option("--thot", fr_th, "Hot bath temperature");
    fr->add_option("--tcold", fr_tc, "Cold bath temperature");

    // --- fluct-sweep ---------------------------------------------------------
    auto* fs = app.add_subcommand("fluct-sweep", "Efficiency vs allowed work fluctuation");
    double fs_w1 = 5.0, fs_w2 = 1.0, fs_th = 2.0, fs_tc = 1.0;
    std::string fs_dw = "0:2:21";
    double fs_gmin = -2.0, fs_gmax = 2.0;
    std::size_t fs_glev = 41;
    fs->add_option("--w1", fs_w1, "Hot-stroke splitting");
    fs->add_option("--w2", fs_w2, "Cold-stroke splitting");
    fs->add_option("--thot", fs_th, "Hot bath temperature");
    fs->add_option("--tcold", fs_tc, "Cold bath temperature");
    fs->add_option("--dw", fs_dw, "Fluctuation bounds (value or start:stop:count)")
        ->capture_default_str();
    fs->add_option("--grid-min", fs_gmin, "Battery grid bottom")->capture_default_str();
    fs->add_option("--grid-max", fs_gmax, "Battery grid top")->capture_default_str();
    fs->add_option("--grid-levels", fs_glev, "Battery grid levels")->capture_default_str();

    // --- manybody-scan -------------------------------------------------------
    auto* mb = app.add_subcommand("manybody-scan", "Carnot convergence of correlated media");
    std::vector<std::size_t> mb_n = {4, 16, 64, 256, 1024, 4096};
    double mb_q = 0.1, mb_r = 0.2, mb_omega = 1.0, mb_th = 2.0, mb_tc = 1.0;
    mb->add_option("--n", mb_n, "System sizes (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    mb->add_option("--q", mb_q, "Lower cutoff fraction")->capture_default_str();
    mb->add_option("--r", mb_r, "Upper cutoff fraction")->capture_default_str();
    mb->add_option("--omega", mb_omega, "Qubit gap")->capture_default_str();
    mb->add_option("--thot", mb_th, "Hot bath temperature")->capture_default_str();
    mb->add_option("--tcold", mb_tc, "Cold bath temperature")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const unsigned threads = thread_budget();

    if (cs->parsed()) {
        auto [h, rho] = parse_state_json(read_text_file(cs_in));
        emit(state_check_json(check_state(rho, h, cs_temp)), out_path);
        return 0;
    }

    if (qe->parsed()) {
        const std::vector<double> w1s = parse_range(qe_w1, "--w1");
        const std::vector<double> w2s = parse_range(qe_w2, "--w2");
        const std::vector<double> ths = parse_range(qe_th, "--thot");
        const std::vector<double> tcs = parse_range(qe_tc, "--tcold");
        std::vector<std::array<double, 4>> rows;
        for (double w1 : w1s)
            for (double w2 : w2s)
                for (double th : ths)
                    for (double tc : tcs) rows.push_back({w1, w2, th, tc});
        if (qe_format != "auto" && qe_format != "json" && qe_format != "csv")
            throw std::invalid_argument("--format: expected auto, json, or csv");
        const bool as_json = (qe_format == "json") || (qe_format == "auto" && rows.size() == 1);
        if (as_json && rows.size() != 1)
            throw std::invalid_argument("--format: json output requires a single parameter point");
        std::vector<CycleReport> reports(rows.size());
        parallel_for(rows.size(), threads, [&](std::size_t i) {
            reports[i] = qubit_engine(rows[i][0], rows[i][1], rows[i][2], rows[i][3]);
        });
        emit(as_json ? cycle_report_json(reports[0]) : engine_sweep_csv(rows, reports), out_path);
        return 0;
    }

    if (nc->parsed()) {
        const HamiltonianSpectrum h = parse_spectrum_json(read_text_file(nc_in));
        emit(cycle_report_json(nonequilibrium_cycle(h, nc_u, nc_v, nc_th, nc_tc)), out_path);
        return 0;
    }

    if (fr->parsed()) {
        emit(refrigerator_report_json(qubit_refrigerator(fr_w1, fr_w2, fr_th, fr_tc)), out_path);
        return 0;
    }

    if (fs->parsed()) {
        const BatteryGrid grid(fs_gmin, fs_gmax, fs_glev);
        const std::vector<double> dws = parse_range(fs_dw, "--dw");
        emit(fluctuation_sweep_csv(
                 fluctuation_sweep(fs_w1, fs_w2, fs_th, fs_tc, dws, grid, threads)),
             out_path);
        return 0;
    }

    if (mb->parsed()) {
        emit(convergence_scan_csv(
                 convergence_scan(mb_n, mb_q, mb_r, mb_omega, mb_th, mb_tc, threads)),
             out_path);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
