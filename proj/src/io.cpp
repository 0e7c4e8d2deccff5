// io.cpp -- serialization and input parsing.
#include "ssot/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ssot/thermo.hpp"

namespace ssot {

std::string format_real(double x) {
    if (x == 0.0) return "0"; // normalize the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

using nlohmann::json;

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
    return j;
}

std::vector<double> real_array(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string(key) + ": missing");
    const json& a = j.at(key);
    if (!a.is_array()) throw std::invalid_argument(std::string(key) + ": expected an array");
    std::vector<double> out;
    out.reserve(a.size());
    for (const json& v : a) {
        if (!v.is_number()) throw std::invalid_argument(std::string(key) + ": expected numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

HamiltonianSpectrum spectrum_from_json(const json& j) {
    const std::vector<double> energies = real_array(j, "energies");
    std::vector<std::size_t> degens(energies.size(), 1);
    if (j.contains("degeneracies")) {
        const json& d = j.at("degeneracies");
        if (!d.is_array() || d.size() != energies.size())
            throw std::invalid_argument("degeneracies: expected one entry per energy");
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (!d[i].is_number_integer() || d[i].get<long long>() < 1)
                throw std::invalid_argument("degeneracies: entries must be positive integers");
            degens[i] = d[i].get<std::size_t>();
        }
    }
    std::vector<Level> levels;
    levels.reserve(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) levels.push_back({energies[i], degens[i]});
    return HamiltonianSpectrum(levels);
}

void append_stroke(std::string& s, const StrokeRecord& st) {
    s += "{\"label\": \"" + st.label + "\", \"t_bath\": " + format_real(st.t_bath) +
         ", \"work_extracted\": " + format_real(st.work_extracted) +
         ", \"delta_e\": " + format_real(st.delta_e) +
         ", \"heat_absorbed\": " + format_real(st.heat_absorbed) + "}";
}

std::string strokes_json(const std::vector<StrokeRecord>& strokes) {
    std::string s = "[";
    for (std::size_t i = 0; i < strokes.size(); ++i) {
        if (i > 0) s += ", ";
        append_stroke(s, strokes[i]);
    }
    s += "]";
    return s;
}

} // namespace

std::pair<HamiltonianSpectrum, BlockDiagonalState> parse_state_json(const std::string& text) {
    const json j = parse_json_text(text);
    HamiltonianSpectrum h = spectrum_from_json(j);
    std::vector<double> pops = real_array(j, "populations");
    if (pops.size() != h.dimension())
        throw std::invalid_argument("populations: expected " + std::to_string(h.dimension()) +
                                    " entries, got " + std::to_string(pops.size()));
    BlockDiagonalState rho(h, std::move(pops));
    return {std::move(h), std::move(rho)};
}

HamiltonianSpectrum parse_spectrum_json(const std::string& text) {
    return spectrum_from_json(parse_json_text(text));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string cycle_report_json(const CycleReport& r) {
    std::string s = "{\"strokes\": " + strokes_json(r.strokes);
    s += ", \"w_cycle\": " + format_real(r.w_cycle);
    s += ", \"q_hot\": " + format_real(r.q_hot);
    s += ", \"q_cold\": " + format_real(r.q_cold);
    s += ", \"eta\": " + format_real(r.eta);
    s += ", \"eta_carnot\": " + format_real(r.eta_carnot);
    s += ", \"q_irr_bc\": " + format_real(r.q_irr_bc);
    s += ", \"q_irr_da\": " + format_real(r.q_irr_da);
    s += "}\n";
    return s;
}

std::string refrigerator_report_json(const RefrigeratorReport& r) {
    std::string s = "{\"strokes\": " + strokes_json(r.strokes);
    s += ", \"w_input\": " + format_real(r.w_input);
    s += ", \"q_cold_extracted\": " + format_real(r.q_cold_extracted);
    s += ", \"q_hot_dumped\": " + format_real(r.q_hot_dumped);
    s += ", \"cop\": " + format_real(r.cop);
    s += ", \"cop_carnot\": " + format_real(r.cop_carnot);
    s += "}\n";
    return s;
}

StateCheckReport check_state(const BlockDiagonalState& rho, const HamiltonianSpectrum& h,
                             double t) {
    const StateFunctionals f = state_functionals(rho, h, t);
    StateCheckReport r;
    r.temperature = t;
    r.energy = f.energy;
    r.entropy = f.entropy;
    r.free_energy = f.free_energy;
    r.min_free_energy = min_free_energy(rho, h, t);
    r.max_free_energy = max_free_energy(rho, h, t);
    r.extractable_work = extractable_work(rho, h, t);
    r.work_of_formation = work_of_formation(rho, h, t);
    r.reversible = is_reversible(rho, h, t);
    return r;
}

std::string state_check_json(const StateCheckReport& r) {
    std::string s = "{\"temperature\": " + format_real(r.temperature);
    s += ", \"energy\": " + format_real(r.energy);
    s += ", \"entropy\": " + format_real(r.entropy);
    s += ", \"free_energy\": " + format_real(r.free_energy);
    s += ", \"min_free_energy\": " + format_real(r.min_free_energy);
    s += ", \"max_free_energy\": " + format_real(r.max_free_energy);
    s += ", \"extractable_work\": " + format_real(r.extractable_work);
    s += ", \"work_of_formation\": " + format_real(r.work_of_formation);
    s += std::string(", \"reversible\": ") + (r.reversible ? "true" : "false");
    s += "}\n";
    return s;
}

std::string engine_sweep_csv(const std::vector<std::array<double, 4>>& params,
                             const std::vector<CycleReport>& reports) {
    if (params.size() != reports.size())
        throw std::invalid_argument("engine_sweep_csv: row count mismatch");
    std::string s = "w1,w2,t_hot,t_cold,w_cycle,q_hot,q_cold,eta,eta_carnot,q_irr_bc,q_irr_da\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CycleReport& r = reports[i];
        s += format_real(params[i][0]) + "," + format_real(params[i][1]) + "," +
             format_real(params[i][2]) + "," + format_real(params[i][3]) + "," +
             format_real(r.w_cycle) + "," + format_real(r.q_hot) + "," + format_real(r.q_cold) +
             "," + format_real(r.eta) + "," + format_real(r.eta_carnot) + "," +
             format_real(r.q_irr_bc) + "," + format_real(r.q_irr_da) + "\n";
    }
    return s;
}

std::string fluctuation_sweep_csv(const std::vector<FluctuationCyclePoint>& points) {
    std::string s = "delta_w,w_bc_avg,w_da_avg,eta,eta_carnot\n";
    for (const FluctuationCyclePoint& p : points) {
        s += format_real(p.delta_w) + "," + format_real(p.w_bc_avg) + "," +
             format_real(p.w_da_avg) + "," + format_real(p.eta) + "," +
             format_real(p.eta_carnot) + "\n";
    }
    return s;
}

std::string convergence_scan_csv(const std::vector<ScanRow>& rows) {
    std::string s = "n,k,l,eta,eta_carnot,w_per_particle,corr_per_particle\n";
    for (const ScanRow& r : rows) {
        s += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.l) + "," +
             format_real(r.eta) + "," + format_real(r.eta_carnot) + "," +
             format_real(r.w_per_particle) + "," + format_real(r.corr_per_particle) + "\n";
    }
    return s;
}

CycleReport parse_cycle_report_json(const std::string& text) {
    const json j = parse_json_text(text);
    CycleReport r;
    for (const char* key : {"w_cycle", "q_hot", "q_cold", "eta", "eta_carnot", "q_irr_bc",
                            "q_irr_da", "strokes"})
        if (!j.contains(key)) throw std::invalid_argument(std::string(key) + ": missing");
    r.w_cycle = j.at("w_cycle").get<double>();
    r.q_hot = j.at("q_hot").get<double>();
    r.q_cold = j.at("q_cold").get<double>();
    r.eta = j.at("eta").get<double>();
    r.eta_carnot = j.at("eta_carnot").get<double>();
    r.q_irr_bc = j.at("q_irr_bc").get<double>();
    r.q_irr_da = j.at("q_irr_da").get<double>();
    for (const json& js : j.at("strokes")) {
        StrokeRecord st;
        st.label = js.at("label").get<std::string>();
        st.t_bath = js.at("t_bath").get<double>();
        st.work_extracted = js.at("work_extracted").get<double>();
        st.delta_e = js.at("delta_e").get<double>();
        st.heat_absorbed = js.at("heat_absorbed").get<double>();
        r.strokes.push_back(std::move(st));
    }
    return r;
}

} // namespace ssot
