#include "optoring/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace optoring {

namespace {

std::string normalize_key(std::string k) {
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

double parse_double(const KeyValues& kv, const std::string& key, double dflt) {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    try {
        size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        throw ConfigError("invalid numeric value for '" + key + "': " + it->second);
    }
}

int parse_int(const KeyValues& kv, const std::string& key, int dflt) {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    try {
        size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        throw ConfigError("invalid integer value for '" + key + "': " + it->second);
    }
}

GridSpec parse_grid(const KeyValues& kv, const std::string& prefix, GridSpec dflt) {
    GridSpec g;
    g.min = parse_double(kv, prefix + ".min", dflt.min);
    g.max = parse_double(kv, prefix + ".max", dflt.max);
    g.count = parse_int(kv, prefix + ".count", dflt.count);
    if (g.count < 2) throw ConfigError("grid '" + prefix + "' needs count >= 2");
    if (!(g.min <= g.max)) throw ConfigError("grid '" + prefix + "' has empty range");
    return g;
}

}  // namespace

KeyValues parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    KeyValues kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        kv[normalize_key(trim(line.substr(0, eq)))] = trim(line.substr(eq + 1));
    }
    return kv;
}

void apply_override(KeyValues& kv, const std::string& key, const std::string& value) {
    kv[normalize_key(key)] = value;
}

SystemParams RunConfig::to_params() const {
    SystemParams p;
    p.delta = delta;
    p.kappa = kappa;
    p.gamma = gamma_over_kappa * kappa;
    p.G1 = G1;
    p.G2 = G2;
    p.g1 = g1_over_kappa * kappa;
    p.g2 = g2_over_kappa ? *g2_over_kappa * kappa
                         : (G1 != 0.0 ? p.g1 * G2 / G1 : 0.0);
    p.T = T;
    p.N = N;
    p.kappa_cp = kappa_cp_over_kappa * kappa;
    return p;
}

RunConfig build_run_config(const KeyValues& kv) {
    RunConfig c;
    if (auto it = kv.find("sub"); it != kv.end()) c.subcommand = it->second;
    if (auto it = kv.find("out"); it != kv.end()) c.out_dir = it->second;
    c.threads = parse_int(kv, "threads", 0);
    c.seed = unsigned(parse_int(kv, "seed", 20240901));

    c.delta = parse_double(kv, "params.delta_over_omega_m", -1.5);
    if (!(c.delta < 0.0)) throw ConfigError("params.delta_over_omega_m must be negative");
    c.kappa = parse_double(kv, "params.kappa_over_omega_m", 0.1);
    c.gamma_over_kappa = parse_double(kv, "params.gamma_over_kappa", 1e-4);
    c.g1_over_kappa = parse_double(kv, "params.g1_over_kappa", 2e-3);
    if (kv.count("params.g2_over_kappa"))
        c.g2_over_kappa = parse_double(kv, "params.g2_over_kappa", 0.0);
    c.T = parse_double(kv, "params.T_over_omega_m", 0.0);
    c.N = parse_int(kv, "params.N", 2);
    c.kappa_cp_over_kappa = parse_double(kv, "params.kappa_cp_over_kappa", 0.1);

    // couplings: either (G1, G2) or the (G_+, G_-) pair
    const double gcri = 0.5 * std::sqrt(std::abs(c.delta));
    if (kv.count("params.g_plus_over_gcri") || kv.count("params.g_minus_over_gcri")) {
        const double gp = parse_double(kv, "params.g_plus_over_gcri", 0.5) * gcri;
        const double gm = parse_double(kv, "params.g_minus_over_gcri", 0.5) * gcri;
        c.G1 = 0.5 * (gp + gm);
        c.G2 = 0.5 * (gp - gm);
    } else if (kv.count("params.g_plus_over_omega_m") || kv.count("params.g_minus_over_omega_m")) {
        const double gp = parse_double(kv, "params.g_plus_over_omega_m", 0.4);
        const double gm = parse_double(kv, "params.g_minus_over_omega_m", 0.2);
        c.G1 = 0.5 * (gp + gm);
        c.G2 = 0.5 * (gp - gm);
    } else {
        c.G1 = parse_double(kv, "params.G1_over_omega_m", 0.3);
        c.G2 = parse_double(kv, "params.G2_over_omega_m", 0.1);
    }

    if (auto it = kv.find("processes"); it != kv.end()) {
        c.processes = ProcessSet::none();
        std::stringstream ss(it->second);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            if (tok.size() != 1)
                throw ConfigError("processes: expected letters a..e, got '" + tok + "'");
            const auto p = process_from_label(tok[0]);
            if (!p) throw ConfigError("processes: unknown process '" + tok + "'");
            c.processes.active[int(*p)] = true;
        }
    }

    c.omega_grid = parse_grid(kv, "grid.omega", c.omega_grid);
    c.map_gp = parse_grid(kv, "map.gp", c.map_gp);
    c.map_gm = parse_grid(kv, "map.gm", c.map_gm);
    c.linecut_ratio = parse_double(kv, "linecut.ratio", c.linecut_ratio);
    c.linecut_t = parse_grid(kv, "linecut.t", c.linecut_t);
    c.detuning = parse_grid(kv, "detuning.delta", c.detuning);
    c.oracle_n_max_1 = parse_int(kv, "oracle.n_max_1", c.oracle_n_max_1);
    c.oracle_n_max_2 = parse_int(kv, "oracle.n_max_2", c.oracle_n_max_2);
    c.oracle_window_kappas = parse_double(kv, "oracle.window_kappas", c.oracle_window_kappas);
    c.oracle_count = parse_int(kv, "oracle.count", c.oracle_count);
    c.device_transmission = parse_double(kv, "device.transmission", c.device_transmission);
    c.device_guess_k1 = parse_double(kv, "device.guess_k1", c.device_guess_k1);
    c.device_guess_k2 = parse_double(kv, "device.guess_k2", c.device_guess_k2);
    c.device_guess_q1 = parse_double(kv, "device.guess_q1", c.device_guess_q1);
    c.device_guess_q2 = parse_double(kv, "device.guess_q2", c.device_guess_q2);
    return c;
}

}  // namespace optoring
