// config.hpp — run configuration: flat dotted-key config files, flag
// overrides, and the typed record every subcommand consumes.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optoring/keldysh.hpp"
#include "optoring/params.hpp"

namespace optoring {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raw key-value view; keys are dotted paths, values unparsed strings.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_config_file(const std::string& path);
// "a-b" and "a_b" address the same key; later entries win.
void apply_override(KeyValues& kv, const std::string& key, const std::string& value);

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int count = 2;
};

struct RunConfig {
    std::string subcommand;
    std::string out_dir = ".";
    int threads = 0;  // 0 = hardware concurrency
    unsigned seed = 20240901;

    // physical inputs, omega_m units
    double delta = -1.5;
    double kappa = 0.1;
    double gamma_over_kappa = 1e-4;
    double g1_over_kappa = 2e-3;
    std::optional<double> g2_over_kappa;  // default: dressed ratio rule
    double G1 = 0.3;
    double G2 = 0.1;
    double T = 0.0;
    int N = 2;
    double kappa_cp_over_kappa = 0.1;

    ProcessSet processes;  // active resonant channels

    GridSpec omega_grid{0.0, 0.0, 4001};  // max 0 = auto (2 omega_{+,2pi})
    GridSpec map_gp{0.02, 0.99, 200};     // G_+/G_cri
    GridSpec map_gm{0.02, 0.99, 200};     // G_-/G_cri
    double linecut_ratio = 1.187;         // G_- / G_+
    GridSpec linecut_t{0.05, 0.97, 400};  // t = G_+/G_cri
    GridSpec detuning{-8.5, -7.5, 161};
    int oracle_n_max_1 = 14;
    int oracle_n_max_2 = 6;
    double oracle_window_kappas = 5.0;
    int oracle_count = 61;
    double device_transmission = 0.85;
    double device_guess_k1 = 26.867;
    double device_guess_k2 = 33.887;
    double device_guess_q1 = -0.10458;
    double device_guess_q2 = -0.15011;

    SystemParams to_params() const;
};

// Builds the typed record from raw key-values; throws ConfigError with the
// offending field name.
RunConfig build_run_config(const KeyValues& kv);

}  // namespace optoring
