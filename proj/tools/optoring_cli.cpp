// optoring — command line front end for the four-mode optomechanical ring
// simulations: polariton spectra, resonance maps, line cuts, detuning sweeps,
// the Fabry-Perot device solver and the master-equation comparison.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "optoring/config.hpp"
#include "optoring/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"four-mode optomechanical ring simulator"};
    app.allow_extras();

    std::string config_path, out_dir, sub, processes;
    int threads = -1;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--sub", sub,
                   "subcommand: spectrum|map|linecut|detuning|device|oracle-compare|modes");
    app.add_option("--processes", processes, "active resonant channels, e.g. a,b,e");
    app.add_option("--threads", threads, "worker threads for grid sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? optoring::exit_invalid_config : 0;
    }

    optoring::KeyValues kv;
    try {
        if (!config_path.empty()) kv = optoring::parse_config_file(config_path);
        // remaining --key value / --key=value pairs override file entries
        const auto extras = app.remaining();
        for (size_t i = 0; i < extras.size(); ++i) {
            std::string tok = extras[i];
            if (tok.rfind("--", 0) != 0) {
                std::cerr << "unexpected argument '" << tok << "'\n";
                return optoring::exit_invalid_config;
            }
            tok = tok.substr(2);
            const auto eq = tok.find('=');
            if (eq != std::string::npos) {
                optoring::apply_override(kv, tok.substr(0, eq), tok.substr(eq + 1));
            } else if (i + 1 < extras.size()) {
                optoring::apply_override(kv, tok, extras[++i]);
            } else {
                std::cerr << "flag '--" << tok << "' needs a value\n";
                return optoring::exit_invalid_config;
            }
        }
        if (!sub.empty()) optoring::apply_override(kv, "sub", sub);
        if (!out_dir.empty()) optoring::apply_override(kv, "out", out_dir);
        if (!processes.empty()) optoring::apply_override(kv, "processes", processes);
        if (threads >= 0) optoring::apply_override(kv, "threads", std::to_string(threads));

        auto cfg = optoring::build_run_config(kv);
        if (cfg.subcommand.empty()) {
            std::cerr << "missing --sub\n";
            return optoring::exit_invalid_config;
        }
        return optoring::run(cfg);
    } catch (const optoring::ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return optoring::exit_invalid_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return optoring::exit_solver_failure;
    }
}
