#include "optoring/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "optoring/csv.hpp"
#include "optoring/device.hpp"
#include "optoring/keldysh.hpp"
#include "optoring/lindblad.hpp"

namespace optoring {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

json params_json(const SystemParams& p) {
    const auto d = derived_couplings(p);
    return json{{"omega_m", 1.0},
                {"delta_over_omega_m", p.delta},
                {"kappa_over_omega_m", p.kappa},
                {"gamma_over_omega_m", p.gamma},
                {"G1_over_omega_m", p.G1},
                {"G2_over_omega_m", p.G2},
                {"g1_over_omega_m", p.g1},
                {"g2_over_omega_m", p.g2},
                {"T_over_omega_m", p.T},
                {"N", p.N},
                {"kappa_cp_over_omega_m", p.kappa_cp},
                {"g_plus_over_omega_m", d.g_plus},
                {"g_minus_over_omega_m", d.g_minus},
                {"g_cri_over_omega_m", d.g_cri},
                {"lambda", d.lambda}};
}

json residuals_json(const SystemParams& p) {
    json out;
    for (Process proc : kAllProcesses) {
        try {
            out[std::string(1, process_label(proc))] = resonance_residual(p, proc);
        } catch (const InstabilityError&) {
            out[std::string(1, process_label(proc))] = nullptr;
        }
    }
    return out;
}

void write_manifest(const RunConfig& c, const SystemParams& p, json extra) {
    json m;
    m["subcommand"] = c.subcommand;
    m["params"] = params_json(p);
    if (stability_check(p)) m["resonance_residuals"] = residuals_json(p);
    m["active_processes"] = [&] {
        std::string s;
        for (Process proc : kAllProcesses)
            if (c.processes.has(proc)) s += process_label(proc);
        return s;
    }();
    m["threads"] = c.threads;
    m["seed"] = c.seed;
    m["extra"] = std::move(extra);
    // wall-clock field, excluded from determinism comparisons
    m["timestamp_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    std::ofstream out(join(c.out_dir, "manifest.json"));
    out << m.dump(2) << "\n";
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// order-stable parallel for: each worker owns a strided slice
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) threads = int(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) body(i);
        });
    for (auto& th : pool) th.join();
}

int run_spectrum(const RunConfig& c) {
    SystemParams p = c.to_params();
    if (!stability_check(p)) return exit_instability;
    PolaritonSpectrum s(p);
    const auto g = effective_couplings(s);
    double wmax = c.omega_grid.max;
    if (wmax <= 0.0) wmax = 2.0 * s.two_pi_block().omega[1];
    const auto grid = linspace(c.omega_grid.min, wmax, c.omega_grid.count);

    CsvWriter csv(join(c.out_dir, "spectrum.csv"),
                  {"omega_over_omega_m", "rho0", "rho", "r2_linear", "r2_nonlinear"});
    for (double w : grid) {
        const auto r = omit_reflectivity(s, g, w, p.kappa_cp, c.processes);
        csv.write_row({w, linear_cavity_dos(s, w), nonlinear_cavity_dos(s, g, w, c.processes),
                       r.linear, r.nonlinear});
    }
    write_manifest(c, p,
                   json{{"omega_grid_points", c.omega_grid.count},
                        {"C_eff", effective_cooperativity(s, g)},
                        {"I_nl", nonlinearity_strength(s, g, c.processes)}});
    return exit_ok;
}

void emit_resonance_curves(const RunConfig& c, double delta) {
    CsvWriter csv(join(c.out_dir, "resonances.csv"),
                  {"process", "delta_over_omega_m", "g_minus_over_omega_m",
                   "g_plus_over_omega_m"});
    for (Process proc : kAllProcesses) {
        const auto region = allowed_region(proc, delta);
        if (!region) continue;
        const int n = 201;
        for (int i = 0; i < n; ++i) {
            const double gm =
                region->g_minus_min +
                (region->g_minus_max - region->g_minus_min) * i / (n - 1);
            const auto gp = resonant_gplus(proc, delta, gm);
            if (!gp) continue;
            csv.write_row_mixed({std::string(1, process_label(proc)), format_float(delta),
                                 format_float(gm), format_float(*gp)});
        }
    }
}

int run_map(const RunConfig& c) {
    SystemParams base = c.to_params();
    const double gcri = critical_coupling(base);
    const auto gps = linspace(c.map_gp.min, c.map_gp.max, c.map_gp.count);
    const auto gms = linspace(c.map_gm.min, c.map_gm.max, c.map_gm.count);
    const int n = int(gps.size() * gms.size());
    std::vector<double> inl(n, -1.0);

    parallel_for(n, c.threads, [&](int idx) {
        const double tp = gps[idx % gps.size()];
        const double tm = gms[idx / gps.size()];
        SystemParams p = SystemParams::from_gpm(base.delta, tp * gcri, tm * gcri, base.kappa,
                                                base.gamma, base.g1, base.T, 2, base.kappa_cp);
        if (!stability_check(p) || !validate(p).ok()) return;
        PolaritonSpectrum s(p);
        const auto g = effective_couplings(s);
        inl[idx] = nonlinearity_strength(s, g, c.processes);
    });

    CsvWriter csv(join(c.out_dir, "map.csv"),
                  {"g_plus_over_gcri", "g_minus_over_gcri", "I_nl"});
    for (size_t im = 0; im < gms.size(); ++im)
        for (size_t ip = 0; ip < gps.size(); ++ip)
            csv.write_row({gps[ip], gms[im], inl[im * gps.size() + ip]});
    emit_resonance_curves(c, base.delta);
    write_manifest(c, base, json{{"cells", n}, {"g_cri_over_omega_m", gcri}});
    return exit_ok;
}

int run_linecut(const RunConfig& c) {
    SystemParams base = c.to_params();
    const double gcri = critical_coupling(base);
    const auto ts = linspace(c.linecut_t.min, c.linecut_t.max, c.linecut_t.count);
    std::vector<double> inl(ts.size(), -1.0);
    parallel_for(int(ts.size()), c.threads, [&](int i) {
        const double gp = ts[i] * gcri;
        const double gm = c.linecut_ratio * gp;
        SystemParams p = SystemParams::from_gpm(base.delta, gp, gm, base.kappa, base.gamma,
                                                base.g1, base.T, 2, base.kappa_cp);
        if (!stability_check(p) || !validate(p).ok()) return;
        PolaritonSpectrum s(p);
        inl[i] = nonlinearity_strength(s, effective_couplings(s), c.processes);
    });
    CsvWriter csv(join(c.out_dir, "linecut.csv"),
                  {"g_plus_over_gcri", "g_minus_over_gcri", "I_nl"});
    for (size_t i = 0; i < ts.size(); ++i)
        csv.write_row({ts[i], c.linecut_ratio * ts[i], inl[i]});
    emit_resonance_curves(c, base.delta);
    write_manifest(c, base, json{{"ratio", c.linecut_ratio}});
    return exit_ok;
}

int run_detuning(const RunConfig& c) {
    SystemParams p = c.to_params();
    if (!stability_check(p)) return exit_instability;
    const auto grid = linspace(c.detuning.min, c.detuning.max, c.detuning.count);
    DetuningProfile prof;
    try {
        prof = detuning_profile(p, p.delta, grid);
    } catch (const std::runtime_error& e) {
        std::cerr << "detuning: " << e.what() << "\n";
        return exit_solver_failure;
    }
    CsvWriter csv(join(c.out_dir, "detuning.csv"),
                  {"delta_over_omega_m", "C_eff", "min_reflectivity"});
    for (const auto& smp : prof.samples)
        csv.write_row({smp.delta, smp.c_eff, smp.min_reflectivity});
    write_manifest(c, p,
                   json{{"fit_amplitude", prof.fit.amplitude},
                        {"fit_center", prof.fit.center},
                        {"fit_width", prof.fit.width},
                        {"fit_converged", prof.fit.converged},
                        {"width_predicted", prof.gamma_predicted}});
    return prof.fit.converged ? exit_ok : exit_solver_failure;
}

int run_device(const RunConfig& c) {
    device::SymmetricGuess guess{c.device_guess_k1, c.device_guess_k2, c.device_guess_q1,
                                 c.device_guess_q2};
    const auto sol = device::solve_symmetric_configuration(1.0, c.device_transmission, guess);
    json out{{"k1L", sol.k1},
             {"k2L", sol.k2},
             {"q1_over_L", sol.q1},
             {"q2_over_L", sol.q2},
             {"g11", sol.g11},
             {"g12", sol.g12},
             {"ratio_gminus_gplus", sol.ratio_gminus_gplus}};
    std::ofstream f(join(c.out_dir, "device.json"));
    f << out.dump(2) << "\n";
    write_manifest(c, c.to_params(),
                   json{{"converged", sol.converged},
                        {"iterations", sol.iterations},
                        {"residual_norm", sol.residual_norm}});
    return sol.converged ? exit_ok : exit_solver_failure;
}

int run_oracle_compare(const RunConfig& c) {
    SystemParams p = c.to_params();
    if (!stability_check(p)) return exit_instability;
    PolaritonSpectrum s(p);
    const auto g = effective_couplings(s);
    const auto model = build_reduced_model(s, g, c.oracle_n_max_1, c.oracle_n_max_2);
    LindbladOracle oracle(model);
    SteadyState ss;
    try {
        ss = oracle.steady_state();
    } catch (const std::runtime_error& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return exit_solver_failure;
    }
    const double w0 = s.two_pi_block().omega[0];
    const double kap = s.two_pi_block().kappa_eff[0];
    const auto grid = linspace(w0 - c.oracle_window_kappas * kap,
                               w0 + c.oracle_window_kappas * kap, c.oracle_count);
    const auto spec = oracle_cavity_dos(s, g, oracle, ss, grid);
    CsvWriter csv(join(c.out_dir, "oracle_compare.csv"),
                  {"omega_over_omega_m", "dos_oracle", "dos_keldysh", "relative_deviation"});
    for (size_t i = 0; i < spec.omega.size(); ++i)
        csv.write_row({spec.omega[i], spec.dos_oracle[i], spec.dos_keldysh[i],
                       std::abs(spec.dos_oracle[i] - spec.dos_keldysh[i]) /
                           std::max(spec.dos_keldysh[i], 1e-300)});
    write_manifest(c, p,
                   json{{"steady_residual", ss.liouvillian_residual},
                        {"top_population_1", ss.top_population_1},
                        {"top_population_2", ss.top_population_2},
                        {"n_max_1", model.n_max_1},
                        {"n_max_2", model.n_max_2}});
    return exit_ok;
}

int run_modes(const RunConfig& c) {
    SystemParams p = c.to_params();
    if (!stability_check(p)) return exit_instability;
    PolaritonSpectrum s(p);
    CsvWriter csv(join(c.out_dir, "modes.csv"),
                  {"k_over_pi", "branch", "omega_over_omega_m", "kappa_over_kappa", "n_occ",
                   "T_eff_over_omega_m"});
    for (const auto& b : s.blocks())
        for (int br = 0; br < 2; ++br)
            csv.write_row_mixed({format_float(b.k / M_PI), br == 0 ? "-" : "+",
                                 format_float(b.omega[br]),
                                 format_float(b.kappa_eff[br] / p.kappa),
                                 format_float(b.n_occ[br]), format_float(b.T_eff[br])});
    write_manifest(c, p, json{{"modes", 2 * p.N}});
    return exit_ok;
}

}  // namespace

int run(RunConfig c) {
    if (const char* env = std::getenv("OPTORING_OUT"); env && *env) c.out_dir = env;
    std::error_code ec;
    fs::create_directories(c.out_dir, ec);
    if (ec) {
        std::cerr << "cannot create output directory '" << c.out_dir << "'\n";
        return exit_invalid_config;
    }

    const auto report = validate(c.to_params());
    if (!report.ok() && c.subcommand != "device") {
        for (const auto& v : report.violations) std::cerr << "invalid config: " << v << "\n";
        return exit_invalid_config;
    }

    try {
        if (c.subcommand == "spectrum") return run_spectrum(c);
        if (c.subcommand == "map") return run_map(c);
        if (c.subcommand == "linecut") return run_linecut(c);
        if (c.subcommand == "detuning") return run_detuning(c);
        if (c.subcommand == "device") return run_device(c);
        if (c.subcommand == "oracle-compare") return run_oracle_compare(c);
        if (c.subcommand == "modes") return run_modes(c);
    } catch (const InstabilityError& e) {
        std::cerr << "instability: " << e.what() << "\n";
        return exit_instability;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_solver_failure;
    }
    std::cerr << "unknown subcommand '" << c.subcommand << "'\n";
    return exit_invalid_config;
}

}  // namespace optoring
