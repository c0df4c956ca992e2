// acceptance — integration gate: one line per criterion, exit code = number
// of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "optoring/device.hpp"
#include "optoring/keldysh.hpp"
#include "optoring/lindblad.hpp"
#include "optoring/params.hpp"
#include "optoring/polaritons.hpp"
#include "optoring/resonances.hpp"
#include "oracles.hpp"

using namespace optoring;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %2d: %s (%s; %.1fs)\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
    Timer t;
    double worst = 0.0;
    for (double delta : {-0.5, -1.0, -1.5, -2.0, -4.0, -8.0}) {
        SystemParams p;
        p.delta = delta;
        p.G1 = p.G2 = 0.0;
        const auto w = polariton_frequencies(p, 0.0);
        const double lo = std::min(1.0, std::abs(delta));
        const double hi = std::max(1.0, std::abs(delta));
        worst = std::max(worst, std::abs(w[0] - lo) / lo);
        worst = std::max(worst, std::abs(w[1] - hi) / hi);
    }
    report(1, "linear-limit frequencies equal {omega_m, |delta|}", worst <= 1e-12,
           fmt("max rel err %.1e, tol 1e-12", worst), t.elapsed());
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
    Timer t;
    oracles::RandomStableParams gen(2024u);
    double worst_freq = 0.0, worst_diag = 0.0, worst_symp = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        SystemParams p = gen.next();
        for (double k : {M_PI, 2.0 * M_PI}) {
            const auto w = polariton_frequencies(p, many_photon_coupling(p, k).magnitude);
            const auto wn = oracles::numeric_frequencies(p, k);
            worst_freq = std::max(worst_freq, std::abs(w[0] - wn[0]) / wn[0]);
            worst_freq = std::max(worst_freq, std::abs(w[1] - wn[1]) / wn[1]);
            worst_diag = std::max(worst_diag, oracles::diagonalization_residual(p, k));
            worst_symp =
                std::max(worst_symp, oracles::symplectic_residual(transform_matrix(p, k)));
        }
    }
    const bool ok = worst_freq <= 1e-10 && worst_diag <= 1e-10 && worst_symp <= 1e-10;
    report(2, "diagonalization oracle on 100 random stable sets", ok,
           fmt("freq %.1e, diag %.1e, symplectic %.1e, tol 1e-10", worst_freq, worst_diag,
               worst_symp),
           t.elapsed());
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
    Timer t;
    SystemParams p = SystemParams::from_gpm(-1.5, 0.4, 0.2, 0.1, 1e-5);
    p.N = 64;
    double worst_sum = 0.0;
    bool ordered = true;
    for (int j = 0; j < p.N; ++j) {
        const double k = 2.0 * M_PI * (j + 1) / p.N;
        const auto kap = damping_rates(p, k);
        worst_sum = std::max(worst_sum, std::abs(kap[0] + kap[1] - p.kappa) / p.kappa);
        ordered = ordered && kap[0] < kap[1];
    }
    report(3, "k-resolved damping curves (sum rule 1%, minus < plus)",
           worst_sum <= 0.01 && ordered,
           fmt("max |sum-kappa|/kappa %.1e, ordering %s", worst_sum,
               ordered ? "ok" : "BROKEN"),
           t.elapsed());
}

// ---------------------------------------------------------------- criterion 4
std::optional<double> bisect_gplus(Process proc, double delta, double gm) {
    const double gcri = 0.5 * std::sqrt(std::abs(delta));
    auto residual = [&](double gp) {
        SystemParams p = SystemParams::from_gpm(delta, gp, gm, 0.1, 1e-5);
        return resonance_residual(p, proc);
    };
    double lo = 1e-12, hi = gcri * (1.0 - 1e-13);
    double flo = residual(lo);
    if (flo * residual(hi) > 0.0) return std::nullopt;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (flo * residual(mid) <= 0.0)
            hi = mid;
        else {
            lo = mid;
            flo = residual(mid);
        }
    }
    return 0.5 * (lo + hi);
}

void criterion_4() {
    Timer t;
    std::mt19937 rng(4u);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    double worst = 0.0;
    int outside_nonempty = 0, outside_total = 0;
    for (Process proc : kAllProcesses) {
        int hits = 0;
        while (hits < 100) {
            const double delta = -(0.55 + 7.0 * ud(rng));
            const auto region = allowed_region(proc, delta);
            if (!region) continue;
            const double gm =
                region->g_minus_min +
                (region->g_minus_max - region->g_minus_min) * (0.02 + 0.96 * ud(rng));
            const auto formula = resonant_gplus(proc, delta, gm);
            if (!formula) continue;
            const auto root = bisect_gplus(proc, delta, gm);
            if (!root) continue;
            worst = std::max(worst, std::abs(*formula - *root));
            ++hits;
        }
        for (int i = 0; i < 40; ++i) {
            const double delta = -(0.55 + 7.0 * ud(rng));
            const auto region = allowed_region(proc, delta);
            if (!region) continue;
            const double gcri = 0.5 * std::sqrt(std::abs(delta));
            if (region->g_minus_min > 1e-6) {
                ++outside_total;
                if (resonant_gplus(proc, delta, region->g_minus_min * 0.99))
                    ++outside_nonempty;
            }
            if (region->g_minus_max < gcri * (1.0 - 1e-9)) {
                const double above = std::min(region->g_minus_max * 1.01, gcri * 0.99999);
                ++outside_total;
                if (resonant_gplus(proc, delta, above)) ++outside_nonempty;
            }
        }
    }
    report(4, "resonance formulas vs bisection roots (5 x 100 points)",
           worst <= 1e-8 && outside_nonempty == 0,
           fmt("max |formula-root| %.1e (tol 1e-8), outside-region leaks %d/%d", worst,
               outside_nonempty, outside_total),
           t.elapsed());
}

// ---------------------------------------------------------------- criterion 5
cplx quadrature_sigma(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                      const SelfEnergyRow& row, double w) {
    const auto& prow = process_table(row.process);
    const FourMode ini = to_four_mode(prow.initial);
    const FourMode f1 = to_four_mode(prow.finals[0]);
    const FourMode f2 = to_four_mode(prow.finals[1]);
    const double gs2 = g[row.process] * g[row.process];
    auto GR = [&](FourMode m, double x) {
        return bare_green_functions(s, to_mode_index(m), x).retarded;
    };
    auto GA = [&](FourMode m, double x) {
        return bare_green_functions(s, to_mode_index(m), x).advanced;
    };
    auto GK = [&](FourMode m, double x) {
        return bare_green_functions(s, to_mode_index(m), x).keldysh;
    };
    auto wom = [&](FourMode m) { return s.blocks()[m / 2].omega[m % 2]; };
    auto kap = [&](FourMode m) { return s.blocks()[m / 2].kappa_eff[m % 2]; };
    const cplx i2pi = cplx(0.0, 1.0) / (2.0 * M_PI);
    const double width = std::max({kap(ini), kap(f1), kap(f2)});
    switch (row.type) {
        case DiagramType::d1a: {
            auto f = [&](double x) { return GK(f1, x) * GR(f1, w - x); };
            return 2.0 * gs2 * i2pi *
                   oracles::line_integral(f, {wom(f1), w - wom(f1)}, width);
        }
        case DiagramType::d1b: {
            auto f = [&](double x) {
                return GK(f1, x) * GR(f2, w - x) + GK(f2, x) * GR(f1, w - x);
            };
            return 0.5 * gs2 * i2pi *
                   oracles::line_integral(
                       f, {wom(f1), wom(f2), w - wom(f1), w - wom(f2)}, width);
        }
        case DiagramType::d2a: {
            auto f = [&](double x) {
                return GK(row.mode, x) * GR(ini, x + w) + GK(ini, x) * GA(row.mode, x - w);
            };
            return 2.0 * gs2 * i2pi *
                   oracles::line_integral(
                       f, {wom(row.mode), wom(ini), wom(ini) - w, w + wom(row.mode)},
                       width);
        }
        case DiagramType::d2b: {
            const FourMode other = (row.mode == f1) ? f2 : f1;
            auto f = [&](double x) {
                return GK(other, x) * GR(ini, x + w) + GK(ini, x) * GA(other, x - w);
            };
            return 0.5 * gs2 * i2pi *
                   oracles::line_integral(
                       f, {wom(other), wom(ini), wom(ini) - w, w + wom(other)}, width);
        }
    }
    return 0.0;
}

void criterion_5() {
    Timer t;
    oracles::RandomStableParams gen(5u);
    double worst = 0.0;
    int per_type[4] = {0, 0, 0, 0};
    while (per_type[0] < 10 || per_type[1] < 10 || per_type[2] < 10 || per_type[3] < 10) {
        SystemParams p = gen.next();
        PolaritonSpectrum s(p);
        const auto g = effective_couplings(s);
        for (const auto& row : self_energy_table()) {
            if (per_type[int(row.type)] >= 10) continue;
            if (std::abs(g[row.process]) < 1e-14) continue;
            const double w0 = s.blocks()[row.mode / 2].omega[row.mode % 2];
            for (double w : {w0, w0 + 0.05}) {
                const cplx closed = self_energy_term(s, g, row.mode, row.process, w);
                const cplx integral = quadrature_sigma(s, g, row, w);
                worst = std::max(worst, std::abs(closed - integral) / std::abs(closed));
            }
            ++per_type[int(row.type)];
        }
    }
    SystemParams pd = SystemParams::from_gpm(-1.5, 0.31, 0.31, 0.1, 1e-5, 1e-3);
    PolaritonSpectrum sd(pd);
    EffectiveCouplings unit{};
    for (int i = 0; i < 5; ++i) unit.g[i] = 1.0;
    double worst_sym = 0.0;
    for (double w : {0.7, 0.81, 1.3, 1.62}) {
        const cplx a1 = self_energy_term(sd, unit, plus_2pi, Process::a, w);
        const cplx b1 = self_energy_term(sd, unit, plus_pi, Process::c, w);
        const cplx a2 = self_energy_term(sd, unit, minus_pi, Process::a, w);
        const cplx b2 = self_energy_term(sd, unit, minus_2pi, Process::c, w);
        worst_sym = std::max(worst_sym, std::abs(b1 - 0.5 * a1) / std::abs(a1));
        worst_sym = std::max(worst_sym, std::abs(b2 - 0.25 * a2) / std::abs(a2));
    }
    report(5, "self-energy closed forms vs quadrature, symmetry factors",
           worst <= 1e-6 && worst_sym <= 1e-13,
           fmt("max quadrature rel dev %.1e (tol 1e-6), symmetry %.1e (tol 1e-13)", worst,
               worst_sym),
           t.elapsed());
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
    Timer t;
    const double delta = -1.5, kappa = 0.1;
    const double gcri = 0.5 * std::sqrt(1.5);
    const int N = 200, W = 8;
    const double tmin = 0.02, tmax = 0.99;
    std::vector<double> inl(N * N, -1.0);
    auto tval = [&](int i) { return tmin + (tmax - tmin) * i / (N - 1); };
    const int threads = std::max(2u, std::thread::hardware_concurrency());
    auto work = [&](int tid) {
        for (int idx = tid; idx < N * N; idx += threads) {
            const double tp = tval(idx % N), tm = tval(idx / N);
            SystemParams p = SystemParams::from_gpm(delta, tp * gcri, tm * gcri, kappa,
                                                    1e-4 * kappa, 2e-3 * kappa);
            if (!stability_check(p)) continue;
            PolaritonSpectrum s(p);
            inl[idx] = nonlinearity_strength(s, effective_couplings(s));
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();

    const double cell = (tmax - tmin) / (N - 1);
    std::string frac_report;
    bool colocated = true;
    double ridge_max[5] = {0, 0, 0, 0, 0};
    for (Process proc : kAllProcesses) {
        const auto region = allowed_region(proc, delta);
        int sampled = 0, within = 0;
        for (int im = 0; im < N && region; ++im) {
            const double gm = tval(im) * gcri;
            if (gm < region->g_minus_min || gm > region->g_minus_max) continue;
            const auto gp = resonant_gplus(proc, delta, gm);
            if (!gp) continue;
            const double tpred = *gp / gcri;
            const int c_pred = int(std::lround((tpred - tmin) / cell));
            if (c_pred < W || c_pred >= N - W) continue;
            bool usable = true;
            for (int ip = c_pred - W; ip <= c_pred + W; ++ip)
                if (inl[im * N + ip] < 0) usable = false;
            if (!usable) continue;
            ++sampled;
            // crest across the curve: window argmax after a linear detrend
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int n = 0;
            for (int ip = c_pred - W; ip <= c_pred + W; ++ip) {
                const double x = ip - c_pred, y = inl[im * N + ip];
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
                ++n;
            }
            const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            const double icpt = (sy - slope * sx) / n;
            int best = c_pred - W;
            double bestv = -1e300;
            for (int ip = c_pred - W; ip <= c_pred + W; ++ip) {
                const double resid = inl[im * N + ip] - (icpt + slope * (ip - c_pred));
                if (resid > bestv) {
                    bestv = resid;
                    best = ip;
                }
            }
            if (std::abs(tval(best) - tpred) <= cell) ++within;
            ridge_max[int(proc)] = std::max(ridge_max[int(proc)], inl[im * N + c_pred]);
        }
        const double frac = sampled ? double(within) / sampled : 0.0;
        frac_report += fmt("%c:%.2f ", process_label(proc), frac);
        colocated = colocated && frac >= 0.9;
    }
    const bool e_above_a = ridge_max[int(Process::e)] > ridge_max[int(Process::a)];
    report(6, "I_nl map: five ridges within one cell, (e) above (a)",
           colocated && e_above_a,
           fmt("co-location fractions %s| on-curve max e=%.1e a=%.1e", frac_report.c_str(),
               ridge_max[int(Process::e)], ridge_max[int(Process::a)]),
           t.elapsed());
}

// ---------------------------------------------------------------- criterion 7
void criterion_7() {
    Timer t;
    const double lambda = 0.9;
    double worst = 0.0;
    for (int ad = 4; ad <= 12; ++ad) {
        const double delta = -double(ad);
        SystemParams ref;
        ref.delta = delta;
        ref.kappa = 0.1;
        ref.gamma = 1e-5;
        ref.g1 = 2e-4;
        const double gcri = critical_coupling(ref);
        const auto gp = resonant_gplus(Process::e, delta, lambda * gcri);
        if (!gp) continue;
        SystemParams p =
            SystemParams::from_gpm(delta, *gp, lambda * gcri, ref.kappa, ref.gamma, ref.g1);
        PolaritonSpectrum s(p);
        const double full = effective_cooperativity(s, effective_couplings(s));
        const double asym = asymptotic_bundle(delta, lambda, ref).c_eff_asym;
        worst = std::max(worst, std::abs(full / asym - 1.0));
    }
    report(7, "full C_eff vs asymptotic form, lambda=0.9, |delta| in [4,12]", worst <= 0.15,
           fmt("max rel dev %.3f, tol 0.15", worst), t.elapsed());
}

// ---------------------------------------------------------------- criterion 8
void criterion_8() {
    Timer t;
    SystemParams p = SystemParams::from_gpm(-8.0, 1.137, 1.35, 0.1, 1e-5, 2e-4);
    p.kappa_cp = 0.1 * p.kappa;
    std::vector<double> grid;
    for (int i = 0; i <= 240; ++i) grid.push_back(-8.12 + 0.24 * i / 240.0);
    const auto prof = detuning_profile(p, -8.0, grid);
    const double width_err =
        std::abs(prof.fit.width - prof.gamma_predicted) / prof.gamma_predicted;
    double best_r = -1.0, best_delta = 0.0;
    for (const auto& smp : prof.samples)
        if (smp.min_reflectivity > best_r) {
            best_r = smp.min_reflectivity;
            best_delta = smp.delta;
        }
    const bool ok =
        prof.fit.converged && width_err <= 0.10 && std::abs(best_delta + 8.0) <= 0.05;
    report(8, "detuning Lorentzian width and reflectivity peak at -8", ok,
           fmt("fit width %.2e vs predicted %.2e (dev %.1f%%), refl peak at %.3f",
               prof.fit.width, prof.gamma_predicted, 100.0 * width_err, best_delta),
           t.elapsed());
}

// ---------------------------------------------------------------- criterion 9
void criterion_9() {
    Timer t;
    SystemParams p = SystemParams::from_gpm(-8.0, 1.137, 1.35, 0.1, 1e-5, 2e-4);
    PolaritonSpectrum s(p);
    const auto g = effective_couplings(s);
    const double w0 = s.two_pi_block().omega[0];
    auto deviation = [&](double kcp) {
        double worst = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double w = w0 - 0.05 + 0.1 * i / 400.0;
            const auto r = omit_reflectivity(s, g, w, kcp);
            const double dos = nonlinear_cavity_dos(s, g, w);
            worst =
                std::max(worst, std::abs(r.nonlinear - (1.0 - 2.0 * M_PI * kcp * dos)));
        }
        return worst;
    };
    const double kcp = 0.1 * p.kappa;
    const double ratio = deviation(kcp) / deviation(0.5 * kcp);
    report(9, "OMIT-DOS deviation scales quadratically in kappa_cp",
           ratio >= 3.5 && ratio <= 4.5, fmt("deviation ratio %.3f, window [3.5, 4.5]", ratio),
           t.elapsed());
}

// --------------------------------------------------------------- criterion 10
void criterion_10() {
    Timer t;
    std::string detail;
    bool ok = true;
    for (double g1k : {2e-3, 0.05}) {
        const auto gp = resonant_gplus(Process::e, -1.5, 0.52);
        PolaritonSpectrum s(SystemParams::from_gpm(-1.5, *gp, 0.52, 0.1, 1e-5, g1k * 0.1));
        const auto g = effective_couplings(s);
        LindbladOracle oracle(build_reduced_model(s, g, 14, 6));
        const auto ss = oracle.steady_state();
        const double w0 = s.two_pi_block().omega[0];
        const double kap = s.two_pi_block().kappa_eff[0];
        std::vector<double> grid;
        for (int i = 0; i <= 40; ++i)
            grid.push_back(w0 - 4.0 * kap + 8.0 * kap * i / 40.0);
        const auto spec = oracle_cavity_dos(s, g, oracle, ss, grid);
        double worst = 0.0;
        for (size_t i = 0; i < grid.size(); ++i)
            worst = std::max(worst, std::abs(spec.dos_oracle[i] - spec.dos_keldysh[i]) /
                                        spec.dos_keldysh[i]);
        ok = ok && worst <= 0.10 && ss.top_population_1 < 1e-4 &&
             ss.top_population_2 < 1e-4;
        detail += fmt("g1/kappa=%.0e: dev %.1e, top pops %.0e/%.0e; ", g1k, worst,
                      ss.top_population_1, ss.top_population_2);
    }
    report(10, "Lindblad oracle vs Keldysh DOS within 10% on the peak", ok,
           detail + "tol 0.10, pops < 1e-4", t.elapsed());
}

// --------------------------------------------------------------- criterion 11
void criterion_11() {
    Timer t;
    const auto sol = device::solve_symmetric_configuration(1.0, 0.85);
    device::DeviceConfig c;
    c.q1 = sol.q1;
    c.q2 = sol.q2;
    c.transmission = 0.85;
    double worst_fd = 0.0;
    for (double k0 : {sol.k1, sol.k2}) {
        const auto g = device::bare_couplings(c, k0);
        for (int j = 0; j < 2; ++j) {
            auto move = [&](double h) {
                device::DeviceConfig cc = c;
                (j == 0 ? cc.q1 : cc.q2) += h;
                const auto r = device::optical_modes(cc, k0 - 0.15, k0 + 0.15, 600);
                return r.empty() ? NAN : r.front();
            };
            const double fd = (move(1e-6) - move(-1e-6)) / 2e-6;
            const double closed = (j == 0 ? g.g_to_membrane_1 : g.g_to_membrane_2);
            worst_fd = std::max(worst_fd, std::abs(fd - closed) / std::abs(closed));
        }
    }
    const double ratio_err = std::abs(sol.ratio_gminus_gplus - 1.187);
    const bool ok = sol.converged && worst_fd <= 1e-4 && ratio_err <= 1e-3;
    report(11, "device solution: ratio 1.187 +- 0.001, couplings vs FD", ok,
           fmt("ratio %.5f (|err| %.2e vs tol 1e-3), FD dev %.1e, converged %d",
               sol.ratio_gminus_gplus, ratio_err, worst_fd, int(sol.converged)),
           t.elapsed());
}

// --------------------------------------------------------------- criterion 12
void criterion_12() {
    Timer t;
    const double delta = -1.5, kappa = 0.01, ratio = 1.187;
    const double gcri = 0.5 * std::sqrt(1.5);
    auto inl_ray = [&](double tt, double rr) {
        SystemParams p = SystemParams::from_gpm(delta, tt * gcri, rr * tt * gcri, kappa,
                                                1e-4 * kappa, 2e-3 * kappa);
        if (!stability_check(p)) return -1.0;
        PolaritonSpectrum s(p);
        return nonlinearity_strength(s, effective_couplings(s));
    };
    auto crossing = [&](Process proc) -> double {
        double prev_f = NAN, prev_t = NAN;
        for (int i = 0; i <= 6000; ++i) {
            const double tt = 0.05 + (0.8415 - 0.05) * i / 6000.0;
            const auto gp = resonant_gplus(proc, delta, ratio * tt * gcri);
            const double f = gp ? *gp - tt * gcri : NAN;
            if (!std::isnan(prev_f) && !std::isnan(f) && prev_f * f <= 0) {
                double a = prev_t, b = tt;
                for (int j = 0; j < 80; ++j) {
                    const double m = 0.5 * (a + b);
                    const auto gg = resonant_gplus(proc, delta, ratio * m * gcri);
                    const double fm = gg ? *gg - m * gcri : NAN;
                    if (prev_f * fm <= 0)
                        b = m;
                    else
                        a = m;
                }
                return 0.5 * (a + b);
            }
            prev_f = f;
            prev_t = tt;
        }
        return -1.0;
    };
    auto local_peak = [&](double t0, double rr, double halfw, double& where) {
        const int M = 201;
        std::vector<double> vs(M);
        int best = 0;
        for (int i = 0; i < M; ++i) {
            vs[i] = inl_ray(t0 - halfw + 2.0 * halfw * i / (M - 1), rr);
            if (vs[i] > vs[best]) best = i;
        }
        where = t0 - halfw + 2.0 * halfw * best / (M - 1);
        const bool interior = best > 0 && best < M - 1;
        return interior ? vs[best] : -1.0;
    };

    std::string detail;
    bool ok = true;
    double peak_e_val = 0.0, peak_e_t = 0.0, peak_acb_max = 0.0;
    for (Process proc : {Process::a, Process::c, Process::b, Process::e}) {
        const double t0 = crossing(proc);
        if (t0 < 0) {
            ok = false;
            detail += fmt("%c:no-crossing ", process_label(proc));
            continue;
        }
        double where = 0.0;
        const double v = local_peak(t0, ratio, 0.012, where);
        // the (a) feature is several linewidths wide; its crest rides the
        // neighboring (c) flank, so it gets a width-scale tolerance
        const double tol = (proc == Process::a) ? 0.010 : 0.004;
        const bool found = v > 0.0 && std::abs(where - t0) <= tol;
        ok = ok && found;
        if (proc == Process::e) {
            peak_e_val = v;
            peak_e_t = where;
        } else {
            peak_acb_max = std::max(peak_acb_max, v);
        }
        detail += fmt("%c:%+.4f ", process_label(proc), where - t0);
    }
    const double gp_peak = peak_e_t * gcri, gm_peak = ratio * gp_peak;
    const double G1 = 0.5 * (gp_peak + gm_peak), G2 = 0.5 * (gp_peak - gm_peak);
    ok = ok && std::abs(peak_e_t - 0.80) <= 0.04 && std::abs(G1 - 0.54) <= 0.03 &&
         std::abs(G2 + 0.05) <= 0.02 && peak_e_val > peak_acb_max;

    const auto gb = resonant_gplus(Process::b, delta, 0.1);
    const double td = *gb / gcri;
    double where_d = 0.0;
    const double vd = local_peak(td, 1.0, 0.012, where_d);
    const double enh = vd > 0.0 ? peak_e_val / vd : 0.0;
    ok = ok && vd > 0.0 && std::abs(where_d - td) <= 0.004 && vd < 3.0 * peak_acb_max &&
         vd > peak_acb_max / 3.0 && enh >= 10.0;

    report(12, "line cut: four peaks, (e) peak at 0.80 G_cri, enhancement >= 10", ok,
           fmt("offsets %s| e-peak t=%.3f G1=%.3f G2=%.3f, decoupled %.1e, enhancement %.0f",
               detail.c_str(), peak_e_t, G1, G2, vd, enh),
           t.elapsed());
}

// --------------------------------------------------------------- criterion 13
void criterion_13() {
    Timer t;
    SystemParams p4 = SystemParams::from_gpm(-8.0, 1.137, 1.35, 0.1, 1e-5, 2e-4);
    const auto cmp = two_mode_comparison(p4, -1.99);
    const double rel = std::abs(cmp.c_eff_full - cmp.c_eff_two_mode) / cmp.c_eff_two_mode;
    const bool ok =
        rel <= 0.20 && cmp.enhancement_ratio >= 1e3 && cmp.enhancement_ratio <= 1e5;
    report(13, "two-mode benchmark (45/8)(g/kappa)^2 and enhancement", ok,
           fmt("C_eff dev %.1f%% (tol 20%%), enhancement %.0f in [1e3, 1e5]", 100.0 * rel,
               cmp.enhancement_ratio),
           t.elapsed());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("%d/13 criteria passed\n", 13 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
