#include "optoring/keldysh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace optoring {

namespace {

void require_two_cells(const PolaritonSpectrum& s) {
    if (s.n_cells() != 2)
        throw std::invalid_argument("nonlinear treatment is defined for N = 2");
}

double mode_omega(const PolaritonSpectrum& s, FourMode m) {
    return s.blocks()[m / 2].omega[m % 2];
}
double mode_kappa(const PolaritonSpectrum& s, FourMode m) {
    return s.blocks()[m / 2].kappa_eff[m % 2];
}
double mode_n(const PolaritonSpectrum& s, FourMode m) {
    return s.blocks()[m / 2].n_occ[m % 2];
}

FourMode pack(const ModeIndex& m) { return FourMode(2 * m.j + int(m.sigma)); }

}  // namespace

ModeIndex to_mode_index(FourMode m) { return {Branch(m % 2), m / 2}; }
FourMode to_four_mode(const ModeIndex& m) { return pack(m); }

ProcessSet ProcessSet::only(Process p) {
    ProcessSet ps = none();
    ps.active[int(p)] = true;
    return ps;
}

EffectiveCouplings effective_couplings(const PolaritonSpectrum& s) {
    require_two_cells(s);
    const auto& p = s.params();
    // phases vanish for N=2 with G_+, G_- >= 0, so the V entries are real
    const auto& Vp = s.pi_block().transform.V;     // V'
    const auto& Vpp = s.two_pi_block().transform.V;  // V''
    auto rp = [&](int i, int j) { return Vp(i, j).real(); };
    auto rpp = [&](int i, int j) { return Vpp(i, j).real(); };

    const double gp = (p.g1 + p.g2) / std::sqrt(2.0);
    const double gm = (p.g1 - p.g2) / std::sqrt(2.0);

    const double xp = rp(0, 0) + rp(0, 2);    // phonon weight of (-,pi)
    const double yp = rp(0, 1) + rp(0, 3);    // phonon weight of (+,pi)
    const double xpp = rpp(0, 0) + rpp(0, 2);  // phonon weight of (-,2pi)
    const double ypp = rpp(0, 1) + rpp(0, 3);  // phonon weight of (+,2pi)

    EffectiveCouplings out;
    out.g[int(Process::a)] =
        gp * ypp * rp(1, 0) * rp(1, 2) +
        gm * xp * (rpp(1, 1) * rp(1, 0) + rpp(1, 3) * rp(1, 2));
    // both vertex legs sit at k = 2pi, so the phonon momentum is 2pi: g_+ twice
    out.g[int(Process::b)] =
        gp * (ypp * rpp(1, 0) * rpp(1, 2) +
              xpp * (rpp(1, 1) * rpp(1, 0) + rpp(1, 3) * rpp(1, 2)));
    out.g[int(Process::c)] =
        gp * xpp * (rp(1, 1) * rp(1, 0) + rp(1, 3) * rp(1, 2)) +
        gm * (xp * (rp(1, 1) * rpp(1, 0) + rp(1, 3) * rpp(1, 2)) +
              yp * (rpp(1, 0) * rp(1, 2) + rp(1, 0) * rpp(1, 2)));
    out.g[int(Process::d)] =
        gp * ypp * (rp(1, 1) * rp(1, 0) + rp(1, 3) * rp(1, 2)) +
        gm * (xp * (rp(1, 1) * rpp(1, 1) + rp(1, 3) * rpp(1, 3)) +
              yp * (rpp(1, 1) * rp(1, 2) + rp(1, 0) * rpp(1, 3)));
    out.g[int(Process::e)] =
        gp * xpp * rp(1, 0) * rp(1, 2) +
        gm * xp * (rpp(1, 0) * rp(1, 0) + rpp(1, 2) * rp(1, 2));
    return out;
}

double g_tilde_e_closed_form(const PolaritonSpectrum& s) {
    require_two_cells(s);
    const auto& p = s.params();
    const double ad = std::abs(p.delta);
    const double thp = s.pi_block().transform.theta_k;
    const double thpp = s.two_pi_block().transform.theta_k;
    const double w1 = s.pi_block().omega[0];
    const double w2 = s.two_pi_block().omega[0];
    const double gp = p.g1 + p.g2, gm = p.g1 - p.g2;
    return 0.125 * std::sqrt(2.0 * p.omega_m / w2) *
           (gp * std::sin(thp) * std::sin(thp) * std::cos(thpp) * (ad / w1 - w1 / ad) +
            gm * std::sin(2.0 * thp) * std::sin(thpp) * (ad / w1 + w2 / ad));
}

const std::vector<SelfEnergyRow>& self_energy_table() {
    static const std::vector<SelfEnergyRow> table = [] {
        std::vector<SelfEnergyRow> t;
        for (Process p : kAllProcesses) {
            const auto& row = process_table(p);
            const bool identical = pack(row.finals[0]) == pack(row.finals[1]);
            t.push_back({pack(row.initial), p, identical ? DiagramType::d1a : DiagramType::d1b});
            if (identical) {
                t.push_back({pack(row.finals[0]), p, DiagramType::d2a});
            } else {
                t.push_back({pack(row.finals[0]), p, DiagramType::d2b});
                t.push_back({pack(row.finals[1]), p, DiagramType::d2b});
            }
        }
        return t;
    }();
    return table;
}

std::optional<DiagramType> diagram_type(FourMode mode, Process process) {
    for (const auto& r : self_energy_table())
        if (r.mode == mode && r.process == process) return r.type;
    return std::nullopt;
}

cplx self_energy_term(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                      FourMode mode, Process process, double omega) {
    require_two_cells(s);
    const auto type = diagram_type(mode, process);
    if (!type)
        throw std::invalid_argument("mode does not participate in this process");
    const auto& row = process_table(process);
    const FourMode ini = pack(row.initial);
    const FourMode f1 = pack(row.finals[0]);
    const FourMode f2 = pack(row.finals[1]);
    const double gs2 = g[process] * g[process];

    switch (*type) {
        case DiagramType::d1a: {
            const double w = mode_omega(s, f1), kap = mode_kappa(s, f1), n = mode_n(s, f1);
            return 2.0 * gs2 * (1.0 + 2.0 * n) / cplx(omega - 2.0 * w, kap);
        }
        case DiagramType::d1b: {
            const double w1 = mode_omega(s, f1), k1 = mode_kappa(s, f1), n1 = mode_n(s, f1);
            const double w2 = mode_omega(s, f2), k2 = mode_kappa(s, f2), n2 = mode_n(s, f2);
            return gs2 * (1.0 + n1 + n2) / cplx(omega - w1 - w2, 0.5 * (k1 + k2));
        }
        case DiagramType::d2a: {
            const double wi = mode_omega(s, ini), ki = mode_kappa(s, ini), ni = mode_n(s, ini);
            const double wm = mode_omega(s, mode), km = mode_kappa(s, mode), nm = mode_n(s, mode);
            return 4.0 * gs2 * (nm - ni) / cplx(omega - wi + wm, 0.5 * (ki + km));
        }
        case DiagramType::d2b: {
            const FourMode other = (mode == f1) ? f2 : f1;
            const double wi = mode_omega(s, ini), ki = mode_kappa(s, ini), ni = mode_n(s, ini);
            const double wo = mode_omega(s, other), ko = mode_kappa(s, other),
                         no = mode_n(s, other);
            return gs2 * (no - ni) / cplx(omega - wi + wo, 0.5 * (ki + ko));
        }
    }
    return 0.0;
}

cplx total_self_energy(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                       FourMode mode, double omega, const ProcessSet& ps) {
    cplx sum = 0.0;
    for (const auto& r : self_energy_table())
        if (r.mode == mode && ps.has(r.process))
            sum += self_energy_term(s, g, mode, r.process, omega);
    return sum;
}

cplx dressed_green_function(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                            FourMode mode, double omega, const ProcessSet& ps) {
    const double w = mode_omega(s, mode), kap = mode_kappa(s, mode);
    return 1.0 / (cplx(omega - w, 0.5 * kap) - total_self_energy(s, g, mode, omega, ps));
}

cplx cavity_green_nonlinear(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                            double omega, const ProcessSet& ps) {
    require_two_cells(s);
    cplx sum = 0.0;
    for (int j = 0; j < 2; ++j) {
        const auto& V = s.blocks()[j].transform.V;
        for (int br = 0; br < 2; ++br) {
            const FourMode m = FourMode(2 * j + br);
            sum += std::norm(V(1, br)) * dressed_green_function(s, g, m, omega, ps);
            sum += std::norm(V(1, br + 2)) *
                   std::conj(dressed_green_function(s, g, m, -omega, ps));
        }
    }
    return 0.5 * sum;
}

double nonlinear_cavity_dos(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                            double omega, const ProcessSet& ps) {
    return -cavity_green_nonlinear(s, g, omega, ps).imag() / M_PI;
}

cplx approx_cavity_green_e(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                           double omega) {
    require_two_cells(s);
    const auto& V = s.two_pi_block().transform.V;
    const double w = mode_omega(s, minus_2pi), kap = mode_kappa(s, minus_2pi);
    const cplx sig = self_energy_term(s, g, minus_2pi, Process::e, omega);
    return 0.5 * std::norm(V(1, 0)) / (cplx(omega - w, 0.5 * kap) - sig);
}

std::vector<double> default_dos_grid(const PolaritonSpectrum& s, const ProcessSet& ps) {
    require_two_cells(s);
    (void)ps;
    // the measurement band: the four Lorentzian cores, where the cavity
    // response carries weight (resonant self-energy features fall on the
    // mode frequencies by construction)
    std::vector<double> pts;
    auto window = [&pts](double center, double halfwidth, int n) {
        if (center <= 0.0) return;
        for (int i = 0; i < n; ++i)
            pts.push_back(center - halfwidth + 2.0 * halfwidth * i / (n - 1));
    };
    for (int m = 0; m < 4; ++m)
        window(mode_omega(s, FourMode(m)), 3.0 * mode_kappa(s, FourMode(m)), 121);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::erase_if(pts, [](double w) { return w <= 0.0; });
    return pts;
}

double nonlinearity_strength(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                             const std::vector<double>& grid, const ProcessSet& ps) {
    double best = 0.0;
    for (double w : grid) {
        const double r0 = linear_cavity_dos(s, w);
        if (r0 <= 0.0) continue;
        const double r = nonlinear_cavity_dos(s, g, w, ps);
        best = std::max(best, std::abs(r - r0) / r0);
    }
    return best;
}

double nonlinearity_strength(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                             const ProcessSet& ps) {
    return nonlinearity_strength(s, g, default_dos_grid(s, ps), ps);
}

double effective_cooperativity(const PolaritonSpectrum& s, const EffectiveCouplings& g) {
    require_two_cells(s);
    const double ge = g[Process::e];
    const double n1 = mode_n(s, minus_pi);
    return 4.0 * ge * ge * (1.0 + 2.0 * n1) /
           (mode_kappa(s, minus_pi) * mode_kappa(s, minus_2pi));
}

double effective_cooperativity_profile(const PolaritonSpectrum& s,
                                       const EffectiveCouplings& g) {
    require_two_cells(s);
    const cplx sig = self_energy_term(s, g, minus_2pi, Process::e, mode_omega(s, minus_2pi));
    return -2.0 * sig.imag() / mode_kappa(s, minus_2pi);
}

AsymptoticBundle asymptotic_bundle(double delta, double lambda, const SystemParams& ref) {
    if (!(lambda > std::sqrt(3.0) / 2.0 && lambda < 1.0))
        throw std::invalid_argument("asymptotic bundle needs lambda in (sqrt(3)/2, 1)");
    const double om = ref.omega_m;
    const double ad = std::abs(delta);
    const double gcri = 0.5 * std::sqrt(ad * om);
    const double root = std::sqrt(4.0 * lambda * lambda - 3.0);
    const double oml = std::sqrt(1.0 - lambda * lambda);
    const double kappa = ref.kappa, gamma = ref.gamma, g1 = ref.g1;

    AsymptoticBundle b;
    b.g_plus_asym = root * gcri;
    b.omega_minus_pi = om * oml;
    b.kappa_minus_pi = lambda * lambda * om * om / (ad * ad) * kappa + gamma / oml;
    b.kappa_minus_2pi =
        (4.0 * lambda * lambda - 3.0) * om * om / (ad * ad) * kappa + gamma / (2.0 * oml);
    b.c_lambda = lambda * lambda / (lambda + root);
    b.g_e_sq_asym = 9.0 * (4.0 * lambda * lambda - 3.0) * b.c_lambda * b.c_lambda /
                    (16.0 * oml * oml * oml) * (om / ad) * (om / ad) * g1 * g1;
    b.n_asym = (ad / om) / (4.0 * oml) /
               (1.0 + gamma / kappa * (ad * ad / (om * om)) / (lambda * lambda * oml));
    const double cf = b.c_lambda / lambda / (1.0 - lambda * lambda);
    b.c_eff_asym = 9.0 / 8.0 * cf * cf * (ad / om) * (ad / om) * (ad / om) * g1 * g1 /
                   (kappa * kappa);
    const double neglect_rhs = oml / (4.0 * lambda * lambda - 3.0) * kappa / gamma;
    b.gamma_neglect_margin = neglect_rhs / (ad * ad / (om * om));
    b.gamma_neglect_ok = b.gamma_neglect_margin > 1.0;
    b.delta_opt = -om * std::sqrt(kappa / gamma);
    const double lw_rhs = std::max(om * kappa / (ad * ad), std::sqrt(gamma / om));
    b.linewidth_margin = oml / lw_rhs;
    b.linewidth_ok = b.linewidth_margin > 1.0;
    b.c_eff_bound = 9.0 / 32.0 * std::pow(om / kappa, 4) * std::pow(ad / om, 11) * g1 * g1 /
                    (kappa * kappa);
    return b;
}

LorentzianFit fit_lorentzian(const std::vector<double>& x, const std::vector<double>& y,
                             double width_guess) {
    // Gauss-Newton on model A * (G^2/4) / ((x-x0)^2 + G^2/4)
    LorentzianFit f{0.0, 0.0, width_guess, false};
    const auto imax = std::max_element(y.begin(), y.end()) - y.begin();
    f.amplitude = y[imax];
    f.center = x[imax];
    if (f.amplitude <= 0.0 || x.size() < 5) return f;
    for (int iter = 0; iter < 60; ++iter) {
        double JTJ[3][3] = {};
        double JTr[3] = {};
        const double hw2 = 0.25 * f.width * f.width;
        for (size_t i = 0; i < x.size(); ++i) {
            const double dx = x[i] - f.center;
            const double den = dx * dx + hw2;
            const double model = f.amplitude * hw2 / den;
            const double r = y[i] - model;
            const double dA = hw2 / den;
            const double dX0 = f.amplitude * hw2 * 2.0 * dx / (den * den);
            const double dW = f.amplitude * 0.5 * f.width * dx * dx / (den * den);
            const double grad[3] = {dA, dX0, dW};
            for (int a = 0; a < 3; ++a) {
                JTr[a] += grad[a] * r;
                for (int bb = 0; bb < 3; ++bb) JTJ[a][bb] += grad[a] * grad[bb];
            }
        }
        for (int a = 0; a < 3; ++a) JTJ[a][a] *= 1.0 + 1e-9;
        // 3x3 solve by Cramer
        auto det3 = [](double m[3][3]) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        const double d0 = det3(JTJ);
        if (std::abs(d0) < 1e-300) return f;
        double step[3];
        for (int c = 0; c < 3; ++c) {
            double m[3][3];
            for (int a = 0; a < 3; ++a)
                for (int bb = 0; bb < 3; ++bb) m[a][bb] = (bb == c) ? JTr[a] : JTJ[a][bb];
            step[c] = det3(m) / d0;
        }
        f.amplitude += step[0];
        f.center += step[1];
        f.width += step[2];
        f.width = std::abs(f.width);
        const double rel = std::abs(step[0]) / std::max(std::abs(f.amplitude), 1e-300) +
                           std::abs(step[1]) + std::abs(step[2]);
        if (rel < 1e-12) {
            f.converged = true;
            break;
        }
    }
    return f;
}

DetuningProfile detuning_profile(const SystemParams& params_at_star, double delta_star,
                                 const std::vector<double>& delta_grid) {
    DetuningProfile prof;
    const double gcri_star = 0.5 * std::sqrt(std::abs(delta_star) * params_at_star.omega_m);
    const double lambda = (params_at_star.G1 - params_at_star.G2) / gcri_star;
    prof.gamma_predicted = 8.0 * std::sqrt(std::max(0.0, 1.0 - lambda * lambda)) / 3.0 *
                           params_at_star.omega_m / std::abs(delta_star) * params_at_star.kappa;

    std::vector<double> xs, ys;
    for (double d : delta_grid) {
        SystemParams p = params_at_star;
        p.delta = d;
        if (!stability_check(p)) continue;
        PolaritonSpectrum s(p);
        const auto g = effective_couplings(s);
        DetuningSample smp;
        smp.delta = d;
        smp.c_eff = effective_cooperativity_profile(s, g);
        // reflectivity minimum over the dip around omega_{-,2pi}
        const double w0 = s.two_pi_block().omega[0];
        const double kap = s.two_pi_block().kappa_eff[0];
        double rmin = 1.0;
        const int n = 401;
        for (int i = 0; i < n; ++i) {
            const double w = w0 - 8.0 * kap + 16.0 * kap * i / (n - 1);
            rmin = std::min(rmin, omit_reflectivity(s, g, w, p.kappa_cp).nonlinear);
        }
        smp.min_reflectivity = rmin;
        prof.samples.push_back(smp);
        xs.push_back(d);
        ys.push_back(smp.c_eff);
    }
    if (xs.size() < 5)
        throw std::runtime_error("detuning grid does not bracket the resonance peak");
    prof.fit = fit_lorentzian(xs, ys, prof.gamma_predicted);
    return prof;
}

Reflectivity omit_reflectivity(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                               double omega_p, double kappa_cp, const ProcessSet& ps) {
    const cplx rl = 1.0 - cplx(0.0, kappa_cp) * cavity_green_linear(s, omega_p);
    const cplx rn = 1.0 - cplx(0.0, kappa_cp) * cavity_green_nonlinear(s, g, omega_p, ps);
    return {std::norm(rl), std::norm(rn)};
}

TwoModeComparison two_mode_comparison(const SystemParams& four_mode_params,
                                      double two_mode_delta) {
    TwoModeComparison r;
    r.delta = two_mode_delta;
    const double om = four_mode_params.omega_m;
    const double ad = std::abs(two_mode_delta);
    // resonant coupling enforcing omega_+ = 2 omega_- in a single cell
    const double val = (17.0 * two_mode_delta * two_mode_delta * om * om -
                        4.0 * (std::pow(two_mode_delta, 4) + std::pow(om, 4))) /
                       (ad * om);
    if (val <= 0.0)
        throw std::invalid_argument("two-mode resonance needs -2 < delta/omega_m < -1/2");
    r.G = 0.1 * std::sqrt(val);

    SystemParams tm = four_mode_params;
    tm.delta = two_mode_delta;
    tm.G1 = r.G;
    tm.G2 = 0.0;
    tm.g2 = 0.0;
    const auto kap = angle_form_damping_rates(tm, 2.0 * M_PI);
    const auto occ = occupations(tm, 2.0 * M_PI);
    r.kappa_minus_exact = kap[0];
    r.kappa_plus_exact = kap[1];
    r.n_minus_exact = occ.n[0];
    r.g_tilde_sq = (r.G / om) * (r.G / om) * tm.g1 * tm.g1;
    r.kappa_minus = 8.0 / 9.0 * (r.G / om) * (r.G / om) * tm.kappa;
    r.c_eff_full = 4.0 * r.g_tilde_sq * (1.0 + 2.0 * r.n_minus_exact) /
                   (r.kappa_minus_exact * r.kappa_plus_exact);
    r.c_eff_two_mode = 45.0 / 8.0 * tm.g1 * tm.g1 / (tm.kappa * tm.kappa);

    PolaritonSpectrum s4(four_mode_params);
    const auto g4 = effective_couplings(s4);
    const double c4 = effective_cooperativity(s4, g4);
    r.enhancement_ratio = r.c_eff_two_mode > 0.0 ? c4 / r.c_eff_two_mode : 0.0;
    return r;
}

}  // namespace optoring
