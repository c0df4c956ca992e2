#include "optoring/polaritons.hpp"

#include <cmath>

namespace optoring {

namespace {

double f_plus(double x) { return std::sqrt(x) + 1.0 / std::sqrt(x); }
double f_minus(double x) { return std::sqrt(x) - 1.0 / std::sqrt(x); }

}  // namespace

ManyPhotonCoupling many_photon_coupling(const SystemParams& p, double k) {
    const double re = p.G1 + p.G2 * std::cos(k);
    const double im = p.G2 * std::sin(k);
    const double mag = std::hypot(re, im);
    // phase undefined at G_k = 0; it only enters observables through |V|^2 there
    const double phase = mag > 0.0 ? std::atan2(im, re) : 0.0;
    return {mag, phase};
}

std::array<double, 2> polariton_frequencies(const SystemParams& p, double G_k) {
    const double ad = std::abs(p.delta);
    const double S = p.delta * p.delta + p.omega_m * p.omega_m;
    const double D = p.delta * p.delta - p.omega_m * p.omega_m;
    const double R = std::sqrt(D * D + 16.0 * p.omega_m * ad * G_k * G_k);
    if (R > S)
        throw InstabilityError("coupling beyond the optomechanical instability");
    return {std::sqrt(0.5 * (S - R)), std::sqrt(0.5 * (S + R))};
}

double mixing_angle(const SystemParams& p, double G_k) {
    const double num = 4.0 * G_k * std::sqrt(std::abs(p.delta) * p.omega_m);
    const double den = p.delta * p.delta - p.omega_m * p.omega_m;
    // atan2 branch keeps theta in [0, pi/2], continuous in G_k, with
    // theta -> 0 as G_k -> 0 for |delta| > omega_m
    return 0.5 * std::atan2(num, den);
}

BogoliubovTransform transform_matrix(const SystemParams& p, double k) {
    const auto mp = many_photon_coupling(p, k);
    const auto w = polariton_frequencies(p, mp.magnitude);
    const double th = mixing_angle(p, mp.magnitude);
    const double ad = std::abs(p.delta);
    const double c = std::cos(th), s = std::sin(th);

    const cplx eb = std::exp(cplx(0.0, 0.5 * mp.phase));   // phonon-row phase
    const cplx ed = std::exp(cplx(0.0, -0.5 * mp.phase));  // photon-row phase

    BogoliubovTransform t;
    t.k = k;
    t.phi_k = mp.phase;
    t.theta_k = th;
    t.V(0, 0) = eb * (0.5 * f_plus(p.omega_m / w[0]) * c);
    t.V(0, 2) = eb * (0.5 * f_minus(p.omega_m / w[0]) * c);
    t.V(0, 1) = eb * (0.5 * f_plus(p.omega_m / w[1]) * s);
    t.V(0, 3) = eb * (0.5 * f_minus(p.omega_m / w[1]) * s);
    t.V(1, 0) = ed * (-0.5 * f_plus(ad / w[0]) * s);
    t.V(1, 2) = ed * (-0.5 * f_minus(ad / w[0]) * s);
    t.V(1, 1) = ed * (0.5 * f_plus(ad / w[1]) * c);
    t.V(1, 3) = ed * (0.5 * f_minus(ad / w[1]) * c);
    return t;
}

std::array<double, 2> damping_rates(const SystemParams& p, double k) {
    const auto t = transform_matrix(p, k);
    const auto& V = t.V;
    const double km = p.kappa * (std::norm(V(1, 0)) - std::norm(V(1, 2))) +
                      p.gamma * std::norm(V(0, 0) + V(0, 2));
    const double kp = p.kappa * (std::norm(V(1, 1)) - std::norm(V(1, 3))) +
                      p.gamma * std::norm(V(0, 1) + V(0, 3));
    return {km, kp};
}

std::array<double, 2> angle_form_damping_rates(const SystemParams& p, double k) {
    const auto mp = many_photon_coupling(p, k);
    const auto w = polariton_frequencies(p, mp.magnitude);
    const double th = mixing_angle(p, mp.magnitude);
    const double s2 = std::sin(th) * std::sin(th);
    const double c2 = std::cos(th) * std::cos(th);
    return {p.kappa * s2 + p.gamma * (p.omega_m / w[0]) * c2,
            p.kappa * c2 + p.gamma * (p.omega_m / w[1]) * s2};
}

double bose_occupation(double omega, double T) {
    if (T <= 0.0) return 0.0;
    return 1.0 / std::expm1(omega / T);
}

double effective_temperature(double omega, double n) {
    if (n <= 0.0) return 0.0;
    return omega / std::log1p(1.0 / n);
}

Occupations occupations(const SystemParams& p, double k) {
    const auto t = transform_matrix(p, k);
    const auto w = polariton_frequencies(p, many_photon_coupling(p, k).magnitude);
    const auto kap = damping_rates(p, k);
    const auto& V = t.V;
    // optical bath sits at ~zero occupation in the rotating frame; only the
    // counter-rotating |V_{2,3/4}|^2 weights survive at T=0 (quantum heating)
    const double nm = (p.kappa * std::norm(V(1, 2)) +
                       p.gamma * std::norm(V(0, 0) + V(0, 2)) * bose_occupation(w[0], p.T)) /
                      kap[0];
    const double np = (p.kappa * std::norm(V(1, 3)) +
                       p.gamma * std::norm(V(0, 1) + V(0, 3)) * bose_occupation(w[1], p.T)) /
                      kap[1];
    return {{nm, np}, {effective_temperature(w[0], nm), effective_temperature(w[1], np)}};
}

PolaritonSpectrum::PolaritonSpectrum(const SystemParams& p) : params_(p) {
    const auto report = validate(p);
    if (!report.ok())
        throw std::invalid_argument("invalid parameters: " + report.violations.front());
    blocks_.reserve(p.N);
    for (int j = 0; j < p.N; ++j) {
        const double k = 2.0 * M_PI * (j + 1) / p.N;
        ModeData b;
        b.k = k;
        b.coupling = many_photon_coupling(p, k);
        b.transform = transform_matrix(p, k);
        b.omega = polariton_frequencies(p, b.coupling.magnitude);
        b.kappa_eff = damping_rates(p, k);
        const auto occ = occupations(p, k);
        b.n_occ = occ.n;
        b.T_eff = occ.T_eff;
        blocks_.push_back(std::move(b));
    }
}

GreenTriple bare_green_functions(const PolaritonSpectrum& s, const ModeIndex& m, double omega) {
    const auto& b = s.block(m.j);
    const int i = int(m.sigma);
    const cplx gr = 1.0 / cplx(omega - b.omega[i], 0.5 * b.kappa_eff[i]);
    GreenTriple g;
    g.retarded = gr;
    g.advanced = std::conj(gr);
    g.keldysh = cplx(0.0, 2.0) * (2.0 * b.n_occ[i] + 1.0) * gr.imag();
    return g;
}

cplx cavity_green_linear(const PolaritonSpectrum& s, double omega) {
    cplx sum = 0.0;
    for (const auto& b : s.blocks()) {
        const cplx gm = 1.0 / cplx(omega - b.omega[0], 0.5 * b.kappa_eff[0]);
        const cplx gp = 1.0 / cplx(omega - b.omega[1], 0.5 * b.kappa_eff[1]);
        const cplx gm_neg = 1.0 / cplx(-omega - b.omega[0], 0.5 * b.kappa_eff[0]);
        const cplx gp_neg = 1.0 / cplx(-omega - b.omega[1], 0.5 * b.kappa_eff[1]);
        sum += std::norm(b.transform.V(1, 0)) * gm + std::norm(b.transform.V(1, 1)) * gp +
               std::norm(b.transform.V(1, 2)) * std::conj(gm_neg) +
               std::norm(b.transform.V(1, 3)) * std::conj(gp_neg);
    }
    return sum / double(s.n_cells());
}

double linear_cavity_dos(const PolaritonSpectrum& s, double omega) {
    return -cavity_green_linear(s, omega).imag() / M_PI;
}

}  // namespace optoring
