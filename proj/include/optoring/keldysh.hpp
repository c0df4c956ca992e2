// keldysh.hpp — resonant cubic vertices, second-order retarded self-energies,
// dressed Green's functions and the nonlinear observables of the N=2 ring:
// cavity DOS, I_nl, C_eff, OMIT reflectivity, detuning profiles, asymptotics
// and the two-mode benchmark.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "optoring/params.hpp"
#include "optoring/polaritons.hpp"
#include "optoring/resonances.hpp"

namespace optoring {

// Flat N=2 mode indexing used throughout this module.
enum FourMode : int {
    minus_pi = 0,
    plus_pi = 1,
    minus_2pi = 2,
    plus_2pi = 3,
};

ModeIndex to_mode_index(FourMode m);
FourMode to_four_mode(const ModeIndex& m);

// Effective couplings of the five resonant vertices, built from V(pi), V(2pi)
// and the bare couplings. Real for the N=2 phase convention.
struct EffectiveCouplings {
    std::array<double, 5> g;  // indexed by Process
    double operator[](Process p) const { return g[int(p)]; }
};

EffectiveCouplings effective_couplings(const PolaritonSpectrum& s);

// Theta-parameterized closed form for g~_e, used as a cross-check.
double g_tilde_e_closed_form(const PolaritonSpectrum& s);

enum class DiagramType { d1a, d1b, d2a, d2b };

struct SelfEnergyRow {
    FourMode mode;
    Process process;
    DiagramType type;
};

// Classification of every (process, participating mode) pair.
const std::vector<SelfEnergyRow>& self_energy_table();
std::optional<DiagramType> diagram_type(FourMode mode, Process process);

struct ProcessSet {
    std::array<bool, 5> active{true, true, true, true, true};
    bool has(Process p) const { return active[int(p)]; }
    static ProcessSet all() { return {}; }
    static ProcessSet none() { return {{false, false, false, false, false}}; }
    static ProcessSet only(Process p);
};

// One diagram's closed Lorentzian form; throws for pairs absent from the table.
cplx self_energy_term(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                      FourMode mode, Process process, double omega);

cplx total_self_energy(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                       FourMode mode, double omega, const ProcessSet& ps = ProcessSet::all());

cplx dressed_green_function(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                            FourMode mode, double omega,
                            const ProcessSet& ps = ProcessSet::all());

// Retarded cavity Green's function with dressed propagators inserted into the
// same weighted sum as the linear transformation.
cplx cavity_green_nonlinear(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                            double omega, const ProcessSet& ps = ProcessSet::all());

double nonlinear_cavity_dos(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                            double omega, const ProcessSet& ps = ProcessSet::all());

// Single-pole diagnostic around omega_{-,2pi} (only the (e) self-energy and the
// |V_21(2pi)|^2/2 weight); not the default DOS path.
cplx approx_cavity_green_e(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                           double omega);

// Frequency grid concentrating points around the four peaks, the active
// self-energy resonances, and a coarse positive-frequency background.
std::vector<double> default_dos_grid(const PolaritonSpectrum& s,
                                     const ProcessSet& ps = ProcessSet::all());

// I_nl = max over the grid of |rho - rho0| / rho0.
double nonlinearity_strength(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                             const std::vector<double>& grid,
                             const ProcessSet& ps = ProcessSet::all());
double nonlinearity_strength(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                             const ProcessSet& ps = ProcessSet::all());

// C_eff = 4 g~_e^2 (1+2n_{-,pi}) / (kappa_{-,pi} kappa_{-,2pi}).
double effective_cooperativity(const PolaritonSpectrum& s, const EffectiveCouplings& g);

// Off-resonance generalization used for detuning profiles:
// -2 Im Sigma^(e)_{-,2pi}(omega_{-,2pi}) / kappa_{-,2pi}.
double effective_cooperativity_profile(const PolaritonSpectrum& s, const EffectiveCouplings& g);

struct AsymptoticBundle {
    double g_plus_asym;      // sqrt(4 lambda^2 - 3) G_cri
    double omega_minus_pi;   // omega_m sqrt(1 - lambda^2)
    double kappa_minus_pi;
    double kappa_minus_2pi;
    double g_e_sq_asym;
    double n_asym;
    double c_lambda;         // lambda^2 / (lambda + sqrt(4 lambda^2 - 3))
    double c_eff_asym;
    bool gamma_neglect_ok;   // |delta|^2/omega_m^2 << sqrt(1-l^2)/(4l^2-3) kappa/gamma
    double gamma_neglect_margin;
    double delta_opt;        // -omega_m sqrt(kappa/gamma)
    bool linewidth_ok;       // sqrt(1-l^2) >> max(omega_m kappa/delta^2, sqrt(gamma/omega_m))
    double linewidth_margin;
    double c_eff_bound;      // (9/32)(omega_m/kappa)^4 (|delta|/omega_m)^11 g1^2/kappa^2
};

AsymptoticBundle asymptotic_bundle(double delta, double lambda, const SystemParams& ref);

struct DetuningSample {
    double delta;
    double c_eff;
    double min_reflectivity;
};

struct LorentzianFit {
    double amplitude;
    double center;
    double width;  // FWHM
    bool converged;
};

struct DetuningProfile {
    std::vector<DetuningSample> samples;
    LorentzianFit fit;
    double gamma_predicted;  // width from the closed-form expansion
};

// Sweeps delta at fixed couplings (resonance (e) holding at delta_star) and
// fits the Lorentzian C_eff profile.
DetuningProfile detuning_profile(const SystemParams& params_at_star, double delta_star,
                                 const std::vector<double>& delta_grid);

LorentzianFit fit_lorentzian(const std::vector<double>& x, const std::vector<double>& y,
                             double width_guess);

struct Reflectivity {
    double linear;
    double nonlinear;
};

// |r(omega_p)|^2 with r = 1 - i kappa_cp G_R(d, d^dag; omega_p).
Reflectivity omit_reflectivity(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                               double omega_p, double kappa_cp,
                               const ProcessSet& ps = ProcessSet::all());

struct TwoModeComparison {
    double delta;          // two-mode detuning (near -2 omega_m)
    double G;              // resonant dressed coupling, omega_+ = 2 omega_-
    double g_tilde_sq;     // (G/omega_m)^2 g^2
    double kappa_minus;    // (8/9)(G/omega_m)^2 kappa
    double kappa_minus_exact;
    double kappa_plus_exact;
    double n_minus_exact;
    double c_eff_full;     // 4 g~^2 (1+2n_-)/(kappa_- kappa_+), exact rates
    double c_eff_two_mode; // (45/8)(g/kappa)^2
    double enhancement_ratio;
};

// Benchmarks the four-mode C_eff (at the supplied resonance-(e) parameter set)
// against the optimal two-mode system with matched g, kappa, gamma.
TwoModeComparison two_mode_comparison(const SystemParams& four_mode_params,
                                      double two_mode_delta = -1.99);

}  // namespace optoring
