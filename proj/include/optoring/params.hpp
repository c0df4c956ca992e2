// params.hpp — physical parameter records, validation, stability relations
#pragma once

#include <string>
#include <vector>

namespace optoring {

// All energies in units of omega_m (kept explicit so inputs stay readable).
// hbar = k_B = 1 throughout.
struct SystemParams {
    double omega_m = 1.0;   // mechanical frequency, sets the energy unit
    double delta = -1.5;    // drive detuning omega_L - omega_c, must be < 0
    double kappa = 0.1;     // cavity damping
    double gamma = 1e-5;    // mechanical damping
    double G1 = 0.3;        // dressed intra-cell coupling
    double G2 = 0.1;        // dressed inter-cell coupling (may be negative)
    double g1 = 0.0;        // bare intra-cell coupling
    double g2 = 0.0;        // bare inter-cell coupling
    double T = 0.0;         // bath temperature
    int N = 2;              // unit cells, even and >= 2
    double kappa_cp = 0.0;  // input-port share of the cavity damping

    // convention: couplings set through G_+ = G1+G2 and G_- = G1-G2
    static SystemParams from_gpm(double delta, double g_plus, double g_minus,
                                 double kappa, double gamma, double g1_bare = 0.0,
                                 double T = 0.0, int N = 2, double kappa_cp = 0.0);
};

struct DerivedCouplings {
    double g_plus;      // G1 + G2
    double g_minus;     // G1 - G2
    double bare_plus;   // g1 + g2
    double bare_minus;  // g1 - g2
    double g_cri;       // instability threshold sqrt(|delta| omega_m)/2
    double lambda;      // G_- / G_cri
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

DerivedCouplings derived_couplings(const SystemParams& p);

// Reports every violated invariant; never mutates the input.
ValidationReport validate(const SystemParams& p);

double critical_coupling(const SystemParams& p);

// Damping-free criterion: stable iff both G_+ and G_- lie strictly below G_cri.
bool stability_check(const SystemParams& p);

}  // namespace optoring
