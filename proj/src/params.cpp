#include "optoring/params.hpp"

#include <cmath>

namespace optoring {

SystemParams SystemParams::from_gpm(double delta, double g_plus, double g_minus,
                                    double kappa, double gamma, double g1_bare,
                                    double T, int N, double kappa_cp) {
    SystemParams p;
    p.delta = delta;
    p.kappa = kappa;
    p.gamma = gamma;
    p.G1 = 0.5 * (g_plus + g_minus);
    p.G2 = 0.5 * (g_plus - g_minus);
    p.g1 = g1_bare;
    // bare couplings share the dressed ratio (same photon number in both cells)
    p.g2 = (p.G1 != 0.0) ? g1_bare * p.G2 / p.G1 : 0.0;
    p.T = T;
    p.N = N;
    p.kappa_cp = kappa_cp;
    return p;
}

DerivedCouplings derived_couplings(const SystemParams& p) {
    DerivedCouplings d;
    d.g_plus = p.G1 + p.G2;
    d.g_minus = p.G1 - p.G2;
    d.bare_plus = p.g1 + p.g2;
    d.bare_minus = p.g1 - p.g2;
    d.g_cri = 0.5 * std::sqrt(std::abs(p.delta) * p.omega_m);
    d.lambda = d.g_cri > 0.0 ? d.g_minus / d.g_cri : 0.0;
    return d;
}

ValidationReport validate(const SystemParams& p) {
    ValidationReport r;
    auto fail = [&r](const std::string& msg) { r.violations.push_back(msg); };

    if (!(p.delta < 0.0)) fail("delta must be negative");
    if (!(p.omega_m > 0.0)) fail("omega_m must be positive");
    if (!(p.kappa > 0.0)) fail("kappa must be positive");
    if (!(p.gamma > 0.0)) fail("gamma must be positive");
    if (p.N < 2 || p.N % 2 != 0) fail("N must be even and >= 2");
    if (!(p.G1 >= std::abs(p.G2))) fail("G1 >= |G2| required");
    if (p.T < 0.0) fail("T must be non-negative");
    if (p.kappa_cp < 0.0 || p.kappa_cp > p.kappa) fail("kappa_cp must lie in [0, kappa]");

    // ratio rule G1/g1 = G2/g2 (shared N_c); only binding with both bare couplings set
    if (p.g1 != 0.0 && p.g2 != 0.0) {
        const double lhs = p.g1 * p.G2;
        const double rhs = p.g2 * p.G1;
        const double scale = std::abs(lhs) + std::abs(rhs);
        if (scale > 0.0 && std::abs(lhs - rhs) > 1e-9 * scale)
            fail("bare/dressed coupling ratio mismatch: G1/g1 != G2/g2");
    } else if ((p.g1 == 0.0) != (p.g2 == 0.0)) {
        if (p.G2 != 0.0 && p.g2 == 0.0 && p.g1 != 0.0)
            fail("g2 must be nonzero when g1 and G2 are");
        if (p.g1 == 0.0 && p.g2 != 0.0)
            fail("g1 must be nonzero when g2 is");
    }
    return r;
}

double critical_coupling(const SystemParams& p) {
    return 0.5 * std::sqrt(std::abs(p.delta) * p.omega_m);
}

bool stability_check(const SystemParams& p) {
    const auto d = derived_couplings(p);
    return d.g_plus < d.g_cri && d.g_minus < d.g_cri;
}

}  // namespace optoring
