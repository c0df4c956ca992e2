// device.hpp — Fabry-Perot cavity with two membranes: optical wavevectors from
// the secular equation, bare optomechanical couplings, and the symmetric
// configuration reproducing the ring model.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace optoring::device {

struct DeviceConfig {
    double L = 1.0;            // cavity length (unit of length)
    double q1 = 0.0;           // first membrane position, origin at the cavity center
    double q2 = 0.0;           // second membrane position, q2 < q1
    double transmission = 0.85;  // membrane intensity transmission, in (0,1)
    double x_zpf = 1.0;
    double c_light = 1.0;

    double phi() const;  // arccos(sqrt(T))
};

std::vector<std::string> validate(const DeviceConfig& c);

// Left-hand side of the secular equation at wavevector k.
double secular_residual(const DeviceConfig& c, double k);

// d(secular)/dk and -d(secular)/dq_j; the coupling g_ij = c B_j(k_i)/A(k_i) x_zpf.
double secular_dk(const DeviceConfig& c, double k);
double coupling_b1(const DeviceConfig& c, double k);
double coupling_b2(const DeviceConfig& c, double k);

// All roots in [k_lo, k_hi], bracketed bisection on a dense scan, sorted.
std::vector<double> optical_modes(const DeviceConfig& c, double k_lo, double k_hi,
                                  int scan_points = 2000);

struct CouplingPair {
    double g_to_membrane_1;
    double g_to_membrane_2;
};

// Throws when |A(k)| is degenerate (below 1e-12 in units of L).
CouplingPair bare_couplings(const DeviceConfig& c, double k);

struct DeviceSolution {
    double k1, k2;
    double q1, q2;
    double g11, g12, g21, g22;
    double g1_out;  // ring intra-coupling (the equal cross pair)
    double g2_out;  // ring inter-coupling (the equal diagonal pair)
    double ratio_gminus_gplus;
    int iterations;
    double residual_norm;
    bool converged;
};

struct SymmetricGuess {
    double k1, k2, q1, q2;
};

// Default guess: the enumerated branch whose coupling ratio lies closest to
// the target value used throughout the ring analysis.
SymmetricGuess default_symmetric_guess();

// Damped Newton with numerical Jacobian on {secular(k1), secular(k2),
// g12 = g21, g11 = g22} in the unknowns (k1, k2, q1, q2).
DeviceSolution solve_symmetric_configuration(double L, double transmission,
                                             const SymmetricGuess& guess,
                                             int max_iter = 200, double tol = 1e-13);
DeviceSolution solve_symmetric_configuration(double L = 1.0, double transmission = 0.85);

}  // namespace optoring::device
