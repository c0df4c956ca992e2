#include "optoring/device.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace optoring::device {

double DeviceConfig::phi() const { return std::acos(std::sqrt(transmission)); }

std::vector<std::string> validate(const DeviceConfig& c) {
    std::vector<std::string> v;
    if (!(c.L > 0.0)) v.push_back("L must be positive");
    if (!(c.transmission > 0.0 && c.transmission < 1.0))
        v.push_back("transmission must lie in (0,1)");
    if (!(-0.5 * c.L < c.q2 && c.q2 < c.q1 && c.q1 < 0.5 * c.L))
        v.push_back("membranes must satisfy -L/2 < q2 < q1 < L/2");
    return v;
}

double secular_residual(const DeviceConfig& c, double k) {
    const double phi = c.phi();
    const double Lt = c.L + 2.0 * (c.q1 - c.q2);
    const double s = std::sin(phi);
    return std::sin(k * c.L + 2.0 * phi) + std::sin(k * Lt) * s * s -
           2.0 * s * std::cos(k * (c.q1 - c.q2) - phi) * std::cos(k * (c.q1 + c.q2));
}

double secular_dk(const DeviceConfig& c, double k) {
    const double phi = c.phi();
    const double Lt = c.L + 2.0 * (c.q1 - c.q2);
    const double s = std::sin(phi);
    return c.L * std::cos(k * c.L + 2.0 * phi) + Lt * std::cos(k * Lt) * s * s +
           2.0 * (c.q1 * std::sin(2.0 * k * c.q1 - phi) + c.q2 * std::sin(2.0 * k * c.q2 + phi)) *
               s;
}

double coupling_b1(const DeviceConfig& c, double k) {
    const double phi = c.phi();
    const double Lt = c.L + 2.0 * (c.q1 - c.q2);
    const double s = std::sin(phi);
    return -2.0 * k * (std::sin(2.0 * k * c.q1 - phi) + std::cos(k * Lt) * s) * s;
}

double coupling_b2(const DeviceConfig& c, double k) {
    const double phi = c.phi();
    const double Lt = c.L + 2.0 * (c.q1 - c.q2);
    const double s = std::sin(phi);
    return -2.0 * k * (std::sin(2.0 * k * c.q2 + phi) - std::cos(k * Lt) * s) * s;
}

std::vector<double> optical_modes(const DeviceConfig& c, double k_lo, double k_hi,
                                  int scan_points) {
    std::vector<double> roots;
    double prev_k = k_lo, prev_f = secular_residual(c, k_lo);
    for (int i = 1; i <= scan_points; ++i) {
        const double k = k_lo + (k_hi - k_lo) * i / scan_points;
        const double f = secular_residual(c, k);
        if (prev_f == 0.0) roots.push_back(prev_k);
        if (prev_f * f < 0.0) {
            double a = prev_k, b = k, fa = prev_f;
            while (b - a > 1e-12 * std::max(1.0, std::abs(b))) {
                const double m = 0.5 * (a + b);
                const double fm = secular_residual(c, m);
                if (fa * fm <= 0.0)
                    b = m;
                else
                    a = m, fa = fm;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_k = k;
        prev_f = f;
    }
    return roots;
}

CouplingPair bare_couplings(const DeviceConfig& c, double k) {
    const double A = secular_dk(c, k);
    if (std::abs(A) < 1e-12)
        throw std::runtime_error("degenerate mode slope: |A(k)| below 1e-12");
    const double scale = c.c_light * c.x_zpf / A;
    return {scale * coupling_b1(c, k), scale * coupling_b2(c, k)};
}

SymmetricGuess default_symmetric_guess() {
    // branch enumerated offline at T = 0.85: ratio closest to the ring value
    return {26.867, 33.887, -0.10458, -0.15011};
}

DeviceSolution solve_symmetric_configuration(double L, double transmission,
                                             const SymmetricGuess& guess, int max_iter,
                                             double tol) {
    DeviceSolution sol{};
    Eigen::Vector4d x(guess.k1, guess.k2, guess.q1, guess.q2);

    auto residual = [&](const Eigen::Vector4d& v) -> Eigen::Vector4d {
        DeviceConfig c;
        c.L = L;
        c.transmission = transmission;
        c.q1 = v[2];
        c.q2 = v[3];
        const double a1 = secular_dk(c, v[0]);
        const double a2 = secular_dk(c, v[1]);
        Eigen::Vector4d r;
        r[0] = secular_residual(c, v[0]);
        r[1] = secular_residual(c, v[1]);
        r[2] = coupling_b1(c, v[0]) * a2 - coupling_b2(c, v[1]) * a1;  // g11 = g22
        r[3] = coupling_b1(c, v[1]) * a1 - coupling_b2(c, v[0]) * a2;  // g21 = g12
        return r;
    };

    Eigen::Vector4d r = residual(x);
    int it = 0;
    for (; it < max_iter; ++it) {
        if (r.norm() < tol) break;
        Eigen::Matrix4d J;
        for (int j = 0; j < 4; ++j) {
            const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
            Eigen::Vector4d xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            J.col(j) = (residual(xp) - residual(xm)) / (2.0 * h);
        }
        Eigen::Vector4d step = J.fullPivLu().solve(-r);
        // damping: back off until the residual norm decreases
        double alpha = 1.0;
        Eigen::Vector4d xn, rn;
        for (int bt = 0; bt < 40; ++bt) {
            xn = x + alpha * step;
            rn = residual(xn);
            if (rn.norm() < r.norm()) break;
            alpha *= 0.5;
        }
        if (!(rn.norm() < r.norm())) break;
        x = xn;
        r = rn;
    }

    DeviceConfig c;
    c.L = L;
    c.transmission = transmission;
    c.q1 = x[2];
    c.q2 = x[3];
    sol.k1 = x[0];
    sol.k2 = x[1];
    sol.q1 = x[2];
    sol.q2 = x[3];
    sol.iterations = it;
    sol.residual_norm = r.norm();
    sol.converged = r.norm() < 1e-10;
    const auto c1 = bare_couplings(c, sol.k1);
    const auto c2 = bare_couplings(c, sol.k2);
    sol.g11 = c1.g_to_membrane_1;
    sol.g12 = c1.g_to_membrane_2;
    sol.g21 = c2.g_to_membrane_1;
    sol.g22 = c2.g_to_membrane_2;

    // ring mapping: the equal cross pair is the intra coupling g1, the equal
    // diagonal pair the inter coupling g2; orientation fixed by g1 > 0 and the
    // model convention g1 >= |g2|
    double gcross = 0.5 * (sol.g12 + sol.g21);
    double gdiag = 0.5 * (sol.g11 + sol.g22);
    if (std::abs(gcross) < std::abs(gdiag)) std::swap(gcross, gdiag);
    if (gcross < 0.0) {
        gcross = -gcross;
        gdiag = -gdiag;
    }
    sol.g1_out = gcross;
    sol.g2_out = gdiag;
    sol.ratio_gminus_gplus = (gcross - gdiag) / (gcross + gdiag);
    return sol;
}

DeviceSolution solve_symmetric_configuration(double L, double transmission) {
    return solve_symmetric_configuration(L, transmission, default_symmetric_guess());
}

}  // namespace optoring::device
