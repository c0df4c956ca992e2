#include "optoring/resonances.hpp"

#include <cmath>
#include <random>

namespace optoring {

namespace {

constexpr int kPi = 0;     // j index of k = pi for N = 2
constexpr int kTwoPi = 1;  // j index of k = 2*pi

const ResonanceProcess kTable[5] = {
    {Process::a, {Branch::plus, kTwoPi}, {{{Branch::minus, kPi}, {Branch::minus, kPi}}}},
    {Process::b, {Branch::plus, kTwoPi}, {{{Branch::minus, kTwoPi}, {Branch::minus, kTwoPi}}}},
    {Process::c, {Branch::plus, kPi}, {{{Branch::minus, kPi}, {Branch::minus, kTwoPi}}}},
    {Process::d, {Branch::plus, kPi}, {{{Branch::plus, kTwoPi}, {Branch::minus, kPi}}}},
    {Process::e, {Branch::minus, kTwoPi}, {{{Branch::minus, kPi}, {Branch::minus, kPi}}}},
};

struct Kinematics {
    double S, D, ad, om;
    double w_minus_pi2;  // omega_{-,pi}^2 at the given G_-
};

Kinematics kinematics(double delta, double g_minus, double om) {
    Kinematics k;
    k.ad = std::abs(delta);
    k.om = om;
    k.S = delta * delta + om * om;
    k.D = delta * delta - om * om;
    const double R = std::sqrt(k.D * k.D + 16.0 * om * k.ad * g_minus * g_minus);
    k.w_minus_pi2 = 0.5 * (k.S - R);
    return k;
}

// invert omega_{-,2pi}^2 = W (lower branch) or omega_{+,2pi}^2 = W (upper) for G_+
std::optional<double> invert_for_gplus(const Kinematics& k, double W, bool upper) {
    const double R = upper ? (2.0 * W - k.S) : (k.S - 2.0 * W);
    if (R < 0.0) return std::nullopt;  // target not on the requested branch
    const double val = R * R - k.D * k.D;
    if (val < 0.0) return std::nullopt;  // complex intermediate: unreachable
    return std::sqrt(val / (16.0 * k.om * k.ad));
}

}  // namespace

char process_label(Process p) { return char('a' + int(p)); }

std::optional<Process> process_from_label(char c) {
    if (c >= 'a' && c <= 'e') return Process(c - 'a');
    return std::nullopt;
}

const ResonanceProcess& process_table(Process p) { return kTable[int(p)]; }

std::optional<double> resonant_gplus(Process p, double delta, double g_minus, double om) {
    if (!(delta < 0.0) || g_minus < 0.0) return std::nullopt;
    const double gcri = 0.5 * std::sqrt(std::abs(delta) * om);
    if (g_minus >= gcri) return std::nullopt;
    const auto k = kinematics(delta, g_minus, om);
    std::optional<double> gp;

    switch (p) {
        case Process::a:  // omega_{+,2pi} = 2 omega_{-,pi}
            gp = invert_for_gplus(k, 4.0 * k.w_minus_pi2, true);
            break;
        case Process::e:  // omega_{-,2pi} = 2 omega_{-,pi}
            gp = invert_for_gplus(k, 4.0 * k.w_minus_pi2, false);
            break;
        case Process::b: {  // omega_{+,2pi} = 2 omega_{-,2pi}: R = 3S/5, G_- free
            const double val =
                (17.0 * delta * delta * om * om -
                 4.0 * (delta * delta * delta * delta + om * om * om * om)) /
                (k.ad * om);
            if (val < 0.0) return std::nullopt;
            gp = 0.1 * std::sqrt(val);
            break;
        }
        case Process::c:    // omega_{+,pi} = omega_{-,pi} + omega_{-,2pi}
        case Process::d: {  // omega_{+,pi} = omega_{+,2pi} + omega_{-,pi}
            const double abprod2 = k.ad * k.om * (k.ad * k.om - 4.0 * g_minus * g_minus);
            if (abprod2 < 0.0) return std::nullopt;
            const double ab = std::sqrt(abprod2);  // omega_{+,pi} * omega_{-,pi}
            const double four_ab = 4.0 * ab;
            // target (omega_{+,pi}-omega_{-,pi})^2 on the lower (c) / upper (d) branch
            if (p == Process::c && !(four_ab - k.S >= std::abs(k.D))) return std::nullopt;
            if (p == Process::d && !(k.S - four_ab >= std::abs(k.D))) return std::nullopt;
            const double val = (5.0 * k.ad * k.om - 16.0 * g_minus * g_minus) / 4.0 -
                               0.5 * k.S * ab / (k.ad * k.om);
            if (val < 0.0) return std::nullopt;
            gp = std::sqrt(val);
            break;
        }
    }
    if (!gp || !(*gp < gcri)) return std::nullopt;
    return gp;
}

std::optional<AllowedRegion> allowed_region(Process p, double delta, double om) {
    if (!(delta < 0.0)) return std::nullopt;
    const double ad = std::abs(delta);
    const double gcri = 0.5 * std::sqrt(ad * om);

    // edge where omega_{-,pi} equals half the larger / smaller bare frequency
    const double half_max_edge =  // upper edge of (a)
        (ad > om) ? 3.0 * ad / (16.0 * om) * (om * om - 0.25 * delta * delta)
                  : 3.0 * om / (16.0 * ad) * (delta * delta - 0.25 * om * om);
    const double half_min_edge =  // lower edge of (e)
        (ad > om) ? 3.0 * om / (16.0 * ad) * (delta * delta - 0.25 * om * om)
                  : 3.0 * ad / (16.0 * om) * (om * om - 0.25 * delta * delta);

    auto region = [&](double lo, double hi) -> std::optional<AllowedRegion> {
        hi = std::min(hi, gcri);
        lo = std::max(lo, 0.0);
        if (!(lo < hi)) return std::nullopt;
        return AllowedRegion{p, delta, lo, hi};
    };

    switch (p) {
        case Process::a: {
            if (half_max_edge <= 0.0) return std::nullopt;
            // Heaviside form for the lower edge; argument <= 0 means G_min = 0
            const double arg = (10.0 * delta * delta * om * om -
                                3.0 * delta * delta * delta * delta - 3.0 * om * om * om * om) /
                               (ad * om);
            const double gmin = arg > 0.0 ? 0.125 * std::sqrt(arg) : 0.0;
            return region(gmin, std::sqrt(half_max_edge));
        }
        case Process::b: {
            // nonempty wherever the closed form is real: -2 omega_m < delta < -omega_m/2
            const double val =
                17.0 * delta * delta * om * om -
                4.0 * (delta * delta * delta * delta + om * om * om * om);
            if (val <= 0.0) return std::nullopt;
            return region(0.0, gcri);
        }
        case Process::c: {
            if (half_max_edge <= 0.0) return std::nullopt;
            return region(0.0, 2.0 / std::sqrt(3.0) * std::sqrt(half_max_edge));
        }
        case Process::d: {
            if (half_min_edge <= 0.0) return std::nullopt;
            return region(2.0 / std::sqrt(3.0) * std::sqrt(half_min_edge), gcri);
        }
        case Process::e: {
            if (half_min_edge <= 0.0) return std::nullopt;
            return region(std::sqrt(half_min_edge), gcri);
        }
    }
    return std::nullopt;
}

double resonance_residual(const SystemParams& p, Process proc) {
    const auto& row = process_table(proc);
    const auto gm = many_photon_coupling(p, M_PI).magnitude;
    const auto gp = many_photon_coupling(p, 2.0 * M_PI).magnitude;
    const auto w_pi = polariton_frequencies(p, gm);
    const auto w_2pi = polariton_frequencies(p, gp);
    auto freq = [&](const ModeIndex& m) {
        const auto& w = (m.j == kPi) ? w_pi : w_2pi;
        return w[int(m.sigma)];
    };
    return freq(row.initial) - freq(row.finals[0]) - freq(row.finals[1]);
}

ZeroMeasureReport zero_measure_check(long samples, double tol, unsigned seed) {
    ZeroMeasureReport rep;
    rep.samples = samples;
    rep.tolerance = tol;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (long i = 0; i < samples; ++i) {
        const double delta = -(0.3 + 9.7 * ud(rng));
        const double gcri = 0.5 * std::sqrt(std::abs(delta));
        // keep away from the decoupled G_k = 0 corner and the instability edge
        const double gm = gcri * (0.01 + 0.98 * ud(rng));
        const double gp = gcri * (0.01 + 0.98 * ud(rng));
        SystemParams p = SystemParams::from_gpm(delta, gp, gm, 0.1, 1e-5);
        const auto w_pi = polariton_frequencies(p, gm);
        const auto w_2pi = polariton_frequencies(p, gp);
        const double r1 = w_2pi[1] - 2.0 * w_pi[1];
        const double r2 = w_2pi[1] - w_pi[1] - w_pi[0];
        if (std::abs(r1) < tol || std::abs(r2) < tol)
            rep.counterexamples.push_back({delta, gm, gp});
    }
    return rep;
}

}  // namespace optoring
