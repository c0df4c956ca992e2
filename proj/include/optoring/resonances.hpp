// resonances.hpp — the five resonant decay channels of the N=2 ring: closed
// forms for the resonant G_+, allowed regions, and residual checks.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "optoring/params.hpp"
#include "optoring/polaritons.hpp"

namespace optoring {

enum class Process { a = 0, b, c, d, e };

constexpr std::array<Process, 5> kAllProcesses{Process::a, Process::b, Process::c,
                                               Process::d, Process::e};

char process_label(Process p);
std::optional<Process> process_from_label(char c);

// Decay channel: initial polariton and the two final polaritons, momentum
// conserved mod 2*pi on the N=2 grid {pi, 2*pi}.
struct ResonanceProcess {
    Process label;
    ModeIndex initial;
    std::array<ModeIndex, 2> finals;
};

const ResonanceProcess& process_table(Process p);

struct AllowedRegion {
    Process process;
    double delta;
    double g_minus_min;
    double g_minus_max;
};

// Closed-form resonant G_+ for the channel at (delta, g_minus); empty when the
// point lies outside the channel's allowed region (a normal outcome over maps).
std::optional<double> resonant_gplus(Process p, double delta, double g_minus,
                                     double omega_m = 1.0);

// [G_min, G_max] interval in G_- where the channel can be enforced; empty when
// the detuning admits no solution at all.
std::optional<AllowedRegion> allowed_region(Process p, double delta, double omega_m = 1.0);

// omega_{sigma,k} - omega_{mu,q} - omega_{nu,k-q} for the channel, evaluated
// from the polariton dispersion of the given parameter set.
double resonance_residual(const SystemParams& p, Process proc);

struct ZeroMeasureReport {
    long samples = 0;
    double tolerance = 0.0;
    // (delta, g_minus, g_plus) triplets that satisfied either stray process
    std::vector<std::array<double, 3>> counterexamples;
    bool empty() const { return counterexamples.empty(); }
};

// Scans (delta, G_-, G_+) samples and confirms the two kinematically allowed
// but zero-measure processes (omega_{+,2pi} = 2 omega_{+,pi} and
// omega_{+,2pi} = omega_{+,pi} + omega_{-,pi}) have no interior solutions.
ZeroMeasureReport zero_measure_check(long samples = 10000, double tol = 1e-6,
                                     unsigned seed = 20240901);

}  // namespace optoring
