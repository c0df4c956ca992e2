// polaritons.hpp — normal modes of the quadratic ring Hamiltonian for even N:
// frequencies, Bogoliubov transformation, dampings, occupations, bare Green's
// functions and the linear cavity DOS.
#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "optoring/params.hpp"

namespace optoring {

using cplx = std::complex<double>;

enum class Branch { minus = 0, plus = 1 };

struct ModeIndex {
    Branch sigma;
    int j;  // grid index, k = 2*pi*(j+1)/N, j = 0..N-1
};

struct InstabilityError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ManyPhotonCoupling {
    double magnitude;  // G_k >= 0
    double phase;      // arg(G1 + G2 e^{ik}), 0 when G_k = 0
};

struct BogoliubovTransform {
    double k;
    double phi_k;
    double theta_k;                       // mixing angle in [0, pi/2]
    Eigen::Matrix<cplx, 2, 4> V;          // rows (b,d), columns (c-,c+,c-^dag,c+^dag)
};

struct ModeData {
    double k;
    ManyPhotonCoupling coupling;
    BogoliubovTransform transform;
    std::array<double, 2> omega;      // [minus, plus]
    std::array<double, 2> kappa_eff;  // polariton damping rates
    std::array<double, 2> n_occ;      // stationary occupations
    std::array<double, 2> T_eff;      // effective temperatures
};

ManyPhotonCoupling many_photon_coupling(const SystemParams& p, double k);

// Frequencies for a given many-photon coupling magnitude; throws
// InstabilityError when the lower branch turns imaginary.
std::array<double, 2> polariton_frequencies(const SystemParams& p, double G_k);

double mixing_angle(const SystemParams& p, double G_k);

BogoliubovTransform transform_matrix(const SystemParams& p, double k);

// Damping rates from the V-matrix weights; the explicit mixing-angle form
// is equivalent and kept for cross-checks.
std::array<double, 2> damping_rates(const SystemParams& p, double k);
std::array<double, 2> angle_form_damping_rates(const SystemParams& p, double k);

struct Occupations {
    std::array<double, 2> n;
    std::array<double, 2> T_eff;
};
Occupations occupations(const SystemParams& p, double k);

double bose_occupation(double omega, double T);
double effective_temperature(double omega, double n);

class PolaritonSpectrum {
  public:
    explicit PolaritonSpectrum(const SystemParams& p);

    const SystemParams& params() const { return params_; }
    int n_cells() const { return params_.N; }
    const std::vector<ModeData>& blocks() const { return blocks_; }
    const ModeData& block(int j) const { return blocks_.at(j); }

    // N=2 shorthands (k = pi is j = 0, k = 2*pi is j = N-1)
    const ModeData& pi_block() const { return blocks_.front(); }
    const ModeData& two_pi_block() const { return blocks_.back(); }

    double omega(const ModeIndex& m) const { return block(m.j).omega[int(m.sigma)]; }
    double kappa_eff(const ModeIndex& m) const { return block(m.j).kappa_eff[int(m.sigma)]; }
    double n_occ(const ModeIndex& m) const { return block(m.j).n_occ[int(m.sigma)]; }

  private:
    SystemParams params_;
    std::vector<ModeData> blocks_;
};

struct GreenTriple {
    cplx retarded;
    cplx advanced;
    cplx keldysh;
};

// Bare polariton Green's functions (diagonal, no anomalous parts).
GreenTriple bare_green_functions(const PolaritonSpectrum& s, const ModeIndex& m, double omega);

// Retarded cavity Green's function in the linear regime (weighted polariton sum).
cplx cavity_green_linear(const PolaritonSpectrum& s, double omega);

// rho0_d(omega) = -Im G_R(d, d^dag; omega)/pi, independent of the cell index.
double linear_cavity_dos(const PolaritonSpectrum& s, double omega);

}  // namespace optoring
