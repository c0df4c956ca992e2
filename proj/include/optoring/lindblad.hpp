// lindblad.hpp — independent verification of the perturbative nonlinear DOS:
// truncated-Fock master equation for the two resonance-(e) polaritons, steady
// state from a sparse linear solve, retarded correlations via quantum
// regression.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "optoring/keldysh.hpp"
#include "optoring/polaritons.hpp"

namespace optoring {

struct ReducedModel {
    double omega_1;  // frequency of (-,pi)
    double omega_2;  // frequency of (-,2pi), ~ 2 omega_1 on resonance
    double g_e;      // cubic coupling of the (e) vertex
    double kappa_1, kappa_2;
    double n_1, n_2;  // bath occupations feeding the thermal dissipators
    int n_max_1, n_max_2;

    int dim() const { return (n_max_1 + 1) * (n_max_2 + 1); }
};

ReducedModel build_reduced_model(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                                 int n_max_1, int n_max_2);

struct SteadyState {
    Eigen::VectorXcd rho;      // column-stacked density matrix
    double liouvillian_residual;
    double trace_error;
    double top_population_1;   // steady weight in the top Fock level of mode 1
    double top_population_2;
};

class LindbladOracle {
  public:
    explicit LindbladOracle(const ReducedModel& m);

    const ReducedModel& model() const { return model_; }
    const Eigen::SparseMatrix<cplx>& liouvillian() const { return liouv_; }

    SteadyState steady_state() const;

    // G_R(c2, c2^dag; omega) by solving (L + i omega) X = [c2^dag, rho_ss].
    cplx retarded_correlation(const SteadyState& ss, double omega) const;

    double mode_population(const SteadyState& ss, int mode) const;

  private:
    ReducedModel model_;
    Eigen::SparseMatrix<cplx> liouv_;
    Eigen::SparseMatrix<cplx> a1_, a2_;  // annihilation operators on the product space
    bool use_dense_;                     // dense LU fallback for small dimensions
};

struct OracleSpectrum {
    std::vector<double> omega;
    std::vector<cplx> correlation;    // oracle G_R of the (-,2pi) polariton
    std::vector<double> dos_oracle;   // cavity DOS with the oracle propagator inserted
    std::vector<double> dos_keldysh;  // nonlinear Keldysh DOS on the same grid
};

// Reconstructs the cavity DOS on the grid: the (-,2pi) positive-frequency term
// uses the oracle propagator, every other term stays at its linear value.
OracleSpectrum oracle_cavity_dos(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                                 const LindbladOracle& oracle, const SteadyState& ss,
                                 const std::vector<double>& omega_grid);

}  // namespace optoring
