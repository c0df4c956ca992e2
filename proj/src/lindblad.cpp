#include "optoring/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

namespace optoring {

namespace {

using SpMat = Eigen::SparseMatrix<cplx>;

SpMat annihilation(int dim) {
    SpMat a(dim, dim);
    std::vector<Eigen::Triplet<cplx>> t;
    for (int n = 1; n < dim; ++n) t.emplace_back(n - 1, n, std::sqrt(double(n)));
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

SpMat speye(int dim) {
    SpMat id(dim, dim);
    id.setIdentity();
    return id;
}

}  // namespace

ReducedModel build_reduced_model(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                                 int n_max_1, int n_max_2) {
    if (n_max_1 < 3 || n_max_2 < 3)
        throw std::invalid_argument("Fock truncation must keep at least 3 levels");
    ReducedModel m;
    m.omega_1 = s.pi_block().omega[0];
    m.omega_2 = s.two_pi_block().omega[0];
    m.g_e = g[Process::e];
    m.kappa_1 = s.pi_block().kappa_eff[0];
    m.kappa_2 = s.two_pi_block().kappa_eff[0];
    m.n_1 = s.pi_block().n_occ[0];
    m.n_2 = s.two_pi_block().n_occ[0];
    m.n_max_1 = n_max_1;
    m.n_max_2 = n_max_2;
    return m;
}

LindbladOracle::LindbladOracle(const ReducedModel& m) : model_(m) {
    const int d1 = m.n_max_1 + 1, d2 = m.n_max_2 + 1;
    const int D = d1 * d2;
    a1_ = Eigen::kroneckerProduct(annihilation(d1), speye(d2)).eval();
    a2_ = Eigen::kroneckerProduct(speye(d1), annihilation(d2)).eval();

    SpMat H = m.omega_1 * SpMat(a1_.adjoint() * a1_) + m.omega_2 * SpMat(a2_.adjoint() * a2_);
    H = H + m.g_e * SpMat(SpMat(a2_.adjoint() * a1_) * a1_);
    H = H + m.g_e * SpMat(SpMat(a2_ * a1_.adjoint()) * a1_.adjoint());

    const SpMat id = speye(D);
    // vec(A rho B) = (B^T kron A) vec(rho), column stacking
    auto dissipator = [&](const SpMat& L, double rate) -> SpMat {
        const SpMat LdL = SpMat(L.adjoint() * L);
        SpMat out = Eigen::kroneckerProduct(SpMat(L.conjugate()), L).eval();
        out = out - 0.5 * Eigen::kroneckerProduct(id, LdL).eval();
        out = out - 0.5 * Eigen::kroneckerProduct(SpMat(LdL.transpose()), id).eval();
        return SpMat(rate * out);
    };

    SpMat Lsup = SpMat(cplx(0.0, -1.0) *
                       (Eigen::kroneckerProduct(id, H).eval() -
                        Eigen::kroneckerProduct(SpMat(H.transpose()), id).eval()));
    if (m.kappa_1 > 0.0) {
        Lsup = Lsup + dissipator(a1_, m.kappa_1 * (m.n_1 + 1.0));
        if (m.n_1 > 0.0) Lsup = Lsup + dissipator(SpMat(a1_.adjoint()), m.kappa_1 * m.n_1);
    }
    if (m.kappa_2 > 0.0) {
        Lsup = Lsup + dissipator(a2_, m.kappa_2 * (m.n_2 + 1.0));
        if (m.n_2 > 0.0) Lsup = Lsup + dissipator(SpMat(a2_.adjoint()), m.kappa_2 * m.n_2);
    }
    Lsup.makeCompressed();
    liouv_ = Lsup;
    use_dense_ = (D * D) < 2500;
}

SteadyState LindbladOracle::steady_state() const {
    const int d1 = model_.n_max_1 + 1, d2 = model_.n_max_2 + 1;
    const int D = d1 * d2;
    // replace one row by the trace functional to pin the normalization
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(size_t(liouv_.nonZeros()) + D);
    for (int col = 0; col < liouv_.outerSize(); ++col)
        for (SpMat::InnerIterator it(liouv_, col); it; ++it)
            if (it.row() != 0) trip.emplace_back(int(it.row()), int(it.col()), it.value());
    for (int i = 0; i < D; ++i) trip.emplace_back(0, i * D + i, 1.0);
    SpMat A(D * D, D * D);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();

    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(D * D);
    b[0] = 1.0;

    Eigen::VectorXcd x;
    if (use_dense_) {
        x = Eigen::MatrixXcd(A).partialPivLu().solve(b);
    } else {
        Eigen::SparseLU<SpMat> lu;
        lu.compute(A);
        if (lu.info() != Eigen::Success)
            throw std::runtime_error("steady-state factorization failed");
        x = lu.solve(b);
    }

    Eigen::MatrixXcd rho = Eigen::Map<Eigen::MatrixXcd>(x.data(), D, D);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();

    SteadyState ss;
    ss.rho = Eigen::Map<Eigen::VectorXcd>(rho.data(), D * D);
    ss.liouvillian_residual = (liouv_ * ss.rho).norm();
    ss.trace_error = std::abs(rho.trace().real() - 1.0);
    ss.top_population_1 = 0.0;
    ss.top_population_2 = 0.0;
    for (int i2 = 0; i2 < d2; ++i2) {
        const int idx = (d1 - 1) * d2 + i2;
        ss.top_population_1 += rho(idx, idx).real();
    }
    for (int i1 = 0; i1 < d1; ++i1) {
        const int idx = i1 * d2 + (d2 - 1);
        ss.top_population_2 += rho(idx, idx).real();
    }
    return ss;
}

cplx LindbladOracle::retarded_correlation(const SteadyState& ss, double omega) const {
    const int D = int(std::lround(std::sqrt(double(ss.rho.size()))));
    Eigen::Map<const Eigen::MatrixXcd> rho(ss.rho.data(), D, D);
    const Eigen::MatrixXcd a2d = Eigen::MatrixXcd(a2_);
    Eigen::MatrixXcd X0 = a2d.adjoint() * rho - rho * a2d.adjoint();
    Eigen::VectorXcd x0 = Eigen::Map<Eigen::VectorXcd>(X0.data(), D * D);

    SpMat M = liouv_;
    M.reserve(Eigen::VectorXi::Constant(D * D, 1));
    for (int i = 0; i < D * D; ++i) M.coeffRef(i, i) += cplx(0.0, omega);
    M.makeCompressed();

    Eigen::VectorXcd y;
    if (use_dense_) {
        y = Eigen::MatrixXcd(M).partialPivLu().solve(x0);
    } else {
        Eigen::SparseLU<SpMat> lu;
        lu.compute(M);
        if (lu.info() != Eigen::Success)
            throw std::runtime_error("correlation solve failed");
        y = lu.solve(x0);
    }
    Eigen::Map<Eigen::MatrixXcd> Y(y.data(), D, D);
    return cplx(0.0, 1.0) * (a2d * Y).trace();
}

double LindbladOracle::mode_population(const SteadyState& ss, int mode) const {
    const int D = int(std::lround(std::sqrt(double(ss.rho.size()))));
    Eigen::Map<const Eigen::MatrixXcd> rho(ss.rho.data(), D, D);
    const SpMat& a = (mode == 1) ? a1_ : a2_;
    return (Eigen::MatrixXcd(SpMat(a.adjoint() * a)) * rho).trace().real();
}

OracleSpectrum oracle_cavity_dos(const PolaritonSpectrum& s, const EffectiveCouplings& g,
                                 const LindbladOracle& oracle, const SteadyState& ss,
                                 const std::vector<double>& omega_grid) {
    OracleSpectrum out;
    out.omega = omega_grid;
    const double w21 = std::norm(s.two_pi_block().transform.V(1, 0));
    const auto& blk = s.two_pi_block();
    for (double w : omega_grid) {
        const cplx gr_or = oracle.retarded_correlation(ss, w);
        out.correlation.push_back(gr_or);
        const cplx gr_lin = 1.0 / cplx(w - blk.omega[0], 0.5 * blk.kappa_eff[0]);
        const double dos_lin = linear_cavity_dos(s, w);
        const double dos = dos_lin + 0.5 * w21 * (gr_lin.imag() - gr_or.imag()) / M_PI;
        out.dos_oracle.push_back(dos);
        out.dos_keldysh.push_back(nonlinear_cavity_dos(s, g, w));
    }
    return out;
}

}  // namespace optoring
