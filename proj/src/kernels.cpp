#include "ecsmet/fock/kernels.hpp"

#include <cmath>

namespace ecsmet::fock {

Eigen::MatrixXd loss_weights(int truncation, double rate) {
    const int m1 = mode_dim(truncation);
    const double t = 1.0 - rate;
    Eigen::MatrixXd w(m1, m1);
    // w(0, m) = T^{m/2}; pow(0, 0) = 1 keeps the T = 0 column valid.
    for (int m = 0; m < m1; ++m) w(0, m) = std::pow(t, m / 2.0);
    for (int k = 1; k < m1; ++k)
        for (int m = 0; m < m1; ++m)
            w(k, m) = w(k - 1, m) * std::sqrt(rate * (m + k) / k);
    return w;
}

namespace {

Eigen::VectorXcd mode_phases(int truncation, double phi) {
    const int m1 = mode_dim(truncation);
    Eigen::VectorXcd ph(m1);
    for (int n = 0; n < m1; ++n)
        ph[n] = std::exp(std::complex<double>(0.0, -phi * n));
    return ph;
}

} // namespace

Eigen::MatrixXcd phase_rotate(const Eigen::MatrixXcd& in, int truncation,
                              double phi) {
    const int m1 = mode_dim(truncation);
    const Eigen::VectorXcd ph = mode_phases(truncation, phi);
    Eigen::MatrixXcd out(in.rows(), in.cols());
    for (int na = 0; na < m1; ++na)
        for (int np = 0; np < m1; ++np)
            out.block(na * m1, np * m1, m1, m1) =
                (ph[na] * std::conj(ph[np])) *
                in.block(na * m1, np * m1, m1, m1);
    return out;
}

Eigen::MatrixXcd phase_rotate(const Eigen::MatrixXd& in, int truncation,
                              double phi) {
    const int m1 = mode_dim(truncation);
    const Eigen::VectorXcd ph = mode_phases(truncation, phi);
    Eigen::MatrixXcd out(in.rows(), in.cols());
    for (int na = 0; na < m1; ++na)
        for (int np = 0; np < m1; ++np)
            out.block(na * m1, np * m1, m1, m1) =
                (ph[na] * std::conj(ph[np])) *
                in.block(na * m1, np * m1, m1, m1);
    return out;
}

BeamSplitter::BeamSplitter(int truncation) : nc_(truncation) {
    if (truncation < 1) throw config_error("cutoff must be at least 1");
    blocks_.resize(static_cast<size_t>(2 * nc_ + 1));
    for (int total = 0; total <= 2 * nc_; ++total) {
        const int lo = std::max(0, total - nc_);
        const int hi = std::min(nc_, total);
        const int sz = hi - lo + 1;
        // generator a b+ - a+ b restricted to the block, real antisymmetric
        Eigen::MatrixXd k = Eigen::MatrixXd::Zero(sz, sz);
        for (int i = 0; i < sz; ++i) {
            const double na = lo + i;
            const double nb = total - lo - i;
            if (i >= 1) k(i - 1, i) += std::sqrt(na * (nb + 1.0));
            if (i + 1 < sz) k(i + 1, i) -= std::sqrt((na + 1.0) * nb);
        }
        const Eigen::MatrixXcd h =
            std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        if (es.info() != Eigen::Success)
            throw convergence_error("splitter block eigendecomposition failed");
        const Eigen::VectorXcd camp =
            (-std::complex<double>(0.0, M_PI / 4.0) *
             es.eigenvalues().array())
                .exp();
        blocks_[static_cast<size_t>(total)] =
            (es.eigenvectors() * camp.asDiagonal() *
             es.eigenvectors().adjoint())
                .real();
    }
}

namespace {

void apply_block(const Eigen::MatrixXd& b, const Eigen::VectorXcd& psi,
                 Eigen::VectorXcd& out, int m1, int total, int lo, int sz) {
    Eigen::VectorXd sr(sz), si(sz);
    for (int i = 0; i < sz; ++i) {
        const std::complex<double> a = psi[(lo + i) * m1 + (total - lo - i)];
        sr[i] = a.real();
        si[i] = a.imag();
    }
    const Eigen::VectorXd ur = b * sr;
    const Eigen::VectorXd ui = b * si;
    for (int i = 0; i < sz; ++i)
        out[(lo + i) * m1 + (total - lo - i)] = {ur[i], ui[i]};
}

} // namespace

Eigen::VectorXcd BeamSplitter::apply_serial(const Eigen::VectorXcd& psi) const {
    const int m1 = nc_ + 1;
    if (psi.size() != m1 * m1)
        throw config_error("state length does not match the splitter cutoff");
    Eigen::VectorXcd out(psi.size());
    for (int total = 0; total <= 2 * nc_; ++total) {
        const int lo = std::max(0, total - nc_);
        const int sz = std::min(nc_, total) - lo + 1;
        apply_block(blocks_[static_cast<size_t>(total)], psi, out, m1, total,
                    lo, sz);
    }
    return out;
}

Eigen::VectorXcd BeamSplitter::apply(const Eigen::VectorXcd& psi) const {
    const int m1 = nc_ + 1;
    if (psi.size() != m1 * m1)
        throw config_error("state length does not match the splitter cutoff");
    Eigen::VectorXcd out(psi.size());
    // blocks address disjoint index sets
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int total = 0; total <= 2 * nc_; ++total) {
        const int lo = std::max(0, total - nc_);
        const int sz = std::min(nc_, total) - lo + 1;
        apply_block(blocks_[static_cast<size_t>(total)], psi, out, m1, total,
                    lo, sz);
    }
    return out;
}

FockVector beam_splitter_50_50(const FockVector& psi) {
    const BeamSplitter bs(psi.truncation);
    FockVector out;
    out.truncation = psi.truncation;
    out.amplitudes = bs.apply(psi.amplitudes);
    return out;
}

} // namespace ecsmet::fock
