#include "ecsmet/fock/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

namespace ecsmet::fock {

namespace {

// splitmix64; fixed seed keeps every run of the iteration identical
double uniform_pm1(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return 2.0 * static_cast<double>(z >> 11) * 0x1.0p-53 - 1.0;
}

template <class S>
struct Draw;

template <>
struct Draw<double> {
    static double next(std::uint64_t& st) { return uniform_pm1(st); }
};

template <>
struct Draw<std::complex<double>> {
    static std::complex<double> next(std::uint64_t& st) {
        const double re = uniform_pm1(st);
        const double im = uniform_pm1(st);
        return {re, im};
    }
};

inline double sqr_abs(double x) { return x * x; }
inline double sqr_abs(const std::complex<double>& x) { return std::norm(x); }

} // namespace

template <class S>
SpectralDecomposition<S> dense_spectrum(const Mat<S>& m) {
    Eigen::SelfAdjointEigenSolver<Mat<S>> es(m);
    if (es.info() != Eigen::Success)
        throw convergence_error("dense eigendecomposition failed");
    SpectralDecomposition<S> out;
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    out.completeness = 0.0;
    out.iterations = 0;
    out.dense = true;
    return out;
}

template <class S>
SpectralDecomposition<S> subspace_spectrum(const Mat<S>& m, int want,
                                           int max_iterations) {
    const int n = static_cast<int>(m.rows());
    if (n < 1 || m.cols() != n)
        throw config_error("subspace iteration needs a square matrix");
    const int k = std::min(want, n);
    const double scale = std::max(1.0, m.norm());

    std::uint64_t st = 0x243f6a8885a308d3ULL;
    Mat<S> x(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = Draw<S>::next(st);
    Eigen::HouseholderQR<Mat<S>> qr0(x);
    Mat<S> q = qr0.householderQ() * Mat<S>::Identity(n, k);

    for (int it = 1; it <= max_iterations; ++it) {
        const Mat<S> y = m * q;
        Eigen::HouseholderQR<Mat<S>> qr(y);
        q = qr.householderQ() * Mat<S>::Identity(n, k);
        const Mat<S> z = m * q;
        Mat<S> b = q.adjoint() * z;
        b = (b + Mat<S>(b.adjoint())) / S(2);
        Eigen::SelfAdjointEigenSolver<Mat<S>> es(b);
        if (es.info() != Eigen::Success)
            throw convergence_error("Rayleigh-Ritz eigendecomposition failed");
        const Mat<S> v = q * es.eigenvectors();
        const Mat<S> mv = z * es.eigenvectors();
        double resid = 0.0;
        for (int i = 0; i < k; ++i)
            resid = std::max(
                resid, (mv.col(i) - es.eigenvalues()[i] * v.col(i)).norm());
        if (resid <= 1e-12 * scale || it == max_iterations) {
            if (resid > 1e-9 * scale) {
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "subspace iteration stalled at residual %.3g",
                              resid);
                throw convergence_error(buf);
            }
            SpectralDecomposition<S> out;
            out.values = es.eigenvalues().reverse();
            out.vectors = v.rowwise().reverse();
            out.completeness = std::sqrt(
                std::max(0.0, m.squaredNorm() - out.values.squaredNorm()));
            out.iterations = it;
            out.dense = false;
            return out;
        }
        q = v;
    }
    throw convergence_error("subspace iteration did not terminate");
}

template <class S>
SpectralDecomposition<S> spectrum(const Mat<S>& m, int want) {
    if (m.rows() <= 600) return dense_spectrum<S>(m);
    return subspace_spectrum<S>(m, want);
}

template SpectralDecomposition<double> dense_spectrum(const Mat<double>&);
template SpectralDecomposition<std::complex<double>>
dense_spectrum(const Mat<std::complex<double>>&);
template SpectralDecomposition<double> subspace_spectrum(const Mat<double>&,
                                                         int, int);
template SpectralDecomposition<std::complex<double>>
subspace_spectrum(const Mat<std::complex<double>>&, int, int);
template SpectralDecomposition<double> spectrum(const Mat<double>&, int);
template SpectralDecomposition<std::complex<double>>
spectrum(const Mat<std::complex<double>>&, int);

Eigen::MatrixXd lossy_output_real(const ProbeSpec& p, LossModel model,
                                  double rate, int truncation) {
    if (!(rate >= 0.0 && rate <= 1.0))
        throw config_error("loss rate must lie in [0, 1]");
    const FockVector psi = ecs_fock(p, truncation);
    const Eigen::VectorXd v = psi.amplitudes.real();
    Eigen::MatrixXd rho = v * v.transpose();
    rho = loss_mode_a<double>(rho, truncation, rate);
    if (model == LossModel::both_arms)
        rho = loss_mode_b<double>(rho, truncation, rate);
    return rho;
}

FockOperator output_state(const ProbeSpec& p, const LossScenario& s,
                          int truncation) {
    validate(s);
    const Eigen::MatrixXd base =
        lossy_output_real(p, s.model, s.rate, truncation);
    FockOperator out;
    out.truncation = truncation;
    out.matrix = phase_rotate(base, truncation, s.phase);
    return out;
}

namespace {

// Spectral information functional over the certified part of the spectrum.
// Support x support pairs use the exact pair weights; support x complement
// contributions enter through the completion term 4/l |P_comp d rho v|^2,
// exact because the complement eigenvalues vanish.
template <class S>
double qfi_from_state(const Mat<S>& rho, int truncation, double floor_,
                      bool force_dense) {
    SpectralDecomposition<S> sd =
        force_dense ? dense_spectrum<S>(rho) : spectrum<S>(rho, 8);
    if (sd.completeness > 1e-10) {
        if (rho.rows() <= 2048) sd = dense_spectrum<S>(rho);
        if (sd.completeness > 1e-10)
            throw convergence_error("spectral capture above the certificate");
    }

    const int n = static_cast<int>(rho.rows());
    const Eigen::VectorXd na = na_values(truncation);
    // dr(i, j) = (na_i - na_j) rho(i, j); the physical derivative is -i dr
    // and only moduli enter below.
    Mat<S> dr(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) dr(i, j) = (na[i] - na[j]) * rho(i, j);

    std::vector<int> keep;
    for (int i = 0; i < sd.values.size(); ++i)
        if (sd.values[i] > floor_) keep.push_back(static_cast<int>(i));
    const int s = static_cast<int>(keep.size());
    if (s == 0) return 0.0;

    Mat<S> vs(n, s);
    Eigen::VectorXd lam(s);
    for (int i = 0; i < s; ++i) {
        vs.col(i) = sd.vectors.col(keep[static_cast<size_t>(i)]);
        lam[i] = sd.values[keep[static_cast<size_t>(i)]];
    }
    const Mat<S> b = dr * vs;
    const Mat<S> mss = vs.adjoint() * b;

    double f = 0.0;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            f += 2.0 * sqr_abs(mss(i, j)) / (lam[i] + lam[j]);
    for (int i = 0; i < s; ++i) {
        double rem = b.col(i).squaredNorm();
        for (int j = 0; j < s; ++j) rem -= sqr_abs(mss(j, i));
        f += (4.0 / lam[i]) * std::max(0.0, rem);
    }
    return f;
}

} // namespace

double oracle_qfi(const std::function<FockOperator(double)>& rho_builder,
                  double phi0, const OracleOptions& opts) {
    const FockOperator op = rho_builder(phi0);
    validate_density(op);
    const int nc = op.truncation;
    const int n = static_cast<int>(op.matrix.rows());

    // analytic commutator derivative against a central difference
    const Eigen::VectorXd na = na_values(nc);
    Eigen::MatrixXcd analytic(n, n);
    const std::complex<double> mi(0.0, -1.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            analytic(i, j) = mi * (na[i] - na[j]) * op.matrix(i, j);
    const FockOperator fp = rho_builder(phi0 + opts.fd_step);
    const FockOperator fm = rho_builder(phi0 - opts.fd_step);
    const double worst =
        ((fp.matrix - fm.matrix) / (2.0 * opts.fd_step) - analytic)
            .cwiseAbs()
            .maxCoeff();
    if (!(worst <= opts.fd_gate)) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "derivative cross-check mismatch %.3g", worst);
        throw numeric_error(buf);
    }

    if (op.matrix.imag().cwiseAbs().maxCoeff() == 0.0)
        return qfi_from_state<double>(op.matrix.real(), nc,
                                      opts.eigenvalue_floor, false);
    return qfi_from_state<std::complex<double>>(op.matrix, nc,
                                                opts.eigenvalue_floor, false);
}

double oracle_qfi_state(const ProbeSpec& p, const LossScenario& s,
                        int truncation, const OracleOptions& opts) {
    validate(s);
    const Eigen::MatrixXd base =
        lossy_output_real(p, s.model, s.rate, truncation);
    const auto builder = [&](double phi) {
        return FockOperator{truncation, phase_rotate(base, truncation, phi)};
    };
    return oracle_qfi(builder, s.phase, opts);
}

double oracle_qfi_dense(const ProbeSpec& p, const LossScenario& s,
                        int truncation, const OracleOptions& opts) {
    validate(s);
    const Eigen::MatrixXd base =
        lossy_output_real(p, s.model, s.rate, truncation);
    if (s.phase == 0.0)
        return qfi_from_state<double>(base, truncation, opts.eigenvalue_floor,
                                      true);
    return qfi_from_state<std::complex<double>>(
        phase_rotate(base, truncation, s.phase), truncation,
        opts.eigenvalue_floor, true);
}

namespace {

template <class S>
double negativity_from_pt(const Mat<S>& pt) {
    const auto negative_sum = [](const Eigen::VectorXd& vals) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < vals.size(); ++i)
            if (vals[i] < 0.0) acc -= vals[i];
        return acc;
    };
    if (pt.rows() <= 600) return negative_sum(dense_spectrum<S>(pt).values);
    for (int k : {8, 16, 32}) {
        const auto sd = subspace_spectrum<S>(pt, k);
        if (sd.completeness <= 1e-10) return negative_sum(sd.values);
    }
    if (pt.rows() <= 1800) return negative_sum(dense_spectrum<S>(pt).values);
    throw convergence_error("partial-transpose spectrum not captured");
}

} // namespace

double oracle_negativity(const FockOperator& rho) {
    validate_density(rho);
    if (rho.matrix.imag().cwiseAbs().maxCoeff() == 0.0) {
        const Eigen::MatrixXd pt = partial_transpose_a<double>(
            rho.matrix.real(), rho.truncation);
        return negativity_from_pt<double>(pt);
    }
    const Eigen::MatrixXcd pt =
        partial_transpose_a<std::complex<double>>(rho.matrix, rho.truncation);
    return negativity_from_pt<std::complex<double>>(pt);
}

double oracle_entropy_of_reduction(const FockVector& psi) {
    const Eigen::MatrixXcd ra = reduced_a(psi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ra);
    if (es.info() != Eigen::Success)
        throw convergence_error("reduction eigendecomposition failed");
    double h = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()[i];
        if (l > 1e-14) h -= l * std::log2(l);
    }
    return h;
}

double oracle_mean_photon_a(const FockOperator& rho) {
    const Eigen::VectorXd na = na_values(rho.truncation);
    return (rho.matrix.diagonal().real().array() * na.array()).sum();
}

} // namespace ecsmet::fock
