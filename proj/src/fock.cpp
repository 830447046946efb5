#include "ecsmet/fock/fock.hpp"

#include <cmath>
#include <cstdio>

namespace ecsmet::fock {

namespace {

// Unnormalized truncated coherent column e^{-a^2/2} a^n / sqrt(n!).
Eigen::VectorXd coherent_raw(double alpha, int truncation) {
    Eigen::VectorXd v(mode_dim(truncation));
    v[0] = std::exp(-alpha * alpha / 2.0);
    for (int n = 1; n <= truncation; ++n)
        v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return v;
}

void gate_leakage(double leakage, const char* what, double amplitude,
                  int truncation, double budget) {
    if (!(leakage <= budget)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%s leaks %.3g past cutoff %d at amplitude %.6g "
                      "(budget %.1g)",
                      what, leakage, truncation, amplitude, budget);
        throw truncation_error(buf);
    }
}

} // namespace

int default_truncation(double max_amplitude) {
    const double m = std::abs(max_amplitude);
    if (m <= 0.6) return 12;
    if (m <= 1.0) return 16;
    if (m <= 1.5) return 20;
    if (m <= 2.0) return 26;
    if (m <= 3.0) return 40;
    return static_cast<int>(std::ceil(m * m + 8.0 * m + 20.0));
}

Eigen::VectorXd coherent_fock(double alpha, int truncation,
                              double leakage_budget) {
    if (truncation < 1) throw config_error("cutoff must be at least 1");
    Eigen::VectorXd v = coherent_raw(alpha, truncation);
    const double norm2 = v.squaredNorm();
    gate_leakage(1.0 - norm2, "coherent state", alpha, truncation,
                 leakage_budget);
    return v / std::sqrt(norm2);
}

Eigen::VectorXd even_cat_fock(double gamma, int truncation,
                              double leakage_budget) {
    if (truncation < 1) throw config_error("cutoff must be at least 1");
    Eigen::VectorXd v =
        coherent_raw(gamma, truncation) + coherent_raw(-gamma, truncation);
    const double norm2 = v.squaredNorm();
    const double exact = 2.0 * (1.0 + std::exp(-2.0 * gamma * gamma));
    gate_leakage(1.0 - norm2 / exact, "even cat state", gamma, truncation,
                 leakage_budget);
    return v / std::sqrt(norm2);
}

FockVector product_fock(const Eigen::VectorXd& mode_a,
                        const Eigen::VectorXd& mode_b, int truncation) {
    const int m1 = mode_dim(truncation);
    if (mode_a.size() != m1 || mode_b.size() != m1)
        throw config_error("mode columns do not match the cutoff");
    FockVector out;
    out.truncation = truncation;
    out.amplitudes.resize(pair_dim(truncation));
    for (int na = 0; na < m1; ++na)
        for (int nb = 0; nb < m1; ++nb)
            out.amplitudes[na * m1 + nb] =
                std::complex<double>(mode_a[na] * mode_b[nb], 0.0);
    return out;
}

FockVector ecs_fock(const ProbeSpec& p, int truncation,
                    double leakage_budget) {
    validate(p);
    if (truncation < 1) throw config_error("cutoff must be at least 1");
    const int m1 = mode_dim(truncation);
    const Eigen::VectorXd ua = coherent_raw(p.alpha, truncation);
    const Eigen::VectorXd ub = coherent_raw(p.beta, truncation);
    const double sg = p.sign == Sign::plus ? 1.0 : -1.0;

    Eigen::VectorXd psi(pair_dim(truncation));
    for (int na = 0; na < m1; ++na)
        for (int nb = 0; nb < m1; ++nb)
            psi[na * m1 + nb] = ua[na] * ub[nb] + sg * (ub[na] * ua[nb]);

    const double norm2 = psi.squaredNorm();
    const double exact = normalization(p);
    gate_leakage(1.0 - norm2 / exact, "probe state",
                 std::max(std::abs(p.alpha), std::abs(p.beta)), truncation,
                 leakage_budget);

    FockVector out;
    out.truncation = truncation;
    out.amplitudes = (psi / std::sqrt(norm2)).cast<std::complex<double>>();
    return out;
}

Eigen::VectorXd na_values(int truncation) {
    const int m1 = mode_dim(truncation);
    Eigen::VectorXd v(pair_dim(truncation));
    for (int na = 0; na < m1; ++na)
        for (int nb = 0; nb < m1; ++nb)
            v[na * m1 + nb] = static_cast<double>(na);
    return v;
}

Eigen::VectorXd nb_values(int truncation) {
    const int m1 = mode_dim(truncation);
    Eigen::VectorXd v(pair_dim(truncation));
    for (int na = 0; na < m1; ++na)
        for (int nb = 0; nb < m1; ++nb)
            v[na * m1 + nb] = static_cast<double>(nb);
    return v;
}

double fidelity(const FockVector& a, const FockVector& b) {
    if (a.truncation != b.truncation)
        throw config_error("fidelity needs matching cutoffs");
    return std::norm(a.amplitudes.dot(b.amplitudes));
}

Eigen::MatrixXcd reduced_a(const FockVector& psi) {
    const int m1 = mode_dim(psi.truncation);
    // row na, column nb view of the flattened amplitudes
    Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                   Eigen::Dynamic, Eigen::RowMajor>>
        m(psi.amplitudes.data(), m1, m1);
    return m * m.adjoint();
}

void validate_density(const FockOperator& op) {
    if (op.matrix.rows() != pair_dim(op.truncation) ||
        op.matrix.cols() != op.matrix.rows())
        throw config_error("operator shape does not match the cutoff");
    const double herm =
        (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm < 1e-12)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "hermiticity defect %.3g", herm);
        throw numeric_error(buf);
    }
    const double tr = std::abs(op.matrix.trace() - std::complex<double>(1.0));
    if (!(tr < 1e-10)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "trace defect %.3g", tr);
        throw numeric_error(buf);
    }
}

} // namespace ecsmet::fock
