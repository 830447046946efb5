#include <cmath>
#include <cstdio>
#include <vector>

#include "ecsmet/fock/kernels.hpp"
#include "ecsmet/fock/oracle.hpp"
#include "ecsmet/qfi.hpp"

namespace ecsmet {

// Joint photon counting after the closing balanced splitter. The outcome
// distribution is P(n) = sum_k l_k |U_bs e^{-i phi n_a} v_k|^2 over the
// certified spectrum of the lossy base state, and the phi derivative is
// taken analytically through the generator.
double cfi_pnrd(const ProbeSpec& p, const LossScenario& s, double phi,
                int truncation) {
    validate(p);
    validate(s);
    if (truncation < 2) throw config_error("cutoff too small");

    const Eigen::MatrixXd base =
        fock::lossy_output_real(p, s.model, s.rate, truncation);
    auto sd = fock::spectrum<double>(base, 8);
    if (sd.completeness > 1e-10) {
        if (base.rows() <= 2048) sd = fock::dense_spectrum<double>(base);
        if (sd.completeness > 1e-10)
            throw convergence_error("spectral capture above the certificate");
    }

    const int n = static_cast<int>(base.rows());
    const Eigen::VectorXd na = fock::na_values(truncation);
    Eigen::VectorXcd ph(n);
    for (int i = 0; i < n; ++i)
        ph[i] = std::exp(std::complex<double>(0.0, -phi * na[i]));

    const fock::BeamSplitter bs(truncation);
    Eigen::VectorXd prob = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd dprob = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k < sd.values.size(); ++k) {
        const double l = sd.values[k];
        if (l <= 1e-12) continue;
        const Eigen::VectorXcd y =
            ph.cwiseProduct(sd.vectors.col(k).cast<std::complex<double>>());
        const Eigen::VectorXcd u = bs.apply(y);
        const Eigen::VectorXcd t =
            bs.apply(Eigen::VectorXcd(na.cast<std::complex<double>>()
                                          .cwiseProduct(y)));
        for (int i = 0; i < n; ++i) {
            prob[i] += l * std::norm(u[i]);
            // d/dphi |<n|U e^{-i phi n_a} v>|^2 = 2 Im(conj(u) t)
            dprob[i] += l * 2.0 * std::imag(std::conj(u[i]) * t[i]);
        }
    }

    const double captured = prob.sum();
    if (!(captured >= 1.0 - 1e-10)) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "captured probability %.12g below the budget", captured);
        throw truncation_error(buf);
    }

    double f = 0.0;
    for (int i = 0; i < n; ++i)
        if (prob[i] > 1e-15) f += dprob[i] * dprob[i] / prob[i];
    return f;
}

} // namespace ecsmet
