#include "ecsmet/sld.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "ecsmet/fock/fock.hpp"
#include "ecsmet/fock/kernels.hpp"
#include "ecsmet/fock/oracle.hpp"
#include "ecsmet/qfi.hpp"

namespace ecsmet {

SldDescription sld(const ProbeSpec& p, const LossScenario& s) {
    if (p.sign != Sign::plus)
        throw config_error("the closed SLD form covers the plus sign only");
    validate(p);
    validate(s);
    if (is_degenerate(p))
        throw degenerate_state_error(
            "coincident amplitudes make the eigenbasis normalization "
            "singular");

    const double t = s.transmissivity();
    const double d2 = p.separation() * p.separation();
    const double rt = std::sqrt(t);

    SldDescription out;
    double numerator = 0.0;
    double denom2 = 0.0; // 1 - s^2 of the support overlap
    if (s.model == LossModel::both_arms) {
        out.u = SldBasisComponent{rt * p.alpha, rt * p.beta};
        out.v = SldBasisComponent{rt * p.beta, rt * p.alpha};
        out.overlap_s = std::exp(-t * d2);
        numerator = std::exp(-t * d2) + std::exp(-s.rate * d2);
        denom2 = -std::expm1(-2.0 * t * d2);
    } else {
        out.u = SldBasisComponent{rt * p.beta, p.alpha};
        out.v = SldBasisComponent{rt * p.alpha, p.beta};
        out.overlap_s = std::exp(-(1.0 + t) * d2 / 2.0);
        numerator =
            std::exp(-(1.0 + t) * d2 / 2.0) + std::exp(-s.rate * d2 / 2.0);
        denom2 = -std::expm1(-(1.0 + t) * d2);
    }

    // t = 0 gives 0/0; the support carries no phase information there.
    if (t == 0.0) {
        out.coefficient_a = 0.0;
    } else {
        const double n_t = 2.0 * (1.0 + std::exp(-d2));
        out.coefficient_a =
            2.0 * t * std::abs(p.alpha * p.alpha - p.beta * p.beta) *
            numerator / (n_t * std::sqrt(denom2));
    }

    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "|l+-> = (|u> +- |v>)/sqrt(2(1 +- s)) with u = "
                  "(%.6g, %.6g), v = (%.6g, %.6g), s = %.6g; mode-a "
                  "amplitudes carry exp(-i phi)",
                  out.u.amp_a, out.u.amp_b, out.v.amp_a, out.v.amp_b,
                  out.overlap_s);
    out.basis = buf;
    out.eigenbasis_note =
        "L is diagonal in (|l+> + i|l->)/sqrt(2), (|l+> - i|l->)/sqrt(2); "
        "projecting onto that pair saturates the bound";
    return out;
}

namespace {

using cd = std::complex<double>;

Eigen::VectorXcd component_vector(const SldBasisComponent& comp, int nc,
                                  double phi) {
    const int m1 = fock::mode_dim(nc);
    const Eigen::VectorXd ca = fock::coherent_fock(comp.amp_a, nc);
    const Eigen::VectorXd cb = fock::coherent_fock(comp.amp_b, nc);
    Eigen::VectorXcd out(fock::pair_dim(nc));
    for (int na = 0; na < m1; ++na) {
        const cd ph = std::exp(cd(0.0, -phi * na)) * ca[na];
        for (int nb = 0; nb < m1; ++nb) out[na * m1 + nb] = ph * cb[nb];
    }
    return out;
}

} // namespace

SldReport verify_sld_identities(const ProbeSpec& p, const LossScenario& s,
                                int truncation) {
    if (p.sign != Sign::plus)
        throw config_error("the verification covers the plus sign only");
    validate(p);
    validate(s);
    if (truncation < 2) throw config_error("cutoff too small");

    const fock::FockOperator op = fock::output_state(p, s, truncation);
    fock::validate_density(op);
    const int n = static_cast<int>(op.matrix.rows());

    auto sd = fock::spectrum<cd>(op.matrix, 8);
    if (sd.completeness > 1e-10) {
        if (n <= 2048) sd = fock::dense_spectrum<cd>(op.matrix);
        if (sd.completeness > 1e-10)
            throw convergence_error("spectral capture above the certificate");
    }
    std::vector<int> keep;
    for (Eigen::Index i = 0; i < sd.values.size(); ++i)
        if (sd.values[i] > 1e-12) keep.push_back(static_cast<int>(i));
    const int sp = static_cast<int>(keep.size());
    if (sp == 0) throw numeric_error("empty support");

    Eigen::MatrixXcd vs(n, sp);
    Eigen::VectorXd lam(sp);
    for (int i = 0; i < sp; ++i) {
        vs.col(i) = sd.vectors.col(keep[static_cast<size_t>(i)]);
        lam[i] = sd.values[keep[static_cast<size_t>(i)]];
    }

    const Eigen::VectorXd na = fock::na_values(truncation);
    Eigen::MatrixXcd d(n, n);
    const cd mi(0.0, -1.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            d(i, j) = mi * (na[i] - na[j]) * op.matrix(i, j);

    // L = X K X+ solves the defining equation on the certified spectrum:
    // the support block uses pair weights 2/(l_i + l_j), the support-null
    // couplings enter through the unnormalized complements w_i = P_comp d v_i
    // with weights 2/l_i.
    const Eigen::MatrixXcd b = d * vs;
    const Eigen::MatrixXcd mss = vs.adjoint() * b;
    const Eigen::MatrixXcd w = b - vs * mss;
    Eigen::MatrixXcd x(n, 2 * sp);
    x.leftCols(sp) = vs;
    x.rightCols(sp) = w;
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(2 * sp, 2 * sp);
    for (int i = 0; i < sp; ++i) {
        for (int j = 0; j < sp; ++j) k(i, j) = 2.0 * mss(i, j) / (lam[i] + lam[j]);
        k(i, sp + i) = 2.0 / lam[i];
        k(sp + i, i) = 2.0 / lam[i];
    }
    const Eigen::MatrixXcd g = x.adjoint() * op.matrix * x;
    const Eigen::MatrixXcd s4 = x.adjoint() * x;

    SldReport rep;
    rep.qfi_value = qfi_ecs(p, s).value;
    rep.zero_mean_residual = std::abs((g * k).trace());
    rep.qfi_residual =
        std::abs((g * k * s4 * k).trace().real() - rep.qfi_value);
    const Eigen::MatrixXcd a1 =
        g.topRows(sp) * k * s4.leftCols(sp); // Vs+ rho L Vs
    const Eigen::MatrixXcd a2 =
        s4.topRows(sp) * k * g.leftCols(sp); // Vs+ L rho Vs
    rep.lyapunov_residual = (mss - 0.5 * (a1 + a2)).norm();

    if (!is_degenerate(p)) {
        const SldDescription desc = sld(p, s);
        const Eigen::VectorXcd uvec =
            component_vector(desc.u, truncation, s.phase);
        const Eigen::VectorXcd vvec =
            component_vector(desc.v, truncation, s.phase);
        Eigen::VectorXcd lp = uvec + vvec;
        Eigen::VectorXcd lm = uvec - vvec;
        const double np = lp.norm();
        const double nm = lm.norm();
        if (np > 1e-8 && nm > 1e-8) {
            lp /= np;
            lm /= nm;
            const Eigen::VectorXcd xp = x.adjoint() * lp;
            const Eigen::VectorXcd xm = x.adjoint() * lm;
            rep.support_coefficient = std::abs(xm.dot(k * xp));
        }
        rep.anomaly_a_zero =
            desc.coefficient_a < 1e-12 && rep.qfi_value > 1e-9;
    }
    return rep;
}

} // namespace ecsmet
