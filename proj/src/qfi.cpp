#include "ecsmet/qfi.hpp"

#include <cmath>
#include <string>

namespace ecsmet {

QfiResult qfi_separable_coherent(double alpha, const LossScenario& s) {
    validate(s);
    if (!std::isfinite(alpha)) throw config_error("alpha must be finite");
    QfiResult r;
    r.value = 4.0 * s.transmissivity() * alpha * alpha;
    r.variance_term = r.value;
    r.coherence_penalty = 0.0;
    r.probe = ProbeSpec{alpha, alpha, Sign::plus};
    r.scenario = s;
    return r;
}

QfiResult qfi_ecs(const ProbeSpec& p, const LossScenario& s) {
    validate(s);
    validate(p);
    if (is_degenerate(p)) {
        // separable continuity limit; validate() already rejected the minus sign
        QfiResult r = qfi_separable_coherent(p.alpha, s);
        r.probe = p;
        return r;
    }
    const SpectralPair sp = spectral(p, s);
    const double fp = sp.gpp - sp.hpp * sp.hpp;
    const double fm = sp.gmm - sp.hmm * sp.hmm;
    QfiResult r;
    r.variance_term = 4.0 * (sp.lambda_plus * fp + sp.lambda_minus * fm);
    r.coherence_penalty =
        4.0 *
        (2.0 * sp.lambda_plus * sp.lambda_minus /
         (sp.lambda_plus + sp.lambda_minus)) *
        (2.0 * sp.cross * sp.cross);
    r.value = r.variance_term - r.coherence_penalty;
    r.probe = p;
    r.scenario = s;
    return r;
}

EnergyComparison compare_at_fixed_energy(double n_av, double gamma, Sign sign,
                                         const LossScenario& s) {
    validate(s);
    if (!(n_av >= 0.0) || !std::isfinite(n_av))
        throw config_error("mean photon number must be nonnegative");
    if (!std::isfinite(gamma)) throw config_error("gamma must be finite");

    EnergyComparison out;
    out.n_av = n_av;
    out.gamma = gamma;
    out.coherent = qfi_separable_coherent(std::sqrt(n_av), s);

    if (sign == Sign::minus && n_av <= 0.5)
        throw unreachable_energy_error(
            "minus-sign probes have mean photon number above 1/2");

    if (sign == Sign::plus && std::abs(gamma - 1.0) < 1e-12) {
        // separable diagonal of the family: alpha^2 = n_av exactly
        out.alpha = std::sqrt(n_av);
        out.ecs = qfi_ecs(ProbeSpec{out.alpha, out.alpha, sign}, s);
        return out;
    }

    const auto mean = [&](double a) {
        return mean_photon_a(ProbeSpec{a, gamma * a, sign});
    };

    double lo = 0.0;
    double hi = 10.0 * std::sqrt(n_av);
    if (hi <= 0.0) hi = 1.0;
    const double f_lo = (sign == Sign::minus ? 0.5 : 0.0) - n_av;
    if (f_lo > 0.0)
        throw unreachable_energy_error("requested energy below family minimum");
    int widen = 0;
    while (mean(hi) < n_av) {
        hi *= 2.0;
        if (++widen > 4)
            throw unreachable_energy_error(
                "failed to bracket the requested energy");
    }
    // plain bisection: mean is strictly increasing in alpha at fixed gamma
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mean(mid) < n_av ? lo : hi) = mid;
    }
    out.alpha = 0.5 * (lo + hi);
    out.ecs = qfi_ecs(ProbeSpec{out.alpha, gamma * out.alpha, sign}, s);
    return out;
}

} // namespace ecsmet
