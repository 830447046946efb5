#include "ecsmet/channels.hpp"

#include <cmath>

namespace ecsmet {

void validate(const LossScenario& s) {
    if (!(s.rate >= 0.0 && s.rate <= 1.0))
        throw config_error("loss rate must lie in [0, 1]");
    if (!std::isfinite(s.phase)) throw config_error("phase must be finite");
}

namespace {

// Shared derivation for all four cases. The eigenvector pair is
// |A+-> = (|u> +- |v>) / sqrt(2 (1 +- s)) with component overlap s; the loss
// model fixes the exponents (w for s, rw for the weight factor c) and the
// sign fixes how c enters the weights. The five derivative scalars are the
// same functions of (alpha, beta, T, s) for both signs.
SpectralPair assemble(const ProbeSpec& p, const LossScenario& sc, double w,
                      double rw) {
    validate(sc);
    validate(p);
    if (is_degenerate(p))
        throw degenerate_state_error(
            "spectral scalars are singular at alpha == beta");

    const double a = p.alpha, b = p.beta;
    const double a2 = a * a, b2 = b * b, ab = a * b;
    const double d2 = (a - b) * (a - b);
    const double T = sc.transmissivity();

    const double s = std::exp(-w);
    const double c = std::exp(-rw);
    const double one_minus_s = -std::expm1(-w);   // 1 - s
    const double one_minus_c = -std::expm1(-rw);  // 1 - c
    const double x2 = std::exp(-d2);              // s * c for both models

    SpectralPair out;
    if (p.sign == Sign::plus) {
        const double n = 2.0 * (1.0 + x2);
        out.lambda_plus = (1.0 + c) * (1.0 + s) / n;
        out.lambda_minus = one_minus_c * one_minus_s / n;
    } else {
        const double n = -2.0 * std::expm1(-d2);
        out.lambda_plus = one_minus_c * (1.0 + s) / n;
        out.lambda_minus = (1.0 + c) * one_minus_s / n;
    }

    if (T == 0.0) return out;  // every derivative scalar carries a factor T

    out.gpp = T *
              (a2 * (T * a2 + 1.0) + b2 * (T * b2 + 1.0) +
               2.0 * ab * (T * ab + 1.0) * s) /
              (2.0 * (1.0 + s));
    // numerator identity: a2(Ta2+1) + b2(Tb2+1) - 2ab(Tab+1)
    //                   = T (a2 - b2)^2 + (a - b)^2
    out.gmm = T * (T * (a2 - b2) * (a2 - b2) + d2) / (2.0 * one_minus_s) +
              T * ab * (T * ab + 1.0);
    out.hpp = T * (a2 + b2 + 2.0 * ab * s) / (2.0 * (1.0 + s));
    out.hmm = T * d2 / (2.0 * one_minus_s) + T * ab;
    // 1 - s^2 = -expm1(-2w)
    out.cross = T * (a2 - b2) / (2.0 * std::sqrt(-std::expm1(-2.0 * w)));
    return out;
}

} // namespace

SpectralPair spectral_both_arms(const ProbeSpec& p, const LossScenario& s) {
    if (s.model != LossModel::both_arms)
        throw config_error("scenario model does not match spectral_both_arms");
    if (p.sign != Sign::plus)
        throw config_error("spectral_both_arms handles the plus sign only");
    const double d2 = p.separation() * p.separation();
    return assemble(p, s, s.transmissivity() * d2, s.rate * d2);
}

SpectralPair spectral_one_arm(const ProbeSpec& p, const LossScenario& s) {
    if (s.model != LossModel::one_arm_a)
        throw config_error("scenario model does not match spectral_one_arm");
    if (p.sign != Sign::plus)
        throw config_error("spectral_one_arm handles the plus sign only");
    const double d2 = p.separation() * p.separation();
    return assemble(p, s, (1.0 + s.transmissivity()) * d2 / 2.0,
                    s.rate * d2 / 2.0);
}

SpectralPair spectral_minus(const ProbeSpec& p, const LossScenario& s) {
    if (p.sign != Sign::minus)
        throw config_error("spectral_minus handles the minus sign only");
    const double d2 = p.separation() * p.separation();
    if (s.model == LossModel::both_arms)
        return assemble(p, s, s.transmissivity() * d2, s.rate * d2);
    return assemble(p, s, (1.0 + s.transmissivity()) * d2 / 2.0,
                    s.rate * d2 / 2.0);
}

SpectralPair spectral(const ProbeSpec& p, const LossScenario& s) {
    if (p.sign == Sign::minus) return spectral_minus(p, s);
    return s.model == LossModel::both_arms ? spectral_both_arms(p, s)
                                           : spectral_one_arm(p, s);
}

} // namespace ecsmet
