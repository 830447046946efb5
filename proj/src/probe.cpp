#include "ecsmet/probe.hpp"

#include <cmath>

namespace ecsmet {

namespace {

constexpr double kDegenerate = 1e-9;

double entropy_term(double p) {
    // p log2 p with the 0 log 0 = 0 convention
    return p > 0.0 ? p * std::log2(p) : 0.0;
}

} // namespace

bool is_degenerate(const ProbeSpec& p) {
    return std::abs(p.alpha - p.beta) < kDegenerate;
}

void validate(const ProbeSpec& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta))
        throw config_error("probe amplitudes must be finite");
    if (p.sign == Sign::minus && is_degenerate(p))
        throw degenerate_state_error(
            "minus-sign state vanishes at alpha == beta");
}

double normalization(const ProbeSpec& p) {
    validate(p);
    const double d2 = p.separation() * p.separation();
    if (p.sign == Sign::plus) return 2.0 * (1.0 + std::exp(-d2));
    return -2.0 * std::expm1(-d2);
}

OverlapBundle overlap(const ProbeSpec& p) {
    OverlapBundle o;
    o.n_t = normalization(p);
    o.d2 = p.separation() * p.separation();
    o.x = std::exp(-o.d2 / 2.0);
    return o;
}

double mean_photon_a(const ProbeSpec& p) {
    validate(p);
    const double a = p.alpha, b = p.beta;
    const double d2 = (a - b) * (a - b);
    if (p.sign == Sign::plus) {
        const double x2 = std::exp(-d2);
        return (a * a + b * b + 2.0 * a * b * x2) / (2.0 * (1.0 + x2));
    }
    // (a^2 + b^2 - 2ab x^2) / (2(1-x^2)) = (a-b)^2 / (2(1-x^2)) + ab,
    // stable down to the degeneracy guard and -> 1/2 as a, b -> 0
    return d2 / (-2.0 * std::expm1(-d2)) + a * b;
}

double degree_of_entanglement(const ProbeSpec& p) {
    validate(p);
    if (p.sign == Sign::minus) return 1.0;
    const double d2 = p.separation() * p.separation();
    const double x = std::exp(-d2 / 2.0);
    // two-point spectrum of either reduction
    const double denom = 2.0 * (1.0 + x * x);
    const double pp = (1.0 + x) * (1.0 + x) / denom;
    const double pm = (1.0 - x) * (1.0 - x) / denom;
    return 0.0 - entropy_term(pp) - entropy_term(pm);
}

GenerationInputs generation_inputs(const ProbeSpec& p) {
    validate(p);
    if (p.sign != Sign::plus)
        throw config_error(
            "generation recipe is defined for the plus sign only");
    const double r = std::sqrt(0.5);
    return GenerationInputs{(p.alpha + p.beta) * r, (p.alpha - p.beta) * r};
}

} // namespace ecsmet
