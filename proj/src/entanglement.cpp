#include "ecsmet/entanglement.hpp"

#include <cmath>
#include <cstdio>

#include "ecsmet/fock/fock.hpp"
#include "ecsmet/fock/kernels.hpp"
#include "ecsmet/fock/oracle.hpp"

namespace ecsmet {

namespace {

void check_probe(const ProbeSpec& p, const LossScenario& s, LossModel want) {
    if (p.sign != Sign::plus)
        throw config_error("negativity closed forms cover the plus sign only");
    validate(p);
    validate(s);
    if (s.model != want)
        throw config_error("scenario model does not match the requested form");
}

} // namespace

NegativityResult negativity_both_arms(const ProbeSpec& p,
                                      const LossScenario& s) {
    check_probe(p, s, LossModel::both_arms);
    const double d2 = p.separation() * p.separation();
    const double x2 = std::exp(-d2);
    // exp(-R d2) - exp(-d2) vanishes identically at R = 1 and at alpha = beta
    const double value = (std::exp(-s.rate * d2) - x2) / (2.0 * (1.0 + x2));
    return NegativityResult{value, s.model, p, s.rate};
}

NegativityResult negativity_one_arm(const ProbeSpec& p,
                                    const LossScenario& s) {
    check_probe(p, s, LossModel::one_arm_a);
    const double d2 = p.separation() * p.separation();
    const double t = s.transmissivity();
    const double r = s.rate;

    const double one_minus_er = -std::expm1(-r * d2 / 2.0);
    const double er = std::exp(-r * d2 / 2.0);
    const double et = std::exp(-t * d2 / 2.0);
    const double e1 = std::exp(-d2 / 2.0);

    const double b1 = 8.0 * one_minus_er * (-std::expm1(-(1.0 + t) * d2 / 2.0));
    const double b2 = 8.0 * one_minus_er * (et - e1);
    const double b3 = 16.0 * (1.0 + er) * (1.0 + er) * (-std::expm1(-t * d2)) *
                      (-std::expm1(-d2));
    const double disc = b2 * b2 + 4.0 * b3;
    if (disc < 0.0) {
        // every factor above is nonnegative, so this is unreachable unless
        // the inputs are corrupted; report with a brute-force value attached
        const int nc = fock::default_truncation(
            std::max(std::abs(p.alpha), std::abs(p.beta)));
        const double brute =
            fock::oracle_negativity(fock::output_state(p, s, nc));
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "negative discriminant %.6g in the one-arm negativity; "
                      "brute-force value %.12g",
                      disc, brute);
        throw formula_domain_error(buf);
    }
    const double nt = 2.0 * (1.0 + std::exp(-d2));
    const double value = std::abs(b1 - std::sqrt(disc)) / (16.0 * nt);
    return NegativityResult{value, s.model, p, s.rate};
}

} // namespace ecsmet
