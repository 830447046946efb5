#ifndef ECSMET_ENTANGLEMENT_HPP
#define ECSMET_ENTANGLEMENT_HPP

#include "ecsmet/channels.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet {

struct NegativityResult {
    double value = 0.0;  // >= 0; exactly 0 at R = 1 and at alpha = beta
    LossModel model = LossModel::both_arms;
    ProbeSpec probe;
    double rate = 0.0;
};

// Closed-form negativity of the plus-sign output state under loss in both
// arms, evaluated as (e^{-R d2} - e^{-d2}) / (2 (1 + e^{-d2})) which is
// overflow-free for any separation.
NegativityResult negativity_both_arms(const ProbeSpec& p, const LossScenario& s);

// One-arm-loss negativity |B1 - sqrt(B2^2 + 4 B3)| / (16 N_T). The
// discriminant is nonnegative for every valid input; a negative value would
// mean the closed form left its domain and raises formula_domain_error with
// the brute-force value attached.
NegativityResult negativity_one_arm(const ProbeSpec& p, const LossScenario& s);

} // namespace ecsmet

#endif // ECSMET_ENTANGLEMENT_HPP
