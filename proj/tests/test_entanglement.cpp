#include <cmath>

#include "doctest.h"
#include "ecsmet/entanglement.hpp"
#include "ecsmet/errors.hpp"

using namespace ecsmet;

TEST_CASE("negativity reference values") {
    CHECK(negativity_both_arms(ProbeSpec{1, 0, Sign::plus},
                               LossScenario{LossModel::both_arms, 0.3, 0})
              .value == doctest::Approx(0.136320047032395).epsilon(1e-12));
    CHECK(negativity_one_arm(ProbeSpec{1, 0, Sign::plus},
                             LossScenario{LossModel::one_arm_a, 0.4, 0})
              .value == doctest::Approx(0.159329039633608).epsilon(1e-12));
}

TEST_CASE("negativity vanishes exactly at full loss and at zero separation") {
    CHECK(negativity_both_arms(ProbeSpec{1.3, -0.4, Sign::plus},
                               LossScenario{LossModel::both_arms, 1.0, 0})
              .value == 0.0);
    CHECK(negativity_both_arms(ProbeSpec{0.8, 0.8, Sign::plus},
                               LossScenario{LossModel::both_arms, 0.2, 0})
              .value == 0.0);
    CHECK(negativity_one_arm(ProbeSpec{0.8, 0.8, Sign::plus},
                             LossScenario{LossModel::one_arm_a, 0.2, 0})
              .value == 0.0);
    // one-arm full loss: the closed form cancels to rounding noise
    CHECK(std::abs(negativity_one_arm(ProbeSpec{1.3, -0.4, Sign::plus},
                                      LossScenario{LossModel::one_arm_a, 1.0, 0})
                       .value) <= 1e-15);
}

TEST_CASE("negativity without loss is the pure-state value") {
    // (1 - e^{-d2}) / (2 (1 + e^{-d2})) at R = 0
    const double d2 = 4.0;
    const double want = -std::expm1(-d2) / (2.0 * (1.0 + std::exp(-d2)));
    CHECK(negativity_both_arms(ProbeSpec{1, -1, Sign::plus},
                               LossScenario{LossModel::both_arms, 0, 0})
              .value == doctest::Approx(want).epsilon(1e-14));
    CHECK(negativity_one_arm(ProbeSpec{1, -1, Sign::plus},
                             LossScenario{LossModel::one_arm_a, 0, 0})
              .value == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("negativity decays from no loss to heavy loss") {
    for (double b : {-0.5, 0.0, 0.5}) {
        const ProbeSpec p{1.0, b, Sign::plus};
        const double lo = negativity_both_arms(
                              p, LossScenario{LossModel::both_arms, 0.9, 0})
                              .value;
        const double hi = negativity_both_arms(
                              p, LossScenario{LossModel::both_arms, 0.0, 0})
                              .value;
        CHECK(hi > lo);
        CHECK(lo >= 0.0);
    }
}

TEST_CASE("curve ordering reverses between weak and strong loss at large alpha") {
    auto e = [](double beta, double rate) {
        return negativity_both_arms(ProbeSpec{5, beta, Sign::plus},
                                    LossScenario{LossModel::both_arms, rate, 0})
            .value;
    };
    // separated components win near zero loss, close components under loss
    CHECK(e(0.0, 0.001) > e(3.5, 0.001));
    CHECK(e(0.0, 0.5) < e(3.5, 0.5));
}

TEST_CASE("only the plus sign and the matching model are accepted") {
    CHECK_THROWS_AS(negativity_both_arms(ProbeSpec{1, 0, Sign::minus},
                                         LossScenario{LossModel::both_arms,
                                                      0.2, 0}),
                    config_error);
    CHECK_THROWS_AS(negativity_both_arms(ProbeSpec{1, 0, Sign::plus},
                                         LossScenario{LossModel::one_arm_a,
                                                      0.2, 0}),
                    config_error);
    CHECK_THROWS_AS(negativity_one_arm(ProbeSpec{1, 0, Sign::plus},
                                       LossScenario{LossModel::both_arms,
                                                    0.2, 0}),
                    config_error);
}

TEST_CASE("result echoes its inputs") {
    const NegativityResult r = negativity_both_arms(
        ProbeSpec{1.1, 0.2, Sign::plus},
        LossScenario{LossModel::both_arms, 0.15, 0});
    CHECK(r.model == LossModel::both_arms);
    CHECK(r.rate == 0.15);
    CHECK(r.probe.alpha == 1.1);
    CHECK(r.probe.beta == 0.2);
}
