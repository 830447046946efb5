#include <cmath>

#include "doctest.h"
#include "ecsmet/errors.hpp"
#include "ecsmet/qfi.hpp"
#include "ecsmet/sld.hpp"

using namespace ecsmet;

TEST_CASE("closed-form coefficient reference values") {
    const SldDescription both = sld(ProbeSpec{1, 0.3, Sign::plus},
                                    LossScenario{LossModel::both_arms, 0.2, 0});
    CHECK(both.coefficient_a ==
          doctest::Approx(0.969017471791134).epsilon(1e-12));
    const SldDescription one = sld(ProbeSpec{1, 0.3, Sign::plus},
                                   LossScenario{LossModel::one_arm_a, 0.2, 0});
    CHECK(one.coefficient_a ==
          doctest::Approx(0.940911406939727).epsilon(1e-12));
}

TEST_CASE("basis amplitudes follow the loss model") {
    const double t = 0.8;
    const double rt = std::sqrt(t);
    const SldDescription both = sld(ProbeSpec{1, 0.3, Sign::plus},
                                    LossScenario{LossModel::both_arms, 0.2, 0});
    CHECK(both.u.amp_a == doctest::Approx(rt * 1.0).epsilon(1e-14));
    CHECK(both.u.amp_b == doctest::Approx(rt * 0.3).epsilon(1e-14));
    CHECK(both.v.amp_a == doctest::Approx(rt * 0.3).epsilon(1e-14));
    CHECK(both.v.amp_b == doctest::Approx(rt * 1.0).epsilon(1e-14));
    const SldDescription one = sld(ProbeSpec{1, 0.3, Sign::plus},
                                   LossScenario{LossModel::one_arm_a, 0.2, 0});
    // only mode a is attenuated
    CHECK(one.u.amp_a == doctest::Approx(rt * 0.3).epsilon(1e-14));
    CHECK(one.u.amp_b == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.v.amp_a == doctest::Approx(rt * 1.0).epsilon(1e-14));
    CHECK(one.v.amp_b == doctest::Approx(0.3).epsilon(1e-14));
    CHECK_FALSE(both.basis.empty());
    CHECK_FALSE(both.eigenbasis_note.empty());
}

TEST_CASE("full loss zeroes the coefficient") {
    const SldDescription d = sld(ProbeSpec{1, 0.3, Sign::plus},
                                 LossScenario{LossModel::both_arms, 1.0, 0});
    CHECK(d.coefficient_a == 0.0);
}

TEST_CASE("opposite amplitudes zero the coefficient while information remains") {
    const ProbeSpec p{1, -1, Sign::plus};
    const LossScenario s{LossModel::both_arms, 0.2, 0};
    CHECK(sld(p, s).coefficient_a == 0.0);
    CHECK(qfi_ecs(p, s).value > 1.0);
}

TEST_CASE("input domain") {
    CHECK_THROWS_AS(sld(ProbeSpec{1, 0.3, Sign::minus},
                        LossScenario{LossModel::both_arms, 0.2, 0}),
                    config_error);
    CHECK_THROWS_AS(sld(ProbeSpec{1, 1, Sign::plus},
                        LossScenario{LossModel::both_arms, 0.2, 0}),
                    degenerate_state_error);
}

TEST_CASE("numeric verification satisfies the defining identities") {
    const SldReport r = verify_sld_identities(
        ProbeSpec{1, 0.3, Sign::plus},
        LossScenario{LossModel::both_arms, 0.2, 0}, 16);
    CHECK(r.lyapunov_residual < 1e-10);
    CHECK(r.zero_mean_residual < 1e-10);
    CHECK(r.qfi_residual < 1e-8);
    CHECK(r.support_coefficient ==
          doctest::Approx(0.969017471791134).epsilon(1e-9));
    CHECK(r.qfi_value == doctest::Approx(1.76589981007452).epsilon(1e-12));
    CHECK_FALSE(r.anomaly_a_zero);
}

TEST_CASE("numeric verification flags the zero-coefficient anomaly") {
    const SldReport r = verify_sld_identities(
        ProbeSpec{1, -1, Sign::plus},
        LossScenario{LossModel::both_arms, 0.2, 0}, 16);
    CHECK(r.anomaly_a_zero);
    CHECK(r.qfi_value == doctest::Approx(3.25263744827533).epsilon(1e-12));
    // the identities still hold for the numerically built operator
    CHECK(r.lyapunov_residual < 1e-10);
    CHECK(r.qfi_residual < 1e-8);
}

TEST_CASE("one-arm verification agrees with the closed coefficient") {
    const SldReport r = verify_sld_identities(
        ProbeSpec{1, 0.3, Sign::plus},
        LossScenario{LossModel::one_arm_a, 0.2, 0}, 16);
    CHECK(r.support_coefficient ==
          doctest::Approx(0.940911406939727).epsilon(1e-9));
    CHECK(r.lyapunov_residual < 1e-10);
    CHECK(r.zero_mean_residual < 1e-10);
    CHECK(r.qfi_residual < 1e-8);
}

TEST_CASE("verification rejects unusable inputs") {
    CHECK_THROWS_AS(verify_sld_identities(
                        ProbeSpec{1, 0.3, Sign::minus},
                        LossScenario{LossModel::both_arms, 0.2, 0}, 16),
                    config_error);
    CHECK_THROWS_AS(verify_sld_identities(
                        ProbeSpec{1, 0.3, Sign::plus},
                        LossScenario{LossModel::both_arms, 0.2, 0}, 1),
                    config_error);
}
