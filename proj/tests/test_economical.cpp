#include <cmath>
#include <vector>

#include "doctest.h"
#include "ecsmet/economical.hpp"
#include "ecsmet/errors.hpp"

using namespace ecsmet;

namespace {

const LossScenario kLossless{LossModel::both_arms, 0.0, 0.0};

} // namespace

TEST_CASE("information per photon at fixed probes") {
    // separable limit: exactly 4T for coincident amplitudes
    CHECK(eco_ratio(ProbeSpec{1, 1, Sign::plus}, kLossless) == 4.0);
    CHECK(eco_ratio(ProbeSpec{1, 1, Sign::plus},
                    LossScenario{LossModel::both_arms, 0.5, 0}) == 2.0);
    CHECK(eco_ratio(ProbeSpec{1, 0, Sign::plus}, kLossless) ==
          doctest::Approx(6.53788284273999).epsilon(1e-12));
}

TEST_CASE("zero-energy probes have no ratio") {
    CHECK_THROWS_AS(eco_ratio(ProbeSpec{0, 0, Sign::plus}, kLossless),
                    config_error);
}

TEST_CASE("lossless optimum snaps to the opposite amplitude at small alpha") {
    const EcoResult e = optimize_beta(0.3, kLossless);
    CHECK(e.beta_opt == -0.3);
    CHECK(e.tie_snap);
    CHECK_FALSE(e.boundary);
    CHECK(e.eco_value >= 4.0);
    CHECK_FALSE(e.grid_trace.empty());
}

TEST_CASE("interior optimum reference values") {
    SUBCASE("near-lossless") {
        const EcoResult e =
            optimize_beta(1.0, LossScenario{LossModel::both_arms, 1e-3, 0});
        CHECK(e.refined);
        CHECK(e.beta_opt == doctest::Approx(-0.158564552360989).epsilon(1e-9));
        CHECK(e.eco_value == doctest::Approx(6.79470920368311).epsilon(1e-9));
    }
    SUBCASE("strong loss") {
        const EcoResult e =
            optimize_beta(0.6, LossScenario{LossModel::both_arms, 0.8, 0});
        CHECK(e.beta_opt == doctest::Approx(0.208251023536944).epsilon(1e-9));
        CHECK(e.eco_value == doctest::Approx(0.807224086027382).epsilon(1e-9));
    }
}

TEST_CASE("the optimum value dominates every grid sample") {
    const EcoResult e =
        optimize_beta(1.4, LossScenario{LossModel::both_arms, 0.35, 0});
    for (const auto& [beta, ratio] : e.grid_trace) {
        CHECK(e.eco_value >= ratio - 1e-12);
        CHECK(beta >= -1.4);
        CHECK(beta < 1.4);
    }
}

TEST_CASE("vanishing-transmissivity landscape is flat") {
    const EcoResult e =
        optimize_beta(1.0, LossScenario{LossModel::both_arms, 1.0, 0});
    CHECK_FALSE(e.refined);
    CHECK(e.beta_opt == -1.0);
    CHECK(e.eco_value == 0.0);
}

TEST_CASE("supremum at the excluded end is flagged") {
    const EcoResult e = optimize_beta(
        0.6, LossScenario{LossModel::both_arms, 1.0 - 1e-6, 0});
    CHECK(e.boundary);
    CHECK(e.beta_opt == doctest::Approx(0.6 - 1e-6).epsilon(1e-12));
}

TEST_CASE("nonpositive alpha is rejected") {
    CHECK_THROWS_AS(optimize_beta(0.0, kLossless), config_error);
    CHECK_THROWS_AS(optimize_beta(-1.0, kLossless), config_error);
}

TEST_CASE("sweep table matches pointwise optimization") {
    const std::vector<double> alphas{0.5, 1.0, 2.0};
    const std::vector<double> rates{0.1, 0.4, 0.7};
    const auto rows = eco_surface(alphas, rates, LossModel::both_arms);
    REQUIRE(rows.size() == alphas.size() * rates.size());
    size_t i = 0;
    for (double a : alphas)
        for (double r : rates) {
            const EcoResult e =
                optimize_beta(a, LossScenario{LossModel::both_arms, r, 0});
            CHECK(rows[i].alpha == a);
            CHECK(rows[i].rate == r);
            CHECK(rows[i].beta_opt == e.beta_opt);
            CHECK(rows[i].eco == e.eco_value);
            ++i;
        }
}

TEST_CASE("sweep grids are validated") {
    CHECK_THROWS_AS(eco_surface({}, {0.1}, LossModel::both_arms), config_error);
    CHECK_THROWS_AS(eco_surface({1.0}, {}, LossModel::both_arms), config_error);
    CHECK_THROWS_AS(eco_surface({1.0, 0.5}, {0.1}, LossModel::both_arms),
                    config_error);
    CHECK_THROWS_AS(eco_surface({-1.0}, {0.1}, LossModel::both_arms),
                    config_error);
    CHECK_THROWS_AS(eco_surface({1.0}, {1.5}, LossModel::both_arms),
                    config_error);
}
