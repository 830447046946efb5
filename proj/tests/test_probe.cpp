#include <cmath>

#include "doctest.h"
#include "ecsmet/errors.hpp"
#include "ecsmet/probe.hpp"

using namespace ecsmet;

TEST_CASE("normalization of the two superposition signs") {
    CHECK(normalization(ProbeSpec{1, 0, Sign::plus}) ==
          doctest::Approx(2.0 * (1.0 + std::exp(-1.0))).epsilon(1e-15));
    CHECK(normalization(ProbeSpec{1, 0, Sign::minus}) ==
          doctest::Approx(-2.0 * std::expm1(-1.0)).epsilon(1e-15));
    // normalization depends on the separation only
    CHECK(normalization(ProbeSpec{2, 1, Sign::plus}) ==
          doctest::Approx(normalization(ProbeSpec{1, 0, Sign::plus}))
              .epsilon(1e-14));
}

TEST_CASE("degenerate minus-sign probes are rejected") {
    CHECK_THROWS_AS(validate(ProbeSpec{0.7, 0.7, Sign::minus}),
                    degenerate_state_error);
    CHECK_THROWS_AS(normalization(ProbeSpec{0.7, 0.7, Sign::minus}),
                    config_error); // degenerate_state_error is a config_error
    CHECK_NOTHROW(validate(ProbeSpec{0.7, 0.7, Sign::plus}));
    CHECK(is_degenerate(ProbeSpec{1.0, 1.0 + 1e-10, Sign::plus}));
    CHECK_FALSE(is_degenerate(ProbeSpec{1.0, 0.9, Sign::plus}));
}

TEST_CASE("non-finite amplitudes are rejected") {
    CHECK_THROWS_AS(validate(ProbeSpec{std::nan(""), 0, Sign::plus}),
                    config_error);
    CHECK_THROWS_AS(validate(ProbeSpec{0, HUGE_VAL, Sign::plus}),
                    config_error);
}

TEST_CASE("mean photon number in one mode") {
    CHECK(mean_photon_a(ProbeSpec{1, 0, Sign::plus}) ==
          doctest::Approx(0.365529289315002).epsilon(1e-12));
    CHECK(mean_photon_a(ProbeSpec{1, 0, Sign::minus}) ==
          doctest::Approx(0.790988353434663).epsilon(1e-12));
    // minus-sign mean stays finite and -> 1/2 + ab for small separations
    const double m = mean_photon_a(ProbeSpec{1e-8, -1e-8, Sign::minus});
    CHECK(m == doctest::Approx(0.5).epsilon(1e-9));
    // plus sign at zero separation is the coherent value
    CHECK(mean_photon_a(ProbeSpec{1.3, 1.3, Sign::plus}) ==
          doctest::Approx(1.3 * 1.3).epsilon(1e-14));
}

TEST_CASE("degree of entanglement reference values") {
    CHECK(degree_of_entanglement(ProbeSpec{1, 0, Sign::plus}) ==
          doctest::Approx(0.31375932121599).epsilon(1e-12));
    CHECK(degree_of_entanglement(ProbeSpec{1, -1, Sign::plus}) ==
          doctest::Approx(0.948418466236661).epsilon(1e-12));
}

TEST_CASE("degree of entanglement is zero only at zero separation") {
    const double z = degree_of_entanglement(ProbeSpec{0, 0, Sign::plus});
    CHECK(z == 0.0);
    CHECK_FALSE(std::signbit(z));
    CHECK(degree_of_entanglement(ProbeSpec{0.8, 0.8, Sign::plus}) == 0.0);
}

TEST_CASE("degree of entanglement depends on the separation only") {
    const double base = degree_of_entanglement(ProbeSpec{1.1, 0.3, Sign::plus});
    for (double c : {-2.0, -0.4, 0.7, 3.1}) {
        CHECK(degree_of_entanglement(ProbeSpec{1.1 + c, 0.3 + c, Sign::plus}) ==
              doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("degree of entanglement grows with the separation") {
    double prev = -1.0;
    for (int i = 0; i <= 16; ++i) {
        const double v =
            degree_of_entanglement(ProbeSpec{0.25 * i, 0, Sign::plus});
        CHECK(v >= prev);
        prev = v;
    }
    // saturates at one bit
    CHECK(std::abs(degree_of_entanglement(ProbeSpec{6, 0, Sign::plus}) - 1.0) <=
          1e-12);
}

TEST_CASE("minus-sign probes are maximally entangled") {
    for (double b : {-1.0, -0.2, 0.0, 0.4}) {
        CHECK(degree_of_entanglement(ProbeSpec{1, b, Sign::minus}) == 1.0);
    }
    CHECK(degree_of_entanglement(ProbeSpec{0.01, -0.01, Sign::minus}) == 1.0);
}

TEST_CASE("generation inputs for the plus sign") {
    const GenerationInputs g = generation_inputs(ProbeSpec{1.2, -0.7, Sign::plus});
    const double r = std::sqrt(0.5);
    CHECK(g.coherent_amplitude == doctest::Approx((1.2 - 0.7) * r).epsilon(1e-15));
    CHECK(g.cat_amplitude == doctest::Approx((1.2 + 0.7) * r).epsilon(1e-15));
    CHECK_THROWS_AS(generation_inputs(ProbeSpec{1, 0, Sign::minus}),
                    config_error);
}
