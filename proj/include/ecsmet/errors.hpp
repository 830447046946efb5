#ifndef ECSMET_ERRORS_HPP
#define ECSMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecsmet {

// Invalid parameters or a request outside a quantity's domain of definition.
// The CLI maps this family to exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Superposition with vanishing norm (minus sign with alpha == beta).
struct degenerate_state_error : config_error {
    using config_error::config_error;
};

// Root find asked for a mean photon number the state family cannot reach.
struct unreachable_energy_error : config_error {
    using config_error::config_error;
};

// Numerical failure in truncated-basis work. The CLI maps this family to
// exit code 3.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested cutoff cannot hold the target state to the leakage budget.
struct truncation_error : numeric_error {
    using numeric_error::numeric_error;
};

// Iterative eigensolver failed to certify that it captured the spectrum.
struct convergence_error : numeric_error {
    using numeric_error::numeric_error;
};

// Closed-form expression evaluated outside its algebraic domain. The message
// carries the brute-force value for diagnosis.
struct formula_domain_error : numeric_error {
    using numeric_error::numeric_error;
};

} // namespace ecsmet

#endif // ECSMET_ERRORS_HPP
