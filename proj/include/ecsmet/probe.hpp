#ifndef ECSMET_PROBE_HPP
#define ECSMET_PROBE_HPP

#include "ecsmet/errors.hpp"

namespace ecsmet {

enum class Sign { plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

// Two-mode probe (|alpha>|beta> + sign |beta>|alpha>) / sqrt(N), real amplitudes.
struct ProbeSpec {
    double alpha = 0.0;
    double beta = 0.0;
    Sign sign = Sign::plus;

    double separation() const { return alpha - beta; }
};

// Overlap bookkeeping shared by every closed form.
struct OverlapBundle {
    double d2 = 0.0;   // (alpha-beta)^2
    double x = 1.0;    // single-mode overlap <alpha|beta> = exp(-d2/2)
    double n_t = 4.0;  // normalization 2(1 + sign exp(-d2))
};

// Amplitudes closer than 1e-9 are treated as coincident. The minus-sign state
// has no content there; the plus-sign state reduces to a product state.
bool is_degenerate(const ProbeSpec& p);

// Throws config_error on non-finite amplitudes, degenerate_state_error on a
// vanishing minus-sign state. All public probe functions call this first.
void validate(const ProbeSpec& p);

double normalization(const ProbeSpec& p);

OverlapBundle overlap(const ProbeSpec& p);

// <n_a> of the normalized probe; equals <n_b> by exchange symmetry. The
// minus-sign value is evaluated in a form stable for small separations and
// tends to 1/2 as both amplitudes tend to 0.
double mean_photon_a(const ProbeSpec& p);

// Entropy of either single-mode reduction, in bits. Zero for product states,
// approaches 1 as |alpha-beta| grows, identically 1 for the minus sign.
double degree_of_entanglement(const ProbeSpec& p);

// Inputs of the preparation circuit: a coherent seed and an even cat mixed on
// a balanced beam splitter reproduce the plus-sign probe.
struct GenerationInputs {
    double coherent_amplitude = 0.0;  // (alpha+beta)/sqrt(2), coherent port
    double cat_amplitude = 0.0;       // (alpha-beta)/sqrt(2), even-cat port
};

// Defined for the plus sign only.
GenerationInputs generation_inputs(const ProbeSpec& p);

} // namespace ecsmet

#endif // ECSMET_PROBE_HPP
