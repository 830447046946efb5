#ifndef ECSMET_CHANNELS_HPP
#define ECSMET_CHANNELS_HPP

#include "ecsmet/errors.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet {

enum class LossModel { both_arms, one_arm_a };

inline const char* to_string(LossModel m) {
    return m == LossModel::both_arms ? "both" : "one";
}

struct LossScenario {
    LossModel model = LossModel::both_arms;
    double rate = 0.0;   // R in [0,1]
    double phase = 0.0;  // radians; spectral scalars do not depend on it

    double transmissivity() const { return 1.0 - rate; }
};

// Throws config_error unless rate is in [0,1] and phase is finite.
void validate(const LossScenario& s);

// Analytic rank-2 spectral data of the lossy output state. The output is
// lambda_plus P+ + lambda_minus P- on the (non-orthogonal-component) basis
// |A+->; the remaining five scalars are the inner products of the basis
// vectors and their phase derivatives that the information formula consumes.
//
// hpp, hmm and cross are purely imaginary inner products stored as signed
// real numbers; conventions differ between the two loss models by an overall
// sign which is immaterial downstream (only squares are used).
struct SpectralPair {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double gpp = 0.0;   // <l'+|l'+>
    double gmm = 0.0;   // <l'-|l'->
    double hpp = 0.0;   // <l'+|l+> / i
    double hmm = 0.0;   // <l'-|l-> / i
    double cross = 0.0; // <l'+|l-> / i, equal to <l'-|l+> / i up to sign
};

// Plus-sign probe, loss of rate R in both arms.
SpectralPair spectral_both_arms(const ProbeSpec& p, const LossScenario& s);

// Plus-sign probe, loss in mode a only.
SpectralPair spectral_one_arm(const ProbeSpec& p, const LossScenario& s);

// Minus-sign probe, either loss model. Same eigenvector construction with
// the superposition sign carried into the weights; evaluated in forms stable
// for small separations.
SpectralPair spectral_minus(const ProbeSpec& p, const LossScenario& s);

// Dispatch on p.sign and s.model. Degenerate amplitudes raise
// degenerate_state_error; qfi_ecs substitutes the separable limit instead.
SpectralPair spectral(const ProbeSpec& p, const LossScenario& s);

} // namespace ecsmet

#endif // ECSMET_CHANNELS_HPP
