#ifndef ECSMET_QFI_HPP
#define ECSMET_QFI_HPP

#include "ecsmet/channels.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet {

// Per-shot quantum Fisher information split into its two contributions:
// value = variance_term - coherence_penalty, both nonnegative.
struct QfiResult {
    double value = 0.0;
    double variance_term = 0.0;     // 4 sum_k lambda_k (g_k - h_k^2)
    double coherence_penalty = 0.0; // 4 (2 l+ l- / (l+ + l-)) (cross^2 + cross^2)
    ProbeSpec probe;
    LossScenario scenario;
};

// Closed-form QFI of the lossy probe. Coincident amplitudes route to the
// separable coherent baseline (continuity limit); the minus sign has no such
// limit and raises degenerate_state_error.
QfiResult qfi_ecs(const ProbeSpec& p, const LossScenario& s);

// Coherent-state benchmark 4(1-R)alpha^2; identical for both loss models
// because only mode a carries phase.
QfiResult qfi_separable_coherent(double alpha, const LossScenario& s);

// Energy-matched comparison at beta = gamma * alpha, with alpha solved so the
// probe's <n_a> equals n_av and the coherent comparator at sqrt(n_av).
struct EnergyComparison {
    double n_av = 0.0;
    double gamma = 0.0;
    double alpha = 0.0;  // solved amplitude
    QfiResult ecs;
    QfiResult coherent;
};

// Bracketed bisection on alpha in [0, 10 sqrt(n_av)], tolerance 1e-12.
// The minus-sign family has mean photon number >= 1/2; asking below that
// raises unreachable_energy_error.
EnergyComparison compare_at_fixed_energy(double n_av, double gamma, Sign sign,
                                         const LossScenario& s);

// Classical Fisher information of joint photon-number counting after the
// closing balanced splitter of the interferometer, built in the truncated
// number basis with the analytic phi derivative of the outcome
// probabilities. Probability floor 1e-15; captured probability below
// 1 - 1e-10 raises truncation_error.
double cfi_pnrd(const ProbeSpec& p, const LossScenario& s, double phi,
                int truncation);

} // namespace ecsmet

#endif // ECSMET_QFI_HPP
