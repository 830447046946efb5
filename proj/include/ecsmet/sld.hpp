#ifndef ECSMET_SLD_HPP
#define ECSMET_SLD_HPP

#include <string>

#include "ecsmet/channels.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet {

// Coherent amplitudes of one two-mode component of the eigenbasis; the
// running phase rides on mode a as exp(i phase).
struct SldBasisComponent {
    double amp_a = 0.0;
    double amp_b = 0.0;
};

// Closed-form description of the support block of the symmetric logarithmic
// derivative: L = A (|l-><l+| - |l+><l-|) with purely imaginary A and
// |l+-> = (|u> +- |v>) / sqrt(2 (1 +- s)).
struct SldDescription {
    double coefficient_a = 0.0;  // |A|, magnitude of the purely imaginary A
    SldBasisComponent u;
    SldBasisComponent v;
    double overlap_s = 0.0;      // <u|v> entering the normalization
    std::string basis;           // rendered |l+-> description
    std::string eigenbasis_note; // measurement basis (|l+> +- i |l->)/sqrt(2)
};

// Plus sign only; alpha = beta makes the normalization singular. beta = -alpha
// returns coefficient_a = 0 (the support block carries no information there).
SldDescription sld(const ProbeSpec& p, const LossScenario& s);

// Residuals of the defining identities, evaluated against the brute-force
// state in the truncated number basis. L is built from the defining equation
// on the numeric spectrum (support block plus support-null completion), so
// the residuals measure the quality of the whole numeric chain rather than
// restating algebra.
struct SldReport {
    double lyapunov_residual = 0.0;   // ||P (d rho - (rho L + L rho)/2) P||_F
    double zero_mean_residual = 0.0;  // |Tr[rho L]|
    double qfi_residual = 0.0;        // |Tr[rho L^2] - F_Q(closed form)|
    double support_coefficient = 0.0; // |<l-|L|l+>| recovered from numeric L
    double qfi_value = 0.0;           // closed-form F_Q used as reference
    bool anomaly_a_zero = false;      // A = 0 while F_Q > 0 (beta = -alpha)
};

SldReport verify_sld_identities(const ProbeSpec& p, const LossScenario& s,
                                int truncation);

} // namespace ecsmet

#endif // ECSMET_SLD_HPP
