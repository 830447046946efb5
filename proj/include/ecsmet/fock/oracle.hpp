#ifndef ECSMET_FOCK_ORACLE_HPP
#define ECSMET_FOCK_ORACLE_HPP

// Brute-force ground truth in the truncated number basis. Everything here is
// built from Kraus maps and eigendecompositions only; none of the closed
// forms of the analytic modules enter, so agreement between the two paths is
// meaningful evidence.

#include <Eigen/Dense>

#include <functional>

#include "ecsmet/channels.hpp"
#include "ecsmet/fock/fock.hpp"
#include "ecsmet/fock/kernels.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet::fock {

struct OracleOptions {
    double eigenvalue_floor = 1e-12;  // pairs below this are null space
    double fd_step = 1e-5;            // central-difference step in phi
    double fd_gate = 1e-6;            // analytic vs difference mismatch bound
};

template <class S>
struct SpectralDecomposition {
    Eigen::VectorXd values;   // descending
    Mat<S> vectors;           // orthonormal columns matching values
    double completeness = 0;  // sqrt(max(0, ||M||_F^2 - sum values^2))
    int iterations = 0;       // 0 for the dense path
    bool dense = false;
};

// Full dense eigendecomposition (reference path).
template <class S>
SpectralDecomposition<S> dense_spectrum(const Mat<S>& m);

// Deterministic blocked subspace iteration with Rayleigh-Ritz extraction;
// captures the numerically nonzero spectrum of low-rank hermitian matrices.
// The completeness certificate must be checked by the caller; the iteration
// itself raises convergence_error when residuals stall above tolerance.
template <class S>
SpectralDecomposition<S> subspace_spectrum(const Mat<S>& m, int want = 8,
                                           int max_iterations = 200);

// Dense below 600 rows, subspace iteration with completeness fallback above.
template <class S>
SpectralDecomposition<S> spectrum(const Mat<S>& m, int want = 8);

// Probe -> loss, no phase; real because the probe amplitudes are real.
Eigen::MatrixXd lossy_output_real(const ProbeSpec& p, LossModel model,
                                  double rate, int truncation);

// Full pipeline probe -> loss -> phase rotation.
FockOperator output_state(const ProbeSpec& p, const LossScenario& s,
                          int truncation);

// Full-spectrum information functional at phi0:
//   F = sum_{l_n + l_m > floor} 2 |<l_n| d rho |l_m>|^2 / (l_n + l_m),
// with d rho = -i [n_a, rho] formed analytically and cross-checked against
// central differences of the builder (mismatch beyond the gate raises
// numeric_error).
double oracle_qfi(const std::function<FockOperator(double)>& rho_builder,
                  double phi0, const OracleOptions& opts = {});

// Same functional with the state built internally; the lossy base is reused
// so the difference cross-check costs two phase rotations instead of two
// channel applications. phi0 is taken from s.phase.
double oracle_qfi_state(const ProbeSpec& p, const LossScenario& s,
                        int truncation, const OracleOptions& opts = {});

// Dense full-eigendecomposition variant kept to cross-check the subspace
// engine at small cutoffs.
double oracle_qfi_dense(const ProbeSpec& p, const LossScenario& s,
                        int truncation, const OracleOptions& opts = {});

// Absolute sum of the negative eigenvalues of the mode-a partial transpose.
double oracle_negativity(const FockOperator& rho);

// Entropy of the mode-a reduction of a pure state, in bits.
double oracle_entropy_of_reduction(const FockVector& psi);

double oracle_mean_photon_a(const FockOperator& rho);

} // namespace ecsmet::fock

#endif // ECSMET_FOCK_ORACLE_HPP
