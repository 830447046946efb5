#ifndef ECSMET_FOCK_FOCK_HPP
#define ECSMET_FOCK_FOCK_HPP

#include <Eigen/Dense>

#include "ecsmet/errors.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet::fock {

// Two-mode state over the truncated number basis, flattened row-major:
// index = n_a * (truncation+1) + n_b.
struct FockVector {
    int truncation = 0;
    Eigen::VectorXcd amplitudes;
};

// Operator over the same flattened basis.
struct FockOperator {
    int truncation = 0;
    Eigen::MatrixXcd matrix;
};

inline int mode_dim(int truncation) { return truncation + 1; }
inline int pair_dim(int truncation) {
    return (truncation + 1) * (truncation + 1);
}

// Default per-mode cutoff for a maximum involved amplitude; 40 covers
// amplitudes up to 3 with leakage below 1e-12, larger amplitudes fall back
// to the ceil(m^2 + 8m + 20) heuristic. Every builder still enforces the
// 1e-10 leakage budget at run time.
int default_truncation(double max_amplitude);

// Normalized truncated coherent column, throws truncation_error when the
// discarded tail exceeds the leakage budget.
Eigen::VectorXd coherent_fock(double alpha, int truncation,
                              double leakage_budget = 1e-10);

// Normalized |gamma> + |-gamma| (even photon numbers only).
Eigen::VectorXd even_cat_fock(double gamma, int truncation,
                              double leakage_budget = 1e-10);

// Two-mode product of single-mode columns.
FockVector product_fock(const Eigen::VectorXd& mode_a,
                        const Eigen::VectorXd& mode_b, int truncation);

// Normalized probe in the truncated basis; leakage measured against the
// analytic norm of the untruncated state.
FockVector ecs_fock(const ProbeSpec& p, int truncation,
                    double leakage_budget = 1e-10);

// n_a per flattened index (and n_b via the swapped order).
Eigen::VectorXd na_values(int truncation);
Eigen::VectorXd nb_values(int truncation);

double fidelity(const FockVector& a, const FockVector& b);

// Mode-a reduced density matrix of a pure two-mode state.
Eigen::MatrixXcd reduced_a(const FockVector& psi);

// Hermiticity within 1e-12 and unit trace within 1e-10, else numeric_error.
void validate_density(const FockOperator& op);

} // namespace ecsmet::fock

#endif // ECSMET_FOCK_FOCK_HPP
