#ifndef ECSMET_ECONOMICAL_HPP
#define ECSMET_ECONOMICAL_HPP

#include <utility>
#include <vector>

#include "ecsmet/channels.hpp"
#include "ecsmet/probe.hpp"

namespace ecsmet {

// Result of maximizing qfi / mean photon number over beta in [-alpha, alpha).
struct EcoResult {
    double beta_opt = 0.0;
    double eco_value = 0.0;  // >= ratio at every sampled beta
    std::vector<std::pair<double, double>> grid_trace;  // (beta, ratio) samples
    bool refined = false;    // local refinement ran (false on flat landscapes)
    bool boundary = false;   // supremum sits at the excluded beta -> alpha end
    bool tie_snap = false;   // near-tie resolved toward beta = -alpha
};

// qfi_ecs / mean_photon_a. Zero-energy probes have no defined ratio.
double eco_ratio(const ProbeSpec& p, const LossScenario& s);

// Coarse grid over [-alpha, alpha - 1e-6] followed by golden-section
// refinement of the best cell; ties broken toward smaller beta. When the
// refined maximum is within 1e-9 relative of the separable supremum 4T the
// optimum is reported at the excluded end with the boundary flag; a near-tie
// with the ratio at beta = -alpha (5e-4 relative) snaps beta_opt there.
EcoResult optimize_beta(double alpha, const LossScenario& s,
                        int grid_points = 401);

struct EcoSurfaceRow {
    double alpha = 0.0;
    double rate = 0.0;
    double beta_opt = 0.0;
    double eco = 0.0;
};

// Full sweep in alpha-major, rate-minor order. Rows are independent and
// evaluated in parallel; the output order is fixed by the grids.
std::vector<EcoSurfaceRow> eco_surface(const std::vector<double>& alphas,
                                       const std::vector<double>& rates,
                                       LossModel model);

} // namespace ecsmet

#endif // ECSMET_ECONOMICAL_HPP
