#include "ecsmet/economical.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

#include "ecsmet/qfi.hpp"

namespace ecsmet {

double eco_ratio(const ProbeSpec& p, const LossScenario& s) {
    const double m = mean_photon_a(p);
    if (!(m > 0.0))
        throw config_error("zero-energy probe has no defined ratio");
    return qfi_ecs(p, s).value / m;
}

namespace {

struct Sample {
    double beta = 0.0;
    double value = 0.0;
};

// Golden-section maximization tracking the best evaluated point; the >=
// comparison keeps the left candidate on ties, matching the smaller-beta
// tie-break of the caller.
Sample golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    Sample best = fc >= fd ? Sample{c, fc} : Sample{d, fd};
    while (hi - lo > tol) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = f(d);
        }
        const Sample cur = fc >= fd ? Sample{c, fc} : Sample{d, fd};
        if (cur.value > best.value) best = cur;
    }
    return best;
}

constexpr double kEdgeEps = 1e-6;     // excluded beta = alpha end
constexpr double kBetaTol = 1e-6;     // refinement tolerance in beta
constexpr double kBoundaryRel = 1e-9; // supremum-at-alpha detection
constexpr double kTieRel = 5e-4;      // near-tie window toward beta = -alpha

} // namespace

EcoResult optimize_beta(double alpha, const LossScenario& s, int grid_points) {
    validate(s);
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw config_error("optimize_beta needs a positive alpha");
    if (grid_points < 3)
        throw config_error("optimize_beta needs at least 3 grid points");
    const double hi = alpha - kEdgeEps;
    if (hi <= -alpha)
        throw config_error("alpha too small for the beta search interval");

    const auto ratio = [&](double beta) {
        return eco_ratio(ProbeSpec{alpha, beta, Sign::plus}, s);
    };

    EcoResult out;
    out.grid_trace.reserve(static_cast<size_t>(grid_points));
    int best = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double b = -alpha + (hi + alpha) * i / (grid_points - 1);
        const double v = ratio(b);
        out.grid_trace.emplace_back(b, v);
        if (v > out.grid_trace[static_cast<size_t>(best)].second) best = i;
    }

    const auto minmax = std::minmax_element(
        out.grid_trace.begin(), out.grid_trace.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    const double vmax = minmax.second->second;
    if (vmax - minmax.first->second <= 1e-15 * std::max(1.0, std::abs(vmax))) {
        // flat landscape (T = 0): keep the grid argmax, smallest beta first
        out.beta_opt = out.grid_trace[static_cast<size_t>(best)].first;
        out.eco_value = out.grid_trace[static_cast<size_t>(best)].second;
        out.refined = false;
        return out;
    }

    const double blo =
        out.grid_trace[static_cast<size_t>(std::max(0, best - 1))].first;
    const double bhi =
        out.grid_trace[static_cast<size_t>(
                           std::min(grid_points - 1, best + 1))]
            .first;
    Sample top = golden_max(ratio, blo, bhi, kBetaTol);
    if (out.grid_trace[static_cast<size_t>(best)].second > top.value)
        top = Sample{out.grid_trace[static_cast<size_t>(best)].first,
                     out.grid_trace[static_cast<size_t>(best)].second};
    out.refined = true;
    out.beta_opt = top.beta;
    out.eco_value = top.value;

    // The interior landscape flattens into the separable ratio 4T near the
    // excluded end; when the refined maximum cannot beat that supremum the
    // optimum is reported at the edge.
    const double separable = 4.0 * s.transmissivity();
    if (separable > 0.0 && out.eco_value <= separable * (1.0 + kBoundaryRel)) {
        out.beta_opt = alpha - kEdgeEps;
        out.boundary = true;
        return out;
    }
    // Near-ties against the fully stretched probe are resolved toward
    // beta = -alpha; eco_value keeps the refined maximum so it still bounds
    // every sampled ratio.
    if (out.grid_trace.front().second >= out.eco_value * (1.0 - kTieRel)) {
        out.beta_opt = -alpha;
        out.tie_snap = true;
    }
    return out;
}

std::vector<EcoSurfaceRow> eco_surface(const std::vector<double>& alphas,
                                       const std::vector<double>& rates,
                                       LossModel model) {
    if (alphas.empty() || rates.empty())
        throw config_error("eco_surface needs nonempty grids");
    if (!std::is_sorted(alphas.begin(), alphas.end()) ||
        !std::is_sorted(rates.begin(), rates.end()))
        throw config_error("eco_surface grids must be sorted ascending");
    for (double a : alphas)
        if (!(a > 0.0)) throw config_error("eco_surface needs positive alphas");
    for (double r : rates)
        if (!(r >= 0.0 && r <= 1.0))
            throw config_error("eco_surface rates must lie in [0, 1]");

    const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(alphas.size());
    const std::ptrdiff_t nr = static_cast<std::ptrdiff_t>(rates.size());
    std::vector<EcoSurfaceRow> rows(static_cast<size_t>(na * nr));
    std::exception_ptr failure = nullptr;

    // Cells are independent; each writes only its own row, so the output
    // order is fixed by the grids regardless of the schedule.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t idx = 0; idx < na * nr; ++idx) {
        try {
            const double a = alphas[static_cast<size_t>(idx / nr)];
            const double r = rates[static_cast<size_t>(idx % nr)];
            const EcoResult e = optimize_beta(a, LossScenario{model, r, 0.0});
            rows[static_cast<size_t>(idx)] =
                EcoSurfaceRow{a, r, e.beta_opt, e.eco_value};
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

} // namespace ecsmet
