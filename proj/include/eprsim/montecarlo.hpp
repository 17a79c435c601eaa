#ifndef EPRSIM_MONTECARLO_HPP
#define EPRSIM_MONTECARLO_HPP

#include <cstdint>

#include "eprsim/criteria_cv.hpp"

namespace eprsim {

/// Analytic and sample-based criterion reports for the same lossy
/// two-mode squeezed state, side by side.
struct MonteCarloResult {
    CriterionReport analytic;
    CriterionReport empirical;
    double r = 0.0;
    double eta_a = 1.0;
    double eta_b = 1.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

/**
 * @brief Sample the (x^A, x^B) and (p^A, p^B) runs of a lossy two-mode
 *        squeezed state and evaluate the empirical criteria.
 *
 * The two runs are separate ensembles (their settings do not commute) with
 * sub-seeds derived deterministically from the master seed, so the result
 * is a pure function of (r, eta_a, eta_b, n_samples, seed).
 */
MonteCarloResult run_montecarlo(double r, double eta_a, double eta_b, std::int64_t n_samples,
                                std::uint64_t seed);

} // namespace eprsim

#endif // EPRSIM_MONTECARLO_HPP
