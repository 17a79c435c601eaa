#ifndef EPRSIM_HOMODYNE_HPP
#define EPRSIM_HOMODYNE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "eprsim/gaussian_state.hpp"

namespace eprsim {

/**
 * @brief Stream of homodyne outcomes for one mode at a fixed local-oscillator
 *        angle. theta = 0 reads the x quadrature, theta = pi/2 reads p.
 */
struct HomodyneRecord {
    int mode = 0;
    double angle_theta = 0.0;
    std::vector<double> outcomes;
};

/// One measurement setting: (mode, local-oscillator angle).
struct QuadratureSetting {
    int mode = 0;
    double angle = 0.0;
};

/// Row vector picking out cos(angle) x_m + sin(angle) p_m.
Eigen::RowVectorXd quadrature_functional(const GaussianState& state, int mode, double angle);

/**
 * @brief Gaussian posterior after a homodyne measurement of one quadrature.
 *
 * The update is the Schur complement restricted to the measured direction
 * (rank-one, pseudo-inverse limit of the general Gaussian measurement): with
 * measured variance v, cross-covariance vector w and outcome residual d,
 *   mean' = mean + w d / v,   cov' = cov - w w^T / v.
 * The measured mode is consumed; the posterior covariance does not depend
 * on the outcome. Throws NumericalDegeneracyError when v <= 0.
 */
GaussianState condition_on_homodyne(const GaussianState& state, int mode, double angle,
                                    double outcome);

/**
 * @brief Monte-Carlo quadrature sampling from the Gaussian Wigner function.
 *
 * All states in scope have positive Wigner functions, so joint statistics of
 * commuting settings (at most one per mode per shot) are reproduced exactly
 * by sampling the projected multivariate normal. Returns one HomodyneRecord
 * per setting, each with n_samples outcomes; row i of every record belongs
 * to the same shot.
 *
 * Determinism: the stream is generated in fixed-size chunks whose generators
 * are seeded from (seed, chunk_index), so the output depends only on the
 * seed, never on how the chunks are scheduled.
 */
std::vector<HomodyneRecord> sample_quadratures(const GaussianState& state,
                                               const std::vector<QuadratureSetting>& settings,
                                               std::int64_t n_samples, std::uint64_t seed);

} // namespace eprsim

#endif // EPRSIM_HOMODYNE_HPP
