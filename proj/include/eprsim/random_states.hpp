#ifndef EPRSIM_RANDOM_STATES_HPP
#define EPRSIM_RANDOM_STATES_HPP

#include <random>

#include "eprsim/gaussian_state.hpp"

namespace eprsim {

/// Bounds for the random-state generators; defaults keep covariance entries
/// well inside cosh(6).
struct RandomStateParams {
    double max_thermal = 2.0; // symplectic eigenvalues drawn from [1, max_thermal]
    double max_squeeze = 0.8; // per-mode squeeze parameter in [-max_squeeze, max_squeeze]
    double max_mean = 2.0;    // mean entries in [-max_mean, max_mean]
};

/**
 * @brief Random physical two-mode Gaussian state.
 *
 * Built as S * diag(nu1, nu1, nu2, nu2) * S^T with thermal occupations
 * nu_i >= 1 and a random symplectic S from its Euler decomposition
 * (passive unitary, squeezers, passive unitary), so physicality holds by
 * construction for any draw.
 */
GaussianState random_physical_two_mode(std::mt19937_64& rng, const RandomStateParams& params = {});

/**
 * @brief Second moments of a random mixture of product Gaussian states.
 *
 * Each component is a product of two independent single-mode Gaussians;
 * the returned state carries the exact mixture mean and covariance
 * (component spread included). Every EPR/entanglement criterion in this
 * toolkit is a second-moment functional, so evaluating it on this state
 * gives the criterion value of the separable mixture itself.
 */
GaussianState random_separable_two_mode(std::mt19937_64& rng, int n_components = 8,
                                        const RandomStateParams& params = {});

} // namespace eprsim

#endif // EPRSIM_RANDOM_STATES_HPP
