#ifndef EPRSIM_GAUSSIAN_STATE_HPP
#define EPRSIM_GAUSSIAN_STATE_HPP

#include <Eigen/Dense>
#include <vector>

namespace eprsim {

/**
 * @brief Multimode Gaussian state given by its quadrature mean vector and
 *        covariance matrix.
 *
 * Quadratures are ordered (x1, p1, x2, p2, ...) and scaled so that the
 * vacuum variance is 1, i.e. [x, p] = 2i and the Heisenberg bound reads
 * dx * dp >= 1. All criteria thresholds in this toolkit (EPR product < 1,
 * Duan D < 1, PPT nu < 1) are stated against that calibration.
 *
 * Construction validates symmetry of the covariance (1e-12 relative) and
 * physicality: every symplectic eigenvalue must be >= 1 - 1e-9. The vacuum
 * saturates the bound at exactly 1.
 */
class GaussianState {
public:
    GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    /// Number of modes N; mean has length 2N, cov is 2N x 2N.
    int n_modes() const { return n_modes_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& cov() const { return cov_; }

    /// Index of the x (resp. p) quadrature of a mode in the mean/cov arrays.
    int x_index(int mode) const;
    int p_index(int mode) const;

    /// State of a subset of modes (partial trace over the rest).
    GaussianState reduced(const std::vector<int>& modes) const;

    /// Tensor product, this state's modes first.
    GaussianState tensor(const GaussianState& other) const;

private:
    int n_modes_;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

/// Block-diagonal symplectic form with 2x2 blocks [[0,1],[-1,0]] per mode.
Eigen::MatrixXd symplectic_form(int n_modes);

/**
 * @brief Symplectic eigenvalues of a covariance matrix, ascending.
 *
 * Computed as the singular values of C^(1/2) * Omega * C^(1/2) (each value
 * appears twice; pairs are averaged). Physical states have all values >= 1
 * in this scaling; pure states have all values equal to 1.
 */
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov);

/// Vacuum state: zero mean, identity covariance. Throws for n_modes < 1.
GaussianState vacuum(int n_modes);

/**
 * @brief Two-mode squeezed vacuum with squeezing parameter r >= 0.
 *
 * Covariance entries: diagonal cosh(2r), <x_A x_B> = sinh(2r),
 * <p_A p_B> = -sinh(2r). r = 0 gives the two-mode vacuum.
 */
GaussianState two_mode_squeezed(double r);

/// Schmidt coefficients c_n = tanh(r)^n / cosh(r) for n = 0..n_max.
std::vector<double> schmidt_coefficients(double r, int n_max);

/// Truncation that keeps the discarded Schmidt weight below 1e-8 for r <= 3.
int default_schmidt_cutoff(double r);

} // namespace eprsim

#endif // EPRSIM_GAUSSIAN_STATE_HPP
