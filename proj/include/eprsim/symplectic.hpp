#ifndef EPRSIM_SYMPLECTIC_HPP
#define EPRSIM_SYMPLECTIC_HPP

#include <Eigen/Dense>
#include <vector>

#include "eprsim/gaussian_state.hpp"

namespace eprsim {

/**
 * @brief Linear mode transform S preserving the canonical form,
 *        S * Omega * S^T = Omega (checked to 1e-10 at construction).
 *
 * The matrix is 2k x 2k and acts on the k modes listed in mode_span;
 * apply_symplectic embeds it into the identity on all other modes.
 */
class SymplecticTransform {
public:
    SymplecticTransform(Eigen::MatrixXd matrix, std::vector<int> mode_span);

    const Eigen::MatrixXd& matrix() const { return matrix_; }
    const std::vector<int>& mode_span() const { return mode_span_; }

    /// Identity on n modes.
    static SymplecticTransform identity(int n_modes);

    /// Single-mode squeezer diag(e^r, e^-r): x variance scales by e^(2r).
    static SymplecticTransform squeezer(double r, int mode);

    /// Two-mode squeezer: x' = x cosh r + x^B sinh r, p' = p cosh r - p^B sinh r
    /// (and symmetrically on the partner mode). Generates two_mode_squeezed(r)
    /// from the two-mode vacuum.
    static SymplecticTransform two_mode_squeezer(double r, int mode_a, int mode_b);

    /// Beam splitter with transmittance t in [0,1]; t = 0.5 is the 50/50 case.
    /// Kept output: sqrt(t) a + sqrt(1-t) b.
    static SymplecticTransform beam_splitter(double transmittance, int mode_a, int mode_b);

    /// Phase-space rotation by theta: x' = x cos(theta) + p sin(theta),
    /// p' = -x sin(theta) + p cos(theta). theta = pi/2 swaps x and p up to sign.
    static SymplecticTransform phase_shift(double theta, int mode);

private:
    Eigen::MatrixXd matrix_;
    std::vector<int> mode_span_;
};

/// mean -> S mean, cov -> S cov S^T on the spanned modes.
GaussianState apply_symplectic(const GaussianState& state, const SymplecticTransform& s);

} // namespace eprsim

#endif // EPRSIM_SYMPLECTIC_HPP
