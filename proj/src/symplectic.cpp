#include "eprsim/symplectic.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace eprsim {

SymplecticTransform::SymplecticTransform(Eigen::MatrixXd matrix, std::vector<int> mode_span)
    : matrix_(std::move(matrix)), mode_span_(std::move(mode_span)) {
    const int k = static_cast<int>(mode_span_.size());
    if (k < 1) throw std::invalid_argument("transform must span at least one mode");
    if (matrix_.rows() != 2 * k || matrix_.cols() != 2 * k) {
        throw std::invalid_argument("transform matrix must be 2k x 2k for k spanned modes");
    }
    if (!matrix_.allFinite()) throw std::invalid_argument("transform matrix must be finite");
    std::set<int> uniq(mode_span_.begin(), mode_span_.end());
    if (static_cast<int>(uniq.size()) != k || *uniq.begin() < 0) {
        throw std::invalid_argument("mode_span must list distinct nonnegative modes");
    }
    const Eigen::MatrixXd omega = symplectic_form(k);
    const double defect = (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
        throw std::invalid_argument("matrix is not symplectic (S Omega S^T defect " +
                                    std::to_string(defect) + ")");
    }
}

SymplecticTransform SymplecticTransform::identity(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("identity needs n_modes >= 1");
    std::vector<int> span(static_cast<size_t>(n_modes));
    for (int m = 0; m < n_modes; ++m) span[static_cast<size_t>(m)] = m;
    return SymplecticTransform(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes), span);
}

SymplecticTransform SymplecticTransform::squeezer(double r, int mode) {
    if (!std::isfinite(r)) throw std::invalid_argument("squeezing parameter must be finite");
    Eigen::Matrix2d s;
    s << std::exp(r), 0.0, 0.0, std::exp(-r);
    return SymplecticTransform(s, {mode});
}

SymplecticTransform SymplecticTransform::two_mode_squeezer(double r, int mode_a, int mode_b) {
    if (!std::isfinite(r)) throw std::invalid_argument("squeezing parameter must be finite");
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s(0, 0) = ch; s(0, 2) = sh;   // x_a
    s(1, 1) = ch; s(1, 3) = -sh;  // p_a
    s(2, 2) = ch; s(2, 0) = sh;   // x_b
    s(3, 3) = ch; s(3, 1) = -sh;  // p_b
    return SymplecticTransform(s, {mode_a, mode_b});
}

SymplecticTransform SymplecticTransform::beam_splitter(double transmittance, int mode_a, int mode_b) {
    if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
        throw std::invalid_argument("beam splitter transmittance must lie in [0,1]");
    }
    const double ct = std::sqrt(transmittance);
    const double st = std::sqrt(1.0 - transmittance);
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s.block<2, 2>(0, 0) = ct * Eigen::Matrix2d::Identity();
    s.block<2, 2>(0, 2) = st * Eigen::Matrix2d::Identity();
    s.block<2, 2>(2, 0) = -st * Eigen::Matrix2d::Identity();
    s.block<2, 2>(2, 2) = ct * Eigen::Matrix2d::Identity();
    return SymplecticTransform(s, {mode_a, mode_b});
}

SymplecticTransform SymplecticTransform::phase_shift(double theta, int mode) {
    if (!std::isfinite(theta)) throw std::invalid_argument("phase angle must be finite");
    Eigen::Matrix2d s;
    s << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return SymplecticTransform(s, {mode});
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticTransform& s) {
    const int n = state.n_modes();
    Eigen::MatrixXd full = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    const auto& span = s.mode_span();
    const int k = static_cast<int>(span.size());
    for (int m : span) {
        if (m >= n) throw std::invalid_argument("transform spans a mode beyond the state");
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            full.block<2, 2>(2 * span[static_cast<size_t>(i)], 2 * span[static_cast<size_t>(j)]) =
                s.matrix().block<2, 2>(2 * i, 2 * j);
        }
    }
    return GaussianState(full * state.mean(), full * state.cov() * full.transpose());
}

} // namespace eprsim
