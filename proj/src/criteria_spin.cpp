#include "eprsim/criteria_spin.hpp"

#include <cmath>
#include <stdexcept>

namespace eprsim {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

Matrix2cd pauli_dot(const Eigen::Vector3d& axis) {
    const std::complex<double> i(0.0, 1.0);
    Matrix2cd m;
    m << axis.z(), axis.x() - i * axis.y(), axis.x() + i * axis.y(), -axis.z();
    return m;
}

Eigen::Vector3d unit_axis(const Eigen::Vector3d& axis) {
    const double norm = axis.norm();
    if (!(norm > 0.0) || !axis.allFinite()) {
        throw std::invalid_argument("measurement axis must be a nonzero finite vector");
    }
    return axis / norm;
}

// Projector onto the +-1/2 eigenspace of (axis . sigma)/2.
Matrix2cd spin_projector(const Eigen::Vector3d& axis, int sign) {
    return 0.5 * (Matrix2cd::Identity() + static_cast<double>(sign) * pauli_dot(axis));
}

// Kronecker product with the A qubit as the most significant factor.
Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
    Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
    return out;
}

struct ConditionalStats {
    double dinf = 0.0; // sqrt of the averaged conditional variance
    double rhs_sum = 0.0; // sum_t P(t) |<J^A>_t|
};

// Conditionals of J_axis^A given J_axis^B for the same axis on both sides.
ConditionalStats conditionals_along(const Matrix4cd& rho, const Eigen::Vector3d& axis) {
    const Matrix2cd plus_a = spin_projector(axis, +1);
    const Matrix2cd minus_a = spin_projector(axis, -1);
    const Matrix2cd plus_b = plus_a;
    const Matrix2cd minus_b = minus_a;

    ConditionalStats stats;
    double dinf_sq = 0.0;
    for (int tb = 0; tb < 2; ++tb) {
        const Matrix2cd& pb = (tb == 0) ? plus_b : minus_b;
        double p_branch[2];
        for (int ta = 0; ta < 2; ++ta) {
            const Matrix2cd& pa = (ta == 0) ? plus_a : minus_a;
            p_branch[ta] = std::max(0.0, (rho * kron(pa, pb)).trace().real());
        }
        const double p_t = p_branch[0] + p_branch[1];
        if (p_t <= 0.0) continue; // zero-probability branch: omit
        const double mean = 0.5 * (p_branch[0] - p_branch[1]) / p_t;
        const double var = 0.25 - mean * mean;
        dinf_sq += p_t * var;
        stats.rhs_sum += p_t * std::abs(mean);
    }
    stats.dinf = std::sqrt(std::max(0.0, dinf_sq));
    return stats;
}

} // namespace

TwoQubitState::TwoQubitState(Eigen::Matrix4cd rho) : rho_(std::move(rho)) {
    if (!rho_.allFinite()) throw std::invalid_argument("density matrix must be finite");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("density matrix must be Hermitian");
    }
    rho_ = 0.5 * (rho_ + rho_.adjoint().eval());
    if (std::abs(rho_.trace().real() - 1.0) > 1e-12 || std::abs(rho_.trace().imag()) > 1e-12) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho_);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("density matrix must be positive semidefinite");
    }
}

TwoQubitState werner_state(double p_w) {
    if (!(p_w >= 0.0 && p_w <= 1.0)) {
        throw std::invalid_argument("Werner weight must lie in [0,1]");
    }
    Eigen::Vector4cd singlet = Eigen::Vector4cd::Zero();
    singlet(1) = 1.0 / std::sqrt(2.0);  // |up,down>
    singlet(2) = -1.0 / std::sqrt(2.0); // |down,up>
    const Matrix4cd rho =
        (1.0 - p_w) * 0.25 * Matrix4cd::Identity() + p_w * singlet * singlet.adjoint();
    return TwoQubitState(rho);
}

SpinCriterionReport bohm_criterion(const TwoQubitState& state, const Eigen::Vector3d& infer_x_from,
                                   const Eigen::Vector3d& infer_y_from,
                                   const Eigen::Vector3d& rhs_axis) {
    const auto x_stats = conditionals_along(state.rho(), unit_axis(infer_x_from));
    const auto y_stats = conditionals_along(state.rho(), unit_axis(infer_y_from));
    const auto z_stats = conditionals_along(state.rho(), unit_axis(rhs_axis));

    SpinCriterionReport rep;
    rep.dinf_jx = x_stats.dinf;
    rep.dinf_jy = y_stats.dinf;
    rep.rhs = 0.5 * z_stats.rhs_sum;
    rep.satisfied = rep.dinf_jx * rep.dinf_jy < rep.rhs;
    return rep;
}

bool stokes_criterion(double dinf_jx, double dinf_jy, double mean_jz) {
    if (!(dinf_jx >= 0.0) || !(dinf_jy >= 0.0) || !std::isfinite(mean_jz)) {
        throw std::invalid_argument("inference errors must be nonnegative and moments finite");
    }
    return dinf_jx * dinf_jy < 0.5 * std::abs(mean_jz);
}

double werner_threshold_sweep(WernerCriterion criterion, double resolution) {
    if (!(resolution > 0.0 && resolution <= 0.01)) {
        throw std::invalid_argument("resolution must lie in (0, 0.01]");
    }
    switch (criterion) {
    case WernerCriterion::steering_quote:
        return 0.5;
    case WernerCriterion::bell_quote:
        return 0.66;
    case WernerCriterion::bohm:
        break;
    }
    double lo = 0.0;  // not satisfied
    double hi = 1.0;  // satisfied
    while (hi - lo > resolution) {
        const double mid = 0.5 * (lo + hi);
        if (bohm_criterion(werner_state(mid)).satisfied) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace eprsim
