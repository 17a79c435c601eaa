#include "eprsim/gaussian_state.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace eprsim {

namespace {

void check_symmetric(const Eigen::MatrixXd& cov) {
    for (int i = 0; i < cov.rows(); ++i) {
        for (int j = i + 1; j < cov.cols(); ++j) {
            const double a = cov(i, j);
            const double b = cov(j, i);
            const double scale = std::max(1.0, std::abs(a) + std::abs(b));
            if (std::abs(a - b) > 1e-12 * scale) {
                throw std::invalid_argument("covariance matrix is not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

} // namespace

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
    if (mean_.size() < 2 || mean_.size() % 2 != 0) {
        throw std::invalid_argument("mean vector length must be 2*n_modes with n_modes >= 1");
    }
    n_modes_ = static_cast<int>(mean_.size() / 2);
    if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
        throw std::invalid_argument("covariance dimensions do not match the mean vector");
    }
    if (!mean_.allFinite() || !cov_.allFinite()) {
        throw std::invalid_argument("state moments must be finite");
    }
    check_symmetric(cov_);
    cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();

    // Physicality (all symplectic eigenvalues >= 1) is tested through the
    // equivalent condition C + i Omega >= 0, which stays numerically stable
    // for strongly squeezed covariances where the eigenvalue route loses
    // absolute accuracy.
    const std::complex<double> i(0.0, 1.0);
    const Eigen::MatrixXcd bona_fide =
        cov_.cast<std::complex<double>>() + i * symplectic_form(n_modes_).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(bona_fide);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw std::invalid_argument(
            "covariance is unphysical: min eigenvalue of C + i Omega is " +
            std::to_string(es.eigenvalues().minCoeff()));
    }
}

int GaussianState::x_index(int mode) const {
    if (mode < 0 || mode >= n_modes_) throw std::invalid_argument("mode index out of range");
    return 2 * mode;
}

int GaussianState::p_index(int mode) const {
    if (mode < 0 || mode >= n_modes_) throw std::invalid_argument("mode index out of range");
    return 2 * mode + 1;
}

GaussianState GaussianState::reduced(const std::vector<int>& modes) const {
    if (modes.empty()) throw std::invalid_argument("reduced state needs at least one mode");
    std::vector<int> idx;
    idx.reserve(2 * modes.size());
    for (int m : modes) {
        idx.push_back(x_index(m));
        idx.push_back(p_index(m));
    }
    const int k = static_cast<int>(idx.size());
    Eigen::VectorXd mu(k);
    Eigen::MatrixXd c(k, k);
    for (int i = 0; i < k; ++i) {
        mu(i) = mean_(idx[i]);
        for (int j = 0; j < k; ++j) c(i, j) = cov_(idx[i], idx[j]);
    }
    return GaussianState(std::move(mu), std::move(c));
}

GaussianState GaussianState::tensor(const GaussianState& other) const {
    const int na = static_cast<int>(mean_.size());
    const int nb = static_cast<int>(other.mean_.size());
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(na + nb);
    mu.head(na) = mean_;
    mu.tail(nb) = other.mean_;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(na + nb, na + nb);
    c.topLeftCorner(na, na) = cov_;
    c.bottomRightCorner(nb, nb) = other.cov_;
    return GaussianState(std::move(mu), std::move(c));
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int m = 0; m < n_modes; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    return omega;
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
    const int dim = static_cast<int>(cov.rows());
    if (dim % 2 != 0 || cov.cols() != dim) {
        throw std::invalid_argument("covariance must be square with even dimension");
    }
    // C^(1/2) via the symmetric eigendecomposition; tiny negative eigenvalues
    // from rounding are clamped to zero.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition of covariance failed");
    }
    Eigen::VectorXd lam = es.eigenvalues();
    if (lam.minCoeff() < -1e-9 * std::max(1.0, lam.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("covariance is not positive semidefinite");
    }
    lam = lam.cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXd root = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();

    // root * Omega * root is skew-symmetric with singular values {nu_k, nu_k}.
    const Eigen::MatrixXd m = root * symplectic_form(dim / 2) * root;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd sv = svd.singularValues(); // descending
    Eigen::VectorXd nu(dim / 2);
    for (int k = 0; k < dim / 2; ++k) {
        nu(dim / 2 - 1 - k) = 0.5 * (sv(2 * k) + sv(2 * k + 1));
    }
    return nu; // ascending
}

GaussianState vacuum(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("vacuum needs n_modes >= 1");
    return GaussianState(Eigen::VectorXd::Zero(2 * n_modes),
                         Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState two_mode_squeezed(double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("squeezing parameter must be finite and >= 0");
    }
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(4, 4) * c;
    cov(0, 2) = cov(2, 0) = s;
    cov(1, 3) = cov(3, 1) = -s;
    return GaussianState(Eigen::VectorXd::Zero(4), std::move(cov));
}

std::vector<double> schmidt_coefficients(double r, int n_max) {
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("squeezing parameter must be finite and >= 0");
    }
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const double t = std::tanh(r);
    const double norm = 1.0 / std::cosh(r);
    std::vector<double> c(static_cast<size_t>(n_max) + 1);
    double tn = 1.0; // tanh(r)^n
    for (int n = 0; n <= n_max; ++n) {
        c[static_cast<size_t>(n)] = tn * norm;
        tn *= t;
    }
    return c;
}

int default_schmidt_cutoff(double r) {
    if (!(r > 0.0)) return 1;
    // Discarded weight after n_max terms is tanh(r)^(2(n_max+1)); pick the
    // smallest cutoff that pushes it below 1e-8.
    const double t = std::tanh(r);
    const int n = static_cast<int>(std::ceil(std::log(1e-8) / (2.0 * std::log(t))));
    return std::max(1, n + 1);
}

} // namespace eprsim
