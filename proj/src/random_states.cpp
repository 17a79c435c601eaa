#include "eprsim/random_states.hpp"

#include <cmath>
#include <complex>

namespace eprsim {

namespace {

// Interleaved (x1,p1,x2,p2) <-> stacked (x1,x2,p1,p2) permutation.
Eigen::Matrix4d interleave_from_stacked() {
    Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
    p(0, 0) = 1.0; // x1
    p(2, 1) = 1.0; // x2
    p(1, 2) = 1.0; // p1
    p(3, 3) = 1.0; // p2
    return p;
}

// Orthogonal symplectic from a 2x2 unitary, interleaved ordering.
Eigen::Matrix4d passive_from_unitary(const Eigen::Matrix2cd& u) {
    Eigen::Matrix4d stacked;
    stacked.block<2, 2>(0, 0) = u.real();
    stacked.block<2, 2>(0, 2) = -u.imag();
    stacked.block<2, 2>(2, 0) = u.imag();
    stacked.block<2, 2>(2, 2) = u.real();
    const Eigen::Matrix4d p = interleave_from_stacked();
    return p * stacked * p.transpose();
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) g(i, j) = std::complex<double>(normal(rng), normal(rng));
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
        const std::complex<double> d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

Eigen::Matrix4d random_symplectic(std::mt19937_64& rng, double max_squeeze) {
    std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
    Eigen::Matrix4d z = Eigen::Matrix4d::Identity();
    for (int m = 0; m < 2; ++m) {
        const double s = squeeze(rng);
        z(2 * m, 2 * m) = std::exp(s);
        z(2 * m + 1, 2 * m + 1) = std::exp(-s);
    }
    return passive_from_unitary(random_unitary(rng)) * z *
           passive_from_unitary(random_unitary(rng));
}

Eigen::Matrix2d random_single_mode_cov(std::mt19937_64& rng, const RandomStateParams& params) {
    std::uniform_real_distribution<double> thermal(1.0, params.max_thermal);
    std::uniform_real_distribution<double> squeeze(-params.max_squeeze, params.max_squeeze);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const double nu = thermal(rng);
    const double s = squeeze(rng);
    const double th = angle(rng);
    Eigen::Matrix2d rot;
    rot << std::cos(th), std::sin(th), -std::sin(th), std::cos(th);
    Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
    diag(0, 0) = nu * std::exp(2.0 * s);
    diag(1, 1) = nu * std::exp(-2.0 * s);
    return rot * diag * rot.transpose();
}

} // namespace

GaussianState random_physical_two_mode(std::mt19937_64& rng, const RandomStateParams& params) {
    std::uniform_real_distribution<double> thermal(1.0, params.max_thermal);
    std::uniform_real_distribution<double> mean_dist(-params.max_mean, params.max_mean);

    Eigen::Matrix4d diag = Eigen::Matrix4d::Identity();
    for (int m = 0; m < 2; ++m) {
        const double nu = thermal(rng);
        diag(2 * m, 2 * m) = nu;
        diag(2 * m + 1, 2 * m + 1) = nu;
    }
    const Eigen::Matrix4d s = random_symplectic(rng, params.max_squeeze);
    Eigen::Vector4d mean;
    for (int i = 0; i < 4; ++i) mean(i) = mean_dist(rng);
    return GaussianState(mean, s * diag * s.transpose());
}

GaussianState random_separable_two_mode(std::mt19937_64& rng, int n_components,
                                        const RandomStateParams& params) {
    if (n_components < 1) throw std::invalid_argument("need at least one mixture component");
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    std::uniform_real_distribution<double> mean_dist(-params.max_mean, params.max_mean);

    std::vector<double> w(static_cast<size_t>(n_components));
    double wsum = 0.0;
    for (double& v : w) {
        v = weight(rng);
        wsum += v;
    }

    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    Eigen::Matrix4d second = Eigen::Matrix4d::Zero(); // sum of w (C + mu mu^T)
    for (int k = 0; k < n_components; ++k) {
        const double wk = w[static_cast<size_t>(k)] / wsum;
        Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
        cov.block<2, 2>(0, 0) = random_single_mode_cov(rng, params);
        cov.block<2, 2>(2, 2) = random_single_mode_cov(rng, params);
        Eigen::Vector4d mu;
        for (int i = 0; i < 4; ++i) mu(i) = mean_dist(rng);
        mean += wk * mu;
        second += wk * (cov + mu * mu.transpose());
    }
    const Eigen::Matrix4d cov = second - mean * mean.transpose();
    return GaussianState(mean, cov);
}

} // namespace eprsim
