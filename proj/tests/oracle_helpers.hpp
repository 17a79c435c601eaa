#ifndef EPRSIM_TESTS_ORACLE_HELPERS_HPP
#define EPRSIM_TESTS_ORACLE_HELPERS_HPP

// Test-side oracles, independent of the library code paths they check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

/// Single-mode Wigner function in vacuum-variance-1 scaling.
inline double wigner(double x, double p, const Eigen::Vector2d& mean,
                     const Eigen::Matrix2d& cov) {
    const Eigen::Vector2d d(x - mean(0), p - mean(1));
    const double det = cov.determinant();
    const double quad = d.dot(cov.inverse() * d);
    return std::exp(-0.5 * quad) / (2.0 * M_PI * std::sqrt(det));
}

/// Numerical state overlap Tr[rho1 rho2] = 4 pi * integral(W1 W2) on a
/// square grid of extent [-extent, extent] with n points per axis.
inline double wigner_overlap_numeric(const Eigen::Vector2d& mean1, const Eigen::Matrix2d& cov1,
                                     const Eigen::Vector2d& mean2, const Eigen::Matrix2d& cov2,
                                     double extent = 10.0, int n = 401) {
    const double h = 2.0 * extent / (n - 1);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -extent + i * h;
        for (int j = 0; j < n; ++j) {
            const double p = -extent + j * h;
            acc += wigner(x, p, mean1, cov1) * wigner(x, p, mean2, cov2);
        }
    }
    return 4.0 * M_PI * acc * h * h;
}

/// Regression statistics straight from sample arrays (no moment shortcuts):
/// minimizes mean((t - g b - d)^2) and returns the minimized value.
struct SampleRegression {
    double gain = 0.0;
    double intercept = 0.0;
    double residual_variance = 0.0;
};

inline SampleRegression regress(const std::vector<double>& target,
                                const std::vector<double>& probe) {
    const double n = static_cast<double>(target.size());
    double mt = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        mt += target[i];
        mb += probe[i];
    }
    mt /= n;
    mb /= n;
    double sbb = 0.0, stb = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        sbb += (probe[i] - mb) * (probe[i] - mb);
        stb += (target[i] - mt) * (probe[i] - mb);
    }
    SampleRegression r;
    r.gain = stb / sbb;
    r.intercept = mt - r.gain * mb;
    double ss = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const double e = target[i] - r.gain * probe[i] - r.intercept;
        ss += e * e;
    }
    r.residual_variance = ss / (n - 1.0);
    return r;
}

/// Sample variance of a derived series a[i] + sign * b[i].
inline double combo_variance(const std::vector<double>& a, const std::vector<double>& b,
                             double sign) {
    const double n = static_cast<double>(a.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m += a[i] + sign * b[i];
    m /= n;
    double ss = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double e = a[i] + sign * b[i] - m;
        ss += e * e;
    }
    return ss / (n - 1.0);
}

/// Symplectic spectrum via the eigenvalues of Omega * C (independent of the
/// SVD route used in the library): they come in pairs +-i nu.
inline std::vector<double> symplectic_spectrum_eig(const Eigen::MatrixXd& cov) {
    const int n = static_cast<int>(cov.rows()) / 2;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int m = 0; m < n; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(omega * cov);
    std::vector<double> nus;
    for (int i = 0; i < 2 * n; ++i) {
        const double v = es.eigenvalues()(i).imag();
        if (v > 0.0) nus.push_back(v);
    }
    std::sort(nus.begin(), nus.end());
    return nus;
}

} // namespace oracles

#endif // EPRSIM_TESTS_ORACLE_HELPERS_HPP
