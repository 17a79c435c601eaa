#include "eprsim/homodyne.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "eprsim/errors.hpp"

namespace eprsim {

Eigen::RowVectorXd quadrature_functional(const GaussianState& state, int mode, double angle) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(2 * state.n_modes());
    row(state.x_index(mode)) = std::cos(angle);
    row(state.p_index(mode)) = std::sin(angle);
    return row;
}

GaussianState condition_on_homodyne(const GaussianState& state, int mode, double angle,
                                    double outcome) {
    if (state.n_modes() < 2) {
        throw std::invalid_argument("conditioning consumes a mode; need at least two");
    }
    if (!std::isfinite(outcome)) throw std::invalid_argument("outcome must be finite");
    const Eigen::RowVectorXd c = quadrature_functional(state, mode, angle);
    const double v = c * state.cov() * c.transpose();
    if (!(v > 0.0)) {
        throw NumericalDegeneracyError("measured quadrature variance is not positive");
    }
    const Eigen::VectorXd w = state.cov() * c.transpose();
    const double residual = outcome - c * state.mean();

    const Eigen::VectorXd mean = state.mean() + w * (residual / v);
    const Eigen::MatrixXd cov = state.cov() - w * w.transpose() / v;

    // The measured mode is consumed; slice it out before constructing the
    // posterior (its own block is left degenerate by the update).
    const int k = 2 * (state.n_modes() - 1);
    Eigen::VectorXd mean_rest(k);
    Eigen::MatrixXd cov_rest(k, k);
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(k));
    for (int m = 0; m < state.n_modes(); ++m) {
        if (m == mode) continue;
        idx.push_back(state.x_index(m));
        idx.push_back(state.p_index(m));
    }
    for (int a = 0; a < k; ++a) {
        mean_rest(a) = mean(idx[static_cast<size_t>(a)]);
        for (int b = 0; b < k; ++b) {
            cov_rest(a, b) = cov(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]);
        }
    }
    return GaussianState(std::move(mean_rest), std::move(cov_rest));
}

namespace {

constexpr std::int64_t kSampleChunk = 1 << 16;

double normalized_angle(double angle) {
    const double two_pi = 2.0 * M_PI;
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}

} // namespace

std::vector<HomodyneRecord> sample_quadratures(const GaussianState& state,
                                               const std::vector<QuadratureSetting>& settings,
                                               std::int64_t n_samples, std::uint64_t seed) {
    if (settings.empty()) throw std::invalid_argument("need at least one quadrature setting");
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    std::set<int> seen;
    for (const auto& s : settings) {
        if (s.mode < 0 || s.mode >= state.n_modes()) {
            throw std::invalid_argument("setting mode index out of range");
        }
        if (!std::isfinite(s.angle)) throw std::invalid_argument("setting angle must be finite");
        if (!seen.insert(s.mode).second) {
            throw std::invalid_argument("two settings on the same mode do not commute");
        }
    }

    const int k = static_cast<int>(settings.size());
    Eigen::MatrixXd proj(k, 2 * state.n_modes());
    for (int i = 0; i < k; ++i) {
        proj.row(i) = quadrature_functional(state, settings[static_cast<size_t>(i)].mode,
                                            settings[static_cast<size_t>(i)].angle);
    }
    const Eigen::VectorXd mu = proj * state.mean();
    Eigen::MatrixXd sigma = proj * state.cov() * proj.transpose();

    // LLT can reject a p.s.d. matrix that is singular to rounding; regularize
    // by a relative jitter well below any statistical resolution.
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success) {
        sigma += Eigen::MatrixXd::Identity(k, k) * (1e-14 * std::max(1.0, sigma.diagonal().maxCoeff()));
        llt.compute(sigma);
        if (llt.info() != Eigen::Success) {
            throw NumericalDegeneracyError("projected covariance is not positive semidefinite");
        }
    }
    const Eigen::MatrixXd chol = llt.matrixL();

    std::vector<HomodyneRecord> records(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        records[static_cast<size_t>(i)].mode = settings[static_cast<size_t>(i)].mode;
        records[static_cast<size_t>(i)].angle_theta =
            normalized_angle(settings[static_cast<size_t>(i)].angle);
        records[static_cast<size_t>(i)].outcomes.resize(static_cast<size_t>(n_samples));
    }

    const std::int64_t n_chunks = (n_samples + kSampleChunk - 1) / kSampleChunk;
    Eigen::VectorXd z(k);
    for (std::int64_t chunk = 0; chunk < n_chunks; ++chunk) {
        const std::uint64_t c = static_cast<std::uint64_t>(chunk);
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        std::mt19937_64 engine(sseq);
        std::normal_distribution<double> normal(0.0, 1.0);
        const std::int64_t begin = chunk * kSampleChunk;
        const std::int64_t end = std::min(n_samples, begin + kSampleChunk);
        for (std::int64_t row = begin; row < end; ++row) {
            for (int i = 0; i < k; ++i) z(i) = normal(engine);
            const Eigen::VectorXd sample = mu + chol * z;
            for (int i = 0; i < k; ++i) {
                records[static_cast<size_t>(i)].outcomes[static_cast<size_t>(row)] = sample(i);
            }
        }
    }
    return records;
}

} // namespace eprsim
