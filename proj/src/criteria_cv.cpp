#include "eprsim/criteria_cv.hpp"

#include <cmath>
#include <stdexcept>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

struct Quad {
    double var_t = 0.0;
    double var_b = 0.0;
    double cov = 0.0;
    double mean_t = 0.0;
    double mean_b = 0.0;
};

Quad quad_moments(const GaussianState& state, int target_mode, double target_angle,
                  int probe_mode, double probe_angle) {
    const Eigen::RowVectorXd ct = quadrature_functional(state, target_mode, target_angle);
    const Eigen::RowVectorXd cb = quadrature_functional(state, probe_mode, probe_angle);
    Quad q;
    q.var_t = ct * state.cov() * ct.transpose();
    q.var_b = cb * state.cov() * cb.transpose();
    q.cov = ct * state.cov() * cb.transpose();
    q.mean_t = ct * state.mean();
    q.mean_b = cb * state.mean();
    return q;
}

InferenceResult infer_from_moments(const Quad& q, std::optional<double> gain) {
    InferenceResult res;
    if (gain) {
        res.gain_used = *gain;
        res.variance = q.var_t - 2.0 * res.gain_used * q.cov + res.gain_used * res.gain_used * q.var_b;
    } else {
        if (!(q.var_b > 0.0)) {
            throw DegenerateProbeError("probe quadrature variance is zero");
        }
        res.gain_used = q.cov / q.var_b;
        res.variance = q.var_t - q.cov * q.cov / q.var_b;
    }
    res.intercept = q.mean_t - res.gain_used * q.mean_b;
    return res;
}

constexpr double kHalfPi = 1.5707963267948966;

// x channel: error x_A - g x_B, oriented gain is the signed gain itself.
ChannelGain x_channel(const GaussianState& state, int a, int b, std::optional<double> oriented_gain,
                      double& variance) {
    const auto res = infer_from_moments(quad_moments(state, a, 0.0, b, 0.0), oriented_gain);
    variance = res.variance;
    return {res.gain_used, res.gain_used};
}

// p channel: error p_A + g' p_B, i.e. signed subtractive gain -g'.
ChannelGain p_channel(const GaussianState& state, int a, int b, std::optional<double> oriented_gain,
                      double& variance) {
    std::optional<double> signed_gain;
    if (oriented_gain) signed_gain = -*oriented_gain;
    const auto res = infer_from_moments(quad_moments(state, a, kHalfPi, b, kHalfPi), signed_gain);
    variance = res.variance;
    return {res.gain_used, -res.gain_used};
}

void check_mode_pair(const GaussianState& state, int a, int b) {
    if (a < 0 || b < 0 || a >= state.n_modes() || b >= state.n_modes()) {
        throw std::invalid_argument("mode index out of range");
    }
    if (a == b) throw std::invalid_argument("criteria need two distinct modes");
}

double min_ptranspose_symplectic(const Eigen::MatrixXd& cov4) {
    Eigen::MatrixXd flipped = cov4;
    flipped.row(3) *= -1.0;
    flipped.col(3) *= -1.0;
    return symplectic_eigenvalues(flipped).minCoeff();
}

CriterionFlags derive_flags(double eps_sq, double d, double nu) {
    CriterionFlags f;
    f.epr_paradox = eps_sq < 1.0;
    f.entangled_duan = d < 1.0;
    f.epr_via_duan = d < 0.5;
    f.entangled_ppt = nu < 1.0;
    return f;
}

} // namespace

InferenceResult inference_variance_linear(const GaussianState& state, int target_mode,
                                          double target_angle, int probe_mode, double probe_angle,
                                          std::optional<double> gain) {
    check_mode_pair(state, target_mode, probe_mode);
    return infer_from_moments(
        quad_moments(state, target_mode, target_angle, probe_mode, probe_angle), gain);
}

double epsilon_product(const GaussianState& state, int mode_a, int mode_b,
                       std::optional<GainPair> gains) {
    check_mode_pair(state, mode_a, mode_b);
    double vx = 0.0, vp = 0.0;
    x_channel(state, mode_a, mode_b, gains ? std::optional<double>(gains->g) : std::nullopt, vx);
    p_channel(state, mode_a, mode_b, gains ? std::optional<double>(gains->g_prime) : std::nullopt,
              vp);
    return vx * vp;
}

double epr_product_analytic(double r, double eta_a, double eta_b) {
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("squeezing parameter must be finite and >= 0");
    }
    if (!(eta_a >= 0.0 && eta_a <= 1.0) || !(eta_b >= 0.0 && eta_b <= 1.0)) {
        throw std::invalid_argument("efficiencies must lie in [0,1]");
    }
    const double c = std::cosh(2.0 * r);
    return 1.0 - eta_a * (c - 1.0) * (2.0 * eta_b - 1.0) / (1.0 - eta_b + eta_b * c);
}

double duan_value(const GaussianState& state, int mode_a, int mode_b) {
    check_mode_pair(state, mode_a, mode_b);
    double vx = 0.0, vp = 0.0;
    x_channel(state, mode_a, mode_b, 1.0, vx);
    p_channel(state, mode_a, mode_b, 1.0, vp);
    return (vx + vp) / 4.0;
}

double sum_criterion(const GaussianState& state, int mode_a, int mode_b, GainPair gains) {
    check_mode_pair(state, mode_a, mode_b);
    double vx = 0.0, vp = 0.0;
    x_channel(state, mode_a, mode_b, gains.g, vx);
    p_channel(state, mode_a, mode_b, gains.g_prime, vp);
    return vx + vp;
}

double ppt_min_symplectic(const GaussianState& state, int mode_a, int mode_b) {
    check_mode_pair(state, mode_a, mode_b);
    const GaussianState pair = state.reduced({mode_a, mode_b});
    return min_ptranspose_symplectic(pair.cov());
}

CriterionReport evaluate_criteria(const GaussianState& state, int mode_a, int mode_b,
                                  std::optional<GainPair> gains) {
    check_mode_pair(state, mode_a, mode_b);
    const GaussianState pair = state.reduced({mode_a, mode_b});

    CriterionReport rep;
    double vx = 0.0, vp = 0.0;
    rep.gains_x = x_channel(pair, 0, 1, gains ? std::optional<double>(gains->g) : std::nullopt, vx);
    rep.gains_p =
        p_channel(pair, 0, 1, gains ? std::optional<double>(gains->g_prime) : std::nullopt, vp);
    rep.epsilon_sq = vx * vp;
    rep.sum_criterion = vx + vp;
    rep.duan_D = duan_value(pair, 0, 1);
    rep.ppt_min_symplectic = min_ptranspose_symplectic(pair.cov());
    rep.flags = derive_flags(rep.epsilon_sq, rep.duan_D, rep.ppt_min_symplectic);
    return rep;
}

namespace {

// Pairwise sums for one run of co-measured samples.
struct RunSums {
    double n = 0.0;
    double sa = 0.0, sb = 0.0;
    double saa = 0.0, sbb = 0.0, sab = 0.0;

    void add(double a, double b) {
        n += 1.0;
        sa += a;
        sb += b;
        saa += a * a;
        sbb += b * b;
        sab += a * b;
    }
    RunSums operator-(const RunSums& o) const {
        return {n - o.n, sa - o.sa, sb - o.sb, saa - o.saa, sbb - o.sbb, sab - o.sab};
    }
    RunSums& operator+=(const RunSums& o) {
        n += o.n;
        sa += o.sa;
        sb += o.sb;
        saa += o.saa;
        sbb += o.sbb;
        sab += o.sab;
        return *this;
    }
};

struct RunMoments {
    double var_a = 0.0, var_b = 0.0, cov = 0.0;
};

RunMoments moments_of(const RunSums& s) {
    if (s.n < 2.0) throw std::invalid_argument("need at least 2 samples per run");
    RunMoments m;
    m.var_a = (s.saa - s.sa * s.sa / s.n) / (s.n - 1.0);
    m.var_b = (s.sbb - s.sb * s.sb / s.n) / (s.n - 1.0);
    m.cov = (s.sab - s.sa * s.sb / s.n) / (s.n - 1.0);
    return m;
}

struct EmpiricalPoint {
    double eps_sq = 0.0;
    double duan = 0.0;
    double vx = 0.0, vp = 0.0;
    double gx = 0.0, gp = 0.0;
};

EmpiricalPoint point_from(const RunSums& x, const RunSums& p) {
    const RunMoments mx = moments_of(x);
    const RunMoments mp = moments_of(p);
    if (!(mx.var_b > 0.0) || !(mp.var_b > 0.0)) {
        throw DegenerateProbeError("probe quadrature sample variance is zero");
    }
    EmpiricalPoint pt;
    pt.gx = mx.cov / mx.var_b;
    pt.gp = mp.cov / mp.var_b;
    pt.vx = mx.var_a - mx.cov * mx.cov / mx.var_b;
    pt.vp = mp.var_a - mp.cov * mp.cov / mp.var_b;
    pt.eps_sq = pt.vx * pt.vp;
    pt.duan = ((mx.var_a + mx.var_b - 2.0 * mx.cov) + (mp.var_a + mp.var_b + 2.0 * mp.cov)) / 4.0;
    return pt;
}

std::vector<RunSums> block_sums(const std::vector<double>& a, const std::vector<double>& b,
                                int n_blocks) {
    const std::size_t n = a.size();
    std::vector<RunSums> blocks(static_cast<size_t>(n_blocks));
    for (int blk = 0; blk < n_blocks; ++blk) {
        const std::size_t lo = n * static_cast<std::size_t>(blk) / static_cast<std::size_t>(n_blocks);
        const std::size_t hi =
            n * (static_cast<std::size_t>(blk) + 1) / static_cast<std::size_t>(n_blocks);
        for (std::size_t i = lo; i < hi; ++i) blocks[static_cast<size_t>(blk)].add(a[i], b[i]);
    }
    return blocks;
}

} // namespace

CriterionReport criteria_from_samples(const HomodyneRecord& x_a, const HomodyneRecord& x_b,
                                      const HomodyneRecord& p_a, const HomodyneRecord& p_b) {
    if (x_a.outcomes.size() != x_b.outcomes.size() || p_a.outcomes.size() != p_b.outcomes.size()) {
        throw std::invalid_argument("co-measured runs must have matching lengths");
    }
    if (x_a.outcomes.size() < 2 || p_a.outcomes.size() < 2) {
        throw std::invalid_argument("need at least 2 samples per run");
    }
    for (const auto* rec : {&x_a, &x_b, &p_a, &p_b}) {
        for (double v : rec->outcomes) {
            if (!std::isfinite(v)) throw std::invalid_argument("record outcomes must be finite");
        }
    }

    const int n_blocks = static_cast<int>(
        std::min<std::size_t>(100, std::min(x_a.outcomes.size(), p_a.outcomes.size())));
    const std::vector<RunSums> xblocks = block_sums(x_a.outcomes, x_b.outcomes, n_blocks);
    const std::vector<RunSums> pblocks = block_sums(p_a.outcomes, p_b.outcomes, n_blocks);

    RunSums xtotal, ptotal;
    for (const auto& s : xblocks) xtotal += s;
    for (const auto& s : pblocks) ptotal += s;

    const EmpiricalPoint full = point_from(xtotal, ptotal);

    // Delete-one-block jackknife for the error bars.
    std::vector<double> eps_rep(static_cast<size_t>(n_blocks));
    std::vector<double> duan_rep(static_cast<size_t>(n_blocks));
    for (int blk = 0; blk < n_blocks; ++blk) {
        const EmpiricalPoint pt = point_from(xtotal - xblocks[static_cast<size_t>(blk)],
                                             ptotal - pblocks[static_cast<size_t>(blk)]);
        eps_rep[static_cast<size_t>(blk)] = pt.eps_sq;
        duan_rep[static_cast<size_t>(blk)] = pt.duan;
    }
    auto jackknife_se = [n_blocks](const std::vector<double>& rep) {
        double mean = 0.0;
        for (double v : rep) mean += v;
        mean /= static_cast<double>(n_blocks);
        double ss = 0.0;
        for (double v : rep) ss += (v - mean) * (v - mean);
        return std::sqrt(ss * (static_cast<double>(n_blocks) - 1.0) /
                         static_cast<double>(n_blocks));
    };

    CriterionReport rep;
    rep.epsilon_sq = full.eps_sq;
    rep.duan_D = full.duan;
    rep.sum_criterion = full.vx + full.vp;
    rep.gains_x = {full.gx, full.gx};
    rep.gains_p = {full.gp, -full.gp};
    rep.epsilon_sq_stderr = jackknife_se(eps_rep);
    rep.duan_D_stderr = jackknife_se(duan_rep);

    // Moment matrix over (x_A, p_A, x_B, p_B) with unmeasured cross terms zero.
    const RunMoments mx = moments_of(xtotal);
    const RunMoments mp = moments_of(ptotal);
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
    cov(0, 0) = mx.var_a;
    cov(1, 1) = mp.var_a;
    cov(2, 2) = mx.var_b;
    cov(3, 3) = mp.var_b;
    cov(0, 2) = cov(2, 0) = mx.cov;
    cov(1, 3) = cov(3, 1) = mp.cov;
    rep.ppt_min_symplectic = min_ptranspose_symplectic(cov);
    rep.flags = derive_flags(rep.epsilon_sq, rep.duan_D, rep.ppt_min_symplectic);
    return rep;
}

bool causally_separated(double distance, double t_a, double t_b, double dt, double c) {
    if (!std::isfinite(distance) || !std::isfinite(t_a) || !std::isfinite(t_b) ||
        !std::isfinite(dt) || !std::isfinite(c)) {
        throw std::invalid_argument("causality check needs finite inputs");
    }
    if (distance < 0.0 || dt < 0.0 || c <= 0.0) {
        throw std::invalid_argument("need distance >= 0, dt >= 0, c > 0");
    }
    return distance > c * (t_a - t_b + dt);
}

} // namespace eprsim
