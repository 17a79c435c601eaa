#include "eprsim/montecarlo.hpp"

#include "eprsim/channels.hpp"
#include "eprsim/homodyne.hpp"

namespace eprsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

MonteCarloResult run_montecarlo(double r, double eta_a, double eta_b, std::int64_t n_samples,
                                std::uint64_t seed) {
    if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");

    GaussianState state = two_mode_squeezed(r);
    if (eta_a < 1.0) state = apply_loss(state, 0, eta_a);
    if (eta_b < 1.0) state = apply_loss(state, 1, eta_b);

    constexpr double kHalfPi = 1.5707963267948966;
    const auto x_run = sample_quadratures(state, {{0, 0.0}, {1, 0.0}}, n_samples,
                                          splitmix64(2 * seed));
    const auto p_run = sample_quadratures(state, {{0, kHalfPi}, {1, kHalfPi}}, n_samples,
                                          splitmix64(2 * seed + 1));

    MonteCarloResult res;
    res.analytic = evaluate_criteria(state, 0, 1);
    res.empirical = criteria_from_samples(x_run[0], x_run[1], p_run[0], p_run[1]);
    res.r = r;
    res.eta_a = eta_a;
    res.eta_b = eta_b;
    res.n_samples = n_samples;
    res.seed = seed;
    return res;
}

} // namespace eprsim
