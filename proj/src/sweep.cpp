#include "eprsim/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "eprsim/channels.hpp"

namespace eprsim {

void validate(const SweepSpec& spec) {
    if (!(spec.lo < spec.hi)) throw std::invalid_argument("sweep range needs lo < hi");
    if (spec.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
        throw std::invalid_argument("sweep range must be finite");
    }
    if (!(spec.r >= 0.0)) throw std::invalid_argument("fixed r must be >= 0");
    if (!(spec.eta_a >= 0.0 && spec.eta_a <= 1.0) || !(spec.eta_b >= 0.0 && spec.eta_b <= 1.0)) {
        throw std::invalid_argument("fixed efficiencies must lie in [0,1]");
    }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    validate(spec);
    std::vector<double> grid(static_cast<size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) {
        grid[static_cast<size_t>(i)] =
            spec.lo + static_cast<double>(i) * (spec.hi - spec.lo) / (spec.steps - 1);
    }
    grid.back() = spec.hi;
    return grid;
}

std::vector<CvSweepRow> run_cv_sweep(const SweepSpec& spec) {
    if (spec.variable == SweepVariable::p_w) {
        throw std::invalid_argument("p_w sweeps produce spin rows; use run_spin_sweep");
    }
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<CvSweepRow> rows;
    rows.reserve(grid.size());
    for (double value : grid) {
        double r = spec.r;
        double eta_a = spec.eta_a;
        double eta_b = spec.eta_b;
        std::optional<GainPair> gains;
        switch (spec.variable) {
        case SweepVariable::r: r = value; break;
        case SweepVariable::eta_a: eta_a = value; break;
        case SweepVariable::eta_b: eta_b = value; break;
        case SweepVariable::eta_both: eta_a = eta_b = value; break;
        case SweepVariable::gain: gains = GainPair{value, value}; break;
        case SweepVariable::p_w: break;
        }
        GaussianState state = two_mode_squeezed(r);
        if (eta_a < 1.0) state = apply_loss(state, 0, eta_a);
        if (eta_b < 1.0) state = apply_loss(state, 1, eta_b);
        rows.push_back({value, evaluate_criteria(state, 0, 1, gains)});
    }
    return rows;
}

std::vector<SpinSweepRow> run_spin_sweep(const SweepSpec& spec) {
    if (spec.variable != SweepVariable::p_w) {
        throw std::invalid_argument("spin sweeps vary the Werner weight p_w");
    }
    if (spec.lo < 0.0 || spec.hi > 1.0) {
        throw std::invalid_argument("Werner weight range must lie in [0,1]");
    }
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<SpinSweepRow> rows;
    rows.reserve(grid.size());
    for (double value : grid) {
        rows.push_back({value, bohm_criterion(werner_state(value))});
    }
    return rows;
}

} // namespace eprsim
