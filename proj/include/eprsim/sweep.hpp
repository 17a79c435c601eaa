#ifndef EPRSIM_SWEEP_HPP
#define EPRSIM_SWEEP_HPP

#include <string>
#include <vector>

#include "eprsim/criteria_cv.hpp"
#include "eprsim/criteria_spin.hpp"

namespace eprsim {

enum class SweepVariable {
    r,
    eta_a,
    eta_b,
    eta_both, // eta_A = eta_B swept together (the symmetric-loss curve)
    gain,     // forced criterion gain g = g'
    p_w,      // Werner weight; produces spin-criterion rows
};

/// One swept parameter on an inclusive grid, other parameters held fixed.
struct SweepSpec {
    SweepVariable variable = SweepVariable::r;
    double lo = 0.0;
    double hi = 1.0;
    int steps = 2; // >= 2; grid point i is lo + i (hi - lo) / (steps - 1)
    double r = 1.0;
    double eta_a = 1.0;
    double eta_b = 1.0;
};

struct CvSweepRow {
    double value = 0.0;
    CriterionReport report;
};

struct SpinSweepRow {
    double value = 0.0;
    SpinCriterionReport report;
};

void validate(const SweepSpec& spec);

/// Grid point values, inclusive of both endpoints.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Squeeze -> loss A -> loss B -> full criteria at each grid point.
/// Rows are ordered by grid index. Rejects variable = p_w.
std::vector<CvSweepRow> run_cv_sweep(const SweepSpec& spec);

/// Bohm criterion across the Werner weight grid; requires variable = p_w.
std::vector<SpinSweepRow> run_spin_sweep(const SweepSpec& spec);

} // namespace eprsim

#endif // EPRSIM_SWEEP_HPP
