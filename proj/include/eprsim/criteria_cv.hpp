#ifndef EPRSIM_CRITERIA_CV_HPP
#define EPRSIM_CRITERIA_CV_HPP

#include <optional>

#include "eprsim/gaussian_state.hpp"
#include "eprsim/homodyne.hpp"

namespace eprsim {

/**
 * @brief Gain pair (g, g') of the linear EPR criterion in its conventional
 *        form: the x channel reads x - g x^B, the p channel p + g' p^B.
 *
 * The sum form on the p side keeps g' >= 0 for the anti-correlated p
 * quadratures of the two-mode squeezed state; internally every regression
 * works with a signed gain, so both correlation signs are handled without
 * user input.
 */
struct GainPair {
    double g = 0.0;
    double g_prime = 0.0;
};

/// Per-channel gain as used internally (signed, subtractive form t - g b)
/// together with its orientation in the conventional criterion form.
struct ChannelGain {
    double signed_gain = 0.0;  // estimator is signed_gain * probe + intercept
    double oriented_gain = 0.0; // entry of GainPair for this channel
};

/// Result of one linear inference.
struct InferenceResult {
    double variance = 0.0;
    double gain_used = 0.0; // signed, subtractive form
    double intercept = 0.0;
};

/// Verdicts derived from the numeric fields of a CriterionReport.
struct CriterionFlags {
    bool epr_paradox = false;    // epsilon_sq < 1
    bool entangled_duan = false; // duan_D < 1
    bool epr_via_duan = false;   // duan_D < 0.5
    bool entangled_ppt = false;  // ppt_min_symplectic < 1
};

/**
 * @brief All continuous-variable criteria for one mode pair.
 *
 * epsilon_sq is the squared EPR measure, i.e. the product of the two
 * inference variances; every experimental number quoted for the EPR product
 * is of this form. duan_D always uses unit gains, exactly as the criterion
 * is defined. sum_criterion is evaluated at the same gains as epsilon_sq.
 * Standard errors are present only for sample-based reports (block
 * jackknife, 100 blocks).
 */
struct CriterionReport {
    double epsilon_sq = 0.0;
    double duan_D = 0.0;
    double sum_criterion = 0.0;
    double ppt_min_symplectic = 0.0;
    ChannelGain gains_x;
    ChannelGain gains_p;
    CriterionFlags flags;
    std::optional<double> epsilon_sq_stderr;
    std::optional<double> duan_D_stderr;
};

/**
 * @brief Variance of the linear inference error for one quadrature pair.
 *
 * With the regression-optimal gain g = <t,b>/Var(b) the result equals the
 * conditional variance of the target given the probe; a caller-supplied
 * gain evaluates Var(t - g b) as-is. Throws DegenerateProbeError when the
 * optimum is requested against a zero-variance probe.
 */
InferenceResult inference_variance_linear(const GaussianState& state, int target_mode,
                                          double target_angle, int probe_mode, double probe_angle,
                                          std::optional<double> gain = std::nullopt);

/**
 * @brief EPR product epsilon^2 = Var(x - g x^B) * Var(p + g' p^B).
 *
 * Gains default to the per-channel regression optimum; epsilon^2 < 1
 * demonstrates the EPR paradox and, for Gaussian states, steering.
 */
double epsilon_product(const GaussianState& state, int mode_a, int mode_b,
                       std::optional<GainPair> gains = std::nullopt);

/**
 * @brief Closed-form EPR product for a two-mode squeezed state with
 *        detection efficiencies eta_A, eta_B:
 *        1 - eta_A (cosh 2r - 1)(2 eta_B - 1) / (1 - eta_B + eta_B cosh 2r).
 *
 * Equals 1 identically at eta_B = 0.5 (no paradox at or below half
 * transmission) and 1/cosh(2r) in the lossless case.
 */
double epr_product_analytic(double r, double eta_a, double eta_b);

/// Duan inseparability D = [Var(x - x^B) + Var(p + p^B)] / 4 at unit gains.
/// D < 1 flags entanglement; D < 0.5 is already sufficient for EPR.
double duan_value(const GaussianState& state, int mode_a, int mode_b);

/// Sum form Var(x - g x^B) + Var(p + g' p^B); below 2 demonstrates EPR.
double sum_criterion(const GaussianState& state, int mode_a, int mode_b, GainPair gains);

/// Smallest symplectic eigenvalue of the partially transposed covariance
/// (sign flip on p^B); below 1 flags entanglement.
double ppt_min_symplectic(const GaussianState& state, int mode_a, int mode_b);

/// Full report for a mode pair; epsilon and sum use regression gains unless
/// a GainPair is supplied. duan_D always stays at unit gains.
CriterionReport evaluate_criteria(const GaussianState& state, int mode_a, int mode_b,
                                  std::optional<GainPair> gains = std::nullopt);

/**
 * @brief Empirical report from homodyne records.
 *
 * Takes the four runs (x^A, x^B) and (p^A, p^B); the x and p runs are
 * separate ensembles since the settings do not commute. Gains come from
 * sample regression; error bars on epsilon_sq and duan_D from a delete-one
 * block jackknife over 100 blocks. The PPT value is computed from the
 * measurable moments with the unmeasured x-p cross terms set to zero; as a
 * noisy moment estimate it is reported without a physicality gate.
 */
CriterionReport criteria_from_samples(const HomodyneRecord& x_a, const HomodyneRecord& x_b,
                                      const HomodyneRecord& p_a, const HomodyneRecord& p_b);

/// Causal separation L > c (t_A - t_B + dt), strict.
bool causally_separated(double distance, double t_a, double t_b, double dt, double c);

} // namespace eprsim

#endif // EPRSIM_CRITERIA_CV_HPP
