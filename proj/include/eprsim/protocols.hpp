#ifndef EPRSIM_PROTOCOLS_HPP
#define EPRSIM_PROTOCOLS_HPP

#include <utility>

#include "eprsim/criteria_cv.hpp"
#include "eprsim/gaussian_state.hpp"

namespace eprsim {

/**
 * @brief Net information rates and conditional-variance products for
 *        entanglement-based QKD over a lossy channel.
 *
 * Alice holds one half of a two-mode squeezed pair (lossless, eta_A = 1) and
 * sends the other half through a channel of transmission eta_B; the
 * eavesdropper is modeled as the beam-splitter tap of that loss and
 * conditions through each quadrature separately. The V_* fields are
 * products over the X and Y channels; delta_I values are in bits,
 *   delta_I = (1/2) log2(V_(.|E) / V_(.|B or A)),
 * with direct reconciliation inferring Alice's data and reverse
 * reconciliation inferring Bob's. A key is possible iff delta_I > 0;
 * direct reconciliation dies at eta_B = 0.5 (the 3 dB limit), reverse
 * reconciliation survives any eta_B > 0.
 */
struct QkdResult {
    double delta_I_direct = 0.0;
    double delta_I_reverse = 0.0;
    double V_A_given_B = 0.0;
    double V_B_given_A = 0.0;
    double V_A_given_E = 0.0;
    double V_B_given_E = 0.0;
    bool key_possible_direct = false;
    bool key_possible_reverse = false;
};

/// Throws NoChannelError for eta_b = 0.
QkdResult qkd_rates(double r, double eta_b);

/**
 * @brief Both published forms of the reverse-reconciliation conditional
 *        variance product V_(B|A).
 *
 * The printed form follows the source expansion verbatim, whose first
 * bracket reads V_A^X - |<x^B,x^A>|^2 / V_A^X (numerator V_A^X, not V_B^X);
 * the symmetric form replaces that numerator with V_B^X, which is what
 * Gaussian conditioning of B on A actually yields. QkdResult uses the
 * conditioning values; the printed form is exposed here so the discrepancy
 * stays visible rather than silently corrected.
 */
struct ReverseConditionalForms {
    double printed = 0.0;
    double symmetric = 0.0;
};

ReverseConditionalForms v_b_given_a_forms(const GaussianState& state, int mode_a, int mode_b);

/**
 * @brief Teleportation figures of merit.
 *
 * fidelity is the state overlap of input and output (equal to
 * <psi_in|rho_out|psi_in> for the pure inputs used here); T is the two-
 * quadrature signal-transfer coefficient, V_product the input-output
 * conditional variance product. Without entanglement the protocol is
 * limited to V_product >= 1 and T <= 1.
 */
struct TeleportResult {
    double fidelity = 0.0;
    double T = 0.0;
    double V_product = 0.0;
    double gain = 0.0;
};

/// Detection/transmission efficiencies of the two halves of the EPR resource.
struct TeleportLosses {
    double eta_alice = 1.0;
    double eta_bob = 1.0;
};

/**
 * @brief Continuous-variable teleportation of a single-mode Gaussian input
 *        through a two-mode squeezed resource of strength r.
 *
 * Alice performs a dual-homodyne (50/50 beam splitter) measurement of the
 * input against her half; Bob displaces his half. The sqrt(2) feedforward
 * scaling is absorbed into the gain so that gain = 1 is unity transfer:
 *   x_out = g x_in + (x_B - g x_A),   p_out = g p_in + (p_B + g p_A).
 * Output mean is exactly g * input mean. The signal-to-noise ratio
 * R = mean^2 / variance of any modulated coherent input cancels out of the
 * T ratio, which therefore needs no explicit displacement.
 */
std::pair<GaussianState, TeleportResult> teleport(const Eigen::Vector2d& input_mean,
                                                  const Eigen::Matrix2d& input_cov, double r,
                                                  double gain, TeleportLosses losses = {});

/**
 * @brief Entanglement swapping: half of a pair of strength r1 teleported
 *        through a pair of strength r2. Returns the full criteria report
 *        between the retained (Victor) mode and the teleported output.
 */
CriterionReport entanglement_swap(double r1, double r2, double gain);

/// Best classical measure-and-regenerate fidelity for a Gaussian ensemble
/// of coherent states with mean photon number n_bar: (n_bar+1)/(2 n_bar+1).
/// Tends to the 0.5 classical limit as n_bar grows.
double classical_fidelity_bound(double mean_photon_number);

} // namespace eprsim

#endif // EPRSIM_PROTOCOLS_HPP
