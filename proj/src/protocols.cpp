#include "eprsim/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "eprsim/channels.hpp"
#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

double conditional_variance(const GaussianState& state, int target, int probe, double angle) {
    return inference_variance_linear(state, target, angle, probe, angle).variance;
}

// Output-mode functional rows for the feedforward map
//   x_out = g x_in + (x_B - g x_A),  p_out = g p_in + (p_B + g p_A)
// over a joint state with modes (input, alice, bob).
Eigen::MatrixXd teleport_rows(const GaussianState& joint, int in, int alice, int bob, double g) {
    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(2, 2 * joint.n_modes());
    rows(0, joint.x_index(in)) = g;
    rows(0, joint.x_index(alice)) = -g;
    rows(0, joint.x_index(bob)) = 1.0;
    rows(1, joint.p_index(in)) = g;
    rows(1, joint.p_index(alice)) = g;
    rows(1, joint.p_index(bob)) = 1.0;
    return rows;
}

} // namespace

QkdResult qkd_rates(double r, double eta_b) {
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("squeezing parameter must be finite and >= 0");
    }
    if (eta_b == 0.0) throw NoChannelError("eta_B = 0 leaves no channel to Bob");
    if (!(eta_b > 0.0 && eta_b <= 1.0)) {
        throw std::invalid_argument("eta_B must lie in (0,1]");
    }

    // Modes: 0 = Alice, 1 = Bob, 2 = Eve (loss tap).
    const GaussianState state = apply_loss(two_mode_squeezed(r), 1, eta_b, true);

    const double v_ab_x = conditional_variance(state, 0, 1, 0.0);
    const double v_ab_y = conditional_variance(state, 0, 1, kHalfPi);
    const double v_ba_x = conditional_variance(state, 1, 0, 0.0);
    const double v_ba_y = conditional_variance(state, 1, 0, kHalfPi);
    const double v_ae_x = conditional_variance(state, 0, 2, 0.0);
    const double v_ae_y = conditional_variance(state, 0, 2, kHalfPi);
    const double v_be_x = conditional_variance(state, 1, 2, 0.0);
    const double v_be_y = conditional_variance(state, 1, 2, kHalfPi);

    QkdResult res;
    res.V_A_given_B = v_ab_x * v_ab_y;
    res.V_B_given_A = v_ba_x * v_ba_y;
    res.V_A_given_E = v_ae_x * v_ae_y;
    res.V_B_given_E = v_be_x * v_be_y;
    res.delta_I_direct = 0.5 * std::log2(res.V_A_given_E / res.V_A_given_B);
    res.delta_I_reverse = 0.5 * std::log2(res.V_B_given_E / res.V_B_given_A);
    res.key_possible_direct = res.delta_I_direct > 0.0;
    res.key_possible_reverse = res.delta_I_reverse > 0.0;
    return res;
}

ReverseConditionalForms v_b_given_a_forms(const GaussianState& state, int mode_a, int mode_b) {
    const Eigen::RowVectorXd xa = quadrature_functional(state, mode_a, 0.0);
    const Eigen::RowVectorXd pa = quadrature_functional(state, mode_a, kHalfPi);
    const Eigen::RowVectorXd xb = quadrature_functional(state, mode_b, 0.0);
    const Eigen::RowVectorXd pb = quadrature_functional(state, mode_b, kHalfPi);
    const auto var = [&](const Eigen::RowVectorXd& v) { return double(v * state.cov() * v.transpose()); };
    const auto cov = [&](const Eigen::RowVectorXd& u, const Eigen::RowVectorXd& v) {
        return double(u * state.cov() * v.transpose());
    };
    const double va_x = var(xa), va_y = var(pa), vb_x = var(xb), vb_y = var(pb);
    const double cx = cov(xa, xb), cy = cov(pa, pb);

    ReverseConditionalForms forms;
    forms.printed = (va_x - cx * cx / va_x) * (vb_y - cy * cy / va_y);
    forms.symmetric = (vb_x - cx * cx / va_x) * (vb_y - cy * cy / va_y);
    return forms;
}

std::pair<GaussianState, TeleportResult> teleport(const Eigen::Vector2d& input_mean,
                                                  const Eigen::Matrix2d& input_cov, double r,
                                                  double gain, TeleportLosses losses) {
    if (!std::isfinite(gain) || gain < 0.0) {
        throw std::invalid_argument("teleporter gain must be finite and >= 0");
    }
    if (!(losses.eta_alice >= 0.0 && losses.eta_alice <= 1.0) ||
        !(losses.eta_bob >= 0.0 && losses.eta_bob <= 1.0)) {
        throw std::invalid_argument("resource efficiencies must lie in [0,1]");
    }
    const GaussianState input(input_mean, input_cov); // validates physicality

    GaussianState epr = two_mode_squeezed(r);
    if (losses.eta_alice < 1.0) epr = apply_loss(epr, 0, losses.eta_alice);
    if (losses.eta_bob < 1.0) epr = apply_loss(epr, 1, losses.eta_bob);

    const GaussianState joint = input.tensor(epr); // modes: 0 input, 1 Alice, 2 Bob
    const Eigen::MatrixXd rows = teleport_rows(joint, 0, 1, 2, gain);

    const Eigen::Vector2d mean_out = rows * joint.mean();
    const Eigen::Matrix2d cov_out = rows * joint.cov() * rows.transpose();
    GaussianState output(mean_out, cov_out);

    // Input-output cross covariances for the conditional variance product.
    const Eigen::RowVectorXd xin = quadrature_functional(joint, 0, 0.0);
    const Eigen::RowVectorXd pin = quadrature_functional(joint, 0, kHalfPi);
    const double cross_x = xin * joint.cov() * rows.row(0).transpose();
    const double cross_y = pin * joint.cov() * rows.row(1).transpose();

    TeleportResult res;
    res.gain = gain;

    const Eigen::Matrix2d sum = input_cov + cov_out;
    const Eigen::Vector2d delta = mean_out - input_mean;
    res.fidelity = std::min(1.0, 2.0 / std::sqrt(sum.determinant()) *
                                     std::exp(-0.5 * delta.dot(sum.inverse() * delta)));

    // R_out/R_in per quadrature; the modulation depth cancels.
    res.T = gain * gain *
            (input_cov(0, 0) / cov_out(0, 0) + input_cov(1, 1) / cov_out(1, 1));

    const double v_cond_x = cov_out(0, 0) - cross_x * cross_x / input_cov(0, 0);
    const double v_cond_y = cov_out(1, 1) - cross_y * cross_y / input_cov(1, 1);
    res.V_product = v_cond_x * v_cond_y;

    return {std::move(output), res};
}

CriterionReport entanglement_swap(double r1, double r2, double gain) {
    if (!std::isfinite(gain) || gain < 0.0) {
        throw std::invalid_argument("teleporter gain must be finite and >= 0");
    }
    // Modes: 0 Victor, 1 Alice's input half, 2 Alice's resource half, 3 Bob.
    const GaussianState joint = two_mode_squeezed(r1).tensor(two_mode_squeezed(r2));
    const Eigen::MatrixXd out_rows = teleport_rows(joint, 1, 2, 3, gain);

    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(4, 8);
    rows(0, joint.x_index(0)) = 1.0;
    rows(1, joint.p_index(0)) = 1.0;
    rows.row(2) = out_rows.row(0);
    rows.row(3) = out_rows.row(1);

    const GaussianState swapped(rows * joint.mean(), rows * joint.cov() * rows.transpose());
    return evaluate_criteria(swapped, 0, 1);
}

double classical_fidelity_bound(double mean_photon_number) {
    if (!(mean_photon_number >= 0.0)) {
        throw std::invalid_argument("mean photon number must be >= 0");
    }
    return (mean_photon_number + 1.0) / (2.0 * mean_photon_number + 1.0);
}

} // namespace eprsim
