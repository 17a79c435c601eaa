#ifndef EPRSIM_CHANNELS_HPP
#define EPRSIM_CHANNELS_HPP

#include "eprsim/gaussian_state.hpp"

namespace eprsim {

/// Transmission efficiency of a lossy detection/transmission path.
struct LossChannel {
    double eta = 1.0;
};

/**
 * @brief Imaginary-beam-splitter loss: a -> sqrt(eta) a + sqrt(1-eta) a_vac.
 *
 * The lossy mode's covariance block becomes eta*C + (1-eta)*I and its cross
 * blocks scale by sqrt(eta). With keep_environment the beam-splitter tap is
 * appended as a new mode (index n_modes of the result); this is the minimal
 * purification of the channel and serves as the eavesdropper mode in the
 * QKD protocol.
 */
GaussianState apply_loss(const GaussianState& state, int mode, LossChannel channel,
                         bool keep_environment = false);

inline GaussianState apply_loss(const GaussianState& state, int mode, double eta,
                                bool keep_environment = false) {
    return apply_loss(state, mode, LossChannel{eta}, keep_environment);
}

} // namespace eprsim

#endif // EPRSIM_CHANNELS_HPP
