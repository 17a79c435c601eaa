#include "eprsim/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "eprsim/symplectic.hpp"

namespace eprsim {

GaussianState apply_loss(const GaussianState& state, int mode, LossChannel channel,
                         bool keep_environment) {
    if (mode < 0 || mode >= state.n_modes()) {
        throw std::invalid_argument("loss mode index out of range");
    }
    if (!(channel.eta >= 0.0 && channel.eta <= 1.0)) {
        throw std::invalid_argument("transmission efficiency must lie in [0,1]");
    }
    // Mix with an appended vacuum mode, then drop the tap unless requested.
    const int tap = state.n_modes();
    GaussianState extended = state.tensor(vacuum(1));
    GaussianState mixed =
        apply_symplectic(extended, SymplecticTransform::beam_splitter(channel.eta, mode, tap));
    if (keep_environment) return mixed;
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(state.n_modes()));
    for (int m = 0; m < state.n_modes(); ++m) keep.push_back(m);
    return mixed.reduced(keep);
}

} // namespace eprsim
