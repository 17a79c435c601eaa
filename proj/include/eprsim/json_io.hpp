#ifndef EPRSIM_JSON_IO_HPP
#define EPRSIM_JSON_IO_HPP

#include <json.hpp>

#include "eprsim/criteria_cv.hpp"
#include "eprsim/criteria_spin.hpp"
#include "eprsim/gaussian_state.hpp"
#include "eprsim/protocols.hpp"

namespace eprsim {

// States serialize as {n_modes, mean:[...], cov:[[...]]} with row-major cov
// at full double precision; loading re-validates the physicality invariants.
nlohmann::json to_json(const GaussianState& state);
GaussianState state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CriterionReport& report);
nlohmann::json to_json(const SpinCriterionReport& report);
nlohmann::json to_json(const QkdResult& result);
nlohmann::json to_json(const TeleportResult& result);

} // namespace eprsim

#endif // EPRSIM_JSON_IO_HPP
