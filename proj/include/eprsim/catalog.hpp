#ifndef EPRSIM_CATALOG_HPP
#define EPRSIM_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace eprsim {

/**
 * @brief One published EPR/entanglement experiment.
 *
 * epsilon_sq is the squared EPR product; epsilon_sq_inferred marks values
 * deduced from other measured quantities (symmetry assumptions, loss
 * correction, or the bound epsilon <= 2D) rather than measured directly.
 * dinf_x_sq carries a single-channel conditional variance for experiments
 * that reported only that; every record carries at least one number.
 */
struct ExperimentRecord {
    std::string id;
    int year = 0;
    std::optional<double> epsilon_sq;
    bool epsilon_sq_inferred = false;
    std::optional<double> duan_D;
    std::optional<double> dinf_x_sq;
    std::string notes;
};

/// Criteria verdicts for one record, plus the epsilon <= 2D consistency
/// check (0.02 slack on epsilon^2 for measurement uncertainty).
struct CatalogVerdict {
    bool epr = false;           // epsilon_sq < 1
    bool entangled = false;     // duan_D < 1, or EPR shown directly
    bool epr_inferable = false; // duan_D < 0.5
    bool consistent = true;     // epsilon_sq <= (2 duan_D)^2 + 0.02 when both present
};

const std::vector<ExperimentRecord>& experiment_catalog();

CatalogVerdict check_record(const ExperimentRecord& record);

nlohmann::json to_json(const ExperimentRecord& record);
nlohmann::json to_json(const CatalogVerdict& verdict);

} // namespace eprsim

#endif // EPRSIM_CATALOG_HPP
