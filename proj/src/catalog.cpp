#include "eprsim/catalog.hpp"

namespace eprsim {

const std::vector<ExperimentRecord>& experiment_catalog() {
    static const std::vector<ExperimentRecord> records = {
        {"ou1992", 1992, 0.70, false, std::nullopt, std::nullopt,
         "First direct EPR product measurement; type II intracavity parametric oscillator."},
        {"silberhorn2001", 2001, 0.64, true, 0.40, std::nullopt,
         "Fiber Kerr soliton pairs; epsilon^2 = 0.64 +- 0.08 inferred from D via beam symmetry."},
        {"julsgaard2001", 2001, std::nullopt, false, 0.82, std::nullopt,
         "Collective spins of two atomic ensembles; entangled but below a direct EPR test."},
        {"bowen2002_stokes", 2002, 0.72, false, std::nullopt, std::nullopt,
         "EPR product for Stokes (polarization) operators."},
        {"bowen2003", 2003, 0.58, false, std::nullopt, std::nullopt,
         "Pair of type I optical parametric oscillators; lowest directly measured product."},
        {"zhang2003", 2003, std::nullopt, false, std::nullopt, 0.62,
         "Twin-beam intensity inference; only the single-channel conditional variance."},
        {"howell2004", 2004, 0.01, false, std::nullopt, std::nullopt,
         "Photon position/momentum with coincidence conditioning; not an a priori product."},
        {"laurat2005", 2005, 0.42, true, std::nullopt, std::nullopt,
         "Inferred under symmetry assumptions from measured correlations."},
        {"wenger2005_uncorrected", 2005, 1.06, true, 0.7, std::nullopt,
         "Pulsed traveling-wave parametric amplifier, raw detection: no paradox."},
        {"wenger2005_corrected", 2005, 0.83, true, std::nullopt, std::nullopt,
         "Same experiment after correcting for detector losses."},
    };
    return records;
}

CatalogVerdict check_record(const ExperimentRecord& record) {
    CatalogVerdict v;
    v.epr = record.epsilon_sq && *record.epsilon_sq < 1.0;
    v.epr_inferable = record.duan_D && *record.duan_D < 0.5;
    v.entangled = (record.duan_D && *record.duan_D < 1.0) || v.epr;
    if (record.epsilon_sq && record.duan_D) {
        const double bound = 4.0 * (*record.duan_D) * (*record.duan_D) + 0.02;
        v.consistent = *record.epsilon_sq <= bound;
    }
    return v;
}

nlohmann::json to_json(const ExperimentRecord& record) {
    nlohmann::json j;
    j["id"] = record.id;
    j["year"] = record.year;
    j["epsilon_sq"] = record.epsilon_sq ? nlohmann::json(*record.epsilon_sq) : nlohmann::json();
    j["epsilon_sq_inferred"] = record.epsilon_sq_inferred;
    j["duan_D"] = record.duan_D ? nlohmann::json(*record.duan_D) : nlohmann::json();
    j["dinf_x_sq"] = record.dinf_x_sq ? nlohmann::json(*record.dinf_x_sq) : nlohmann::json();
    j["notes"] = record.notes;
    return j;
}

nlohmann::json to_json(const CatalogVerdict& verdict) {
    return nlohmann::json{{"epr", verdict.epr},
                          {"entangled", verdict.entangled},
                          {"epr_inferable", verdict.epr_inferable},
                          {"consistent", verdict.consistent}};
}

} // namespace eprsim
