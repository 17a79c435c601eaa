#include "eprsim/json_io.hpp"

namespace eprsim {

using nlohmann::json;

json to_json(const GaussianState& state) {
    json j;
    j["n_modes"] = state.n_modes();
    j["mean"] = std::vector<double>(state.mean().data(), state.mean().data() + state.mean().size());
    json rows = json::array();
    for (int i = 0; i < state.cov().rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < state.cov().cols(); ++k) row.push_back(state.cov()(i, k));
        rows.push_back(std::move(row));
    }
    j["cov"] = std::move(rows);
    return j;
}

GaussianState state_from_json(const json& j) {
    const int n_modes = j.at("n_modes").get<int>();
    const auto mean_vec = j.at("mean").get<std::vector<double>>();
    if (static_cast<int>(mean_vec.size()) != 2 * n_modes) {
        throw std::invalid_argument("mean length does not match n_modes");
    }
    Eigen::VectorXd mean(2 * n_modes);
    for (int i = 0; i < 2 * n_modes; ++i) mean(i) = mean_vec[static_cast<size_t>(i)];
    const auto& rows = j.at("cov");
    if (static_cast<int>(rows.size()) != 2 * n_modes) {
        throw std::invalid_argument("cov row count does not match n_modes");
    }
    Eigen::MatrixXd cov(2 * n_modes, 2 * n_modes);
    for (int i = 0; i < 2 * n_modes; ++i) {
        const auto row = rows.at(static_cast<size_t>(i)).get<std::vector<double>>();
        if (static_cast<int>(row.size()) != 2 * n_modes) {
            throw std::invalid_argument("cov is not square");
        }
        for (int k = 0; k < 2 * n_modes; ++k) cov(i, k) = row[static_cast<size_t>(k)];
    }
    return GaussianState(std::move(mean), std::move(cov));
}

json to_json(const CriterionReport& report) {
    json j;
    j["epsilon_sq"] = report.epsilon_sq;
    j["duan_D"] = report.duan_D;
    j["sum_criterion"] = report.sum_criterion;
    j["ppt_min_symplectic"] = report.ppt_min_symplectic;
    j["gains"] = {{"gx", report.gains_x.signed_gain},
                  {"gx_prime", report.gains_x.oriented_gain},
                  {"gp", report.gains_p.signed_gain},
                  {"gp_prime", report.gains_p.oriented_gain}};
    j["flags"] = {{"epr_paradox", report.flags.epr_paradox},
                  {"entangled_duan", report.flags.entangled_duan},
                  {"epr_via_duan", report.flags.epr_via_duan},
                  {"entangled_ppt", report.flags.entangled_ppt}};
    if (report.epsilon_sq_stderr || report.duan_D_stderr) {
        json se;
        if (report.epsilon_sq_stderr) se["epsilon_sq"] = *report.epsilon_sq_stderr;
        if (report.duan_D_stderr) se["duan_D"] = *report.duan_D_stderr;
        j["stderr"] = std::move(se);
    }
    return j;
}

json to_json(const SpinCriterionReport& report) {
    return json{{"dinf_jx", report.dinf_jx},
                {"dinf_jy", report.dinf_jy},
                {"rhs", report.rhs},
                {"satisfied", report.satisfied}};
}

json to_json(const QkdResult& result) {
    return json{{"delta_I_direct", result.delta_I_direct},
                {"delta_I_reverse", result.delta_I_reverse},
                {"V_A_given_B", result.V_A_given_B},
                {"V_B_given_A", result.V_B_given_A},
                {"V_A_given_E", result.V_A_given_E},
                {"V_B_given_E", result.V_B_given_E},
                {"key_possible_direct", result.key_possible_direct},
                {"key_possible_reverse", result.key_possible_reverse}};
}

json to_json(const TeleportResult& result) {
    return json{{"fidelity", result.fidelity},
                {"T", result.T},
                {"V_product", result.V_product},
                {"gain", result.gain}};
}

} // namespace eprsim
