#include "eprsim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>

#include "eprsim/catalog.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/json_io.hpp"
#include "eprsim/montecarlo.hpp"
#include "eprsim/protocols.hpp"
#include "eprsim/sweep.hpp"

namespace eprsim::cli {

namespace {

using nlohmann::json;

// CSV numbers carry 12 significant digits; JSON keeps full double precision.
std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

const std::map<std::string, SweepVariable> kVariableNames = {
    {"r", SweepVariable::r},           {"eta_a", SweepVariable::eta_a},
    {"eta_b", SweepVariable::eta_b},   {"eta_both", SweepVariable::eta_both},
    {"gain", SweepVariable::gain},     {"p_w", SweepVariable::p_w},
};

std::string variable_name(SweepVariable v) {
    for (const auto& [name, var] : kVariableNames) {
        if (var == v) return name;
    }
    return "value";
}

struct SweepOptions {
    std::string preset;
    std::string variable = "r";
    std::string criterion = "cv";
    SweepSpec spec;
};

void apply_preset(SweepOptions& opt) {
    // The three standard detector-efficiency curves, all at r = 2.
    opt.spec.r = 2.0;
    opt.spec.lo = 0.0;
    opt.spec.hi = 1.0;
    opt.spec.steps = 201; // grid contains eta = 0.5 exactly
    opt.spec.eta_a = 1.0;
    opt.spec.eta_b = 1.0;
    if (opt.preset == "loss-equal") {
        opt.variable = "eta_both";
    } else if (opt.preset == "loss-etaB") {
        opt.variable = "eta_b";
    } else if (opt.preset == "loss-etaA") {
        opt.variable = "eta_a";
    }
    opt.criterion = "cv";
}

void run_sweep_command(const SweepOptions& options, const std::string& output, std::ostream& out) {
    SweepOptions opt = options;
    if (!opt.preset.empty()) apply_preset(opt);
    opt.spec.variable = kVariableNames.at(opt.variable);

    const bool spin = opt.criterion == "bohm";
    if (spin != (opt.spec.variable == SweepVariable::p_w)) {
        throw std::invalid_argument("criterion 'bohm' pairs with variable p_w; 'cv' with the rest");
    }

    const std::string name = variable_name(opt.spec.variable);
    if (spin) {
        const auto rows = run_spin_sweep(opt.spec);
        if (output == "json") {
            json arr = json::array();
            for (const auto& row : rows) {
                arr.push_back({{name, row.value}, {"report", to_json(row.report)}});
            }
            emit_json(out, arr);
            return;
        }
        out << name << ",dinf_jx,dinf_jy,rhs,satisfied\n";
        for (const auto& row : rows) {
            out << fmt12(row.value) << ',' << fmt12(row.report.dinf_jx) << ','
                << fmt12(row.report.dinf_jy) << ',' << fmt12(row.report.rhs) << ','
                << (row.report.satisfied ? 1 : 0) << "\n";
        }
        return;
    }

    const auto rows = run_cv_sweep(opt.spec);
    if (output == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            arr.push_back({{name, row.value}, {"report", to_json(row.report)}});
        }
        emit_json(out, arr);
        return;
    }
    out << name
        << ",epsilon_sq,duan_D,sum_criterion,ppt_min_symplectic,"
           "epr_paradox,entangled_duan,epr_via_duan,entangled_ppt\n";
    for (const auto& row : rows) {
        const auto& rep = row.report;
        out << fmt12(row.value) << ',' << fmt12(rep.epsilon_sq) << ',' << fmt12(rep.duan_D) << ','
            << fmt12(rep.sum_criterion) << ',' << fmt12(rep.ppt_min_symplectic) << ','
            << (rep.flags.epr_paradox ? 1 : 0) << ',' << (rep.flags.entangled_duan ? 1 : 0) << ','
            << (rep.flags.epr_via_duan ? 1 : 0) << ',' << (rep.flags.entangled_ppt ? 1 : 0)
            << "\n";
    }
}

int run_catalog_command(bool check, const std::string& output, std::ostream& out) {
    const auto& records = experiment_catalog();
    bool all_consistent = true;
    if (output == "json") {
        json arr = json::array();
        for (const auto& rec : records) {
            json j = to_json(rec);
            if (check) {
                const auto verdict = check_record(rec);
                all_consistent = all_consistent && verdict.consistent;
                j["verdict"] = to_json(verdict);
            }
            arr.push_back(std::move(j));
        }
        emit_json(out, arr);
    } else {
        out << "id,year,epsilon_sq,epsilon_sq_inferred,duan_D,dinf_x_sq";
        if (check) out << ",epr,entangled,epr_inferable,consistent";
        out << ",notes\n";
        for (const auto& rec : records) {
            out << rec.id << ',' << rec.year << ','
                << (rec.epsilon_sq ? fmt12(*rec.epsilon_sq) : "") << ','
                << (rec.epsilon_sq_inferred ? 1 : 0) << ','
                << (rec.duan_D ? fmt12(*rec.duan_D) : "") << ','
                << (rec.dinf_x_sq ? fmt12(*rec.dinf_x_sq) : "");
            if (check) {
                const auto verdict = check_record(rec);
                all_consistent = all_consistent && verdict.consistent;
                out << ',' << (verdict.epr ? 1 : 0) << ',' << (verdict.entangled ? 1 : 0) << ','
                    << (verdict.epr_inferable ? 1 : 0) << ',' << (verdict.consistent ? 1 : 0);
            }
            out << ',' << csv_quote(rec.notes) << "\n";
        }
    }
    return (check && !all_consistent) ? 1 : 0;
}

void run_qkd_command(double r, std::optional<double> eta_b, const std::vector<double>& sweep,
                     const std::string& output, std::ostream& out) {
    if (!sweep.empty()) {
        if (sweep.size() != 3) throw std::invalid_argument("--sweep wants lo hi steps");
        const int steps = static_cast<int>(sweep[2]);
        if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
        if (!(sweep[0] > 0.0) || !(sweep[1] <= 1.0) || !(sweep[0] < sweep[1])) {
            throw std::invalid_argument("eta_B sweep range must satisfy 0 < lo < hi <= 1");
        }
        json arr = json::array();
        const bool as_json = output == "json";
        if (!as_json) {
            out << "eta_b,delta_I_direct,delta_I_reverse,V_A_given_B,V_B_given_A,"
                   "V_A_given_E,V_B_given_E,key_possible_direct,key_possible_reverse\n";
        }
        for (int i = 0; i < steps; ++i) {
            const double eta = sweep[0] + i * (sweep[1] - sweep[0]) / (steps - 1);
            const QkdResult res = qkd_rates(r, eta);
            if (as_json) {
                json j = to_json(res);
                j["eta_b"] = eta;
                arr.push_back(std::move(j));
            } else {
                out << fmt12(eta) << ',' << fmt12(res.delta_I_direct) << ','
                    << fmt12(res.delta_I_reverse) << ',' << fmt12(res.V_A_given_B) << ','
                    << fmt12(res.V_B_given_A) << ',' << fmt12(res.V_A_given_E) << ','
                    << fmt12(res.V_B_given_E) << ',' << (res.key_possible_direct ? 1 : 0) << ','
                    << (res.key_possible_reverse ? 1 : 0) << "\n";
            }
        }
        if (as_json) emit_json(out, arr);
        return;
    }
    if (!eta_b) throw std::invalid_argument("qkd needs --eta-b or --sweep");
    emit_json(out, to_json(qkd_rates(r, *eta_b)));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"EPR correlation toolkit: Gaussian states, criteria, and protocols"};
    app.require_subcommand(1);
    app.set_config("--config", "", "plain-text key=value configuration file");

    std::string output = "csv";
    std::uint64_t seed = 0;
    app.add_option("--output", output, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "random seed for sampling commands");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "criteria across a parameter grid (CSV/JSON)");
    SweepOptions sweep_opt;
    sweep_cmd->add_option("--preset", sweep_opt.preset, "figure preset")
        ->check(CLI::IsMember({"loss-equal", "loss-etaB", "loss-etaA"}));
    sweep_cmd->add_option("--variable", sweep_opt.variable, "swept parameter")
        ->check(CLI::IsMember({"r", "eta_a", "eta_b", "eta_both", "gain", "p_w"}));
    sweep_cmd->add_option("--criterion", sweep_opt.criterion, "criterion family")
        ->check(CLI::IsMember({"cv", "bohm"}));
    sweep_cmd->add_option("--lo", sweep_opt.spec.lo, "grid start");
    sweep_cmd->add_option("--hi", sweep_opt.spec.hi, "grid end");
    sweep_cmd->add_option("--steps", sweep_opt.spec.steps, "grid points (>= 2)");
    sweep_cmd->add_option("--r", sweep_opt.spec.r, "fixed squeezing");
    sweep_cmd->add_option("--eta-a", sweep_opt.spec.eta_a, "fixed efficiency at A");
    sweep_cmd->add_option("--eta-b", sweep_opt.spec.eta_b, "fixed efficiency at B");

    // montecarlo
    auto* mc_cmd = app.add_subcommand("montecarlo", "sampled criteria with jackknife error bars");
    double mc_r = 1.0, mc_eta_a = 1.0, mc_eta_b = 1.0;
    std::int64_t mc_samples = 0;
    mc_cmd->add_option("--r", mc_r, "squeezing parameter");
    mc_cmd->add_option("--eta-a", mc_eta_a, "efficiency at A");
    mc_cmd->add_option("--eta-b", mc_eta_b, "efficiency at B");
    mc_cmd->add_option("--samples", mc_samples, "samples per run (>= 10000)")->required();

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "embedded experiment records");
    bool cat_check = false;
    cat_cmd->add_flag("--check", cat_check, "validate epsilon <= 2D consistency and flag verdicts");

    // qkd
    auto* qkd_cmd = app.add_subcommand("qkd", "entanglement-based QKD information rates");
    double qkd_r = 1.0;
    std::optional<double> qkd_eta_b;
    std::vector<double> qkd_sweep;
    qkd_cmd->add_option("--r", qkd_r, "squeezing parameter");
    qkd_cmd->add_option("--eta-b", qkd_eta_b, "channel transmission to Bob");
    qkd_cmd->add_option("--sweep", qkd_sweep, "eta_B sweep: lo hi steps")->expected(3);

    // teleport
    auto* tp_cmd = app.add_subcommand("teleport", "coherent-state teleportation figures of merit");
    double tp_r = 0.0, tp_gain = 1.0, tp_mx = 0.0, tp_mp = 0.0, tp_sq = 0.0;
    double tp_eta_a = 1.0, tp_eta_b = 1.0;
    tp_cmd->add_option("--r", tp_r, "resource squeezing");
    tp_cmd->add_option("--gain", tp_gain, "feedforward gain");
    tp_cmd->add_option("--mean-x", tp_mx, "input displacement, x");
    tp_cmd->add_option("--mean-p", tp_mp, "input displacement, p");
    tp_cmd->add_option("--input-squeeze", tp_sq, "input squeeze parameter (0 = coherent)");
    tp_cmd->add_option("--eta-alice", tp_eta_a, "loss on Alice's resource half");
    tp_cmd->add_option("--eta-bob", tp_eta_b, "loss on Bob's resource half");

    // swap
    auto* swap_cmd = app.add_subcommand("swap", "entanglement swapping criteria");
    double swap_r1 = 1.0, swap_r2 = 1.0, swap_gain = 1.0;
    swap_cmd->add_option("--r1", swap_r1, "squeezing of the verified pair");
    swap_cmd->add_option("--r2", swap_r2, "squeezing of the channel pair");
    swap_cmd->add_option("--gain", swap_gain, "teleporter gain");

    // werner
    auto* werner_cmd = app.add_subcommand("werner", "Bohm spin criterion for Werner states");
    std::optional<double> werner_pw;
    bool werner_threshold = false;
    std::string werner_criterion = "bohm";
    double werner_resolution = 1e-4;
    werner_cmd->add_option("--p-w", werner_pw, "evaluate at this Werner weight");
    werner_cmd->add_flag("--threshold", werner_threshold, "report the activation threshold");
    werner_cmd->add_option("--criterion", werner_criterion, "threshold criterion")
        ->check(CLI::IsMember({"bohm", "steering_quote", "bell_quote"}));
    werner_cmd->add_option("--resolution", werner_resolution, "bisection resolution (0, 0.01]");

    // causality
    auto* caus_cmd = app.add_subcommand("causality", "causal-separation check");
    double caus_l = 0.0, caus_ta = 0.0, caus_tb = 0.0, caus_dt = 0.0, caus_c = 299792458.0;
    caus_cmd->add_option("--distance", caus_l, "separation L in meters")->required();
    caus_cmd->add_option("--t-a", caus_ta, "time of flight to A, seconds")->required();
    caus_cmd->add_option("--t-b", caus_tb, "time of flight to B, seconds")->required();
    caus_cmd->add_option("--dt", caus_dt, "measurement duration, seconds")->required();
    caus_cmd->add_option("--c", caus_c, "signal speed, m/s");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(sweep_cmd)) {
            run_sweep_command(sweep_opt, output, out);
        } else if (app.got_subcommand(mc_cmd)) {
            if (mc_samples < 10000) {
                throw std::invalid_argument("montecarlo needs --samples >= 10000");
            }
            const MonteCarloResult res = run_montecarlo(mc_r, mc_eta_a, mc_eta_b, mc_samples, seed);
            json j;
            j["state"] = {{"r", res.r}, {"eta_a", res.eta_a}, {"eta_b", res.eta_b}};
            j["n_samples"] = res.n_samples;
            j["seed"] = res.seed;
            j["analytic"] = to_json(res.analytic);
            j["empirical"] = to_json(res.empirical);
            emit_json(out, j);
        } else if (app.got_subcommand(cat_cmd)) {
            return run_catalog_command(cat_check, output, out);
        } else if (app.got_subcommand(qkd_cmd)) {
            run_qkd_command(qkd_r, qkd_eta_b, qkd_sweep, output, out);
        } else if (app.got_subcommand(tp_cmd)) {
            Eigen::Matrix2d cov = Eigen::Matrix2d::Identity();
            cov(0, 0) = std::exp(2.0 * tp_sq);
            cov(1, 1) = std::exp(-2.0 * tp_sq);
            const auto [state, result] =
                teleport({tp_mx, tp_mp}, cov, tp_r, tp_gain, {tp_eta_a, tp_eta_b});
            json j;
            j["result"] = to_json(result);
            j["output_state"] = to_json(state);
            emit_json(out, j);
        } else if (app.got_subcommand(swap_cmd)) {
            emit_json(out, to_json(entanglement_swap(swap_r1, swap_r2, swap_gain)));
        } else if (app.got_subcommand(werner_cmd)) {
            if (werner_pw.has_value() == werner_threshold) {
                throw std::invalid_argument("werner wants exactly one of --p-w or --threshold");
            }
            if (werner_pw) {
                json j;
                j["p_w"] = *werner_pw;
                j["report"] = to_json(bohm_criterion(werner_state(*werner_pw)));
                emit_json(out, j);
            } else {
                WernerCriterion crit = WernerCriterion::bohm;
                if (werner_criterion == "steering_quote") crit = WernerCriterion::steering_quote;
                if (werner_criterion == "bell_quote") crit = WernerCriterion::bell_quote;
                json j;
                j["criterion"] = werner_criterion;
                j["threshold"] = werner_threshold_sweep(crit, werner_resolution);
                j["resolution"] = werner_resolution;
                j["source"] = (crit == WernerCriterion::bohm) ? "bisection" : "literature";
                emit_json(out, j);
            }
        } else if (app.got_subcommand(caus_cmd)) {
            json j;
            j["causally_separated"] = causally_separated(caus_l, caus_ta, caus_tb, caus_dt, caus_c);
            j["distance"] = caus_l;
            j["t_a"] = caus_ta;
            j["t_b"] = caus_tb;
            j["dt"] = caus_dt;
            j["c"] = caus_c;
            emit_json(out, j);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace eprsim::cli
