#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eprsim/catalog.hpp"
#include "eprsim/cli.hpp"
#include "eprsim/sweep.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = eprsim::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (char c : line) {
            if (c == '"') {
                quoted = !quoted;
            } else if (c == ',' && !quoted) {
                fields.push_back(field);
                field.clear();
            } else {
                field += c;
            }
        }
        fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_CASE("sweep presets reproduce the efficiency curves") {
    SUBCASE("symmetric loss crosses epsilon = 1 exactly at eta = 0.5") {
        const auto res = run_cli({"sweep", "--preset", "loss-equal"});
        REQUIRE(res.code == 0);
        const auto rows = parse_csv(res.out);
        REQUIRE(rows.size() > 2);
        CHECK(rows[0][0] == "eta_both");

        bool found_half = false;
        double below = 0.0, above = 0.0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double eta = std::stod(rows[i][0]);
            const double eps = std::sqrt(std::stod(rows[i][1]));
            if (eta == 0.5) {
                found_half = true;
                CHECK(std::abs(eps - 1.0) < 1e-12);
            }
            if (eta == 0.45) below = eps;
            if (eta == 0.55) above = eps;
            // Plain entanglement is robust: D stays below 1 for any eta > 0,
            // even deep in the region where the paradox is gone.
            if (eta > 0.0) CHECK(std::stod(rows[i][2]) < 1.0);
        }
        CHECK(found_half);
        CHECK(below > 1.0);
        CHECK(above < 1.0);
    }

    SUBCASE("with a perfect steering side, any eta_A > 0 gives a paradox") {
        const auto res = run_cli({"sweep", "--preset", "loss-etaA"});
        REQUIRE(res.code == 0);
        const auto rows = parse_csv(res.out);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double eta_a = std::stod(rows[i][0]);
            const double eps_sq = std::stod(rows[i][1]);
            if (eta_a > 0.0) {
                CHECK(eps_sq < 1.0);
            } else {
                CHECK(eps_sq == 1.0);
            }
        }
    }

    SUBCASE("lossless inference side: the paradox lives and dies with eta_B") {
        const auto res = run_cli({"sweep", "--preset", "loss-etaB"});
        REQUIRE(res.code == 0);
        const auto rows = parse_csv(res.out);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double eta_b = std::stod(rows[i][0]);
            const double eps_sq = std::stod(rows[i][1]);
            if (eta_b > 0.5 + 1e-12) CHECK(eps_sq < 1.0);
            if (eta_b < 0.5 - 1e-12) CHECK(eps_sq >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("gain sweep dips at the regression optimum") {
    const auto res = run_cli({"sweep", "--variable", "gain", "--lo", "0.5", "--hi", "1.5",
                              "--steps", "101", "--r", "1"});
    REQUIRE(res.code == 0);
    const auto rows = parse_csv(res.out);
    double best_gain = 0.0, best_eps = 1e9;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double eps_sq = std::stod(rows[i][1]);
        if (eps_sq < best_eps) {
            best_eps = eps_sq;
            best_gain = std::stod(rows[i][0]);
        }
        // duan_D is defined at unit gains and must not follow the swept gain.
        CHECK(std::stod(rows[i][2]) == doctest::Approx(0.13533528323661269).epsilon(1e-10));
    }
    CHECK(std::abs(best_gain - std::tanh(2.0)) < 0.011);
    CHECK(best_eps >= 1.0 / (std::cosh(2.0) * std::cosh(2.0)) - 1e-12);
}

TEST_CASE("sweep JSON output") {
    const auto res = run_cli({"--output", "json", "sweep", "--variable", "r", "--lo", "0", "--hi",
                              "1", "--steps", "3"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0].at("r") == 0.0);
    CHECK(j[2].at("report").at("epsilon_sq").get<double>() ==
          doctest::Approx(0.070650824853164466).epsilon(1e-12));
}

TEST_CASE("sweep over r matches the closed form") {
    const auto res = run_cli({"sweep", "--variable", "r", "--lo", "0", "--hi", "3", "--steps",
                              "31", "--eta-a", "1", "--eta-b", "1"});
    REQUIRE(res.code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 32);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double r = std::stod(rows[i][0]);
        const double eps_sq = std::stod(rows[i][1]);
        const double expected = 1.0 / (std::cosh(2 * r) * std::cosh(2 * r));
        CHECK(std::abs(eps_sq - expected) < 1e-12);
    }
}

TEST_CASE("sweep output hygiene") {
    const auto res = run_cli({"sweep", "--variable", "r", "--lo", "0.25", "--hi", "1", "--steps",
                              "4"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("\r") == std::string::npos);
    CHECK(res.out.substr(0, 2) == "r,");
    // Deterministic byte-for-byte.
    const auto again = run_cli({"sweep", "--variable", "r", "--lo", "0.25", "--hi", "1", "--steps",
                                "4"});
    CHECK(res.out == again.out);

    // All numeric fields parse back with '.' decimals.
    const auto rows = parse_csv(res.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        for (const auto& f : rows[i]) CHECK_NOTHROW((void)std::stod(f));
    }
}

TEST_CASE("sweep usage errors") {
    CHECK(run_cli({"sweep", "--criterion", "nonsense"}).code == 2);
    CHECK(run_cli({"sweep", "--variable", "bogus"}).code == 2);
    CHECK(run_cli({"sweep", "--variable", "r", "--criterion", "bohm"}).code == 2);
    CHECK(run_cli({"sweep", "--variable", "p_w", "--criterion", "cv", "--lo", "0", "--hi", "1",
                   "--steps", "5"}).code == 2);
    CHECK(run_cli({"sweep", "--variable", "r", "--lo", "2", "--hi", "1"}).code == 2);
    CHECK(run_cli({"nonexistent-command"}).code == 2);
}

TEST_CASE("werner sweep through the CLI") {
    const auto res = run_cli({"sweep", "--variable", "p_w", "--criterion", "bohm", "--lo", "0",
                              "--hi", "1", "--steps", "11"});
    REQUIRE(res.code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0][0] == "p_w");
    // Satisfied exactly above the golden threshold.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double p = std::stod(rows[i][0]);
        const int sat = std::stoi(rows[i][4]);
        CHECK(sat == (p > 0.62 ? 1 : 0));
    }
}

TEST_CASE("montecarlo command") {
    const std::vector<std::string> args = {"--seed", "42", "montecarlo", "--r", "1",
                                           "--samples", "10000"};
    const auto res = run_cli(args);
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("n_samples") == 10000);
    const double analytic = j.at("analytic").at("epsilon_sq").get<double>();
    const double empirical = j.at("empirical").at("epsilon_sq").get<double>();
    const double se = j.at("empirical").at("stderr").at("epsilon_sq").get<double>();
    CHECK(std::abs(empirical - analytic) < 4.0 * se);

    SUBCASE("byte-identical on rerun") {
        const auto again = run_cli(args);
        CHECK(res.out == again.out);
    }

    SUBCASE("different seed, different stream") {
        const auto other = run_cli({"--seed", "43", "montecarlo", "--r", "1", "--samples",
                                    "10000"});
        CHECK(other.out != res.out);
    }

    SUBCASE("sample floor is enforced") {
        const auto bad = run_cli({"montecarlo", "--r", "1", "--samples", "500"});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("10000") != std::string::npos);
    }
}

TEST_CASE("catalog command") {
    SUBCASE("CSV table with header") {
        const auto res = run_cli({"catalog"});
        REQUIRE(res.code == 0);
        CHECK(res.out.rfind("id,year,", 0) == 0);
        CHECK(res.out.find("ou1992") != std::string::npos);
        CHECK(res.out.find("bowen2003") != std::string::npos);
    }

    SUBCASE("check verdicts") {
        const auto res = run_cli({"--output", "json", "catalog", "--check"});
        REQUIRE(res.code == 0);
        const json j = json::parse(res.out);
        bool saw_silberhorn = false, saw_wenger = false, saw_julsgaard = false;
        for (const auto& rec : j) {
            const auto& verdict = rec.at("verdict");
            CHECK(verdict.at("consistent").get<bool>());
            if (rec.at("id") == "silberhorn2001") {
                saw_silberhorn = true;
                CHECK(verdict.at("epr_inferable").get<bool>());
                CHECK(verdict.at("epr").get<bool>());
            }
            if (rec.at("id") == "wenger2005_uncorrected") {
                saw_wenger = true;
                CHECK_FALSE(verdict.at("epr").get<bool>());
                CHECK(verdict.at("entangled").get<bool>());
            }
            if (rec.at("id") == "julsgaard2001") {
                saw_julsgaard = true;
                CHECK(verdict.at("entangled").get<bool>());
                CHECK_FALSE(verdict.at("epr").get<bool>());
                CHECK_FALSE(verdict.at("epr_inferable").get<bool>());
            }
        }
        CHECK(saw_silberhorn);
        CHECK(saw_wenger);
        CHECK(saw_julsgaard);
    }

    SUBCASE("every record carries at least one number") {
        for (const auto& rec : eprsim::experiment_catalog()) {
            CHECK((rec.epsilon_sq || rec.duan_D || rec.dinf_x_sq));
        }
    }
}

TEST_CASE("qkd command") {
    SUBCASE("single point") {
        const auto res = run_cli({"qkd", "--r", "1", "--eta-b", "0.8"});
        REQUIRE(res.code == 0);
        const json j = json::parse(res.out);
        CHECK(j.at("key_possible_direct").get<bool>());
        CHECK(j.at("key_possible_reverse").get<bool>());
    }

    SUBCASE("sweep finds the 3 dB boundary") {
        const auto res = run_cli({"qkd", "--r", "5", "--sweep", "0.3", "0.7", "41"});
        REQUIRE(res.code == 0);
        const auto rows = parse_csv(res.out);
        REQUIRE(rows.size() == 42);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double eta = std::stod(rows[i][0]);
            const double di = std::stod(rows[i][1]);
            if (eta < 0.5 - 1e-9) CHECK(di < 0.0);
            if (eta > 0.5 + 1e-9) CHECK(di > 0.0);
        }
    }

    CHECK(run_cli({"qkd", "--r", "1"}).code == 2);
    CHECK(run_cli({"qkd", "--r", "1", "--eta-b", "0"}).code == 2);
}

TEST_CASE("teleport command") {
    const auto res = run_cli({"teleport", "--r", "0", "--gain", "1"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(std::abs(j.at("result").at("fidelity").get<double>() - 0.5) < 1e-6);
    CHECK(j.at("output_state").at("n_modes") == 1);
}

TEST_CASE("swap command") {
    const auto res = run_cli({"swap", "--r1", "1", "--r2", "1", "--gain", "1"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("duan_D").get<double>() == doctest::Approx(0.27067056647322538).epsilon(1e-12));
    CHECK(j.at("flags").at("entangled_duan").get<bool>());
}

TEST_CASE("werner command") {
    SUBCASE("threshold by bisection") {
        const auto res = run_cli({"werner", "--threshold", "--resolution", "1e-4"});
        REQUIRE(res.code == 0);
        const json j = json::parse(res.out);
        CHECK(std::abs(j.at("threshold").get<double>() - 0.61803398874989485) <= 1e-4);
        CHECK(j.at("source") == "bisection");
    }

    SUBCASE("quoted literature constants") {
        const auto steer = run_cli({"werner", "--threshold", "--criterion", "steering_quote"});
        CHECK(json::parse(steer.out).at("threshold") == 0.5);
        CHECK(json::parse(steer.out).at("source") == "literature");
        const auto bell = run_cli({"werner", "--threshold", "--criterion", "bell_quote"});
        CHECK(json::parse(bell.out).at("threshold") == 0.66);
    }

    SUBCASE("point evaluation") {
        const auto res = run_cli({"werner", "--p-w", "0.8"});
        REQUIRE(res.code == 0);
        CHECK(json::parse(res.out).at("report").at("satisfied").get<bool>());
    }

    CHECK(run_cli({"werner"}).code == 2);
    CHECK(run_cli({"werner", "--p-w", "0.5", "--threshold"}).code == 2);
    CHECK(run_cli({"werner", "--threshold", "--resolution", "0.5"}).code == 2);
}

TEST_CASE("causality command") {
    const auto yes = run_cli({"causality", "--distance", "10", "--t-a", "0", "--t-b", "0", "--dt",
                              "1", "--c", "1"});
    REQUIRE(yes.code == 0);
    CHECK(json::parse(yes.out).at("causally_separated").get<bool>());

    const auto boundary = run_cli({"causality", "--distance", "1", "--t-a", "0", "--t-b", "0",
                                   "--dt", "1", "--c", "1"});
    CHECK_FALSE(json::parse(boundary.out).at("causally_separated").get<bool>());

    CHECK(run_cli({"causality", "--distance", "1"}).code == 2);
}

TEST_CASE("config file precedence") {
    const std::string path = "test_harness_config.ini";
    {
        std::ofstream cfg(path);
        cfg << "output=json\n";
    }
    const auto from_config = run_cli({"--config", path, "catalog"});
    REQUIRE(from_config.code == 0);
    const json parsed = json::parse(from_config.out); // config switched the format
    CHECK(parsed.is_array());

    const auto overridden = run_cli({"--config", path, "--output", "csv", "catalog"});
    REQUIRE(overridden.code == 0);
    CHECK(overridden.out.rfind("id,year,", 0) == 0); // flag beats config

    const auto missing = run_cli({"--config", "no_such_file.ini", "catalog"});
    CHECK(missing.code == 2);
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
    const auto res = run_cli({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("sweep") != std::string::npos);
}
