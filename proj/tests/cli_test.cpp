// Copyright 2026 The Cohere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohere/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace cohere;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cohere");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream fields(line);
        std::string f;
        while (std::getline(fields, f, ',')) row.push_back(std::stod(f));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(cli, state_spec_parsing) {
    const auto eps = cli::parse_state_spec("epsilon:5,0.2,3");
    EXPECT_EQ(eps.kind, cli::StateKind::Epsilon);
    EXPECT_EQ(eps.d, 5u);
    EXPECT_EQ(eps.epsilon, 0.2);
    EXPECT_EQ(eps.basis_index, 3u);

    const auto bloch = cli::parse_state_spec("bloch:0.1,-0.2,0.3");
    EXPECT_EQ(bloch.kind, cli::StateKind::Bloch);
    EXPECT_EQ(bloch.bloch->r2, -0.2);

    const auto random = cli::parse_state_spec("random:4,2,99");
    EXPECT_EQ(random.kind, cli::StateKind::Random);
    EXPECT_EQ(random.rank, 2u);
    EXPECT_EQ(random.seed, 99u);

    EXPECT_EQ(cli::parse_state_spec("maximally-mixed:7").d, 7u);

    for (const char* bad : {"", "epsilon", "epsilon:3", "bloch:1,2", "unknown:3", "maximally-mixed:x", "random:3,1,2,4"})
        EXPECT_THROW(cli::parse_state_spec(bad), cli::UsageError) << bad;
}

TEST(cli, epsilon_basis_index_selects_mub_vector) {
    const auto rho = cli::make_state(cli::parse_state_spec("epsilon:3,0,1"), 42);
    const MubSet m = build_complete_mub(3);
    EXPECT_LE(max_abs_diff(rho.matrix(), ComplexMatrix::outer(m[1].state(0))), 1e-14);
}

TEST(cli, log_base_parsing) {
    EXPECT_EQ(cli::parse_log_base("2"), 2.0);
    EXPECT_EQ(cli::parse_log_base("e"), std::exp(1.0));
    EXPECT_EQ(cli::parse_log_base("10"), 10.0);
    EXPECT_THROW(cli::parse_log_base("3"), cli::UsageError);
}

TEST(cli, coherence_of_z_up_in_x_basis) {
    const auto r = run_cli({"coherence", "--state", "bloch:0,0,1", "--basis", "mub:1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["c1"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["c2"].get<double>(), 0.70710678118654752, 1e-12);
    EXPECT_NEAR(j["c_rel"].get<double>(), 1.0, 1e-12);
}

TEST(cli, coherence_of_maximally_mixed_in_random_basis) {
    const auto r = run_cli({"coherence", "--state", "maximally-mixed:5", "--basis", "random", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    for (const char* key : {"c1", "c2", "c_rel"}) EXPECT_NEAR(j[key].get<double>(), 0.0, 1e-12) << key;
}

TEST(cli, coherence_of_epsilon_state_saturates_purity_difference_bound) {
    const auto r = run_cli({"coherence", "--state", "epsilon:3,0.3", "--basis", "mub:2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const double bound = std::sqrt(6.0 * (j["purity"].get<double>() - j["classical_purity"].get<double>()));
    EXPECT_NEAR(j["c1"].get<double>(), bound, 1e-10);
    EXPECT_EQ(j["dim"].get<int>(), 3);
    EXPECT_EQ(j["basis"].get<std::string>(), "mub:2");
}

TEST(cli, bounds_report_covers_applicable_relations) {
    const auto r = run_cli({"bounds", "--state", "bloch:1,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto reports = json::parse(r.out).get<std::vector<RelationReport>>();
    bool saw_sum_rule = false;
    for (const auto& rep : reports) {
        EXPECT_TRUE(rep.satisfied) << relation_name(rep.id);
        EXPECT_NE(rep.id, RelationId::CERTAINTY_SRD);
        if (rep.id == RelationId::QUBIT_SUM_RULE) {
            saw_sum_rule = true;
            EXPECT_NEAR(rep.lhs, 2.0, 1e-12);
        }
    }
    EXPECT_TRUE(saw_sum_rule);
}

TEST(cli, bounds_for_composite_dimension_skip_mub_relations) {
    const auto r = run_cli({"bounds", "--state", "random:4", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& rep : json::parse(r.out).get<std::vector<RelationReport>>())
        EXPECT_NE(relation_info(rep.id).context, RelationContext::MubSet) << relation_name(rep.id);
}

TEST(cli, average_of_pure_qubit) {
    const auto r = run_cli({"average", "--state", "epsilon:2,0", "--measure", "relent", "--n", "100000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto report = json::parse(r.out).get<AverageReport>();
    EXPECT_NEAR(report.relent_closed_form, 0.72134752044448170, 1e-12);
    ASSERT_TRUE(report.z_mean.has_value());
    EXPECT_LE(std::abs(*report.z_mean), 4.0);
    EXPECT_EQ(report.mean.n_samples, 100000u);
    EXPECT_EQ(report.mean.master_seed, 42u);
}

TEST(cli, average_is_reproducible) {
    const std::vector<std::string> args{"average", "--state", "random:3", "--measure", "l2", "--n", "3000", "--seed", "5"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(cli, fig1_qubit_endpoints) {
    const auto r = run_cli({"fig1", "--d", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    EXPECT_EQ(header, "epsilon,Q_exact,bound_qupper,bound_ht,bound_jrw,bound_ddj");
    ASSERT_EQ(rows.size(), 101u);
    EXPECT_EQ(rows.front()[0], 0.0);
    EXPECT_EQ(rows.front()[1], 0.0);
    EXPECT_EQ(rows.front()[5], 0.0);
    EXPECT_EQ(rows.back()[0], 0.5);
    for (int c = 1; c <= 4; ++c) EXPECT_NEAR(rows.back()[c], 0.278652479556, 1e-11);
    for (const auto& row : rows) EXPECT_NEAR(row[2], row[3], 1e-9);
}

TEST(cli, fig1_rows_are_sound_and_ordered) {
    for (const char* d : {"2", "11"}) {
        const auto rows = parse_csv(run_cli({"fig1", "--d", d}).out);
        for (const auto& row : rows) {
            ASSERT_EQ(row.size(), 6u);
            for (int c = 2; c <= 5; ++c) EXPECT_GE(row[c], row[1] - 1e-9) << d;
            EXPECT_LE(row[2], row[4] + 1e-9) << d;
        }
    }
}

TEST(cli, fig1_csv_is_byte_identical_across_runs) {
    EXPECT_EQ(run_cli({"fig1", "--d", "11", "--points", "37"}).out, run_cli({"fig1", "--d", "11", "--points", "37"}).out);
    const auto r = run_cli({"fig1", "--d", "3", "--points", "2"});
    EXPECT_EQ(r.out.find("\r"), std::string::npos);
    EXPECT_EQ(r.out.find(",\n"), std::string::npos);
    EXPECT_EQ(parse_csv(r.out).size(), 2u);
}

TEST(cli, fig1_writes_to_file) {
    const auto path = std::filesystem::temp_directory_path() / "cohere_fig1_test.csv";
    ASSERT_EQ(run_cli({"fig1", "--d", "2", "--points", "5", "--out", path.string()}).code, 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), run_cli({"fig1", "--d", "2", "--points", "5"}).out);
    std::filesystem::remove(path);
}

TEST(cli, fig1_log_base_scales_columns) {
    const auto bits = parse_csv(run_cli({"fig1", "--d", "5", "--points", "4"}).out);
    const auto nats = parse_csv(run_cli({"fig1", "--d", "5", "--points", "4", "--log-base", "e"}).out);
    for (std::size_t i = 0; i < bits.size(); ++i)
        for (int c = 1; c <= 5; ++c) EXPECT_NEAR(bits[i][c] * std::log(2.0), nats[i][c], 1e-10);
}

TEST(cli, csv_number_format) {
    EXPECT_EQ(cli::format_csv_number(-0.0), "0");
    EXPECT_EQ(cli::format_csv_number(0.5), "0.5");
    EXPECT_EQ(cli::format_csv_number(1.0 / 3.0), "0.333333333333");
}

TEST(cli, verify_qubit_scope_passes) {
    const auto r = run_cli({"verify", "--scope", "qubit"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("SUMMARY passed="), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, verify_mub_scope_for_d7) {
    const auto r = run_cli({"verify", "--scope", "mub", "--d", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS mub/TOMOGRAPHY d=7"), std::string::npos) << r.out;
}

TEST(cli, verify_composite_dimension_reports_skip) {
    const auto r = run_cli({"verify", "--d", "6", "--n", "2000"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("SKIP mub/"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, verify_output_is_deterministic) {
    const std::vector<std::string> args{"verify", "--scope", "all", "--d", "3", "--n", "2000", "--seed", "11"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(cli, exit_codes_for_bad_input) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"nonsense"}).code, 2);
    EXPECT_EQ(run_cli({"fig1", "--d", "4"}).code, 2);
    EXPECT_EQ(run_cli({"fig1", "--d", "3", "--points", "1"}).code, 2);
    EXPECT_EQ(run_cli({"coherence", "--state", "epsilon:3,2"}).code, 2);
    EXPECT_EQ(run_cli({"coherence", "--state", "bloch:1,1,1"}).code, 2);
    EXPECT_EQ(run_cli({"coherence", "--state", "epsilon:3,0.1", "--basis", "mub:9"}).code, 2);
    EXPECT_EQ(run_cli({"average", "--state", "epsilon:3,0.1", "--measure", "l7"}).code, 2);
    EXPECT_EQ(run_cli({"average", "--state", "epsilon:3,0.1", "--n", "10"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--scope", "everything"}).code, 2);
    EXPECT_EQ(run_cli({"coherence", "--state", "epsilon:3,0.1", "--log-base", "1"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

// JSON round trips

TEST(cli, json_round_trip_coherence_report) {
    StateCoherenceReport r = cli::coherence_command(from_bloch({0.3, -0.2, 0.5}), computational_basis(2), "computational", 2.0);
    const auto back = json::parse(json(r).dump()).get<StateCoherenceReport>();
    EXPECT_EQ(back, r);
    EXPECT_EQ(json::parse(json(r.coherence).dump()).get<CoherenceReport>(), r.coherence);
}

TEST(cli, json_round_trip_relation_reports) {
    const auto reports = cli::bounds_command(epsilon_state(3, 0.4, ComplexVector{1.0, 0.0, 0.0}), computational_basis(3), 2.0);
    ASSERT_FALSE(reports.empty());
    EXPECT_EQ(json::parse(json(reports).dump()).get<std::vector<RelationReport>>(), reports);
}

TEST(cli, json_round_trip_estimates) {
    const EstimateResult e{0.125, 3.5e-4, 20000, 42};
    EXPECT_EQ(json::parse(json(e).dump()).get<EstimateResult>(), e);
    const AverageReport a = cli::average_command(maximally_mixed(3), Measure::L1, 500, 9, 10.0);
    EXPECT_FALSE(a.z_mean.has_value());
    EXPECT_EQ(json::parse(json(a).dump()).get<AverageReport>(), a);
    const AverageReport b = cli::average_command(epsilon_state(2, 0.1, ComplexVector{1.0, 0.0}), Measure::L2, 500, 9, 2.0);
    EXPECT_TRUE(b.z_rms.has_value());
    EXPECT_EQ(json::parse(json(b).dump()).get<AverageReport>(), b);
}
