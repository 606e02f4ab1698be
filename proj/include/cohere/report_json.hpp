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

// JSON (de)serialization of the report types. Keys are snake_case and every
// report is a flat object, except the average report which nests its two
// estimates.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cohere/bounds.hpp"
#include "cohere/haar_average.hpp"
#include "cohere/measures.hpp"

namespace cohere {

/// Everything `coherence` prints: the basis-relative report plus the
/// basis-free characteristics of the state.
struct StateCoherenceReport {
    std::size_t dim = 0;
    std::string basis;
    CoherenceReport coherence;
    double purity = 0.0;
    double von_neumann_entropy = 0.0;
    double subentropy = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;

    bool operator==(const StateCoherenceReport&) const = default;
};

/// Everything `average` prints.
struct AverageReport {
    Measure measure = Measure::L1;
    std::size_t dim = 0;
    double log_base = 2.0;
    EstimateResult mean;
    EstimateResult rms;
    double r1_bound = 0.0;            // R1 / sqrt(d + 1)
    double r2_target = 0.0;           // R2 / sqrt(d + 1)
    double relent_closed_form = 0.0;  // C_d - [S - Q]
    std::optional<double> z_mean;
    std::optional<double> z_rms;

    bool operator==(const AverageReport&) const = default;
};

inline void to_json(nlohmann::json& j, const CoherenceReport& r) {
    j = nlohmann::json{{"c1", r.c1},
                       {"c2", r.c2},
                       {"c_rel", r.c_rel},
                       {"classical_purity", r.classical_purity},
                       {"basis_entropy", r.basis_entropy},
                       {"log_base", r.log_base}};
}

inline void from_json(const nlohmann::json& j, CoherenceReport& r) {
    j.at("c1").get_to(r.c1);
    j.at("c2").get_to(r.c2);
    j.at("c_rel").get_to(r.c_rel);
    j.at("classical_purity").get_to(r.classical_purity);
    j.at("basis_entropy").get_to(r.basis_entropy);
    j.at("log_base").get_to(r.log_base);
}

inline void to_json(nlohmann::json& j, const StateCoherenceReport& r) {
    j = r.coherence;
    j["dim"] = r.dim;
    j["basis"] = r.basis;
    j["purity"] = r.purity;
    j["von_neumann_entropy"] = r.von_neumann_entropy;
    j["subentropy"] = r.subentropy;
    j["r1"] = r.r1;
    j["r2"] = r.r2;
}

inline void from_json(const nlohmann::json& j, StateCoherenceReport& r) {
    j.get_to(r.coherence);
    j.at("dim").get_to(r.dim);
    j.at("basis").get_to(r.basis);
    j.at("purity").get_to(r.purity);
    j.at("von_neumann_entropy").get_to(r.von_neumann_entropy);
    j.at("subentropy").get_to(r.subentropy);
    j.at("r1").get_to(r.r1);
    j.at("r2").get_to(r.r2);
}

inline void to_json(nlohmann::json& j, const RelationReport& r) {
    j = nlohmann::json{{"id", std::string(relation_name(r.id))},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"kind", r.kind == RelationKind::Equal ? "=" : "<="},
                       {"slack", r.slack},
                       {"satisfied", r.satisfied},
                       {"tol", r.tol}};
}

inline void from_json(const nlohmann::json& j, RelationReport& r) {
    const auto name = j.at("id").get<std::string>();
    const auto id = relation_from_name(name);
    if (!id) throw nlohmann::json::other_error::create(501, "unknown relation id " + name, &j);
    r.id = *id;
    j.at("lhs").get_to(r.lhs);
    j.at("rhs").get_to(r.rhs);
    r.kind = j.at("kind").get<std::string>() == "=" ? RelationKind::Equal : RelationKind::LessEqual;
    j.at("slack").get_to(r.slack);
    j.at("satisfied").get_to(r.satisfied);
    j.at("tol").get_to(r.tol);
}

inline void to_json(nlohmann::json& j, const EstimateResult& r) {
    j = nlohmann::json{
        {"mean", r.mean}, {"std_error", r.std_error}, {"n_samples", r.n_samples}, {"master_seed", r.master_seed}};
}

inline void from_json(const nlohmann::json& j, EstimateResult& r) {
    j.at("mean").get_to(r.mean);
    j.at("std_error").get_to(r.std_error);
    j.at("n_samples").get_to(r.n_samples);
    j.at("master_seed").get_to(r.master_seed);
}

namespace detail {
inline nlohmann::json optional_number(const std::optional<double>& x) {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}
inline std::optional<double> read_optional(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}
}  // namespace detail

inline void to_json(nlohmann::json& j, const AverageReport& r) {
    j = nlohmann::json{{"measure", std::string(measure_name(r.measure))},
                       {"dim", r.dim},
                       {"log_base", r.log_base},
                       {"mean", r.mean},
                       {"rms", r.rms},
                       {"r1_bound", r.r1_bound},
                       {"r2_target", r.r2_target},
                       {"relent_closed_form", r.relent_closed_form},
                       {"z_mean", detail::optional_number(r.z_mean)},
                       {"z_rms", detail::optional_number(r.z_rms)}};
}

inline void from_json(const nlohmann::json& j, AverageReport& r) {
    const auto name = j.at("measure").get<std::string>();
    const auto m = measure_from_name(name);
    if (!m) throw nlohmann::json::other_error::create(501, "unknown measure " + name, &j);
    r.measure = *m;
    j.at("dim").get_to(r.dim);
    j.at("log_base").get_to(r.log_base);
    j.at("mean").get_to(r.mean);
    j.at("rms").get_to(r.rms);
    j.at("r1_bound").get_to(r.r1_bound);
    j.at("r2_target").get_to(r.r2_target);
    j.at("relent_closed_form").get_to(r.relent_closed_form);
    r.z_mean = detail::read_optional(j, "z_mean");
    r.z_rms = detail::read_optional(j, "z_rms");
}

}  // namespace cohere
