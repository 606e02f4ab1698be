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

/**
 * @file  verify.hpp
 * @brief Self-check suites behind `cohere verify`.
 *
 * Each check prints one line: status (PASS / FAIL / SKIP), suite/check name,
 * dimension and the worst observed metric. Output depends only on
 * (scope, dims, seed, n), so repeated runs are byte-identical.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/bounds.hpp"
#include "cohere/haar_average.hpp"
#include "cohere/measures.hpp"
#include "cohere/mub.hpp"
#include "cohere/states.hpp"

namespace cohere {

enum class VerifyScope { All, Qubit, Mub, Subentropy, Average };

struct VerifyOptions {
    VerifyScope scope = VerifyScope::All;
    std::vector<std::size_t> dims;  // empty: each suite's default list
    std::uint64_t seed = 42;
    std::uint64_t n = 20000;
    std::size_t states_per_dim = 100;
};

struct VerifySummary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    bool ok() const { return failed == 0; }
};

class Verifier {
public:
    Verifier(std::ostream& out, VerifyOptions opts) : out_(out), opts_(std::move(opts)) {}

    VerifySummary run() {
        const auto s = opts_.scope;
        if (s == VerifyScope::All || s == VerifyScope::Qubit) qubit_suite();
        if (s == VerifyScope::All || s == VerifyScope::Mub) mub_suite();
        if (s == VerifyScope::All || s == VerifyScope::Subentropy) subentropy_suite();
        if (s == VerifyScope::All || s == VerifyScope::Average) average_suite();
        char buf[128];
        std::snprintf(buf, sizeof buf, "SUMMARY passed=%d failed=%d skipped=%d\n", summary_.passed, summary_.failed,
                      summary_.skipped);
        out_ << buf;
        return summary_;
    }

private:
    // metric <= limit passes
    void check(std::string_view suite, std::string_view name, std::size_t d, std::string_view metric, double value,
               double limit) {
        const bool pass = value <= limit;  // NaN fails
        emit(pass ? "PASS" : "FAIL", suite, name, d, metric, value);
        pass ? ++summary_.passed : ++summary_.failed;
    }

    void skip(std::string_view suite, std::string_view name, std::size_t d, std::string_view reason) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "SKIP %s/%s d=%zu %s\n", std::string(suite).c_str(), std::string(name).c_str(),
                      d, std::string(reason).c_str());
        out_ << buf;
        ++summary_.skipped;
    }

    void emit(const char* status, std::string_view suite, std::string_view name, std::size_t d,
              std::string_view metric, double value) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %s/%s d=%zu %s=%.3e\n", status, std::string(suite).c_str(),
                      std::string(name).c_str(), d, std::string(metric).c_str(), value == 0.0 ? 0.0 : value);
        out_ << buf;
    }

    std::vector<std::size_t> dims_or(std::vector<std::size_t> fallback) const {
        return opts_.dims.empty() ? fallback : opts_.dims;
    }

    std::vector<DensityOperator> random_states(std::size_t d, std::uint64_t tag) const {
        RngStream rng(opts_.seed, tag * 1000 + d);
        std::vector<DensityOperator> states;
        states.reserve(opts_.states_per_dim);
        for (std::size_t k = 0; k < opts_.states_per_dim; ++k) {
            const std::size_t rank = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(d));
            states.push_back(sample_random_density(d, std::min(rank, d), rng));
        }
        return states;
    }

    static double worst_abs_slack(RelationId id, const std::vector<DensityOperator>& states,
                                  const RelationContextValue& ctx) {
        double worst = 0.0;
        for (const auto& rho : states) worst = std::max(worst, std::abs(evaluate_relation(id, rho, ctx).slack));
        return worst;
    }

    // largest violation (-slack), 0 if every slack is non-negative
    template <class ContextFn>
    static double worst_violation(RelationId id, const std::vector<DensityOperator>& states, ContextFn ctx_for) {
        double worst = 0.0;
        for (std::size_t k = 0; k < states.size(); ++k) {
            worst = std::max(worst, -evaluate_relation(id, states[k], ctx_for(k)).slack);
        }
        return worst;
    }

    //--------------------------------------------------------------------------

    void qubit_suite() {
        constexpr std::string_view suite = "qubit";
        const auto dims = dims_or({2});
        if (std::find(dims.begin(), dims.end(), std::size_t{2}) == dims.end()) {
            skip(suite, "ALL", dims.front(), "qubit relations need d=2");
            return;
        }
        RngStream rng(opts_.seed, 2);
        const MubSet pauli = build_complete_mub(2);
        double sum_rule = 0, certainty = 0, identity = 0, sr2 = 0, ent2 = 0, c1max = 0, purediff = 0;
        for (int k = 0; k < 500; ++k) {
            const BlochVector r = sample_bloch_vector(rng);
            const DensityOperator rho = from_bloch(r);
            sum_rule = std::max(sum_rule, std::abs(evaluate_relation(RelationId::QUBIT_SUM_RULE, rho, pauli).slack));
            for (const auto& b : pauli) {
                certainty = std::max(certainty, std::abs(evaluate_relation(RelationId::QUBIT_CERTAINTY, rho, b).slack));
                c1max = std::max(c1max, -evaluate_relation(RelationId::C1_MAX, rho, b).slack);
                purediff = std::max(purediff, std::abs(evaluate_relation(RelationId::PURITY_DIFF, rho, b).slack));
            }
            const double c3 = coherence_l1(rho, pauli[0]);
            identity = std::max(identity, std::abs(c3 * c3 - (r.norm2() - r.r3 * r.r3)));
            sr2 = std::max(sr2, -evaluate_relation(RelationId::CERTAINTY_SR2, rho, pauli).slack);
            ent2 = std::max(ent2, -evaluate_relation(RelationId::ENT_COMP_QUBIT, rho, pauli).slack);
        }
        check(suite, "QUBIT_SUM_RULE", 2, "max_abs_slack", sum_rule, 1e-8);
        check(suite, "QUBIT_CERTAINTY", 2, "max_abs_slack", certainty, 1e-8);
        check(suite, "SIGMA3_COHERENCE_IDENTITY", 2, "max_abs_dev", identity, 1e-10);
        check(suite, "C1_MAX", 2, "max_violation", c1max, kInequalityTol);
        // every qubit off-diagonal pair has one modulus, so the bound is attained
        check(suite, "PURITY_DIFF_TIGHT", 2, "max_abs_slack", purediff, 1e-8);
        check(suite, "CERTAINTY_SR2", 2, "max_violation", sr2, kInequalityTol);
        check(suite, "ENT_COMP_QUBIT", 2, "max_violation", ent2, kInequalityTol);

        double sr2_sat = 0, ent2_sat = 0;
        for (int step = 0; step <= 5; ++step) {
            const double purity = 0.5 + 0.1 * step;
            const double rj = std::sqrt((2.0 * purity - 1.0) / 3.0);
            const DensityOperator rho = from_bloch({rj, rj, rj});
            sr2_sat = std::max(sr2_sat, std::abs(evaluate_relation(RelationId::CERTAINTY_SR2, rho, pauli).slack));
            ent2_sat = std::max(ent2_sat, std::abs(evaluate_relation(RelationId::ENT_COMP_QUBIT, rho, pauli).slack));
        }
        check(suite, "SR2_SATURATION", 2, "max_abs_slack", sr2_sat, 1e-8);
        check(suite, "ENT_COMP_QUBIT_SATURATION", 2, "max_abs_slack", ent2_sat, 1e-8);
    }

    //--------------------------------------------------------------------------

    void mub_suite() {
        constexpr std::string_view suite = "mub";
        for (std::size_t d : dims_or({2, 3, 5, 7, 11})) {
            const auto states = random_states(d, 3);
            RngStream rng(opts_.seed, 4000 + d);
            std::vector<Basis> random_bases;
            for (std::size_t k = 0; k < states.size(); ++k) {
                random_bases.push_back(rotate_basis(computational_basis(d), sample_haar_unitary(d, rng)));
            }
            auto basis_ctx = [&](std::size_t k) { return RelationContextValue(random_bases[k]); };
            check(suite, "C1_MAX", d, "max_violation", worst_violation(RelationId::C1_MAX, states, basis_ctx),
                  kInequalityTol);
            check(suite, "PURITY_DIFF", d, "max_violation", worst_violation(RelationId::PURITY_DIFF, states, basis_ctx),
                  kInequalityTol);
            check(suite, "SINGH", d, "max_violation", worst_violation(RelationId::SINGH, states, basis_ctx),
                  kInequalityTol);
            check(suite, "CREL_TRIVIAL", d, "max_violation",
                  worst_violation(RelationId::CREL_TRIVIAL, states, basis_ctx), kInequalityTol);
            check(suite, "HARREMOES_ENTROPY", d, "max_violation",
                  worst_violation(RelationId::HARREMOES_ENTROPY, states, basis_ctx), kInequalityTol);

            if (!is_prime(d)) {
                for (auto name : {"MUB_UNBIASED", "MUB_PURITY_ID", "COMP_L1", "COMP_L2_ID", "TOMOGRAPHY",
                                  "MAX_CROSS_COHERENCE", "COMP_L1_SATURATION", "SINGH_SATURATION", "CERTAINTY_SRD",
                                  "ENT_COMP_D"}) {
                    skip(suite, name, d, "non-prime dimension");
                }
                continue;
            }
            const MubSet mubs = build_complete_mub(d);
            const RelationContextValue ctx = mubs;
            auto mub_ctx = [&](std::size_t) { return ctx; };

            double unbiased = 0.0;
            for (std::size_t i = 0; i < mubs.size(); ++i)
                for (std::size_t j = i + 1; j < mubs.size(); ++j)
                    unbiased = std::max(unbiased, unbiasedness_deviation(mubs[i], mubs[j]));
            check(suite, "MUB_UNBIASED", d, "max_dev", unbiased, 1e-10);
            check(suite, "MUB_PURITY_ID", d, "max_abs_slack", worst_abs_slack(RelationId::MUB_PURITY_ID, states, ctx),
                  1e-10);
            check(suite, "COMP_L1", d, "max_violation", worst_violation(RelationId::COMP_L1, states, mub_ctx),
                  kInequalityTol);
            check(suite, "COMP_L2_ID", d, "max_abs_slack", worst_abs_slack(RelationId::COMP_L2_ID, states, ctx), 1e-10);

            double tomo = 0.0;
            for (const auto& rho : states) {
                const auto rec = ivanovic_reconstruct(mubs, mub_statistics(rho, mubs));
                tomo = std::max(tomo, max_abs_diff(rec.matrix(), rho.matrix()));
            }
            check(suite, "TOMOGRAPHY", d, "max_error", tomo, 1e-10);

            double cross = 0.0;
            for (std::size_t i = 0; i < mubs.size(); ++i)
                for (std::size_t j = 0; j < mubs.size(); ++j) {
                    if (i == j) continue;
                    for (std::size_t k = 0; k < d; ++k) {
                        const auto b = pure_state(mubs[j].state(k));
                        cross = std::max(cross, std::abs(coherence_l1(b, mubs[i]) - static_cast<double>(d - 1)));
                    }
                }
            check(suite, "MAX_CROSS_COHERENCE", d, "max_dev", cross, 1e-9);

            double comp_sat = 0.0;
            double singh_sat = 0.0;
            const double eps_max = 1.0 - 1.0 / static_cast<double>(d);
            for (int step = 0; step <= 10; ++step) {
                const double eps = eps_max * step / 10.0;
                for (std::size_t j = 0; j < mubs.size(); ++j) {
                    for (std::size_t k = 0; k < d; ++k) {
                        const auto rho = epsilon_state(d, eps, mubs[j].state(k));
                        comp_sat = std::max(comp_sat, evaluate_relation(RelationId::COMP_L1, rho, ctx).slack);
                        const Basis& other = mubs[(j + 1) % mubs.size()];
                        singh_sat = std::max(singh_sat, evaluate_relation(RelationId::SINGH, rho, other).slack);
                    }
                }
            }
            check(suite, "COMP_L1_SATURATION", d, "max_slack", comp_sat, 1e-8);
            check(suite, "SINGH_SATURATION", d, "max_slack", singh_sat, 1e-8);

            if (d < 3) {
                skip(suite, "CERTAINTY_SRD", d, "needs d>=3 (qubits use CERTAINTY_SR2)");
                skip(suite, "ENT_COMP_D", d, "needs d>=3 (qubits use ENT_COMP_QUBIT)");
            } else {
                check(suite, "CERTAINTY_SRD", d, "max_violation",
                      worst_violation(RelationId::CERTAINTY_SRD, states, mub_ctx), kInequalityTol);
                check(suite, "ENT_COMP_D", d, "max_violation", worst_violation(RelationId::ENT_COMP_D, states, mub_ctx),
                      kInequalityTol);
            }
        }
    }

    //--------------------------------------------------------------------------

    void subentropy_suite() {
        constexpr std::string_view suite = "subentropy";
        for (std::size_t d : dims_or({2, 3, 5, 7, 11})) {
            if (d < 2) {
                skip(suite, "ALL", d, "needs d>=2");
                continue;
            }
            std::vector<double> pure(d, 0.0);
            pure.back() = 1.0;
            check(suite, "Q_PURE", d, "abs_q", std::abs(subentropy(pure)), 1e-10);
            const auto mixed = maximally_mixed(d);
            check(suite, "Q_MAXIMALLY_MIXED", d, "abs_dev",
                  std::abs(subentropy(mixed) - subentropy_bound_jrw(d)), 1e-10);

            const auto states = random_states(d, 5);
            RngStream rng(opts_.seed, 6000 + d);
            double range = 0.0;
            double invariance = 0.0;
            for (const auto& rho : states) {
                const double q = subentropy(rho);
                const double s = von_neumann_entropy(rho);
                range = std::max({range, -q, q - s});
                const auto rotated = rho.conjugated(sample_haar_unitary(d, rng));
                invariance = std::max({invariance, std::abs(subentropy(rotated) - q),
                                       std::abs(von_neumann_entropy(rotated) - s)});
            }
            check(suite, "Q_RANGE", d, "max_violation", range, 1e-9);
            check(suite, "Q_UNITARY_INVARIANCE", d, "max_abs_dev", invariance, 1e-10);

            // bounds on random states and along the epsilon family
            std::vector<DensityOperator> probes = states;
            std::vector<complex> b(d, 0.0);
            b[0] = 1.0;
            const double eps_max = 1.0 - 1.0 / static_cast<double>(d);
            for (int step = 0; step <= 20; ++step) probes.push_back(epsilon_state(d, eps_max * step / 20.0, b));
            auto none = [](std::size_t) { return RelationContextValue{}; };
            for (RelationId id : {RelationId::Q_JRW, RelationId::Q_DDJ, RelationId::Q_UPPER_MUB, RelationId::Q_HT}) {
                if (!relation_applies(id, d)) {
                    skip(suite, relation_name(id), d, "non-prime dimension");
                    continue;
                }
                check(suite, relation_name(id), d, "max_violation", worst_violation(id, probes, none), kInequalityTol);
            }
            if (is_prime(d)) {
                double dominance = 0.0;
                for (const auto& rho : probes) {
                    dominance = std::max(dominance, subentropy_bound_mub(rho) - subentropy_bound_jrw(d));
                }
                check(suite, "Q_UPPER_MUB_BELOW_JRW", d, "max_excess", dominance, kInequalityTol);
            }
        }
    }

    //--------------------------------------------------------------------------

    void average_suite() {
        constexpr std::string_view suite = "average";
        for (std::size_t d : dims_or({2, 3, 4, 5})) {
            if (d < 2) {
                skip(suite, "ALL", d, "needs d>=2");
                continue;
            }
            RngStream rng(opts_.seed, 7000 + d);
            const auto rho = sample_random_density(d, d, rng);
            const double dd = static_cast<double>(d);
            const std::uint64_t n = opts_.n;
            const std::uint64_t seed = opts_.seed;
            auto z = [](const EstimateResult& e, double target) {
                return e.std_error > 0.0 ? (e.mean - target) / e.std_error : (e.mean == target ? 0.0 : 1e300);
            };

            const auto purity = mean_classical_purity(rho, n, seed);
            check(suite, "MEAN_CLASSICAL_PURITY", d, "abs_z",
                  std::abs(z(purity, mean_classical_purity_closed_form(rho))), 4.0);
            const auto entropy = mean_basis_entropy(rho, n, seed);
            check(suite, "MEAN_BASIS_ENTROPY", d, "abs_z", std::abs(z(entropy, mean_basis_entropy_closed_form(rho))),
                  4.0);
            const auto rms2 = rms_coherence(Measure::L2, rho, n, seed);
            check(suite, "RMS_C2", d, "abs_z", std::abs(z(rms2, coherence_radius_l2(rho) / std::sqrt(dd + 1.0))), 4.0);
            const auto mean1 = mean_coherence(Measure::L1, rho, n, seed);
            const auto rms1 = rms_coherence(Measure::L1, rho, n, seed);
            const double r1_bound = coherence_radius_l1(rho) / std::sqrt(dd + 1.0);
            check(suite, "MEAN_C1_BOUND", d, "z", z(mean1, r1_bound), 4.0);
            check(suite, "RMS_C1_BOUND", d, "z", z(rms1, r1_bound), 4.0);
            const auto crel = mean_coherence(Measure::RelEnt, rho, n, seed);
            check(suite, "MEAN_CREL", d, "abs_z", std::abs(z(crel, mean_relent_closed_form(rho))), 4.0);
            const auto rms_rel = rms_coherence(Measure::RelEnt, rho, n, seed);
            const auto mean2 = mean_coherence(Measure::L2, rho, n, seed);
            const double gap = std::max({mean1.mean - rms1.mean, mean2.mean - rms2.mean, crel.mean - rms_rel.mean});
            check(suite, "MEAN_LE_RMS", d, "max_excess", gap, 1e-12);
            check(suite, "CREL_AVG_TRIVIAL", d, "excess",
                  mean_relent_closed_form(rho) - (std::log2(dd) - von_neumann_entropy(rho)), kInequalityTol);

            if (!is_prime(d)) {
                skip(suite, "MUB_AVERAGE_EQUIVALENCE", d, "non-prime dimension");
                continue;
            }
            const MubSet mubs = build_complete_mub(d);
            double avg = 0.0;
            for (const auto& b : mubs) avg += classical_purity(rho, b);
            avg /= dd + 1.0;
            check(suite, "MUB_AVERAGE_EQUIVALENCE", d, "abs_dev",
                  std::abs(avg - mean_classical_purity_closed_form(rho)), 1e-10);
        }
    }

    std::ostream& out_;
    VerifyOptions opts_;
    VerifySummary summary_;
};

inline VerifySummary run_verify(std::ostream& out, const VerifyOptions& opts) { return Verifier(out, opts).run(); }

}  // namespace cohere
