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
 * @file  bounds.hpp
 * @brief Catalog of coherence, purity, entropy and subentropy relations.
 *
 * Each relation is evaluated on a state (plus a basis or MUB set where it
 * needs one) into a RelationReport holding both sides, the slack rhs - lhs
 * and a verdict. Equalities pass when |slack| <= 1e-8, inequalities when
 * slack >= -1e-9.
 */

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cohere/measures.hpp"
#include "cohere/mub.hpp"
#include "cohere/states.hpp"

namespace cohere {

enum class RelationId {
    C1_MAX,
    QUBIT_SUM_RULE,
    QUBIT_CERTAINTY,
    PURITY_DIFF,
    SINGH,
    MUB_PURITY_ID,
    COMP_L1,
    COMP_L2_ID,
    CREL_TRIVIAL,
    CERTAINTY_SRD,
    CERTAINTY_SR2,
    ENT_COMP_D,
    ENT_COMP_QUBIT,
    Q_JRW,
    Q_DDJ,
    Q_UPPER_MUB,
    Q_HT,
    HARREMOES_ENTROPY,
};

enum class RelationKind { LessEqual, Equal };

/// What a relation needs besides the state.
enum class RelationContext { None, Basis, MubSet };

struct RelationInfo {
    RelationId id;
    std::string_view name;
    RelationKind kind;
    RelationContext context;
    bool qubit_only;
    std::size_t min_dim;
    bool prime_only;
};

inline constexpr std::array<RelationInfo, 18> kRelations{{
    {RelationId::C1_MAX, "C1_MAX", RelationKind::LessEqual, RelationContext::Basis, false, 1, false},
    {RelationId::QUBIT_SUM_RULE, "QUBIT_SUM_RULE", RelationKind::Equal, RelationContext::MubSet, true, 2, true},
    {RelationId::QUBIT_CERTAINTY, "QUBIT_CERTAINTY", RelationKind::Equal, RelationContext::Basis, true, 2, false},
    {RelationId::PURITY_DIFF, "PURITY_DIFF", RelationKind::LessEqual, RelationContext::Basis, false, 1, false},
    {RelationId::SINGH, "SINGH", RelationKind::LessEqual, RelationContext::Basis, false, 1, false},
    {RelationId::MUB_PURITY_ID, "MUB_PURITY_ID", RelationKind::Equal, RelationContext::MubSet, false, 2, true},
    {RelationId::COMP_L1, "COMP_L1", RelationKind::LessEqual, RelationContext::MubSet, false, 2, true},
    {RelationId::COMP_L2_ID, "COMP_L2_ID", RelationKind::Equal, RelationContext::MubSet, false, 2, true},
    {RelationId::CREL_TRIVIAL, "CREL_TRIVIAL", RelationKind::LessEqual, RelationContext::Basis, false, 1, false},
    {RelationId::CERTAINTY_SRD, "CERTAINTY_SRD", RelationKind::LessEqual, RelationContext::MubSet, false, 3, true},
    {RelationId::CERTAINTY_SR2, "CERTAINTY_SR2", RelationKind::LessEqual, RelationContext::MubSet, true, 2, true},
    {RelationId::ENT_COMP_D, "ENT_COMP_D", RelationKind::LessEqual, RelationContext::MubSet, false, 3, true},
    {RelationId::ENT_COMP_QUBIT, "ENT_COMP_QUBIT", RelationKind::LessEqual, RelationContext::MubSet, true, 2, true},
    {RelationId::Q_JRW, "Q_JRW", RelationKind::LessEqual, RelationContext::None, false, 2, false},
    {RelationId::Q_DDJ, "Q_DDJ", RelationKind::LessEqual, RelationContext::None, false, 1, false},
    {RelationId::Q_UPPER_MUB, "Q_UPPER_MUB", RelationKind::LessEqual, RelationContext::None, false, 2, true},
    {RelationId::Q_HT, "Q_HT", RelationKind::LessEqual, RelationContext::None, false, 2, false},
    {RelationId::HARREMOES_ENTROPY, "HARREMOES_ENTROPY", RelationKind::LessEqual, RelationContext::Basis, false, 2, false},
}};

inline const RelationInfo& relation_info(RelationId id) { return kRelations[static_cast<std::size_t>(id)]; }

inline std::string_view relation_name(RelationId id) { return relation_info(id).name; }

inline std::optional<RelationId> relation_from_name(std::string_view name) {
    for (const auto& r : kRelations)
        if (r.name == name) return r.id;
    return std::nullopt;
}

/// Whether the relation is defined in dimension d (ignores the context).
inline bool relation_applies(RelationId id, std::size_t d) {
    const auto& info = relation_info(id);
    if (info.qubit_only && d != 2) return false;
    if (d < info.min_dim) return false;
    if (info.prime_only && !is_prime(d)) return false;
    return true;
}

struct RelationReport {
    RelationId id = RelationId::C1_MAX;
    double lhs = 0.0;
    double rhs = 0.0;
    RelationKind kind = RelationKind::LessEqual;
    double slack = 0.0;
    bool satisfied = false;
    double tol = 0.0;

    bool operator==(const RelationReport&) const = default;
};

inline constexpr double kEqualityTol = 1e-8;
inline constexpr double kInequalityTol = 1e-9;

inline RelationReport make_report(RelationId id, double lhs, double rhs) {
    RelationReport r;
    r.id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.kind = relation_info(id).kind;
    r.slack = rhs - lhs;
    if (r.kind == RelationKind::Equal) {
        r.tol = kEqualityTol;
        r.satisfied = std::abs(r.slack) <= r.tol;
    } else {
        r.tol = kInequalityTol;
        r.satisfied = r.slack >= -r.tol;
    }
    return r;
}

//------------------------------------------------------------------------------
// Scalar helpers
//------------------------------------------------------------------------------

/// h(x) = -((1+x)/2) log((1+x)/2) - ((1-x)/2) log((1-x)/2)
inline double binary_entropy_h(double x, double log_base = 2.0) {
    const double ln_base = log_of_base(log_base);
    return (entropy_term(0.5 * (1.0 + x)) + entropy_term(0.5 * (1.0 - x))) / ln_base;
}

/// Lower bound on the Harremoes-Topsoe constant tau_d; exact (1 / ln 4) at d = 2.
inline double tau_lower(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::InvalidDimension, "tau_d needs d >= 2");
    if (d == 2) return 1.0 / std::log(4.0);
    return 1.0 - 1.0 / (1.0 + std::log(static_cast<double>(d)));
}

namespace detail {

/// (d - 1)[d P - 1] ln(d - 1) / (d (d - 2)) in nats; at d = 2 the continuous
/// limit P - 1/2.
inline double certainty_penalty_nats(std::size_t dim, double purity) {
    const double d = static_cast<double>(dim);
    if (dim == 2) return purity - 0.5;
    return (d - 1.0) * (d * purity - 1.0) * std::log(d - 1.0) / (d * (d - 2.0));
}

inline double ln_harmonic_tail(std::size_t d) { return mub_constant(d, std::exp(1.0)); }

}  // namespace detail

/// Continuous d -> 2 limit of the general certainty bound,
/// 3 log 2 - [P - 1/2] log e. Diagnostic only; qubit verdicts use SR2.
inline double certainty_srd_qubit_limit(const DensityOperator& rho, double log_base = 2.0) {
    if (rho.dim() != 2) throw Error(ErrorCode::NotQubit, "qubit limit needs d = 2");
    return (3.0 * std::log(2.0) - (quantum_purity(rho) - 0.5)) / log_of_base(log_base);
}

/// log d - C_d
inline double subentropy_bound_jrw(std::size_t d, double log_base = 2.0) {
    return (std::log(static_cast<double>(d)) - detail::ln_harmonic_tail(d)) / log_of_base(log_base);
}

/// -log lambda_max
inline double subentropy_bound_ddj(const DensityOperator& rho, double log_base = 2.0) {
    return -std::log(rho.max_eigenvalue()) / log_of_base(log_base);
}

/// log d - C_d - (d-1)[dP-1] log(d-1) / (d (d+1) (d-2)), continuous limit at d = 2.
inline double subentropy_bound_mub(const DensityOperator& rho, double log_base = 2.0) {
    const std::size_t d = rho.dim();
    const double penalty = detail::certainty_penalty_nats(d, quantum_purity(rho)) / static_cast<double>(d + 1);
    return (std::log(static_cast<double>(d)) - detail::ln_harmonic_tail(d) - penalty) / log_of_base(log_base);
}

/// log d - C_d - tau_d [dP - 1] log d / (d^2 - 1), tau_d from tau_lower.
inline double subentropy_bound_ht(const DensityOperator& rho, double log_base = 2.0) {
    const std::size_t dim = rho.dim();
    const double d = static_cast<double>(dim);
    const double ln_d = std::log(d);
    const double penalty = tau_lower(dim) * (d * quantum_purity(rho) - 1.0) * ln_d / (d * d - 1.0);
    return (ln_d - detail::ln_harmonic_tail(dim) - penalty) / log_of_base(log_base);
}

//------------------------------------------------------------------------------
// Relation evaluation
//------------------------------------------------------------------------------

using RelationContextValue = std::variant<std::monostate, Basis, MubSet>;

namespace detail {

inline const Basis& require_basis(RelationId id, const DensityOperator& rho, const RelationContextValue& ctx) {
    const auto* b = std::get_if<Basis>(&ctx);
    if (!b) throw Error(ErrorCode::NotApplicable, std::string(relation_name(id)) + " needs a basis");
    if (b->dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "basis and state dimensions differ");
    return *b;
}

/// The supplied MUB set, or a freshly built complete set when none is given.
inline MubSet require_mubs(RelationId id, const DensityOperator& rho, const RelationContextValue& ctx) {
    if (const auto* m = std::get_if<MubSet>(&ctx)) {
        if (m->dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "MUB set and state dimensions differ");
        return *m;
    }
    if (std::holds_alternative<Basis>(ctx)) {
        throw Error(ErrorCode::NotApplicable, std::string(relation_name(id)) + " needs a MUB set, not a single basis");
    }
    return build_complete_mub(rho.dim());
}

}  // namespace detail

inline RelationReport evaluate_relation(RelationId id, const DensityOperator& rho, const RelationContextValue& context = {},
                                        double log_base = 2.0) {
    const auto& info = relation_info(id);
    const std::size_t dim = rho.dim();
    const double d = static_cast<double>(dim);
    if (info.qubit_only && dim != 2) throw Error(ErrorCode::NotApplicable, std::string(info.name) + " is qubit-only");
    if (dim < info.min_dim) {
        throw Error(ErrorCode::NotApplicable, std::string(info.name) + " needs d >= " + std::to_string(info.min_dim));
    }
    const double ln_base = log_of_base(log_base);
    const double purity = quantum_purity(rho);

    switch (id) {
        case RelationId::C1_MAX: {
            const auto& a = detail::require_basis(id, rho, context);
            return make_report(id, coherence_l1(rho, a), d - 1.0);
        }
        case RelationId::QUBIT_SUM_RULE: {
            const MubSet mubs = detail::require_mubs(id, rho, context);
            double lhs = 0.0;
            for (const auto& b : mubs) lhs += std::pow(coherence_l1(rho, b), 2);
            return make_report(id, lhs, 2.0 * bloch_vector(rho).norm2());
        }
        case RelationId::QUBIT_CERTAINTY: {
            const auto& a = detail::require_basis(id, rho, context);
            const double c1 = coherence_l1(rho, a);
            const double r2 = bloch_vector(rho).norm2();
            return make_report(id, qubit_rms_error(rho, basis_axis(a)), c1 * c1 + 1.0 - r2);
        }
        case RelationId::PURITY_DIFF: {
            const auto& a = detail::require_basis(id, rho, context);
            const double gap = std::max(purity - classical_purity(rho, a), 0.0);
            return make_report(id, coherence_l1(rho, a), std::sqrt(d * (d - 1.0) * gap));
        }
        case RelationId::SINGH: {
            const auto& a = detail::require_basis(id, rho, context);
            return make_report(id, std::pow(coherence_l1(rho, a), 2), (d - 1.0) * (d * purity - 1.0));
        }
        case RelationId::MUB_PURITY_ID: {
            const MubSet mubs = detail::require_mubs(id, rho, context);
            double lhs = 0.0;
            for (const auto& b : mubs) lhs += classical_purity(rho, b);
            return make_report(id, lhs, 1.0 + purity);
        }
        case RelationId::COMP_L1: {
            const MubSet mubs = detail::require_mubs(id, rho, context);
            double lhs = 0.0;
            for (const auto& b : mubs) lhs += std::pow(coherence_l1(rho, b), 2);
            return make_report(id, lhs, d * (d - 1.0) * (d * purity - 1.0));
        }
        case RelationId::COMP_L2_ID: {
            const MubSet mubs = detail::require_mubs(id, rho, context);
            double lhs = 0.0;
            for (const auto& b : mubs) lhs += in_basis::l2_squared(represent_in(rho.matrix(), b));
            return make_report(id, lhs, d * purity - 1.0);
        }
        case RelationId::CREL_TRIVIAL: {
            const auto& a = detail::require_basis(id, rho, context);
            const double s = von_neumann_entropy(rho, std::exp(1.0));
            const double crel = basis_entropy(rho, a, std::exp(1.0)) - s;
            return make_report(id, crel / ln_base, (std::log(d) - s) / ln_base);
        }
        case RelationId::CERTAINTY_SRD:
        case RelationId::ENT_COMP_D: {
            const MubSet mubs = detail::require_mubs(id, rho, context);
            const double e = std::exp(1.0);
            const double s = von_neumann_entropy(rho, e);
            double sum_h = 0.0;
            for (const auto& b : mubs) sum_h += basis_entropy(rho, b, e);
            const double penalty = detail::certainty_penalty_nats(dim, purity);
            if (id == RelationId::CERTAINTY_SRD) {
                return make_report(id, sum_h / ln_base, ((d + 1.0) * std::log(d) - penalty) / ln_base);
            }
            const double lhs = sum_h - (d + 1.0) * s;
            return make_report(id, lhs / ln_base, ((d + 1.0) * (std::log(d) - s) - penalty) / ln_base);
        }
        case RelationId::CERTAINTY_SR2:
        case RelationId::ENT_COMP_QUBIT: {
            const MubSet mubs = detail::require_mubs(id, rho, context);
            const double e = std::exp(1.0);
            const double s = von_neumann_entropy(rho, e);
            double sum_h = 0.0;
            for (const auto& b : mubs) sum_h += basis_entropy(rho, b, e);
            const double x = std::sqrt(std::max(2.0 * purity - 1.0, 0.0) / 3.0);
            const double h = binary_entropy_h(x, e);
            if (id == RelationId::CERTAINTY_SR2) return make_report(id, sum_h / ln_base, 3.0 * h / ln_base);
            return make_report(id, (sum_h - 3.0 * s) / ln_base, 3.0 * (h - s) / ln_base);
        }
        case RelationId::Q_JRW:
            return make_report(id, subentropy(rho, log_base), subentropy_bound_jrw(dim, log_base));
        case RelationId::Q_DDJ:
            return make_report(id, subentropy(rho, log_base), subentropy_bound_ddj(rho, log_base));
        case RelationId::Q_UPPER_MUB:
            if (!is_prime(dim)) throw Error(ErrorCode::NotApplicable, "Q_UPPER_MUB needs a complete MUB set (prime d)");
            return make_report(id, subentropy(rho, log_base), subentropy_bound_mub(rho, log_base));
        case RelationId::Q_HT:
            return make_report(id, subentropy(rho, log_base), subentropy_bound_ht(rho, log_base));
        case RelationId::HARREMOES_ENTROPY: {
            const auto& a = detail::require_basis(id, rho, context);
            const double pa = classical_purity(rho, a);
            const double rhs = (1.0 - tau_lower(dim) / (d - 1.0) * (d * pa - 1.0)) * std::log(d);
            return make_report(id, basis_entropy(rho, a, std::exp(1.0)) / ln_base, rhs / ln_base);
        }
    }
    throw Error(ErrorCode::NotApplicable, "unknown relation");
}

//------------------------------------------------------------------------------
// Subentropy bound table
//------------------------------------------------------------------------------

struct SubentropyBounds {
    double q_exact = 0.0;
    std::vector<std::pair<RelationId, double>> bounds;

    std::optional<double> bound(RelationId id) const {
        for (const auto& [k, v] : bounds)
            if (k == id) return v;
        return std::nullopt;
    }
};

/// Exact Q with the JRW, DDJ, MUB (prime d only) and HT upper bounds.
inline SubentropyBounds subentropy_bound_table(const DensityOperator& rho, double log_base = 2.0) {
    SubentropyBounds t;
    const std::size_t d = rho.dim();
    t.q_exact = subentropy(rho, log_base);
    t.bounds.emplace_back(RelationId::Q_JRW, subentropy_bound_jrw(d, log_base));
    t.bounds.emplace_back(RelationId::Q_DDJ, subentropy_bound_ddj(rho, log_base));
    if (is_prime(d)) t.bounds.emplace_back(RelationId::Q_UPPER_MUB, subentropy_bound_mub(rho, log_base));
    t.bounds.emplace_back(RelationId::Q_HT, subentropy_bound_ht(rho, log_base));
    return t;
}

}  // namespace cohere
