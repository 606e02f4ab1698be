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
 * @file  cli.hpp
 * @brief The `cohere` command line: verify, fig1, coherence, bounds, average.
 *
 * Exit codes: 0 success, 1 a verification check failed, 2 usage or input
 * error. Kept in a header so tests can drive `run` with in-memory streams.
 */

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohere/bounds.hpp"
#include "cohere/haar_average.hpp"
#include "cohere/measures.hpp"
#include "cohere/mub.hpp"
#include "cohere/report_json.hpp"
#include "cohere/states.hpp"
#include "cohere/verify.hpp"

namespace cohere::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Malformed command-line input.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

//------------------------------------------------------------------------------
// State specifications
//------------------------------------------------------------------------------

enum class StateKind { Epsilon, Bloch, MaximallyMixed, Random };

/// Textual form `kind:args`:
///   epsilon:d,eps[,basis_index]   |b> = first vector of MUB basis basis_index (default 0)
///   bloch:r1,r2,r3
///   maximally-mixed:d
///   random:d[,rank[,seed]]        seed falls back to --seed
struct StateSpec {
    StateKind kind = StateKind::MaximallyMixed;
    std::size_t d = 2;
    std::optional<double> epsilon;
    std::optional<BlochVector> bloch;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> basis_index;
    std::optional<std::size_t> rank;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

inline std::uint64_t to_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("not a non-negative integer: '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError("integer out of range: '" + s + "'");
    }
}

}  // namespace detail

inline StateSpec parse_state_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("state spec must look like kind:args, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const auto args = detail::split(text.substr(colon + 1), ',');
    StateSpec spec;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) {
            throw UsageError("wrong number of arguments for state kind '" + kind + "'");
        }
    };
    if (kind == "epsilon") {
        need(2, 3);
        spec.kind = StateKind::Epsilon;
        spec.d = detail::to_uint(args[0]);
        spec.epsilon = detail::to_double(args[1]);
        if (args.size() == 3) spec.basis_index = detail::to_uint(args[2]);
    } else if (kind == "bloch") {
        need(3, 3);
        spec.kind = StateKind::Bloch;
        spec.d = 2;
        spec.bloch = BlochVector{detail::to_double(args[0]), detail::to_double(args[1]), detail::to_double(args[2])};
    } else if (kind == "maximally-mixed") {
        need(1, 1);
        spec.kind = StateKind::MaximallyMixed;
        spec.d = detail::to_uint(args[0]);
    } else if (kind == "random") {
        need(1, 3);
        spec.kind = StateKind::Random;
        spec.d = detail::to_uint(args[0]);
        if (args.size() >= 2) spec.rank = detail::to_uint(args[1]);
        if (args.size() == 3) spec.seed = detail::to_uint(args[2]);
    } else {
        throw UsageError("unknown state kind '" + kind + "'");
    }
    if (spec.d < 1) throw UsageError("dimension must be positive");
    return spec;
}

inline DensityOperator make_state(const StateSpec& spec, std::uint64_t default_seed) {
    switch (spec.kind) {
        case StateKind::Epsilon: {
            const std::size_t j = spec.basis_index.value_or(0);
            ComplexVector b(spec.d, 0.0);
            if (j == 0) {
                b[0] = 1.0;
            } else {
                const MubSet mubs = build_complete_mub(spec.d);
                if (j >= mubs.size()) throw UsageError("basis_index out of range");
                b = mubs[j].state(0);
            }
            return epsilon_state(spec.d, *spec.epsilon, b);
        }
        case StateKind::Bloch: return from_bloch(*spec.bloch);
        case StateKind::MaximallyMixed: return maximally_mixed(spec.d);
        case StateKind::Random: {
            RngStream rng(spec.seed.value_or(default_seed), 0);
            return sample_random_density(spec.d, spec.rank.value_or(spec.d), rng);
        }
    }
    throw UsageError("unknown state kind");
}

/// `computational`, `mub:<j>` (0-based, computational first) or `random`.
inline Basis make_basis(const std::string& text, std::size_t d, std::uint64_t seed) {
    if (text == "computational") return computational_basis(d);
    if (text == "random") {
        RngStream rng(seed, 1);
        return rotate_basis(computational_basis(d), sample_haar_unitary(d, rng));
    }
    if (text.rfind("mub:", 0) == 0) {
        const std::size_t j = detail::to_uint(text.substr(4));
        const MubSet mubs = build_complete_mub(d);
        if (j >= mubs.size()) throw UsageError("mub index out of range: " + text);
        return mubs[j];
    }
    throw UsageError("unknown basis '" + text + "'");
}

inline double parse_log_base(const std::string& text) {
    if (text == "2") return 2.0;
    if (text == "e") return std::exp(1.0);
    if (text == "10") return 10.0;
    throw UsageError("log base must be one of 2, e, 10");
}

//------------------------------------------------------------------------------
// Commands
//------------------------------------------------------------------------------

inline StateCoherenceReport coherence_command(const DensityOperator& rho, const Basis& basis,
                                              const std::string& basis_label, double log_base) {
    StateCoherenceReport r;
    r.dim = rho.dim();
    r.basis = basis_label;
    r.coherence = coherence_report(rho, basis, log_base);
    r.purity = quantum_purity(rho);
    r.von_neumann_entropy = von_neumann_entropy(rho, log_base);
    r.subentropy = subentropy(rho, log_base);
    r.r1 = coherence_radius_l1(rho);
    r.r2 = coherence_radius_l2(rho);
    return r;
}

/// Reports for every relation defined for this state: basis relations use
/// `basis`, MUB relations the complete set (prime d only).
inline std::vector<RelationReport> bounds_command(const DensityOperator& rho, const Basis& basis, double log_base) {
    const std::size_t d = rho.dim();
    std::optional<MubSet> mubs;
    if (is_prime(d)) mubs = build_complete_mub(d);
    std::vector<RelationReport> out;
    for (const auto& info : kRelations) {
        if (!relation_applies(info.id, d)) continue;
        RelationContextValue ctx;
        if (info.context == RelationContext::Basis) ctx = basis;
        if (info.context == RelationContext::MubSet) {
            if (!mubs) continue;
            ctx = *mubs;
        }
        out.push_back(evaluate_relation(info.id, rho, ctx, log_base));
    }
    return out;
}

inline AverageReport average_command(const DensityOperator& rho, Measure measure, std::uint64_t n,
                                     std::uint64_t seed, double log_base) {
    AverageReport r;
    const double d = static_cast<double>(rho.dim());
    r.measure = measure;
    r.dim = rho.dim();
    r.log_base = log_base;
    r.mean = mean_coherence(measure, rho, n, seed, log_base);
    r.rms = rms_coherence(measure, rho, n, seed, log_base);
    r.r1_bound = coherence_radius_l1(rho) / std::sqrt(d + 1.0);
    r.r2_target = coherence_radius_l2(rho) / std::sqrt(d + 1.0);
    r.relent_closed_form = mean_relent_closed_form(rho, log_base);
    // below 1e-12 the spread is rounding noise and a z-score means nothing
    auto z = [](const EstimateResult& e, double target) -> std::optional<double> {
        if (e.std_error <= 1e-12) return std::nullopt;
        return (e.mean - target) / e.std_error;
    };
    switch (measure) {
        case Measure::L1:
            r.z_mean = z(r.mean, r.r1_bound);
            r.z_rms = z(r.rms, r.r1_bound);
            break;
        case Measure::L2:
            r.z_mean = z(r.mean, r.r2_target);
            r.z_rms = z(r.rms, r.r2_target);
            break;
        case Measure::RelEnt:
            r.z_mean = z(r.mean, r.relent_closed_form);
            break;
    }
    return r;
}

/// 12 significant digits, '-0' printed as '0'.
inline std::string format_csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

/// Subentropy and its four upper bounds along rho_eps, eps uniform on [0, 1 - 1/d].
inline void write_fig1_csv(std::ostream& out, std::size_t d, std::size_t points, double log_base) {
    if (!is_prime(d)) throw Error(ErrorCode::NonPrimeDimension, "fig1 needs a prime dimension");
    if (points < 2) throw UsageError("--points must be at least 2");
    ComplexVector b(d, 0.0);
    b[0] = 1.0;
    const double eps_max = 1.0 - 1.0 / static_cast<double>(d);
    out << "epsilon,Q_exact,bound_qupper,bound_ht,bound_jrw,bound_ddj\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double eps = eps_max * static_cast<double>(i) / static_cast<double>(points - 1);
        const auto rho = epsilon_state(d, eps, b);
        const auto table = subentropy_bound_table(rho, log_base);
        out << format_csv_number(eps) << ',' << format_csv_number(table.q_exact) << ','
            << format_csv_number(*table.bound(RelationId::Q_UPPER_MUB)) << ','
            << format_csv_number(*table.bound(RelationId::Q_HT)) << ','
            << format_csv_number(*table.bound(RelationId::Q_JRW)) << ','
            << format_csv_number(*table.bound(RelationId::Q_DDJ)) << '\n';
    }
}

inline VerifyScope parse_scope(const std::string& s) {
    if (s == "all") return VerifyScope::All;
    if (s == "qubit") return VerifyScope::Qubit;
    if (s == "mub") return VerifyScope::Mub;
    if (s == "subentropy") return VerifyScope::Subentropy;
    if (s == "average") return VerifyScope::Average;
    throw UsageError("unknown scope '" + s + "'");
}

//------------------------------------------------------------------------------
// Entry point
//------------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coherence measures, MUB complementarity relations and subentropy bounds"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    std::uint64_t n = 20000;
    std::string out_path;
    std::string log_base_text = "2";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "master seed")->capture_default_str();
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--log-base", log_base_text, "entropy units: 2, e or 10")->capture_default_str();
    };

    std::string scope = "all";
    std::vector<std::size_t> verify_dims;
    auto* verify = app.add_subcommand("verify", "run the built-in identity and inequality checks");
    verify->add_option("--scope", scope, "all, qubit, mub, subentropy or average")->capture_default_str();
    verify->add_option("--d", verify_dims, "restrict to these dimensions");
    verify->add_option("--n", n, "Monte Carlo samples per average")->capture_default_str();
    add_common(verify);

    std::size_t fig_d = 2;
    std::size_t points = 101;
    auto* fig1 = app.add_subcommand("fig1", "CSV of subentropy and its upper bounds along rho_eps");
    fig1->add_option("--d", fig_d, "prime dimension")->required();
    fig1->add_option("--points", points, "number of epsilon samples (>= 2)")->capture_default_str();
    add_common(fig1);

    std::string state_text;
    std::string basis_text = "computational";
    auto* coherence = app.add_subcommand("coherence", "coherence measures of a state in a basis (JSON)");
    coherence->add_option("--state", state_text, "state spec, e.g. epsilon:3,0.3")->required();
    coherence->add_option("--basis", basis_text, "computational, mub:<j> or random")->capture_default_str();
    add_common(coherence);

    auto* bounds = app.add_subcommand("bounds", "evaluate every applicable relation on a state (JSON)");
    bounds->add_option("--state", state_text, "state spec")->required();
    bounds->add_option("--basis", basis_text, "basis for basis-relative relations")->capture_default_str();
    add_common(bounds);

    std::string measure_text = "l1";
    auto* average = app.add_subcommand("average", "Haar mean and RMS coherence with closed-form targets (JSON)");
    average->add_option("--state", state_text, "state spec")->required();
    average->add_option("--measure", measure_text, "l1, l2 or relent")->capture_default_str();
    average->add_option("--n", n, "Monte Carlo samples")->capture_default_str();
    add_common(average);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const double log_base = parse_log_base(log_base_text);
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw UsageError("cannot open output file " + out_path);
        }
        std::ostream& sink = out_path.empty() ? out : file;

        if (*verify) {
            VerifyOptions opts;
            opts.scope = parse_scope(scope);
            opts.dims = verify_dims;
            opts.seed = seed;
            opts.n = n;
            return run_verify(sink, opts).ok() ? kExitOk : kExitCheckFailed;
        }
        if (*fig1) {
            write_fig1_csv(sink, fig_d, points, log_base);
            return kExitOk;
        }
        const StateSpec spec = parse_state_spec(state_text);
        const DensityOperator rho = make_state(spec, seed);
        if (*coherence) {
            const Basis basis = make_basis(basis_text, rho.dim(), seed);
            sink << nlohmann::json(coherence_command(rho, basis, basis_text, log_base)).dump() << '\n';
            return kExitOk;
        }
        if (*bounds) {
            const Basis basis = make_basis(basis_text, rho.dim(), seed);
            sink << nlohmann::json(bounds_command(rho, basis, log_base)).dump() << '\n';
            return kExitOk;
        }
        if (*average) {
            const auto measure = measure_from_name(measure_text);
            if (!measure) throw UsageError("unknown measure '" + measure_text + "'");
            sink << nlohmann::json(average_command(rho, *measure, n, seed, log_base)).dump() << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cohere::cli
