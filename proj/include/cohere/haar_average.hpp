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
 * @file  haar_average.hpp
 * @brief Monte Carlo averages of basis-dependent quantities over Haar-random
 *        bases, plus the closed-form mean relative-entropy coherence.
 *
 * Samples are drawn in fixed batches of kBatchSize; batch b owns the stream
 * RngStream(seed, b). Batch statistics are merged in batch order, so the
 * result does not depend on how many threads evaluated the batches.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cohere/linalg.hpp"
#include "cohere/measures.hpp"
#include "cohere/states.hpp"

namespace cohere {

enum class Measure { L1, L2, RelEnt };

inline std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::L1: return "l1";
        case Measure::L2: return "l2";
        case Measure::RelEnt: return "relent";
    }
    return "?";
}

inline std::optional<Measure> measure_from_name(std::string_view name) {
    if (name == "l1") return Measure::L1;
    if (name == "l2") return Measure::L2;
    if (name == "relent") return Measure::RelEnt;
    return std::nullopt;
}

struct EstimateResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t master_seed = 0;

    bool operator==(const EstimateResult&) const = default;
};

inline constexpr std::uint64_t kMinSamples = 100;
inline constexpr std::uint64_t kBatchSize = 1000;

namespace detail {

/// Running count / mean / sum of squared deviations, mergeable (Chan et al.).
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double total = static_cast<double>(n + o.n);
        const double delta = o.mean - mean;
        mean += delta * static_cast<double>(o.n) / total;
        m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
        n += o.n;
    }

    double std_error() const {
        if (n < 2) return 0.0;
        const double var = m2 / static_cast<double>(n - 1);
        return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
};

/// Statistic of rho expressed in a rotated computational basis, i.e. of the
/// matrix U^dagger rho U.
using RotatedStatistic = std::function<double(const ComplexMatrix&)>;

inline Moments sample_batch(const ComplexMatrix& rho, const RotatedStatistic& stat, std::uint64_t count,
                            std::uint64_t seed, std::uint64_t batch) {
    RngStream rng(seed, batch);
    Moments m;
    for (std::uint64_t i = 0; i < count; ++i) {
        const ComplexMatrix u = sample_haar_unitary(rho.dim(), rng);
        m.add(stat(u.adjoint() * rho * u));
    }
    return m;
}

inline Moments haar_moments(const DensityOperator& rho, const RotatedStatistic& stat, std::uint64_t n,
                            std::uint64_t seed, unsigned threads) {
    if (n < kMinSamples) {
        throw Error(ErrorCode::TooFewSamples, "need at least " + std::to_string(kMinSamples) + " samples");
    }
    const std::uint64_t batches = (n + kBatchSize - 1) / kBatchSize;
    std::vector<Moments> parts(batches);
    auto run = [&](std::uint64_t b) {
        const std::uint64_t count = std::min(kBatchSize, n - b * kBatchSize);
        parts[b] = sample_batch(rho.matrix(), stat, count, seed, b);
    };
    threads = std::max(1u, threads);
    if (threads == 1 || batches == 1) {
        for (std::uint64_t b = 0; b < batches; ++b) run(b);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t b = t; b < batches; b += threads) run(b);
            });
        }
        for (auto& th : pool) th.join();
    }
    Moments total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

inline RotatedStatistic coherence_statistic(Measure measure, const DensityOperator& rho, double log_base) {
    switch (measure) {
        case Measure::L1: return [](const ComplexMatrix& m) { return in_basis::l1(m); };
        case Measure::L2: return [](const ComplexMatrix& m) { return std::sqrt(in_basis::l2_squared(m)); };
        case Measure::RelEnt: {
            const double ln_base = log_of_base(log_base);
            const double s = von_neumann_entropy(rho, std::exp(1.0));
            return [=](const ComplexMatrix& m) { return (in_basis::entropy_nats(m) - s) / ln_base; };
        }
    }
    throw Error(ErrorCode::NotApplicable, "unknown measure");
}

inline EstimateResult to_estimate(const Moments& m, std::uint64_t seed) {
    return {m.mean, m.std_error(), m.n, seed};
}

}  // namespace detail

/// Mean of C(U A U^dagger, rho) over Haar U, A the computational basis.
inline EstimateResult mean_coherence(Measure measure, const DensityOperator& rho, std::uint64_t n, std::uint64_t seed,
                                     double log_base = 2.0, unsigned threads = 1) {
    const auto stat = detail::coherence_statistic(measure, rho, log_base);
    return detail::to_estimate(detail::haar_moments(rho, stat, n, seed, threads), seed);
}

/// sqrt of the mean of C^2; standard error by the delta method,
/// se(sqrt(m)) = se(m) / (2 sqrt(m)), reported as 0 when m < 1e-12.
inline EstimateResult rms_coherence(Measure measure, const DensityOperator& rho, std::uint64_t n, std::uint64_t seed,
                                    double log_base = 2.0, unsigned threads = 1) {
    const auto base = detail::coherence_statistic(measure, rho, log_base);
    const detail::RotatedStatistic squared = [base](const ComplexMatrix& m) {
        const double c = base(m);
        return c * c;
    };
    const auto moments = detail::haar_moments(rho, squared, n, seed, threads);
    const double ms = std::max(moments.mean, 0.0);
    const double rms = std::sqrt(ms);
    const double se = ms < 1e-12 ? 0.0 : moments.std_error() / (2.0 * rms);
    return {rms, se, moments.n, seed};
}

/// Estimates the Haar mean of P(U A U^dagger | rho); closed form (1 + P) / (1 + d).
inline EstimateResult mean_classical_purity(const DensityOperator& rho, std::uint64_t n, std::uint64_t seed,
                                            unsigned threads = 1) {
    const detail::RotatedStatistic stat = [](const ComplexMatrix& m) { return in_basis::classical_purity(m); };
    return detail::to_estimate(detail::haar_moments(rho, stat, n, seed, threads), seed);
}

/// Estimates the Haar mean of H(U A U^dagger | rho); closed form Q(rho) + C_d.
inline EstimateResult mean_basis_entropy(const DensityOperator& rho, std::uint64_t n, std::uint64_t seed,
                                         double log_base = 2.0, unsigned threads = 1) {
    const double ln_base = log_of_base(log_base);
    const detail::RotatedStatistic stat = [ln_base](const ComplexMatrix& m) { return in_basis::entropy_nats(m) / ln_base; };
    return detail::to_estimate(detail::haar_moments(rho, stat, n, seed, threads), seed);
}

/// (1 + P(rho)) / (1 + d)
inline double mean_classical_purity_closed_form(const DensityOperator& rho) {
    return (1.0 + quantum_purity(rho)) / (1.0 + static_cast<double>(rho.dim()));
}

/// Q(rho) + C_d
inline double mean_basis_entropy_closed_form(const DensityOperator& rho, double log_base = 2.0) {
    return subentropy(rho, log_base) + mub_constant(rho.dim(), log_base);
}

/// Mean relative-entropy coherence C_d - [S(rho) - Q(rho)].
inline double mean_relent_closed_form(const DensityOperator& rho, double log_base = 2.0) {
    return mub_constant(rho.dim(), log_base) - (von_neumann_entropy(rho, log_base) - subentropy(rho, log_base));
}

}  // namespace cohere
