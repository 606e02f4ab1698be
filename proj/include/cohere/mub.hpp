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
 * @file  mub.hpp
 * @brief Complete sets of mutually unbiased bases for prime d, dephasing
 *        and state reconstruction from MUB statistics.
 */

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cohere/linalg.hpp"
#include "cohere/states.hpp"

namespace cohere {

inline constexpr double kUnbiasedTol = 1e-10;

inline bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

/// max over (a, b) of | |<a|b>|^2 - 1/d |
inline double unbiasedness_deviation(const Basis& a, const Basis& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "unbiasedness_deviation");
    const double inv_d = 1.0 / static_cast<double>(a.dim());
    const ComplexMatrix overlaps = a.vectors.adjoint() * b.vectors;
    double worst = 0.0;
    for (const auto& x : overlaps.data()) worst = std::max(worst, std::abs(std::norm(x) - inv_d));
    return worst;
}

/// d + 1 pairwise unbiased bases, computational basis first.
class MubSet {
public:
    MubSet(std::size_t dim, std::vector<Basis> bases) : dim_(dim), bases_(std::move(bases)) {
        if (bases_.size() != dim_ + 1) throw Error(ErrorCode::InvalidDimension, "a complete MUB set has d + 1 bases");
        for (std::size_t i = 0; i < bases_.size(); ++i) {
            if (bases_[i].dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "basis dimension differs from d");
            for (std::size_t j = i + 1; j < bases_.size(); ++j) {
                if (unbiasedness_deviation(bases_[i], bases_[j]) > kUnbiasedTol) {
                    throw Error(ErrorCode::NotApplicable,
                                "bases " + std::to_string(i) + " and " + std::to_string(j) + " are not unbiased");
                }
            }
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return bases_.size(); }
    const std::vector<Basis>& bases() const noexcept { return bases_; }
    const Basis& operator[](std::size_t j) const { return bases_.at(j); }

    auto begin() const { return bases_.begin(); }
    auto end() const { return bases_.end(); }

private:
    std::size_t dim_;
    std::vector<Basis> bases_;
};

/// d = 2: eigenbases of sigma_3, sigma_1, sigma_2.
/// odd prime d: computational basis, then for m = 1..d the basis whose k-th
/// vector has components d^{-1/2} w^{m j^2 + k j}, w = exp(2 pi i / d).
inline MubSet build_complete_mub(std::size_t d) {
    if (!is_prime(d)) {
        throw Error(ErrorCode::NonPrimeDimension, "complete MUBs are only built for prime d, got " + std::to_string(d));
    }
    std::vector<Basis> bases;
    bases.reserve(d + 1);
    if (d == 2) {
        const double h = M_SQRT1_2;
        const complex i(0.0, 1.0);
        bases.emplace_back(ComplexMatrix::identity(2), "sigma3");
        bases.emplace_back(ComplexMatrix{{h, h}, {h, -h}}, "sigma1");
        bases.emplace_back(ComplexMatrix{{h, h}, {i * h, -i * h}}, "sigma2");
        return MubSet(2, std::move(bases));
    }

    bases.push_back(computational_basis(d));
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t m = 1; m <= d; ++m) {
        ComplexMatrix v(d);
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t j = 0; j < d; ++j) {
                // exponent reduced mod d in integers keeps the phases exact
                const std::size_t e = (m * j % d * j + k * j) % d;
                v(j, k) = std::polar(amp, 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(d));
            }
        }
        bases.emplace_back(std::move(v), "mub" + std::to_string(m));
    }
    return MubSet(d, std::move(bases));
}

/// Matrix elements <a|rho|a'> of rho in the basis A, i.e. A^dagger rho A.
inline ComplexMatrix represent_in(const ComplexMatrix& rho, const Basis& basis) {
    if (rho.dim() != basis.dim()) throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
    return basis.vectors.adjoint() * rho * basis.vectors;
}

/// Outcome probabilities <a|rho|a>.
inline std::vector<double> basis_probabilities(const DensityOperator& rho, const Basis& basis) {
    if (rho.dim() != basis.dim()) throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
    const std::size_t d = rho.dim();
    std::vector<double> p(d);
    for (std::size_t k = 0; k < d; ++k) {
        const ComplexVector a = basis.state(k);
        const ComplexVector ra = rho.matrix() * std::span<const complex>(a);
        p[k] = std::max(inner(a, ra).real(), 0.0);
    }
    return p;
}

/// Dephased state rho(A) = sum_a |a><a| <a|rho|a>.
inline DensityOperator diagonal_part(const DensityOperator& rho, const Basis& basis) {
    const auto p = basis_probabilities(rho, basis);
    ComplexMatrix m(rho.dim());
    for (std::size_t k = 0; k < p.size(); ++k) m += ComplexMatrix::outer(basis.state(k)) * p[k];
    return DensityOperator(std::move(m));
}

inline constexpr double kReconstructionPositivityTol = 1e-8;

/// Reconstructs rho = sum_j rho(A_j) - I from the outcome distributions of a
/// complete MUB set. Row j of `probabilities` is the distribution for basis j.
inline DensityOperator ivanovic_reconstruct(const MubSet& mubs, const std::vector<std::vector<double>>& probabilities) {
    const std::size_t d = mubs.dim();
    if (probabilities.size() != d + 1) {
        throw Error(ErrorCode::MalformedDistribution, "expected d + 1 distributions");
    }
    ComplexMatrix m = ComplexMatrix::identity(d) * -1.0;
    for (std::size_t j = 0; j <= d; ++j) {
        const auto& row = probabilities[j];
        if (row.size() != d) throw Error(ErrorCode::MalformedDistribution, "distribution " + std::to_string(j) + " has wrong length");
        double total = 0.0;
        for (double p : row) {
            if (!(p >= 0.0)) throw Error(ErrorCode::MalformedDistribution, "negative probability");
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-10) {
            throw Error(ErrorCode::MalformedDistribution, "distribution " + std::to_string(j) + " sums to " + std::to_string(total));
        }
        for (std::size_t k = 0; k < d; ++k) m += ComplexMatrix::outer(mubs[j].state(k)) * row[k];
    }
    try {
        return DensityOperator(std::move(m), kReconstructionPositivityTol);
    } catch (const Error& e) {
        throw Error(ErrorCode::InconsistentStatistics, e.what());
    }
}

/// Exact statistics of rho in every basis of the set.
inline std::vector<std::vector<double>> mub_statistics(const DensityOperator& rho, const MubSet& mubs) {
    std::vector<std::vector<double>> rows;
    rows.reserve(mubs.size());
    for (const auto& b : mubs) rows.push_back(basis_probabilities(rho, b));
    return rows;
}

}  // namespace cohere
