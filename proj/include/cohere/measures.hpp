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
 * @file  measures.hpp
 * @brief Basis-relative coherence measures (l1, l2, relative entropy),
 *        classical purity and entropy, coherence radii and subentropy.
 *
 * Every measure takes the reference basis explicitly. Entropic quantities
 * are computed in nats and converted to the requested log base at the end.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "cohere/linalg.hpp"
#include "cohere/mub.hpp"
#include "cohere/states.hpp"

namespace cohere {

//------------------------------------------------------------------------------
// Measures on a matrix already expressed in the reference basis. These are
// the kernels shared with the Monte Carlo averages, where building a Basis
// per sample would be wasteful.
//------------------------------------------------------------------------------

namespace in_basis {

inline double l1(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (i != j) s += std::abs(m(i, j));
    return s;
}

inline double l2_squared(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return s;
}

inline double classical_purity(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) s += m(i, i).real() * m(i, i).real();
    return s;
}

/// Shannon entropy of the diagonal, in nats.
inline double entropy_nats(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) s += entropy_term(std::max(m(i, i).real(), 0.0));
    return s;
}

}  // namespace in_basis

inline double coherence_l1(const DensityOperator& rho, const Basis& basis) {
    return in_basis::l1(represent_in(rho.matrix(), basis));
}

inline double coherence_l2(const DensityOperator& rho, const Basis& basis) {
    return std::sqrt(in_basis::l2_squared(represent_in(rho.matrix(), basis)));
}

/// P(A|rho) = sum_a <a|rho|a>^2
inline double classical_purity(const DensityOperator& rho, const Basis& basis) {
    double s = 0.0;
    for (double p : basis_probabilities(rho, basis)) s += p * p;
    return s;
}

/// H(A|rho)
inline double basis_entropy(const DensityOperator& rho, const Basis& basis, double log_base = 2.0) {
    const double ln_base = log_of_base(log_base);
    double s = 0.0;
    for (double p : basis_probabilities(rho, basis)) s += entropy_term(p);
    return s / ln_base;
}

/// C_rel = H(A|rho) - S(rho)
inline double coherence_relent(const DensityOperator& rho, const Basis& basis, double log_base = 2.0) {
    return basis_entropy(rho, basis, log_base) - von_neumann_entropy(rho, log_base);
}

/// R1 = sqrt(d (d - 1) [d P(rho) - 1])
inline double coherence_radius_l1(const DensityOperator& rho) {
    const double d = static_cast<double>(rho.dim());
    return std::sqrt(std::max(d * (d - 1.0) * (d * quantum_purity(rho) - 1.0), 0.0));
}

/// R2 = sqrt(d P(rho) - 1)
inline double coherence_radius_l2(const DensityOperator& rho) {
    const double d = static_cast<double>(rho.dim());
    return std::sqrt(std::max(d * quantum_purity(rho) - 1.0, 0.0));
}

/// C_d = (1/2 + 1/3 + ... + 1/d) log e
inline double mub_constant(std::size_t d, double log_base = 2.0) {
    if (d < 2) throw Error(ErrorCode::InvalidDimension, "C_d needs d >= 2");
    const double ln_base = log_of_base(log_base);
    double h = 0.0;
    for (std::size_t k = d; k >= 2; --k) h += 1.0 / static_cast<double>(k);
    return h / ln_base;
}

//------------------------------------------------------------------------------
// Subentropy
//------------------------------------------------------------------------------

inline constexpr double kDegeneracyDelta = 1e-8;
inline constexpr double kZeroEigenvalue = 1e-14;

namespace detail {

/// k-th Taylor coefficient f^(k)(x)/k! of f(x) = -x^n ln x, valid for k <= n:
/// -C(n, k) x^(n-k) (ln x + H_n - H_(n-k)).
inline long double subentropy_taylor_coefficient(std::size_t n, std::size_t k, long double x) {
    long double binom = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) binom = binom * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    long double harmonic_gap = 0.0L;
    for (std::size_t i = n - k + 1; i <= n; ++i) harmonic_gap += 1.0L / static_cast<long double>(i);
    return -binom * std::pow(x, static_cast<long double>(n - k)) * (std::log(x) + harmonic_gap);
}

}  // namespace detail

/// Subentropy Q = -sum_i (prod_{j != i} l_i / (l_i - l_j)) l_i log l_i.
///
/// Evaluated as the divided difference of f(x) = -x^m ln x over the m nonzero
/// eigenvalues. Eigenvalues closer than kDegeneracyDelta are merged into one
/// repeated node, whose confluent entries use f^(k)/k!. Zero eigenvalues are
/// dropped: each one only removes a factor from every residue. The table runs
/// in long double to soften cancellation over near-degenerate gaps.
inline double subentropy(std::span<const double> eigenvalues, double log_base = 2.0) {
    const double ln_base = log_of_base(log_base);
    std::vector<double> nodes;
    double total = 0.0;
    for (double x : eigenvalues) {
        if (!(x >= -kPositivityTol)) throw Error(ErrorCode::InvalidSpectrum, "negative eigenvalue " + std::to_string(x));
        total += x;
        if (x > kZeroEigenvalue) nodes.push_back(x);
    }
    if (std::abs(total - 1.0) > 1e-10 || nodes.empty()) {
        throw Error(ErrorCode::InvalidSpectrum, "eigenvalues sum to " + std::to_string(total));
    }
    std::sort(nodes.begin(), nodes.end());

    // merge near-degenerate runs into their mean
    std::vector<long double> z(nodes.size());
    for (std::size_t start = 0; start < nodes.size();) {
        std::size_t stop = start + 1;
        while (stop < nodes.size() && nodes[stop] - nodes[stop - 1] <= kDegeneracyDelta) ++stop;
        long double mean = 0.0L;
        for (std::size_t i = start; i < stop; ++i) mean += nodes[i];
        mean /= static_cast<long double>(stop - start);
        for (std::size_t i = start; i < stop; ++i) z[i] = mean;
        start = stop;
    }

    const std::size_t n = z.size();
    std::vector<long double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = detail::subentropy_taylor_coefficient(n, 0, z[i]);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            if (z[i] == z[i - k]) {
                c[i] = detail::subentropy_taylor_coefficient(n, k, z[i]);
            } else {
                c[i] = (c[i] - c[i - 1]) / (z[i] - z[i - k]);
            }
        }
    }
    return static_cast<double>(c[n - 1]) / ln_base;
}

inline double subentropy(const DensityOperator& rho, double log_base = 2.0) {
    return subentropy(std::span<const double>(rho.eigenvalues()), log_base);
}

//------------------------------------------------------------------------------
// Qubit observable error
//------------------------------------------------------------------------------

/// Variance of the +-1 observable along `axis`: 1 - (r . axis)^2.
inline double qubit_rms_error(const DensityOperator& rho, const BlochVector& axis) {
    if (rho.dim() != 2) throw Error(ErrorCode::NotQubit, "qubit_rms_error needs d = 2");
    if (std::abs(axis.norm2() - 1.0) > 1e-12) throw Error(ErrorCode::NonUnitVector, "axis must be a unit vector");
    const double proj = bloch_vector(rho).dot(axis);
    return 1.0 - proj * proj;
}

/// Bloch direction of the first vector of a qubit basis; the basis measures
/// the observable |a0><a0| - |a1><a1| = n . sigma.
inline BlochVector basis_axis(const Basis& basis) {
    if (basis.dim() != 2) throw Error(ErrorCode::NotQubit, "basis_axis needs d = 2");
    return bloch_vector(pure_state(basis.state(0)));
}

//------------------------------------------------------------------------------
// Report
//------------------------------------------------------------------------------

struct CoherenceReport {
    double c1 = 0.0;
    double c2 = 0.0;
    double c_rel = 0.0;
    double classical_purity = 0.0;
    double basis_entropy = 0.0;
    double log_base = 2.0;

    bool operator==(const CoherenceReport&) const = default;
};

inline CoherenceReport coherence_report(const DensityOperator& rho, const Basis& basis, double log_base = 2.0) {
    CoherenceReport r;
    r.c1 = coherence_l1(rho, basis);
    r.c2 = coherence_l2(rho, basis);
    r.c_rel = coherence_relent(rho, basis, log_base);
    r.classical_purity = classical_purity(rho, basis);
    r.basis_entropy = basis_entropy(rho, basis, log_base);
    r.log_base = log_base;
    return r;
}

}  // namespace cohere
