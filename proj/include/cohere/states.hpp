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

#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cohere/linalg.hpp"

namespace cohere {

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

/// Natural log of an entropy base; throws for bases that are not > 1.
inline double log_of_base(double base) {
    if (!(base > 1.0)) throw Error(ErrorCode::InvalidSpectrum, "log base must exceed 1");
    return std::log(base);
}

/// -p ln p with the 0 ln 0 = 0 convention.
inline double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

/// Hermitian, unit-trace, positive d x d matrix. Construction validates and
/// caches the spectrum (ascending, tiny negative eigenvalues clipped to 0).
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix m, double positivity_tol = kPositivityTol) : matrix_(std::move(m)) {
        if (matrix_.dim() == 0) throw Error(ErrorCode::InvalidDimension, "empty density matrix");
        const double tr_err = std::abs(matrix_.trace() - 1.0);
        if (tr_err > kTraceTol) {
            throw Error(ErrorCode::InvalidDensity, "trace deviates from 1 by " + std::to_string(tr_err));
        }
        auto eig = hermitian_eigensystem(matrix_);
        if (eig.values.front() < -positivity_tol) {
            throw Error(ErrorCode::InvalidDensity, "negative eigenvalue " + std::to_string(eig.values.front()));
        }
        for (auto& x : eig.values) x = std::max(x, 0.0);
        eigenvalues_ = std::move(eig.values);
        eigenvectors_ = std::move(eig.vectors);
    }

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
    const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }
    double max_eigenvalue() const { return eigenvalues_.back(); }

    /// p * a + (1 - p) * b
    static DensityOperator mix(double p, const DensityOperator& a, const DensityOperator& b) {
        return DensityOperator(a.matrix() * p + b.matrix() * (1.0 - p));
    }

    /// U rho U^dagger
    DensityOperator conjugated(const ComplexMatrix& u) const {
        ComplexMatrix m = u * matrix_ * u.adjoint();
        // restore exact hermiticity lost to rounding
        for (std::size_t i = 0; i < m.dim(); ++i) {
            m(i, i) = m(i, i).real();
            for (std::size_t j = i + 1; j < m.dim(); ++j) {
                const complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
                m(i, j) = avg;
                m(j, i) = std::conj(avg);
            }
        }
        return DensityOperator(std::move(m));
    }

private:
    ComplexMatrix matrix_;
    std::vector<double> eigenvalues_;
    ComplexMatrix eigenvectors_;
};

struct BlochVector {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    double dot(const BlochVector& o) const { return r1 * o.r1 + r2 * o.r2 + r3 * o.r3; }
    double norm2() const { return dot(*this); }
    std::array<double, 3> components() const { return {r1, r2, r3}; }
};

/// sigma_1, sigma_2, sigma_3
inline std::array<ComplexMatrix, 3> pauli_matrices() {
    const complex i(0.0, 1.0);
    return {ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
            ComplexMatrix{{0.0, -i}, {i, 0.0}},
            ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}};
}

inline DensityOperator maximally_mixed(std::size_t d) {
    if (d == 0) throw Error(ErrorCode::InvalidDimension, "d must be positive");
    return DensityOperator(ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d)));
}

inline DensityOperator pure_state(std::span<const complex> psi) {
    const double n = vector_norm(psi);
    if (std::abs(n - 1.0) > 1e-12) throw Error(ErrorCode::NonUnitVector, "state vector norm " + std::to_string(n));
    return DensityOperator(ComplexMatrix::outer(psi));
}

/// (1 - eps)|b><b| + eps/(d-1) (I - |b><b|). Spectrum: 1 - eps once and
/// eps/(d-1) with multiplicity d-1.
inline DensityOperator epsilon_state(std::size_t d, double epsilon, std::span<const complex> b) {
    if (d < 2) throw Error(ErrorCode::InvalidDimension, "epsilon_state needs d >= 2");
    if (b.size() != d) throw Error(ErrorCode::DimensionMismatch, "vector length differs from d");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw Error(ErrorCode::InvalidEpsilon, "epsilon must be in [0, 1]");
    if (std::abs(vector_norm(b) - 1.0) > 1e-12) throw Error(ErrorCode::NonUnitVector, "|b> must be normalized");

    const ComplexMatrix proj = ComplexMatrix::outer(b);
    const double mixed = epsilon / static_cast<double>(d - 1);
    ComplexMatrix m = proj * (1.0 - epsilon) + (ComplexMatrix::identity(d) - proj) * mixed;
    return DensityOperator(std::move(m));
}

inline DensityOperator from_bloch(const BlochVector& r) {
    if (r.norm2() > 1.0 + 1e-12) throw Error(ErrorCode::BlochNormExceeded, "|r|^2 = " + std::to_string(r.norm2()));
    const auto sigma = pauli_matrices();
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += sigma[0] * r.r1;
    m += sigma[1] * r.r2;
    m += sigma[2] * r.r3;
    return DensityOperator(m * 0.5);
}

/// r_k = Tr(rho sigma_k)
inline BlochVector bloch_vector(const DensityOperator& rho) {
    if (rho.dim() != 2) throw Error(ErrorCode::NotQubit, "Bloch vector needs d = 2");
    const auto sigma = pauli_matrices();
    std::array<double, 3> r{};
    for (int k = 0; k < 3; ++k) r[k] = (rho.matrix() * sigma[k]).trace().real();
    return {r[0], r[1], r[2]};
}

/// Tr(rho^2)
inline double quantum_purity(const DensityOperator& rho) {
    double s = 0.0;
    for (const auto& x : rho.matrix().data()) s += std::norm(x);
    return s;
}

inline double von_neumann_entropy(const DensityOperator& rho, double log_base = 2.0) {
    const double ln_base = log_of_base(log_base);
    double s = 0.0;
    for (double lambda : rho.eigenvalues()) s += entropy_term(lambda);
    return s / ln_base;
}

/// Hilbert-Schmidt-induced random state: G G^dagger / Tr(G G^dagger) with G a
/// d x rank complex Gaussian matrix.
inline DensityOperator sample_random_density(std::size_t d, std::size_t rank, RngStream& rng) {
    if (d == 0) throw Error(ErrorCode::InvalidDimension, "d must be positive");
    if (rank < 1 || rank > d) throw Error(ErrorCode::InvalidRank, "rank must lie in [1, d]");
    std::vector<ComplexVector> cols(rank, ComplexVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < rank; ++k) cols[k][i] = rng.complex_normal();

    ComplexMatrix m(d);
    for (const auto& c : cols) m += ComplexMatrix::outer(c);
    const double tr = m.trace().real();
    m *= 1.0 / tr;
    for (std::size_t i = 0; i < d; ++i) m(i, i) = m(i, i).real();
    return DensityOperator(std::move(m));
}

/// Uniform point in the unit ball.
inline BlochVector sample_bloch_vector(RngStream& rng) {
    while (true) {
        BlochVector r{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
        if (r.norm2() <= 1.0) return r;
    }
}

}  // namespace cohere
