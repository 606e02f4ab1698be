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
 * @file  linalg.hpp
 * @brief Small dense complex-matrix kernel: storage, Hermitian eigensolver,
 *        seeded random streams and Haar-distributed unitaries.
 *
 * Dimensions here are tiny (d <= ~32), so everything is a plain row-major
 * std::vector and O(d^3) loops.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohere/error.hpp"

namespace cohere {

using complex = std::complex<double>;
using ComplexVector = std::vector<complex>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

//------------------------------------------------------------------------------
// ComplexMatrix
//------------------------------------------------------------------------------

/// Square d x d complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) : dim_(rows.size()) {
        data_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_) {
                throw Error(ErrorCode::DimensionMismatch, "matrix rows must all have length d");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Diagonal matrix with the given real entries.
    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const complex> v) {
        ComplexMatrix m(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    ComplexVector column(std::size_t j) const {
        ComplexVector c(dim_);
        for (std::size_t i = 0; i < dim_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, std::span<const complex> c) {
        for (std::size_t i = 0; i < dim_; ++i) (*this)(i, j) = c[i];
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    complex trace() const {
        complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    ComplexMatrix& operator*=(complex s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.check_same(b);
        const std::size_t n = a.dim_;
        ComplexMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const complex aik = a(i, k);
                if (aik == complex{}) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend ComplexVector operator*(const ComplexMatrix& a, std::span<const complex> v) {
        if (v.size() != a.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
        ComplexVector r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }

    bool operator==(const ComplexMatrix&) const = default;

    std::span<const complex> data() const noexcept { return data_; }

private:
    void check_same(const ComplexMatrix& o) const {
        if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
    }

    std::size_t dim_ = 0;
    std::vector<complex> data_;
};

/// max_ij |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

inline double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

inline double unitarity_defect(const ComplexMatrix& m) {
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim()));
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
    return hermiticity_defect(m) <= tol;
}

inline bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol) {
    return unitarity_defect(m) <= tol;
}

/// Frobenius norm of the strictly off-diagonal part.
inline double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

inline double vector_norm(std::span<const complex> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

/// <u|v>
inline complex inner(std::span<const complex> u, std::span<const complex> v) {
    complex s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

//------------------------------------------------------------------------------
// Random streams
//------------------------------------------------------------------------------

/// Seeded stream of uniforms and Gaussians. A stream is fully determined by
/// (master_seed, stream_index); distinct indices give decorrelated engines via
/// a splitmix64 mix of the pair.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : master_seed_(master_seed), stream_index_(stream_index), engine_(derive_seed(master_seed, stream_index)) {}

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_index() const noexcept { return stream_index_; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Circular complex Gaussian with E|z|^2 = 1.
    complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return complex(re, im) * M_SQRT1_2;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    }

    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

//------------------------------------------------------------------------------
// Hermitian eigensolver
//------------------------------------------------------------------------------

struct Eigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi. Each rotation first removes the phase of the pivot
/// a_pq, then applies the real symmetric Jacobi rotation that zeroes it.
inline Eigensystem hermitian_eigensystem(const ComplexMatrix& m, int max_sweeps = 100) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error(ErrorCode::InvalidDimension, "eigensystem of an empty matrix");
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol) {
        throw Error(ErrorCode::NonHermitianInput, "hermiticity defect " + std::to_string(defect));
    }

    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);

    double frob = 0.0;
    for (const auto& x : a.data()) frob += std::norm(x);
    frob = std::sqrt(frob);
    const double threshold = 1e-14 * frob;

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweep++ >= max_sweeps) {
            throw Error(ErrorCode::ConvergenceFailure, "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // negligible against both diagonal entries: just drop it
                if (mag < 1e-18 * (std::abs(app) + std::abs(aqq)) ) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const complex phase = a(p, q) / mag;  // e^{i phi}
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // G = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q)
                const complex gpp = c;
                const complex gpq = s;
                const complex gqp = -s * std::conj(phase);
                const complex gqq = c * std::conj(phase);

                // a <- a G
                for (std::size_t k = 0; k < n; ++k) {
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                // a <- G^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const complex apk = a(p, k);
                    const complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const complex vkp = v(k, p);
                    const complex vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Eigensystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

//------------------------------------------------------------------------------
// Haar unitaries
//------------------------------------------------------------------------------

/// Ginibre matrix orthonormalized column by column (Gram-Schmidt, two passes).
/// Normalizing each column by its positive norm is the same as forcing the
/// QR factor R to a positive real diagonal, which makes the factorization
/// unique and the resulting Q Haar distributed.
inline ComplexMatrix sample_haar_unitary(std::size_t d, RngStream& rng) {
    if (d == 0) throw Error(ErrorCode::InvalidDimension, "d must be positive");
    ComplexMatrix g(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_normal();

    std::vector<ComplexVector> cols;
    cols.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        ComplexVector c = g.column(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : cols) {
                const complex proj = inner(q, c);
                for (std::size_t i = 0; i < d; ++i) c[i] -= proj * q[i];
            }
        }
        const double nrm = vector_norm(c);
        for (auto& x : c) x /= nrm;
        cols.push_back(std::move(c));
    }
    ComplexMatrix u(d);
    for (std::size_t j = 0; j < d; ++j) u.set_column(j, cols[j]);
    return u;
}

//------------------------------------------------------------------------------
// Bases
//------------------------------------------------------------------------------

/// Orthonormal basis; column k of `vectors` is the k-th basis state.
struct Basis {
    ComplexMatrix vectors;
    std::string label;

    Basis() = default;
    Basis(ComplexMatrix v, std::string l) : vectors(std::move(v)), label(std::move(l)) {
        if (!is_unitary(vectors)) {
            throw Error(ErrorCode::NonUnitary, "basis '" + label + "' is not orthonormal");
        }
    }

    std::size_t dim() const noexcept { return vectors.dim(); }
    ComplexVector state(std::size_t k) const { return vectors.column(k); }
};

inline Basis computational_basis(std::size_t d) {
    return Basis(ComplexMatrix::identity(d), "computational");
}

/// Basis with columns U|a>.
inline Basis rotate_basis(const Basis& basis, const ComplexMatrix& u) {
    if (u.dim() != basis.dim()) throw Error(ErrorCode::DimensionMismatch, "rotate_basis");
    if (!is_unitary(u)) throw Error(ErrorCode::NonUnitary, "rotation is not unitary");
    return Basis(u * basis.vectors, basis.label + "/rotated");
}

}  // namespace cohere
