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

#include "cohere/haar_average.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace cohere;

namespace {

constexpr std::uint64_t kN = 100000;

ComplexVector basis_vector(std::size_t d, std::size_t k) {
    ComplexVector v(d, 0.0);
    v[k] = 1.0;
    return v;
}

void expect_within(const EstimateResult& r, double target, double sigmas = 4.0) {
    EXPECT_LE(std::abs(r.mean - target), sigmas * r.std_error + 1e-12)
        << "mean " << r.mean << " target " << target << " se " << r.std_error;
}

}  // namespace

TEST(haar_average, measure_names) {
    for (Measure m : {Measure::L1, Measure::L2, Measure::RelEnt}) EXPECT_EQ(measure_from_name(measure_name(m)), m);
    EXPECT_FALSE(measure_from_name("l3").has_value());
}

TEST(haar_average, maximally_mixed_has_no_coherence) {
    for (Measure m : {Measure::L1, Measure::L2, Measure::RelEnt}) {
        const auto r = mean_coherence(m, maximally_mixed(3), 1000, 1);
        EXPECT_NEAR(r.mean, 0.0, 1e-12);
        EXPECT_NEAR(r.std_error, 0.0, 1e-12);
        EXPECT_EQ(r.n_samples, 1000u);
        EXPECT_EQ(r.master_seed, 1u);
    }
}

TEST(haar_average, relent_of_pure_qubit) {
    expect_within(mean_coherence(Measure::RelEnt, pure_state(basis_vector(2, 0)), kN, 42), 0.72134752044448170);
}

TEST(haar_average, l1_of_pure_qubit_below_radius_bound) {
    const auto r = mean_coherence(Measure::L1, pure_state(basis_vector(2, 0)), kN, 42);
    EXPECT_LE(r.mean, std::sqrt(2.0 / 3.0) + 4 * r.std_error);
}

TEST(haar_average, rms_l2_of_pure_qubit) {
    expect_within(rms_coherence(Measure::L2, pure_state(basis_vector(2, 0)), kN, 42), 1.0 / std::sqrt(3.0));
}

TEST(haar_average, rms_l2_of_mixed_state) {
    RngStream rng(60, 0);
    const auto rho = sample_random_density(5, 5, rng);
    const double p = quantum_purity(rho);
    expect_within(rms_coherence(Measure::L2, rho, kN, 42, 2.0, 4), std::sqrt(p - (1 + p) / 6));
}

TEST(haar_average, classical_purity_examples) {
    expect_within(mean_classical_purity(pure_state(basis_vector(2, 0)), kN, 42), 2.0 / 3.0);
    const auto mixed = mean_classical_purity(maximally_mixed(4), 1000, 3);
    EXPECT_NEAR(mixed.mean, 0.25, 1e-14);
    EXPECT_NEAR(mixed.std_error, 0.0, 1e-14);
    RngStream rng(61, 0);
    const auto rho = sample_random_density(3, 3, rng);
    expect_within(mean_classical_purity(rho, kN, 42, 4), (1 + quantum_purity(rho)) / 4);
}

TEST(haar_average, basis_entropy_examples) {
    expect_within(mean_basis_entropy(pure_state(basis_vector(2, 0)), kN, 42), 0.72134752044448170);
    EXPECT_NEAR(mean_basis_entropy(maximally_mixed(2), 1000, 5).mean, 1.0, 1e-12);
    const auto eps = epsilon_state(3, 0.3, basis_vector(3, 0));
    expect_within(mean_basis_entropy(eps, kN, 42, 2.0, 4), subentropy(eps) + mub_constant(3));
}

TEST(haar_average, relent_closed_form_examples) {
    for (std::size_t d : {2u, 3u, 5u}) {
        EXPECT_NEAR(mean_relent_closed_form(pure_state(basis_vector(d, 0))), mub_constant(d), 1e-12);
        EXPECT_NEAR(mean_relent_closed_form(maximally_mixed(d)), 0.0, 1e-12);
    }
}

TEST(haar_average, relent_closed_form_matches_sampling) {
    RngStream rng(62, 0);
    for (std::size_t d : {2u, 3u, 4u}) {
        const auto rho = sample_random_density(d, d, rng);
        expect_within(mean_coherence(Measure::RelEnt, rho, kN, 42, 2.0, 4), mean_relent_closed_form(rho));
    }
}

TEST(haar_average, relent_closed_form_is_bounded_property) {
    RngStream rng(63, 0);
    for (int k = 0; k < 300; ++k) {
        const std::size_t d = 2 + k % 6;
        const auto rho = sample_random_density(d, 1 + k % d, rng);
        const double c = mean_relent_closed_form(rho);
        ASSERT_GE(c, -1e-12);
        ASSERT_LE(c, mub_constant(d) + 1e-12);
        ASSERT_LE(c, std::log2(static_cast<double>(d)) - von_neumann_entropy(rho) + 1e-12);
    }
}

TEST(haar_average, serial_runs_are_bit_identical) {
    RngStream rng(64, 0);
    const auto rho = sample_random_density(3, 2, rng);
    EXPECT_EQ(mean_coherence(Measure::L1, rho, 5000, 9), mean_coherence(Measure::L1, rho, 5000, 9));
    EXPECT_NE(mean_coherence(Measure::L1, rho, 5000, 9).mean, mean_coherence(Measure::L1, rho, 5000, 10).mean);
}

TEST(haar_average, parallel_matches_serial) {
    RngStream rng(65, 0);
    const auto rho = sample_random_density(4, 4, rng);
    const auto serial = mean_coherence(Measure::L2, rho, 7500, 11);
    for (unsigned threads : {2u, 3u, 8u}) EXPECT_EQ(mean_coherence(Measure::L2, rho, 7500, 11, 2.0, threads), serial);
}

TEST(haar_average, too_few_samples) {
    try {
        mean_coherence(Measure::L1, maximally_mixed(2), 99, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooFewSamples);
    }
}

TEST(haar_average, mean_below_rms) {
    RngStream rng(66, 0);
    for (std::size_t d : {2u, 3u, 4u}) {
        const auto rho = sample_random_density(d, d, rng);
        for (Measure m : {Measure::L1, Measure::L2, Measure::RelEnt}) {
            const auto mean = mean_coherence(m, rho, 20000, 7);
            const auto rms = rms_coherence(m, rho, 20000, 7);
            EXPECT_LE(mean.mean, rms.mean + 4 * std::hypot(mean.std_error, rms.std_error)) << measure_name(m);
        }
    }
}

TEST(haar_average, radius_bounds) {
    RngStream rng(67, 0);
    for (std::size_t d : {2u, 3u, 4u, 5u}) {
        const auto rho = sample_random_density(d, d, rng);
        const double root = std::sqrt(static_cast<double>(d + 1));
        const auto mean1 = mean_coherence(Measure::L1, rho, 20000, 8, 2.0, 4);
        const auto rms1 = rms_coherence(Measure::L1, rho, 20000, 8, 2.0, 4);
        const auto rms2 = rms_coherence(Measure::L2, rho, 20000, 8, 2.0, 4);
        EXPECT_LE(mean1.mean, coherence_radius_l1(rho) / root + 4 * mean1.std_error) << d;
        EXPECT_LE(rms1.mean, coherence_radius_l1(rho) / root + 4 * rms1.std_error) << d;
        expect_within(rms2, coherence_radius_l2(rho) / root);
    }
}

TEST(haar_average, mub_average_matches_haar_closed_form) {
    RngStream rng(68, 0);
    for (std::size_t d : {2u, 3u, 5u, 7u}) {
        const MubSet mubs = build_complete_mub(d);
        for (int k = 0; k < 20; ++k) {
            const auto rho = sample_random_density(d, 1 + k % d, rng);
            double sum = 0.0;
            for (const auto& b : mubs) sum += classical_purity(rho, b);
            ASSERT_NEAR(sum / static_cast<double>(d + 1), mean_classical_purity_closed_form(rho), 1e-10);
        }
    }
}

TEST(haar_average, moments_merge_matches_single_pass) {
    detail::Moments all, left, right;
    for (int k = 0; k < 1000; ++k) {
        const double x = std::sin(0.37 * k) + 0.01 * k;
        all.add(x);
        (k < 400 ? left : right).add(x);
    }
    left.merge(right);
    EXPECT_EQ(left.n, all.n);
    EXPECT_NEAR(left.mean, all.mean, 1e-13);
    EXPECT_NEAR(left.m2, all.m2, 1e-9);
}
