// Copyright 2026 The hhcoset Authors
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

#include "hhcoset/householder.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace hhcoset;
using namespace hhcoset::testing;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no Error thrown";
    return ErrorCode::Parse;
}

ComplexVector unit(std::size_t n, std::size_t k) {
    ComplexVector e(n);
    e[k] = 1.0;
    return e;
}

}  // namespace

TEST(householder, reflect_matrix_examples) {
    EXPECT_EQ(reflect_matrix(Reflection{unit(2, 0), 0}), make_matrix(2, 2, {-1.0, 0.0, 0.0, 1.0}));

    for (double scale : {1.0, 0.3, 7.5}) {
        const ComplexMatrix r = reflect_matrix(Reflection{{scale, scale}, 0});
        EXPECT_LE(max_abs_difference(r, make_matrix(2, 2, {0.0, -1.0, -1.0, 0.0})), 1e-15);
    }

    const Reflection u1{{kI / kSqrt2 + kI, -kI / 2.0, -0.5}, 0};
    const ComplexMatrix r = reflect_matrix(u1);
    EXPECT_NEAR(std::abs(r(0, 0) - (-1.0 / kSqrt2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r(1, 1) - (2.0 + kSqrt2) / 4.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r(2, 2) - (2.0 + kSqrt2) / 4.0), 0.0, 1e-15);
}

TEST(householder, reflect_matrix_rejects_degenerate_pivot) {
    EXPECT_EQ(code_of([] { reflect_matrix(Reflection{ComplexVector(3), 0}); }), ErrorCode::DegeneratePivot);
    EXPECT_EQ(code_of([] { reflect_matrix(Reflection{{1e-8, 0.0}, 0}); }), ErrorCode::DegeneratePivot);
}

TEST(householder, pivot_from_column_examples) {
    {
        const PivotResult p = pivot_from_column(unit(3, 0), 0);
        EXPECT_EQ(p.pivot_phase, 0.0);
        EXPECT_EQ(p.reflection.pivot, (ComplexVector{2.0, 0.0, 0.0}));
    }
    {
        const ComplexVector w{kI / kSqrt2, -kI / 2.0, -0.5};
        const PivotResult p = pivot_from_column(w, 0);
        EXPECT_DOUBLE_EQ(p.pivot_phase, std::numbers::pi / 2);
        const ComplexVector expected{kI / kSqrt2 + kI, -kI / 2.0, -0.5};
        EXPECT_LE(max_abs_difference(p.reflection.pivot, expected), 1e-15);
    }
    {
        // Zero pivot component: phase defined as 0.
        const ComplexVector w{0.0, 1.0};
        const PivotResult p = pivot_from_column(w, 0);
        EXPECT_EQ(p.pivot_phase, 0.0);
        EXPECT_EQ(p.reflection.pivot, (ComplexVector{1.0, 1.0}));
        const ComplexMatrix r = reflect_matrix(p.reflection);
        EXPECT_EQ(r, make_matrix(2, 2, {0.0, -1.0, -1.0, 0.0}));
        const ComplexVector rw = r * std::span<const Complex>(w);
        EXPECT_LE(max_abs_difference(rw, ComplexVector{-1.0, 0.0}), 1e-16);
    }
}

TEST(householder, pivot_from_column_errors) {
    EXPECT_EQ(code_of([] { pivot_from_column(ComplexVector{2.0, 0.0}, 0); }), ErrorCode::NotUnitLength);
    EXPECT_EQ(code_of([] { pivot_from_column(ComplexVector{0.6, 0.8}, 1); }), ErrorCode::LeadingComponentsNonzero);
    EXPECT_EQ(code_of([] { pivot_from_column(ComplexVector{1.0}, 1); }), ErrorCode::DimensionMismatch);
}

TEST(householder, apply_reflection_examples) {
    const Reflection e0{unit(3, 0), 0};
    EXPECT_EQ(apply_reflection(e0, ComplexMatrix::identity(3), Side::left),
              ComplexMatrix::diagonal(ComplexVector{-1.0, 1.0, 1.0}));

    // R_{u1} U0: first column is -e^{i pi/2} e_1, checked against a dense multiply.
    const ComplexMatrix u = u0();
    const PivotResult p = pivot_from_column(u.column(0), 0);
    const ComplexMatrix fast = apply_reflection(p.reflection, u, Side::left);
    const ComplexMatrix dense = reflect_matrix(p.reflection) * u;
    EXPECT_LE(max_abs_difference(fast, dense), 1e-15);
    EXPECT_LE(max_abs_difference(fast.column(0), ComplexVector{-kI, 0.0, 0.0}), 1e-15);
    EXPECT_LE(max_abs_difference(dense.column(0), ComplexVector{-kI, 0.0, 0.0}), 1e-15);
}

TEST(householder, apply_reflection_matches_dense_product) {
    RngStream rng(101);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t level = 0; level < n; ++level) {
            Reflection r{ComplexVector(n), level};
            for (std::size_t i = level; i < n; ++i) {
                const auto [a, b] = rng.normal_pair();
                r.pivot[i] = Complex(a, b);
            }
            const ComplexMatrix dense = reflect_matrix(r);
            const ComplexMatrix left = random_matrix(n, n + 2, rng);
            const ComplexMatrix right = random_matrix(n + 1, n, rng);
            EXPECT_LE(max_abs_difference(apply_reflection(r, left, Side::left), dense * left), 1e-13);
            EXPECT_LE(max_abs_difference(apply_reflection(r, right, Side::right), right * dense), 1e-13);
        }
    }
}

TEST(householder, apply_reflection_errors) {
    const Reflection r{unit(3, 0), 0};
    EXPECT_EQ(code_of([&] { apply_reflection(r, ComplexMatrix(2, 3), Side::left); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([&] { apply_reflection(r, ComplexMatrix(3, 2), Side::right); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { apply_reflection(Reflection{ComplexVector(3), 0}, ComplexMatrix(3, 3), Side::left); }),
              ErrorCode::DegeneratePivot);
}

TEST(householder, decompose_identity) {
    const HouseholderFactorization f = decompose(ComplexMatrix::identity(3));
    ASSERT_EQ(f.reflections.size(), 2u);
    EXPECT_EQ(f.reflections[0].pivot, (ComplexVector{2.0, 0.0, 0.0}));
    EXPECT_EQ(f.reflections[1].pivot, (ComplexVector{0.0, 2.0, 0.0}));
    EXPECT_EQ(f.residual.entries, (ComplexVector{-1.0, -1.0, 1.0}));
    EXPECT_EQ(f.pivot_phases, (std::vector<double>{0.0, 0.0}));
}

TEST(householder, decompose_worked_example_matches_golden) {
    const FactorizationFile golden = load_factorization("u0_householder.json");
    const HouseholderFactorization f = decompose(u0());
    ASSERT_EQ(f.reflections.size(), 2u);
    EXPECT_LE(max_abs_difference(reflect_matrix(f.reflections[0]), golden.factors[0]), 1e-12);
    EXPECT_LE(max_abs_difference(reflect_matrix(f.reflections[1]), golden.factors[1]), 1e-12);
    EXPECT_LE(max_abs_difference(f.residual.entries, ComplexVector{-kI, -kI, -1.0}), 1e-12);
    EXPECT_NEAR(f.pivot_phases[0], std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(f.pivot_phases[1], std::numbers::pi / 2, 1e-12);

    // The printed (3,3) entry (2 + 2 sqrt 2) / 4 is the only one that disagrees.
    const FactorizationFile printed = load_factorization("u0_householder_printed.json");
    ComplexMatrix diff = reflect_matrix(f.reflections[0]) - printed.factors[0];
    EXPECT_NEAR(std::abs(diff(2, 2)), kSqrt2 / 4.0, 1e-12);
    diff(2, 2) = 0.0;
    EXPECT_LE(max_abs(diff), 1e-12);
    EXPECT_GT(unitarity_error(printed.factors[0]), 0.1);
}

TEST(householder, decompose_random_reconstructs) {
    RngStream rng(8);
    const ComplexMatrix u = random_unitary(8, rng);
    EXPECT_LE(max_abs_difference(reconstruct(decompose(u)), u), 1e-11);
}

TEST(householder, decompose_rejects_non_unitary) {
    EXPECT_EQ(code_of([] { decompose(make_matrix(2, 2, {2.0, 0.0, 0.0, 1.0})); }), ErrorCode::NotUnitary);
    EXPECT_EQ(code_of([] { decompose_reversed(make_matrix(2, 2, {2.0, 0.0, 0.0, 1.0})); }), ErrorCode::NotUnitary);
    EXPECT_EQ(code_of([] { decompose(ComplexMatrix(2, 3)); }), ErrorCode::NonSquare);
}

TEST(householder, decompose_reversed_examples) {
    const HouseholderFactorization id = decompose_reversed(ComplexMatrix::identity(2));
    ASSERT_EQ(id.reflections.size(), 1u);
    EXPECT_EQ(reflect_matrix(id.reflections[0]), ComplexMatrix::diagonal(ComplexVector{-1.0, 1.0}));
    EXPECT_EQ(id.residual.entries, (ComplexVector{-1.0, 1.0}));

    const HouseholderFactorization f = decompose_reversed(u0());
    EXPECT_EQ(f.ordering, Ordering::reversed);
    EXPECT_LE(max_abs_difference(f.residual.entries, ComplexVector{-kI, -kI, -1.0}), 1e-12);
    EXPECT_LE(max_abs_difference(reconstruct(f), u0()), 1e-13);

    RngStream rng(6);
    const ComplexMatrix u = random_unitary(6, rng);
    EXPECT_LE(max_abs_difference(reconstruct(decompose_reversed(u)), u), 1e-11);
}

TEST(householder, reversed_reflections_agree_with_forward_of_adjoint) {
    // Row pivots of U are column pivots of U^dagger.
    RngStream rng(77);
    for (std::size_t n = 2; n <= 9; ++n) {
        const ComplexMatrix u = random_unitary(n, rng);
        const HouseholderFactorization rev = decompose_reversed(u);
        const HouseholderFactorization fwd = decompose(u.adjoint());
        for (std::size_t k = 0; k + 1 < n; ++k) {
            EXPECT_LE(max_abs_difference(reflect_matrix(rev.reflections[k]), reflect_matrix(fwd.reflections[k])),
                      1e-12);
        }
        for (std::size_t l = 0; l < n; ++l) {
            EXPECT_NEAR(std::abs(rev.residual.entries[l] - std::conj(fwd.residual.entries[l])), 0.0, 1e-12);
        }
    }
}

TEST(householder, reconstruct_examples) {
    HouseholderFactorization bare;
    bare.dim = 3;
    bare.residual.entries = {1.0, 1.0, 1.0};
    EXPECT_EQ(reconstruct(bare), ComplexMatrix::identity(3));

    EXPECT_LE(max_abs_difference(reconstruct(decompose(u0())), u0()), 1e-13);

    RngStream rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 15);
        const ComplexMatrix u = random_unitary(n, rng);
        EXPECT_LE(max_abs_difference(reconstruct(decompose(u)), u), 1e-11) << "n=" << n;
    }
}

TEST(householder, factorization_properties) {
    RngStream rng(9);
    for (std::size_t n = 1; n <= 12; ++n) {
        const ComplexMatrix u = random_unitary(n, rng);
        for (const auto &f : {decompose(u), decompose_reversed(u)}) {
            ASSERT_EQ(f.reflections.size(), n - 1);
            EXPECT_LE(f.residual.modulus_defect(), 1e-13);
            for (std::size_t k = 0; k + 1 < n; ++k) {
                const Reflection &r = f.reflections[k];
                EXPECT_EQ(r.level, k);
                for (std::size_t i = 0; i < k; ++i) {
                    EXPECT_EQ(r.pivot[i], Complex{});
                }
                // <u|u> = 2 (1 + rho), rho = |u_k| - 1 in [0, 1]
                const double rho = std::abs(r.pivot[k]) - 1.0;
                EXPECT_GE(rho, -1e-15);
                EXPECT_LE(rho, 1.0 + 1e-15);
                EXPECT_NEAR(r.pivot_norm_squared(), 2.0 * (1.0 + rho), 1e-13);

                const ComplexMatrix dense = reflect_matrix(r);
                EXPECT_LE(max_abs_difference(dense * dense, ComplexMatrix::identity(n)), 1e-13);
                EXPECT_LE(std::abs(determinant(dense) + 1.0), 1e-10);

                // residual[k] = -exp(i phi_k)
                EXPECT_LE(std::abs(f.residual.entries[k] + std::polar(1.0, f.pivot_phases[k])), 1e-12);

                // Commutes exactly with R_{e_j}, j < k.
                for (std::size_t j = 0; j < k; ++j) {
                    const ComplexMatrix ej = reflect_matrix(Reflection{unit(n, j), j});
                    EXPECT_LE(max_abs_difference(ej * dense, dense * ej), 1e-15);
                }
            }
        }
    }
}

TEST(householder, pivot_action_and_level_invariance) {
    RngStream rng(31);
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::size_t k = 0; k < n; ++k) {
            ComplexVector w(n);
            for (std::size_t i = k; i < n; ++i) {
                const auto [a, b] = rng.normal_pair();
                w[i] = Complex(a, b);
            }
            const double norm = std::sqrt(norm_squared(w));
            for (auto &z : w) {
                z /= norm;
            }
            const PivotResult p = pivot_from_column(w, k);
            const ComplexMatrix r = reflect_matrix(p.reflection);
            ComplexVector target(n);
            target[k] = -std::polar(1.0, p.pivot_phase);
            EXPECT_LE(max_abs_difference(r * std::span<const Complex>(w), target), 1e-13);

            ComplexVector v(n);
            for (auto &z : v) {
                const auto [a, b] = rng.normal_pair();
                z = Complex(a, b);
            }
            const ComplexVector rv = r * std::span<const Complex>(v);
            for (std::size_t i = 0; i < k; ++i) {
                EXPECT_EQ(rv[i], v[i]);
            }
        }
    }
}

TEST(householder, one_by_one) {
    const ComplexMatrix u = make_matrix(1, 1, {std::polar(1.0, 0.7)});
    const HouseholderFactorization f = decompose(u);
    EXPECT_TRUE(f.reflections.empty());
    EXPECT_EQ(reconstruct(f), u);
}
