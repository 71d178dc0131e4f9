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

#include "hhcoset/batch.hpp"

#include <omp.h>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace hhcoset;
using namespace hhcoset::testing;

TEST(batch, haar_matches_serial_bitwise) {
    for (std::size_t n : {1u, 3u, 7u}) {
        EXPECT_EQ(haar_batch(n, 64, 5), haar_batch_serial(n, 64, 5));
        EXPECT_EQ(oracle_batch(n, 64, 5), oracle_batch_serial(n, 64, 5));
    }
}

TEST(batch, sample_i_uses_stream_i) {
    const auto batch = haar_batch(4, 10, 123);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        RngStream r(123, i);
        EXPECT_EQ(batch[i], haar_unitary(4, r));
    }
}

TEST(batch, independent_of_thread_count) {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = haar_batch(5, 40, 9);
    omp_set_num_threads(4);
    const auto four = haar_batch(5, 40, 9);
    const auto errs = roundtrip_errors(four, FactorizationKind::coset);
    omp_set_num_threads(saved);
    EXPECT_EQ(one, four);
    EXPECT_EQ(errs, roundtrip_errors_serial(one, FactorizationKind::coset));
}

TEST(batch, roundtrip_and_unitarity) {
    const auto batch = oracle_batch(6, 30, 2);
    for (FactorizationKind kind :
         {FactorizationKind::householder, FactorizationKind::coset, FactorizationKind::coset_reversed}) {
        const auto par = roundtrip_errors(batch, kind);
        EXPECT_EQ(par, roundtrip_errors_serial(batch, kind));
        for (double e : par) {
            EXPECT_LE(e, 1e-11);
        }
    }
    const auto u = unitarity_errors(batch);
    EXPECT_EQ(u, unitarity_errors_serial(batch));
    for (double e : u) {
        EXPECT_LE(e, 1e-12);
    }
}

TEST(batch, errors_propagate) {
    std::vector<ComplexMatrix> bad = oracle_batch(3, 8, 1);
    bad[5] = ComplexMatrix::diagonal(ComplexVector{2.0, 1.0, 1.0});
    try {
        (void)roundtrip_errors(bad, FactorizationKind::householder);
        FAIL() << "expected NotUnitary";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnitary);
    }
    EXPECT_THROW((void)haar_batch(0, 4, 1), Error);
}

TEST(batch, empty_input) {
    EXPECT_TRUE(haar_batch(3, 0, 1).empty());
    EXPECT_TRUE(roundtrip_errors({}, FactorizationKind::coset).empty());
}
