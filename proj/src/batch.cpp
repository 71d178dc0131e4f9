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

#include <exception>

#include "hhcoset/haar.hpp"

namespace hhcoset {

namespace {

using Sampler = ComplexMatrix (*)(std::size_t, RngStream &);

// Exceptions must not escape an OpenMP region; the first one is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body body) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(hhcoset_batch_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::vector<ComplexMatrix> sample_parallel(Sampler sampler, std::size_t n, std::size_t count, std::uint64_t seed) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidDim, "dimension must be positive");
    }
    std::vector<ComplexMatrix> out(count, ComplexMatrix(n, n));
    parallel_for(count, [&](std::size_t i) {
        RngStream rng(seed, i);
        out[i] = sampler(n, rng);
    });
    return out;
}

std::vector<ComplexMatrix> sample_serial(Sampler sampler, std::size_t n, std::size_t count, std::uint64_t seed) {
    std::vector<ComplexMatrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RngStream rng(seed, i);
        out.push_back(sampler(n, rng));
    }
    return out;
}

double roundtrip_error(const ComplexMatrix &u, FactorizationKind kind, const Tolerances &tol) {
    return max_abs_difference(multiply_out(factorize(u, kind, tol)), u);
}

}  // namespace

std::vector<ComplexMatrix> haar_batch(std::size_t n, std::size_t count, std::uint64_t seed) {
    return sample_parallel(&haar_unitary, n, count, seed);
}

std::vector<ComplexMatrix> haar_batch_serial(std::size_t n, std::size_t count, std::uint64_t seed) {
    return sample_serial(&haar_unitary, n, count, seed);
}

std::vector<ComplexMatrix> oracle_batch(std::size_t n, std::size_t count, std::uint64_t seed) {
    return sample_parallel(&haar_oracle, n, count, seed);
}

std::vector<ComplexMatrix> oracle_batch_serial(std::size_t n, std::size_t count, std::uint64_t seed) {
    return sample_serial(&haar_oracle, n, count, seed);
}

std::vector<double> roundtrip_errors(std::span<const ComplexMatrix> batch, FactorizationKind kind,
                                     const Tolerances &tol) {
    std::vector<double> out(batch.size());
    parallel_for(batch.size(), [&](std::size_t i) { out[i] = roundtrip_error(batch[i], kind, tol); });
    return out;
}

std::vector<double> roundtrip_errors_serial(std::span<const ComplexMatrix> batch, FactorizationKind kind,
                                            const Tolerances &tol) {
    std::vector<double> out;
    out.reserve(batch.size());
    for (const ComplexMatrix &u : batch) {
        out.push_back(roundtrip_error(u, kind, tol));
    }
    return out;
}

std::vector<double> unitarity_errors(std::span<const ComplexMatrix> batch) {
    std::vector<double> out(batch.size());
    parallel_for(batch.size(), [&](std::size_t i) { out[i] = unitarity_error(batch[i]); });
    return out;
}

std::vector<double> unitarity_errors_serial(std::span<const ComplexMatrix> batch) {
    std::vector<double> out;
    out.reserve(batch.size());
    for (const ComplexMatrix &u : batch) {
        out.push_back(unitarity_error(u));
    }
    return out;
}

}  // namespace hhcoset
