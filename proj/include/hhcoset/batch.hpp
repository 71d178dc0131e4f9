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

#pragma once

// Batch kernels over many independent small matrices. Each has an OpenMP
// version and a serial reference; sample i always draws from stream
// (seed, i), so both produce bitwise-identical output for any thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hhcoset/factorization.hpp"
#include "hhcoset/numkit.hpp"

namespace hhcoset {

std::vector<ComplexMatrix> haar_batch(std::size_t n, std::size_t count, std::uint64_t seed);
std::vector<ComplexMatrix> haar_batch_serial(std::size_t n, std::size_t count, std::uint64_t seed);

std::vector<ComplexMatrix> oracle_batch(std::size_t n, std::size_t count, std::uint64_t seed);
std::vector<ComplexMatrix> oracle_batch_serial(std::size_t n, std::size_t count, std::uint64_t seed);

/// max-norm of multiply_out(factorize(u)) - u for every u.
std::vector<double> roundtrip_errors(std::span<const ComplexMatrix> batch, FactorizationKind kind,
                                     const Tolerances &tol = {});
std::vector<double> roundtrip_errors_serial(std::span<const ComplexMatrix> batch, FactorizationKind kind,
                                            const Tolerances &tol = {});

std::vector<double> unitarity_errors(std::span<const ComplexMatrix> batch);
std::vector<double> unitarity_errors_serial(std::span<const ComplexMatrix> batch);

}  // namespace hhcoset
