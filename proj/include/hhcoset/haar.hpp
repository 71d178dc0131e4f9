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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hhcoset/numkit.hpp"
#include "hhcoset/rng.hpp"

namespace hhcoset {

/// Point of the closed unit ball B^{2m}, Cartesian coordinates.
struct BallPoint {
    std::vector<double> coords;

    std::size_t dim() const noexcept { return coords.size(); }
    double radius_squared() const;
    /// Pairs (x^{2j}, x^{2j+1}) read as x^{2j} + i x^{2j+1}.
    ComplexVector as_complex() const;
};

/// Uniform point in B^dim from exactly `dim` draws: `dim` Gaussians give an
/// isotropic direction g/|g|, and the probability integral transform of
/// |g|^2 ~ chi^2_dim supplies the independent uniform U scaling it by U^{1/dim}.
/// Throws OddDimension for odd dim and InvalidDim for dim == 0.
BallPoint sample_ball(std::size_t dim, RngStream &rng);

/// Haar-random U(n) as R_{n_0} ... R_{n_{n-2}} diag(e^{i phi}), each pivot
/// built from a uniform ball point of B^{2(n-k-1)} with arg(gamma) = 0 and
/// the phases uniform on (-pi, pi]. Consumes exactly n^2 draws.
ComplexMatrix haar_unitary(std::size_t n, RngStream &rng);

/// Independent Haar sampler: Gram-Schmidt on a complex Ginibre matrix. The
/// positive diagonal of the implied R is the phase correction. Test use only.
ComplexMatrix haar_oracle(std::size_t n, RngStream &rng);

struct SampleReport {
    std::size_t dim = 0;
    std::size_t sample_count = 0;
    /// One-sample KS of |U_00|^2 against Beta(1, dim - 1).
    double ks_statistic = 0.0;
    double ks_threshold = 0.0;
    /// Row-major dim x dim averages of |U_ij|^2.
    std::vector<double> mean_moduli;

    bool passed() const { return ks_statistic < ks_threshold; }
    double mean_modulus(std::size_t i, std::size_t j) const { return mean_moduli[i * dim + j]; }
};

inline constexpr std::size_t kMinValidationSamples = 1000;

/// Draws `samples` unitaries with haar_unitary (sample i on stream (seed, i))
/// and summarizes them. Throws TooFewSamples below kMinValidationSamples.
SampleReport haar_validate(std::size_t n, std::size_t samples, std::uint64_t seed);

/// Same summary for an existing collection of equally sized matrices.
SampleReport summarize_samples(std::span<const ComplexMatrix> samples);

/// CDF of Beta(1, n - 1), the Haar law of |U_00|^2 in U(n).
double beta1_cdf(double t, std::size_t n);

/// sup |F_n - F| for the empirical distribution of `values`.
double ks_one_sample(std::vector<double> values, const std::function<double(double)> &cdf);
/// sup |F_a - F_b| between two empirical distributions.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Twice the asymptotic 99th-percentile critical value, 2 * 1.63 / sqrt(n).
double ks_threshold(std::size_t n);

}  // namespace hhcoset
