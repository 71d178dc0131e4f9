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

#include "hhcoset/haar.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "hhcoset/batch.hpp"
#include "hhcoset/coset.hpp"
#include "hhcoset/householder.hpp"

namespace hhcoset {

double BallPoint::radius_squared() const {
    double acc = 0.0;
    for (const double x : coords) {
        acc += x * x;
    }
    return acc;
}

ComplexVector BallPoint::as_complex() const {
    ComplexVector out(coords.size() / 2);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = Complex(coords[2 * j], coords[2 * j + 1]);
    }
    return out;
}

BallPoint sample_ball(std::size_t dim, RngStream &rng) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidDim, "ball dimension must be positive");
    }
    if (dim % 2 != 0) {
        throw Error(ErrorCode::OddDimension, "ball dimension " + std::to_string(dim) + " is odd");
    }
    BallPoint p;
    p.coords.resize(dim);
    for (std::size_t j = 0; j < dim; j += 2) {
        const auto [a, b] = rng.normal_pair();
        p.coords[j] = a;
        p.coords[j + 1] = b;
    }
    const double g2 = p.radius_squared();
    if (g2 == 0.0) {
        return p;
    }
    // P(dim/2, g2/2) is the chi^2_dim CDF at g2: uniform and independent of g/|g|.
    const double u = boost::math::gamma_p(static_cast<double>(dim) / 2.0, g2 / 2.0);
    const double scale = std::pow(u, 1.0 / static_cast<double>(dim)) / std::sqrt(g2);
    for (double &x : p.coords) {
        x *= scale;
    }
    return p;
}

ComplexMatrix haar_unitary(std::size_t n, RngStream &rng) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidDim, "dimension must be positive");
    }
    std::vector<Reflection> reflections;
    reflections.reserve(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const BallPoint p = sample_ball(2 * (n - k - 1), rng);
        const CosetVector xv = CosetVector::from_x(p.as_complex(), k, n);
        reflections.push_back(Reflection{normal_from_coset_vector(xv, 0.0), k});
    }
    ComplexVector phases(n);
    for (Complex &z : phases) {
        // pi (1 - 2u) covers (-pi, pi] for u in [0, 1).
        z = std::polar(1.0, std::numbers::pi * (1.0 - 2.0 * rng.uniform()));
    }
    ComplexMatrix u = ComplexMatrix::diagonal(phases);
    for (std::size_t idx = reflections.size(); idx-- > 0;) {
        apply_reflection_in_place(reflections[idx], u, Side::left);
    }
    return u;
}

ComplexMatrix haar_oracle(std::size_t n, RngStream &rng) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidDim, "dimension must be positive");
    }
    ComplexMatrix z(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto [a, b] = rng.normal_pair();
            z(i, j) = Complex(a, b) * (1.0 / std::numbers::sqrt2);
        }
    }
    // Modified Gram-Schmidt, two passes per column.
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                Complex proj{};
                for (std::size_t r = 0; r < n; ++r) {
                    proj += std::conj(z(r, i)) * z(r, j);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    z(r, j) -= proj * z(r, i);
                }
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            norm += std::norm(z(r, j));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) {
            z(r, j) /= norm;
        }
    }
    return z;
}

double beta1_cdf(double t, std::size_t n) {
    if (n <= 1) {
        return t >= 1.0 ? 1.0 : 0.0;
    }
    t = std::clamp(t, 0.0, 1.0);
    return 1.0 - std::pow(1.0 - t, static_cast<double>(n - 1));
}

double ks_one_sample(std::vector<double> values, const std::function<double(double)> &cdf) {
    if (values.empty()) {
        return 0.0;
    }
    std::sort(values.begin(), values.end());
    const double count = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double f = cdf(values[i]);
        d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            ++i;
        }
        while (j < b.size() && b[j] <= x) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_threshold(std::size_t n) { return 2.0 * 1.63 / std::sqrt(static_cast<double>(n)); }

SampleReport summarize_samples(std::span<const ComplexMatrix> samples) {
    if (samples.empty()) {
        throw Error(ErrorCode::TooFewSamples, "no samples");
    }
    const std::size_t n = samples.front().rows();
    SampleReport report;
    report.dim = n;
    report.sample_count = samples.size();
    report.mean_moduli.assign(n * n, 0.0);

    std::vector<double> leading;
    leading.reserve(samples.size());
    for (const ComplexMatrix &u : samples) {
        if (!u.is_square() || u.rows() != n) {
            throw Error(ErrorCode::DimensionMismatch, "samples must share one square shape");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                report.mean_moduli[i * n + j] += std::norm(u(i, j));
            }
        }
        leading.push_back(std::norm(u(0, 0)));
    }
    for (double &m : report.mean_moduli) {
        m /= static_cast<double>(samples.size());
    }
    report.ks_statistic = ks_one_sample(std::move(leading), [n](double t) { return beta1_cdf(t, n); });
    report.ks_threshold = ks_threshold(samples.size());
    return report;
}

SampleReport haar_validate(std::size_t n, std::size_t samples, std::uint64_t seed) {
    if (samples < kMinValidationSamples) {
        throw Error(ErrorCode::TooFewSamples, std::to_string(samples) + " < " + std::to_string(kMinValidationSamples));
    }
    const std::vector<ComplexMatrix> batch = haar_batch(n, samples, seed);
    return summarize_samples(batch);
}

}  // namespace hhcoset
