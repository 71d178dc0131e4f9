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

#include "hhcoset/coset.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace hhcoset {

namespace {

constexpr double kBallSlack = 1e-12;
constexpr double kReadTol = 1e-10;

std::size_t require_factor_shape(const ComplexMatrix &m, std::size_t level) {
    if (!m.is_square()) {
        throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (level >= m.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "level " + std::to_string(level) + " out of range for dim " + std::to_string(m.rows()));
    }
    return m.rows();
}

PhaseDiagonal fold_level_flips(const PhaseDiagonal &residual) {
    // R_{e_0} ... R_{e_{N-2}} diag(residual): every entry but the last flips sign.
    PhaseDiagonal out = residual;
    for (std::size_t l = 0; l + 1 < out.entries.size(); ++l) {
        out.entries[l] = -out.entries[l];
    }
    return out;
}

double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

}  // namespace

CosetVector CosetVector::from_x(ComplexVector x, std::size_t level, std::size_t dim) {
    if (level >= dim || x.size() != dim - level - 1) {
        throw Error(ErrorCode::DimensionMismatch, "coset vector of length " + std::to_string(x.size()) +
                                                      " at level " + std::to_string(level) + " of dim " +
                                                      std::to_string(dim));
    }
    const double r2 = norm_squared(x);
    if (!(r2 <= 1.0 + kBallSlack)) {
        throw Error(ErrorCode::BallViolation, "<X|X> = " + std::to_string(r2));
    }
    CosetVector out;
    out.x = std::move(x);
    out.level = level;
    out.dim = dim;
    out.rho = std::sqrt(std::max(0.0, 1.0 - r2));
    return out;
}

CosetFactorization cosets_from_householder(const HouseholderFactorization &f) {
    if (f.ordering != Ordering::forward) {
        throw Error(ErrorCode::WrongOrdering, "cosets_from_householder needs a forward factorization");
    }
    CosetFactorization out;
    out.ordering = Ordering::forward;
    out.dim = f.dim;
    for (const Reflection &r : f.reflections) {
        ComplexMatrix m = reflect_matrix(r);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            m(i, r.level) = -m(i, r.level);
        }
        out.factors.push_back(CosetFactor{std::move(m), r.level});
    }
    out.terminal = fold_level_flips(f.residual);
    return out;
}

CosetFactorization cosets_from_householder_reversed(const HouseholderFactorization &f) {
    if (f.ordering != Ordering::reversed) {
        throw Error(ErrorCode::WrongOrdering, "cosets_from_householder_reversed needs a reversed factorization");
    }
    CosetFactorization out;
    out.ordering = Ordering::reversed;
    out.dim = f.dim;
    for (const Reflection &r : f.reflections) {
        ComplexMatrix m = reflect_matrix(r);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(r.level, j) = -m(r.level, j);
        }
        out.factors.push_back(CosetFactor{std::move(m), r.level});
    }
    out.terminal = fold_level_flips(f.residual);
    return out;
}

CosetVector extract_coset_vector(const CosetFactor &c) {
    const std::size_t n = require_factor_shape(c.matrix, c.level);
    const std::size_t k = c.level;
    const Complex corner = c.matrix(k, k);
    if (std::abs(corner.imag()) > kReadTol || corner.real() < -kReadTol) {
        throw Error(ErrorCode::MalformedFactor, "corner entry is not a nonnegative real");
    }
    CosetVector out;
    out.level = k;
    out.dim = n;
    out.rho = std::clamp(corner.real(), 0.0, 1.0);
    out.x.resize(n - k - 1);
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        out.x[i] = c.matrix(k + 1 + i, k);
        if (std::abs(c.matrix(k, k + 1 + i) + std::conj(out.x[i])) > kReadTol) {
            throw Error(ErrorCode::MalformedFactor, "row " + std::to_string(k) + " is not -<X|");
        }
    }
    return out;
}

CosetVector extract_coset_vector_reversed(const CosetFactor &c) {
    return extract_coset_vector(CosetFactor{c.matrix.adjoint(), c.level});
}

CosetFactor coset_matrix_from_X(const CosetVector &xv) {
    const std::size_t n = xv.dim;
    const std::size_t k = xv.level;
    if (k >= n || xv.x.size() != n - k - 1) {
        throw Error(ErrorCode::DimensionMismatch, "malformed coset vector");
    }
    const double r2 = xv.r_squared();
    if (!(r2 <= 1.0 + kBallSlack)) {
        throw Error(ErrorCode::BallViolation, "<X|X> = " + std::to_string(r2));
    }
    // (1 - sqrt(1 - r^2)) / r^2 == 1 / (1 + rho), without the 0/0 at X = 0.
    const double coeff = 1.0 / (1.0 + xv.rho);
    ComplexMatrix m = ComplexMatrix::identity(n);
    m(k, k) = xv.rho;
    for (std::size_t i = 0; i < xv.x.size(); ++i) {
        m(k + 1 + i, k) = xv.x[i];
        m(k, k + 1 + i) = -std::conj(xv.x[i]);
        for (std::size_t j = 0; j < xv.x.size(); ++j) {
            m(k + 1 + i, k + 1 + j) -= coeff * xv.x[i] * std::conj(xv.x[j]);
        }
    }
    return CosetFactor{std::move(m), k};
}

Gamma gamma_from_rho(double rho, double phase) {
    if (!(rho >= -kBallSlack && rho <= 1.0 + kBallSlack)) {
        throw Error(ErrorCode::RangeError, "rho = " + std::to_string(rho) + " outside [0, 1]");
    }
    rho = std::clamp(rho, 0.0, 1.0);
    return Gamma{std::sqrt((1.0 + rho) / 2.0), phase};
}

ComplexVector normal_from_coset_vector(const CosetVector &xv, double phase) {
    if (xv.level >= xv.dim || xv.x.size() != xv.dim - xv.level - 1) {
        throw Error(ErrorCode::DimensionMismatch, "malformed coset vector");
    }
    const double r2 = xv.r_squared();
    if (!(r2 <= 1.0 + kBallSlack)) {
        throw Error(ErrorCode::BallViolation, "<X|X> = " + std::to_string(r2));
    }
    const Complex gamma = gamma_from_rho(xv.rho, phase).value();
    const Complex scale = 1.0 / (2.0 * std::conj(gamma));
    ComplexVector n(xv.dim);
    n[xv.level] = gamma;
    for (std::size_t i = 0; i < xv.x.size(); ++i) {
        n[xv.level + 1 + i] = scale * xv.x[i];
    }
    return n;
}

CosetFactor exp_coset(const Generator &g) {
    const std::size_t n = g.dim;
    const std::size_t k = g.level;
    if (k >= n || g.b.size() != n - k - 1) {
        throw Error(ErrorCode::DimensionMismatch, "malformed generator");
    }
    for (const Complex z : g.b) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::NonFinite, "generator has a NaN or infinite component");
        }
    }
    const double theta = std::sqrt(norm_squared(g.b));
    const double column_scale = sinc(theta);
    // (1 - cos t) / t^2 written so that it stays accurate as t -> 0.
    const double half_sinc = sinc(theta / 2.0);
    const double block_scale = 0.5 * half_sinc * half_sinc;

    ComplexMatrix m = ComplexMatrix::identity(n);
    m(k, k) = std::cos(theta);
    for (std::size_t i = 0; i < g.b.size(); ++i) {
        const Complex x = column_scale * g.b[i];
        m(k + 1 + i, k) = x;
        m(k, k + 1 + i) = -std::conj(x);
        for (std::size_t j = 0; j < g.b.size(); ++j) {
            m(k + 1 + i, k + 1 + j) -= block_scale * g.b[i] * std::conj(g.b[j]);
        }
    }
    return CosetFactor{std::move(m), k};
}

ComplexMatrix coset_u2_explicit(double x1, double x2) {
    const double r2 = x1 * x1 + x2 * x2;
    if (!(r2 <= 1.0 + kBallSlack)) {
        throw Error(ErrorCode::BallViolation, "(x1)^2 + (x2)^2 = " + std::to_string(r2));
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - r2));
    ComplexMatrix m = ComplexMatrix::identity(3);
    m(1, 1) = s;
    m(1, 2) = Complex(-x1, x2);
    m(2, 1) = Complex(x1, x2);
    m(2, 2) = s;
    return m;
}

ComplexMatrix coset_u3_explicit(double x3, double x4, double x5, double x6) {
    const double upper = x5 * x5 + x6 * x6;
    const double lower = x3 * x3 + x4 * x4;
    const double xi2 = upper + lower;
    if (!(xi2 <= 1.0 + kBallSlack)) {
        throw Error(ErrorCode::BallViolation, "xi^2 = " + std::to_string(xi2));
    }
    if (xi2 == 0.0) {
        return ComplexMatrix::identity(3);
    }
    const double rho = std::sqrt(std::max(0.0, 1.0 - xi2));
    const double v22 = (lower + rho * upper) / xi2;
    const double v33 = (upper + rho * lower) / xi2;
    // (rho - 1) / xi^2 == -1 / (1 + rho)
    const Complex v23 = -(Complex(x3, -x4) * Complex(x5, x6)) / (1.0 + rho);

    ComplexMatrix m(3, 3);
    m(0, 0) = rho;
    m(0, 1) = Complex(-x5, x6);
    m(0, 2) = Complex(-x3, x4);
    m(1, 0) = Complex(x5, x6);
    m(1, 1) = v22;
    m(1, 2) = v23;
    m(2, 0) = Complex(x3, x4);
    m(2, 1) = std::conj(v23);
    m(2, 2) = v33;
    return m;
}

ComplexMatrix compose_cosets(const CosetFactorization &f) {
    ComplexMatrix out = f.terminal.matrix();
    if (!f.factors.empty() && f.factors.size() + 1 != out.rows()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(f.factors.size()) + " factors for dim " +
                                                      std::to_string(out.rows()));
    }
    for (std::size_t idx = f.factors.size(); idx-- > 0;) {
        const ComplexMatrix &c = f.factors[idx].matrix;
        out = f.ordering == Ordering::forward ? c * out : out * c;
    }
    return out;
}

double PivotAlgebraDefects::max() const {
    return std::max({pivot_norm, gamma_rho, rho_radius, radius_gamma});
}

PivotAlgebraDefects pivot_algebra_defects(const Reflection &r, const CosetFactor &factor, bool reversed) {
    const double uu = r.pivot_norm_squared();
    // u_k = (1 + rho) e^{i phi}
    const double rho = std::abs(r.pivot[r.level]) - 1.0;
    const double gamma2 = std::norm(r.pivot[r.level]) / uu;
    const CosetVector xv = reversed ? extract_coset_vector_reversed(factor) : extract_coset_vector(factor);
    const double r2 = xv.r_squared();

    PivotAlgebraDefects d;
    d.pivot_norm = std::abs(uu - 2.0 * (1.0 + rho));
    d.gamma_rho = std::abs(2.0 * gamma2 - 1.0 - rho);
    d.rho_radius = std::abs(rho - std::sqrt(std::max(0.0, 1.0 - r2)));
    d.radius_gamma = std::abs(r2 - 4.0 * gamma2 * (1.0 - gamma2));
    return d;
}

}  // namespace hhcoset
