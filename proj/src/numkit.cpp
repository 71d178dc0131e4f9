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

#include "hhcoset/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hhcoset {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_square(const ComplexMatrix &m, const char *op) {
    if (!m.is_square()) {
        throw Error(ErrorCode::NonSquare,
                    std::string(op) + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                      std::to_string(entries_.size()));
    }
    if (!all_finite()) {
        throw Error(ErrorCode::NonFinite, "matrix has a NaN or infinite component");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexVector ComplexMatrix::row(std::size_t i) const {
    return ComplexVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
    ComplexVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

ComplexVector ComplexMatrix::diagonal_entries() const {
    ComplexVector out(std::min(rows_, cols_));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (*this)(i, i);
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions " + std::to_string(a.cols()) +
                                                      " and " + std::to_string(b.rows()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "matrix sum");
    ComplexMatrix c = a;
    auto out = c.entries();
    auto rhs = b.entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += rhs[i];
    }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "matrix difference");
    ComplexMatrix c = a;
    auto out = c.entries();
    auto rhs = b.entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= rhs[i];
    }
    return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix c = a;
    for (auto &z : c.entries()) {
        z *= s;
    }
    return c;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector product: " + std::to_string(a.cols()) + " vs " +
                                                      std::to_string(v.size()));
    }
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

double max_abs(const ComplexMatrix &m) {
    double best = 0.0;
    for (const Complex z : m.entries()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_difference");
    return max_abs_difference(a.entries(), b.entries());
}

double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        best = std::max(best, std::abs(a[i] - b[i]));
    }
    return best;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm_squared(std::span<const Complex> v) {
    double acc = 0.0;
    for (const Complex z : v) {
        acc += std::norm(z);
    }
    return acc;
}

double canonical_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::remainder(theta, two_pi);  // [-pi, pi]
    if (t <= -std::numbers::pi) {
        t += two_pi;
    }
    return t;
}

double phase_of(Complex z) {
    if (z == Complex{}) {
        return 0.0;
    }
    // atan2 yields -pi only for a negative real axis with imag == -0.0.
    double phi = std::atan2(z.imag(), z.real());
    return phi <= -std::numbers::pi ? std::numbers::pi : phi;
}

double unitarity_error(const ComplexMatrix &m) {
    require_square(m, "unitarity_error");
    const std::size_t n = m.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k) {
                acc += std::conj(m(k, i)) * m(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

ComplexMatrix expm_series(const ComplexMatrix &a) {
    require_square(a, "expm_series");
    const std::size_t n = a.rows();
    const double magnitude = max_abs(a);
    if (magnitude == 0.0) {
        return ComplexMatrix::identity(n);
    }

    const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(magnitude))) + 2);
    const ComplexMatrix scaled = std::ldexp(1.0, -squarings) * a;

    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int j = 1; j < 200; ++j) {
        term = (1.0 / j) * (term * scaled);
        sum = sum + term;
        if (max_abs(term) < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

Complex determinant(const ComplexMatrix &m) {
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    ComplexMatrix lu = m;
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) {
                pivot = r;
            }
        }
        if (lu(pivot, col) == Complex{}) {
            return Complex{};
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(pivot, j), lu(col, j));
            }
            det = -det;
        }
        det *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = lu(r, col) / lu(col, col);
            for (std::size_t j = col; j < n; ++j) {
                lu(r, j) -= factor * lu(col, j);
            }
        }
    }
    return det;
}

void Tolerances::validate() const {
    if (!(unitarity_tol > 0.0) || !(degenerate_tol > 0.0) || !(reconstruction_tol > 0.0)) {
        throw Error(ErrorCode::InvalidTolerance, "all tolerances must be strictly positive");
    }
}

}  // namespace hhcoset
