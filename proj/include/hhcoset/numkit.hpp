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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hhcoset/error.hpp"

namespace hhcoset {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Sizes in this project stay small (N up to
/// a few dozen), so there is no blocking and no view machinery.
class ComplexMatrix {
   public:
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of `entries` (row-major). Throws DimensionMismatch if
    /// the count is wrong and NonFinite on any NaN/Inf component.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    ComplexVector row(std::size_t i) const;
    ComplexVector column(std::size_t j) const;
    ComplexVector diagonal_entries() const;

    ComplexMatrix adjoint() const;
    bool all_finite() const noexcept;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v);

/// Largest |entry|.
double max_abs(const ComplexMatrix &m);
/// Largest |a_ij - b_ij|; throws DimensionMismatch on shape disagreement.
double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b);

/// <a|b> = sum conj(a_i) b_i.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> v);

/// Phase of z canonicalized to (-pi, pi]; zero for z == 0.
double phase_of(Complex z);
/// Maps any angle onto (-pi, pi].
double canonical_angle(double theta);

/// Max-norm of M^dagger M - 1. Zero iff M is exactly unitary.
double unitarity_error(const ComplexMatrix &m);

/// exp(A) by scaling and squaring around a Taylor series summed to machine
/// precision. Slow but simple; it is the reference the closed-form coset
/// exponential is checked against.
ComplexMatrix expm_series(const ComplexMatrix &a);

/// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix &m);

struct Tolerances {
    double unitarity_tol = 1e-10;
    double degenerate_tol = 1e-14;
    double reconstruction_tol = 1e-10;

    /// Throws InvalidTolerance unless every field is strictly positive.
    void validate() const;
};

}  // namespace hhcoset
