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
#include <vector>

#include "hhcoset/householder.hpp"
#include "hhcoset/numkit.hpp"

namespace hhcoset {

/// Coordinates X of the coset U(m)/(U(m-1) x U(1)) embedded at `level` of an
/// N x N matrix; X has N - level - 1 components and lives in the unit ball.
struct CosetVector {
    ComplexVector x;
    std::size_t level = 0;
    std::size_t dim = 0;
    /// sqrt(1 - <X|X>), cached.
    double rho = 1.0;

    /// Computes rho from x. Throws BallViolation if <X|X> > 1 + 1e-12 and
    /// DimensionMismatch if x does not fit below `level`.
    static CosetVector from_x(ComplexVector x, std::size_t level, std::size_t dim);

    double r_squared() const { return norm_squared(x); }
};

struct Gamma {
    double modulus = 1.0;
    double phase = 0.0;

    Complex value() const { return std::polar(modulus, phase); }
};

/// Level-k factor in Gilmore form:
///
///     [ 1_k                       ]
///     [      rho     -<X|         ]
///     [      |X>   1 - |X><X|/(1+rho) ]
struct CosetFactor {
    ComplexMatrix matrix;
    std::size_t level = 0;
};

/// forward:  U = C_0 C_1 ... C_{N-2} diag(terminal)
/// reversed: U = diag(terminal) C_{N-2} ... C_1 C_0
struct CosetFactorization {
    std::vector<CosetFactor> factors;
    PhaseDiagonal terminal;
    Ordering ordering = Ordering::forward;
    std::size_t dim = 0;
};

/// The anti-Hermitian generator column B of an exponential coset chart.
struct Generator {
    ComplexVector b;
    std::size_t level = 0;
    std::size_t dim = 0;
};

/// Factor k = R_{u_k} R_{e_k}; the R_{e_k} sign flips are folded into the
/// terminal diagonal. Throws WrongOrdering unless `f` is forward.
CosetFactorization cosets_from_householder(const HouseholderFactorization &f);

/// Factor k = R_{e_k} R_{u_k}. Throws WrongOrdering unless `f` is reversed.
CosetFactorization cosets_from_householder_reversed(const HouseholderFactorization &f);

/// Reads X from the column below the corner and rho from the corner. Throws
/// MalformedFactor when the row disagrees with -<X| by more than 1e-10 or the
/// corner has an imaginary part above 1e-10.
CosetVector extract_coset_vector(const CosetFactor &c);

/// Reversed factors are adjoints of Gilmore-form factors; this reads X from
/// the adjoint.
CosetVector extract_coset_vector_reversed(const CosetFactor &c);

/// Builds the Gilmore-form factor. Throws BallViolation if <X|X> > 1 + 1e-12.
CosetFactor coset_matrix_from_X(const CosetVector &xv);

/// |gamma| = sqrt((1 + rho) / 2). Throws RangeError for rho outside [0, 1].
Gamma gamma_from_rho(double rho, double phase);

/// n = gamma e_k + X / (2 conj(gamma)), a unit vector with
/// (1 - 2|n><n|) R_{e_k} == coset_matrix_from_X(xv) for every phase.
ComplexVector normal_from_coset_vector(const CosetVector &xv, double phase);

/// exp of the anti-Hermitian matrix with B below the level-k corner and -B^dagger
/// to its right. Closed form: corner cos|B|, column X = sin|B|/|B| B, trailing
/// block 1 - (1 - cos|B|)/|B|^2 B B^dagger. For |B| <= pi/2 this is exactly
/// coset_matrix_from_X(X); past pi/2 the corner turns negative.
CosetFactor exp_coset(const Generator &g);

/// 3 x 3 embedding of U(2)/(U(1) x U(1)) at level 1, X = x1 + i x2.
ComplexMatrix coset_u2_explicit(double x1, double x2);

/// 3 x 3 coset U(3)/(U(2) x U(1)) with X = (x5 + i x6, x3 + i x4).
ComplexMatrix coset_u3_explicit(double x3, double x4, double x5, double x6);

/// Ordered product of the factors and the terminal diagonal.
ComplexMatrix compose_cosets(const CosetFactorization &f);

/// Residuals of the identities tying a pivot, its gamma and the coset vector
/// it induces. All should vanish up to rounding.
struct PivotAlgebraDefects {
    double pivot_norm = 0.0;    // <u|u> - 2(1 + rho)
    double gamma_rho = 0.0;     // 2|gamma|^2 - 1 - rho
    double rho_radius = 0.0;    // rho - sqrt(1 - r^2)
    double radius_gamma = 0.0;  // r^2 - 4|gamma|^2 (1 - |gamma|^2)

    double max() const;
};

/// `factor` must be the coset factor built from `r` (either ordering; pass
/// `reversed` accordingly).
PivotAlgebraDefects pivot_algebra_defects(const Reflection &r, const CosetFactor &factor, bool reversed = false);

}  // namespace hhcoset
