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

#include "hhcoset/numkit.hpp"

namespace hhcoset {

// Levels are 0-based throughout: a level-k reflection acts as the identity on
// coordinates 0..k-1, and a factorization of an N x N matrix has levels
// 0..N-2.

/// R = 1 - 2|u><u| / <u|u> for an un-normalized pivot u.
struct Reflection {
    ComplexVector pivot;
    std::size_t level = 0;

    std::size_t dim() const noexcept { return pivot.size(); }
    double pivot_norm_squared() const { return norm_squared(pivot); }
};

/// Unit-modulus diagonal, stored as the complex entries themselves.
struct PhaseDiagonal {
    ComplexVector entries;

    std::size_t size() const noexcept { return entries.size(); }
    ComplexMatrix matrix() const { return ComplexMatrix::diagonal(entries); }
    /// max_l | |e_l| - 1 |
    double modulus_defect() const;
    std::vector<double> angles() const;
};

enum class Ordering { forward, reversed };

/// forward:  U = R_0 R_1 ... R_{N-2} diag(residual)
/// reversed: U = diag(residual) R_{N-2} ... R_1 R_0
struct HouseholderFactorization {
    std::vector<Reflection> reflections;
    PhaseDiagonal residual;
    Ordering ordering = Ordering::forward;
    std::size_t dim = 0;
    /// Phase of the pivot component of each column (forward) or row
    /// (reversed); residual[k] == -exp(i * pivot_phases[k]).
    std::vector<double> pivot_phases;
};

enum class Side { left, right };

struct PivotResult {
    Reflection reflection;
    double pivot_phase = 0.0;
};

/// Dense form of the reflection. Throws DegeneratePivot when <u|u> is at or
/// below `degenerate_tol`.
ComplexMatrix reflect_matrix(const Reflection &r, double degenerate_tol = Tolerances{}.degenerate_tol);

/// Builds u = w + e^{i phi} e_k with phi the phase of w_k (zero when w_k == 0),
/// so that R_u w = -e^{i phi} e_k. Components of w below index k are taken as
/// zero in u; they must already be within `tol.unitarity_tol` of zero.
PivotResult pivot_from_column(std::span<const Complex> w, std::size_t level, const Tolerances &tol = {});

/// R*M (left) or M*R (right) through the rank-1 form, touching only the
/// rows/columns at or past the reflection level.
ComplexMatrix apply_reflection(const Reflection &r, const ComplexMatrix &m, Side side,
                               double degenerate_tol = Tolerances{}.degenerate_tol);

/// In-place variant used by the factorization loops.
void apply_reflection_in_place(const Reflection &r, ComplexMatrix &m, Side side,
                               double degenerate_tol = Tolerances{}.degenerate_tol);

/// Column-pivot factorization. Throws NotUnitary when
/// unitarity_error(u) > tol.unitarity_tol.
HouseholderFactorization decompose(const ComplexMatrix &u, const Tolerances &tol = {});

/// Row-pivot factorization: row k of the progressively reflected matrix
/// defines <u_k| = <W_k| + e^{i phi_k} <e_k|.
HouseholderFactorization decompose_reversed(const ComplexMatrix &u, const Tolerances &tol = {});

/// Multiplies the factors back together in the order given by `f.ordering`.
ComplexMatrix reconstruct(const HouseholderFactorization &f);

}  // namespace hhcoset
