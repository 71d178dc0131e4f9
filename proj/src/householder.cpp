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

#include "hhcoset/householder.hpp"

#include <cmath>
#include <string>

namespace hhcoset {

namespace {

double checked_norm_squared(const Reflection &r, double degenerate_tol) {
    const double uu = r.pivot_norm_squared();
    if (!(uu > degenerate_tol)) {
        throw Error(ErrorCode::DegeneratePivot, "<u|u> = " + std::to_string(uu));
    }
    return uu;
}

void require_unitary(const ComplexMatrix &u, const Tolerances &tol) {
    tol.validate();
    if (!u.is_square()) {
        throw Error(ErrorCode::NonSquare, std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
    }
    const double err = unitarity_error(u);
    if (!(err <= tol.unitarity_tol)) {
        throw Error(ErrorCode::NotUnitary, "unitarity_error = " + std::to_string(err));
    }
}

}  // namespace

double PhaseDiagonal::modulus_defect() const {
    double worst = 0.0;
    for (const Complex z : entries) {
        worst = std::max(worst, std::abs(std::abs(z) - 1.0));
    }
    return worst;
}

std::vector<double> PhaseDiagonal::angles() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const Complex z : entries) {
        out.push_back(phase_of(z));
    }
    return out;
}

ComplexMatrix reflect_matrix(const Reflection &r, double degenerate_tol) {
    const double scale = 2.0 / checked_norm_squared(r, degenerate_tol);
    const std::size_t n = r.dim();
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) -= scale * r.pivot[i] * std::conj(r.pivot[j]);
        }
    }
    return m;
}

PivotResult pivot_from_column(std::span<const Complex> w, std::size_t level, const Tolerances &tol) {
    tol.validate();
    if (level >= w.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "level " + std::to_string(level) + " out of range for length " + std::to_string(w.size()));
    }
    const double norm = std::sqrt(norm_squared(w));
    if (!(std::abs(norm - 1.0) <= tol.unitarity_tol)) {
        throw Error(ErrorCode::NotUnitLength, "|w| = " + std::to_string(norm));
    }
    for (std::size_t i = 0; i < level; ++i) {
        if (!(std::abs(w[i]) <= tol.unitarity_tol)) {
            throw Error(ErrorCode::LeadingComponentsNonzero,
                        "|w[" + std::to_string(i) + "]| = " + std::to_string(std::abs(w[i])));
        }
    }

    PivotResult out;
    out.pivot_phase = phase_of(w[level]);
    out.reflection.level = level;
    out.reflection.pivot.assign(w.size(), Complex{});
    for (std::size_t i = level; i < w.size(); ++i) {
        out.reflection.pivot[i] = w[i];
    }
    out.reflection.pivot[level] += std::polar(1.0, out.pivot_phase);
    return out;
}

void apply_reflection_in_place(const Reflection &r, ComplexMatrix &m, Side side, double degenerate_tol) {
    const std::size_t n = r.dim();
    const std::size_t k = r.level;
    const auto &u = r.pivot;
    const double scale = 2.0 / checked_norm_squared(r, degenerate_tol);

    if (side == Side::left) {
        if (m.rows() != n) {
            throw Error(ErrorCode::DimensionMismatch, "left reflection of dim " + std::to_string(n) + " on " +
                                                          std::to_string(m.rows()) + " rows");
        }
        // M <- M - scale |u> (<u| M)
        ComplexVector projected(m.cols());
        for (std::size_t i = k; i < n; ++i) {
            const Complex ui = std::conj(u[i]);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                projected[j] += ui * m(i, j);
            }
        }
        for (std::size_t i = k; i < n; ++i) {
            const Complex ui = scale * u[i];
            for (std::size_t j = 0; j < m.cols(); ++j) {
                m(i, j) -= ui * projected[j];
            }
        }
    } else {
        if (m.cols() != n) {
            throw Error(ErrorCode::DimensionMismatch, "right reflection of dim " + std::to_string(n) + " on " +
                                                          std::to_string(m.cols()) + " columns");
        }
        // M <- M - scale (M |u>) <u|
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Complex mu{};
            for (std::size_t j = k; j < n; ++j) {
                mu += m(i, j) * u[j];
            }
            mu *= scale;
            for (std::size_t j = k; j < n; ++j) {
                m(i, j) -= mu * std::conj(u[j]);
            }
        }
    }
}

ComplexMatrix apply_reflection(const Reflection &r, const ComplexMatrix &m, Side side, double degenerate_tol) {
    ComplexMatrix out = m;
    apply_reflection_in_place(r, out, side, degenerate_tol);
    return out;
}

HouseholderFactorization decompose(const ComplexMatrix &u, const Tolerances &tol) {
    require_unitary(u, tol);
    const std::size_t n = u.rows();

    HouseholderFactorization f;
    f.ordering = Ordering::forward;
    f.dim = n;
    ComplexMatrix work = u;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        PivotResult p = pivot_from_column(work.column(k), k, tol);
        apply_reflection_in_place(p.reflection, work, Side::left, tol.degenerate_tol);
        f.reflections.push_back(std::move(p.reflection));
        f.pivot_phases.push_back(p.pivot_phase);
    }
    f.residual.entries = work.diagonal_entries();
    return f;
}

HouseholderFactorization decompose_reversed(const ComplexMatrix &u, const Tolerances &tol) {
    require_unitary(u, tol);
    const std::size_t n = u.rows();

    HouseholderFactorization f;
    f.ordering = Ordering::reversed;
    f.dim = n;
    ComplexMatrix work = u;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const ComplexVector row = work.row(k);
        const double row_norm = std::sqrt(norm_squared(row));
        if (!(std::abs(row_norm - 1.0) <= tol.unitarity_tol)) {
            throw Error(ErrorCode::NotUnitLength, "row " + std::to_string(k) + " has norm " + std::to_string(row_norm));
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (!(std::abs(row[j]) <= tol.unitarity_tol)) {
                throw Error(ErrorCode::LeadingComponentsNonzero, "row " + std::to_string(k));
            }
        }
        // <u| = <W| + e^{i phi} <e_k|, stored as the ket |u> = conj(W) + e^{-i phi} |e_k>.
        const double phi = phase_of(row[k]);
        Reflection r;
        r.level = k;
        r.pivot.assign(n, Complex{});
        for (std::size_t j = k; j < n; ++j) {
            r.pivot[j] = std::conj(row[j]);
        }
        r.pivot[k] += std::polar(1.0, -phi);
        apply_reflection_in_place(r, work, Side::right, tol.degenerate_tol);
        f.reflections.push_back(std::move(r));
        f.pivot_phases.push_back(phi);
    }
    f.residual.entries = work.diagonal_entries();
    return f;
}

ComplexMatrix reconstruct(const HouseholderFactorization &f) {
    ComplexMatrix out = f.residual.matrix();
    // An empty reflection list stands for a bare phase diagonal.
    if (!f.reflections.empty() && f.reflections.size() + 1 != out.rows()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(f.reflections.size()) +
                                                      " reflections for residual of size " + std::to_string(out.rows()));
    }
    const Side side = f.ordering == Ordering::forward ? Side::left : Side::right;
    for (std::size_t idx = f.reflections.size(); idx-- > 0;) {
        apply_reflection_in_place(f.reflections[idx], out, side);
    }
    return out;
}

}  // namespace hhcoset
