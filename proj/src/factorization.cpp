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

#include "hhcoset/factorization.hpp"

namespace hhcoset {

std::string_view kind_name(FactorizationKind kind) {
    switch (kind) {
        case FactorizationKind::householder:
            return "householder";
        case FactorizationKind::coset:
            return "coset";
        case FactorizationKind::coset_reversed:
            return "coset-reversed";
    }
    return "unknown";
}

std::optional<FactorizationKind> parse_kind(std::string_view name) {
    for (auto kind : {FactorizationKind::householder, FactorizationKind::coset, FactorizationKind::coset_reversed}) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

Factorization factorize(const ComplexMatrix &u, FactorizationKind kind, const Tolerances &tol) {
    switch (kind) {
        case FactorizationKind::householder:
            return decompose(u, tol);
        case FactorizationKind::coset:
            return cosets_from_householder(decompose(u, tol));
        case FactorizationKind::coset_reversed:
            return cosets_from_householder_reversed(decompose_reversed(u, tol));
    }
    throw Error(ErrorCode::Parse, "unknown factorization kind");
}

FactorizationKind kind_of(const Factorization &f) {
    if (std::holds_alternative<HouseholderFactorization>(f)) {
        return FactorizationKind::householder;
    }
    return std::get<CosetFactorization>(f).ordering == Ordering::forward ? FactorizationKind::coset
                                                                          : FactorizationKind::coset_reversed;
}

ComplexMatrix multiply_out(const Factorization &f) {
    return std::visit(
        [](const auto &v) -> ComplexMatrix {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, HouseholderFactorization>) {
                return reconstruct(v);
            } else {
                return compose_cosets(v);
            }
        },
        f);
}

}  // namespace hhcoset
