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

#include <optional>
#include <string_view>
#include <variant>

#include "hhcoset/coset.hpp"
#include "hhcoset/householder.hpp"

namespace hhcoset {

enum class FactorizationKind { householder, coset, coset_reversed };

std::string_view kind_name(FactorizationKind kind);
std::optional<FactorizationKind> parse_kind(std::string_view name);

using Factorization = std::variant<HouseholderFactorization, CosetFactorization>;

/// householder: forward Householder; coset: forward Householder then
/// cosets_from_householder; coset_reversed: row-pivot Householder then the
/// reversed conversion.
Factorization factorize(const ComplexMatrix &u, FactorizationKind kind, const Tolerances &tol = {});

FactorizationKind kind_of(const Factorization &f);
ComplexMatrix multiply_out(const Factorization &f);

}  // namespace hhcoset
