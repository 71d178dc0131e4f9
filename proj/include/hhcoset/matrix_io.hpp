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

// Text file formats for matrices and factorizations (JSON).
//
// MatrixFile:
//     {"rows": R, "cols": C, "data": [[[re, im], ...], ...]}      row-major
// FactorizationFile:
//     {"kind": "householder" | "coset" | "coset-reversed", "dim": N,
//      "factors": [MatrixFile, ...],        N - 1 entries, level order
//      "phases": [[re, im], ...],           N entries
//      "pivot_phases": [angle, ...]}        householder only
// Sample files are a JSON array of MatrixFile objects.
//
// Numbers are written in shortest round-trip decimal form, so a write/read
// cycle reproduces every binary64 value exactly.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hhcoset/factorization.hpp"
#include "hhcoset/numkit.hpp"

namespace hhcoset {

struct FactorizationFile {
    FactorizationKind kind = FactorizationKind::householder;
    std::size_t dim = 0;
    std::vector<ComplexMatrix> factors;
    ComplexVector phases;
    std::vector<double> pivot_phases;
};

/// Dense product in the order fixed by `kind`.
ComplexMatrix multiply_out(const FactorizationFile &f);

FactorizationFile to_file(const Factorization &f);

/// Whatever a file holds. Throws Error(Parse) on malformed input.
using FileContent = std::variant<ComplexMatrix, FactorizationFile, std::vector<ComplexMatrix>>;

std::string write_matrix(const ComplexMatrix &m);
std::string write_factorization(const FactorizationFile &f);
std::string write_samples(const std::vector<ComplexMatrix> &samples);

ComplexMatrix parse_matrix(const std::string &text);
FactorizationFile parse_factorization(const std::string &text);
std::vector<ComplexMatrix> parse_samples(const std::string &text);
FileContent parse_any(const std::string &text);

/// "-" means standard input.
std::string read_text(const std::string &path);
/// Empty path or "-" means standard output.
void write_text(const std::string &path, const std::string &text, std::ostream &stdout_stream);

}  // namespace hhcoset
