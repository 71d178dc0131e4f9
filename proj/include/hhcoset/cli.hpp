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

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hhcoset/factorization.hpp"

namespace hhcoset::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotUnitary = 3;
inline constexpr int kExitVerifyFailed = 4;
inline constexpr int kExitStatisticalFailure = 5;

struct DecomposeOptions {
    std::string input;
    std::string output;
    FactorizationKind mode = FactorizationKind::householder;
    double tol = 1e-10;
};

struct ReconstructOptions {
    std::string input;
    std::string output;
};

struct SampleOptions {
    long long dim = 0;
    long long count = 0;
    std::uint64_t seed = 0;
    std::string output;
};

struct VerifyOptions {
    std::string input;
    double tol = 1e-10;
};

struct HaarTestOptions {
    long long dim = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    /// Optional sample file ("-" for stdin); when empty the samples are drawn.
    std::string input;
};

int cmd_decompose(const DecomposeOptions &opts, std::ostream &out, std::ostream &err);
int cmd_reconstruct(const ReconstructOptions &opts, std::ostream &out, std::ostream &err);
int cmd_sample(const SampleOptions &opts, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_haar_test(const HaarTestOptions &opts, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to a command.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace hhcoset::cli
