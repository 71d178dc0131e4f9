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
#include <string_view>
#include <utility>

namespace hhcoset {

/// Counter-based generator "splitmix64-ctr/v1".
///
/// Output n (n = 0, 1, ...) of stream (seed, stream) is
///     mix64(key + (n + 1) * 0x9e3779b97f4a7c15),
///     key = mix64(seed ^ mix64(stream ^ 0xd1b54a32d192ed03)),
/// where mix64 is the SplitMix64 finalizer. Any stream can be reproduced from
/// (seed, stream, counter) alone, which is what the batch kernels rely on to
/// give thread-count-independent results.
class RngStream {
   public:
    static constexpr std::string_view kName = "splitmix64-ctr/v1";

    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits. One draw.
    double uniform();
    /// Two independent standard normals by Box-Muller. Two draws.
    std::pair<double, double> normal_pair();

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }
    /// Number of 64-bit outputs consumed so far.
    std::uint64_t draws() const noexcept { return counter_; }

    friend bool operator==(const RngStream &, const RngStream &) = default;

   private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

}  // namespace hhcoset
