// Copyright 2026 The qauction Authors
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
#include <random>

namespace qauction {

/// Seeded random source with a documented, platform-independent stream.
///
/// Every draw consumes exactly one 64-bit output of a std::mt19937_64
/// initialized with the seed. Doubles are formed as (u64 >> 11) * 2^-53,
/// giving a uniform value in [0, 1); Gaussians use Box-Muller on two such
/// doubles (one pair per two calls). The draw counter identifies the
/// position in the stream and is recorded in transcripts so runs can be
/// replayed bit for bit.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal deviate (Box-Muller).
    double next_gaussian();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draw_count() const { return draws_; }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    bool has_cached_gaussian_ = false;
    double cached_gaussian_ = 0.0;
};

} // namespace qauction
