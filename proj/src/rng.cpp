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

#include "qauction/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qauction {

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("next_below: bound must be positive");
    }
    // One draw per call keeps the stream position predictable; the floor of
    // a 53-bit uniform scaled by the bound is unbiased enough for protocol
    // choices (bound is always tiny compared to 2^53).
    auto v = static_cast<std::uint64_t>(next_double() * static_cast<double>(bound));
    return v < bound ? v : bound - 1;
}

double SeededRng::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = next_double();
    double u2 = next_double();
    // Avoid log(0); the offset is below the 53-bit resolution of u1.
    double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-54));
    double theta = 2.0 * M_PI * u2;
    cached_gaussian_ = r * std::sin(theta);
    has_cached_gaussian_ = true;
    return r * std::cos(theta);
}

} // namespace qauction
