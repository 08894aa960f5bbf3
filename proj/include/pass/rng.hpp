// SPDX-License-Identifier: Apache-2.0
//
// pass-secure: secure beamforming for pinching-antenna systems
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace pass {

using Rng = std::mt19937_64;

/// splitmix64 finalizer, used to whiten and combine seed material.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic per-task seed from (base seed, sweep index, trial index).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return mix64(base ^ mix64(a ^ mix64(b ^ 0x51ed2700215c11f3ULL)));
}

// Uniform double in [0, 1). std::uniform_real_distribution is
// implementation-defined; this mapping is reproducible everywhere.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// Circularly-symmetric complex Gaussian with unit variance (Box-Muller).
inline std::complex<double> standard_complex_gaussian(Rng &rng) {
    double u1 = uniform_unit(rng);
    if (u1 <= 0.0)
        u1 = 0x1.0p-53;
    double u2 = uniform_unit(rng);
    double mag = std::sqrt(-std::log(u1));
    return std::polar(mag, 2.0 * M_PI * u2);
}

} // namespace pass
