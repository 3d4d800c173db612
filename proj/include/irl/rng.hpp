// Copyright 2026 The IRL Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRL_RNG_HPP_
#define IRL_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace irl {

using Rng = std::mt19937_64;

// splitmix64 step; used to derive independent sub-seeds from a master seed.
inline std::uint64_t split_mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Sub-seed `index` of `master`. Every consumer of randomness gets its own
// stream so that adding or removing one consumer never shifts the others.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return split_mix64(split_mix64(master) ^ split_mix64(index + 1));
}

// Uniform double in [0, 1) built from the top 53 bits of the engine output.
// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Draws an index with probability proportional to probs[i]. The weights are
// expected to sum to ~1; any rounding slack is assigned to the last positive
// entry.
inline int sample_categorical(std::span<const double> probs, Rng& rng) {
    if (probs.empty()) throw std::invalid_argument("sample_categorical: empty distribution");
    const double u = uniform01(rng);
    double cum = 0.0;
    int last_positive = -1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) last_positive = static_cast<int>(i);
        cum += probs[i];
        if (u < cum) return static_cast<int>(i);
    }
    if (last_positive < 0) throw std::runtime_error("sample_categorical: all weights zero");
    return last_positive;
}

}  // namespace irl

#endif  // IRL_RNG_HPP_
