// Copyright 2026 qsense developers
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

#pragma once

#include <cmath>
#include <cstdint>

#include "qsense/errors.hpp"

namespace qsense {

namespace detail {

// SplitMix64 finalizer: bijective 64-bit mix with good avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based random stream: draw n is a pure function of
/// (seed, stream_id, n), so parallel consumers reproduce bit-identically
/// regardless of scheduling.  Distinct stream_id values give independent
/// sequences.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id),
          key_(detail::mix64(seed + 0x9E3779B97F4A7C15ull * detail::mix64(stream_id + 1))) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        return detail::mix64(key_ + 0x9E3779B97F4A7C15ull * (++counter_));
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Exponential waiting time with the given rate (> 0).
    double exponential(double rate) {
        if (!(rate > 0.0)) throw invalid_argument("RandomStream::exponential: rate must be > 0");
        return -std::log1p(-uniform()) / rate;
    }

    /// Index in [0, n) sampled from unnormalized weights.
    template <typename Vec>
    std::size_t categorical(const Vec& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw numeric_error("RandomStream::categorical: zero total weight");
        double u = uniform() * total;
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(weights.size()); ++i) {
            u -= weights[i];
            if (u < 0.0) return i;
        }
        return static_cast<std::size_t>(weights.size()) - 1;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace qsense
