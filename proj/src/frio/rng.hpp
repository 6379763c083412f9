// Copyright 2026 The FRIO Authors
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

#ifndef FRIO_RNG_HPP
#define FRIO_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace frio {

/// SplitMix64 finalizer.
constexpr uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based SplitMix64: output i is mix(key + (i + 1) * golden). Any draw
/// can be recomputed from (key, counter) alone, so substreams are independent
/// of scheduling order. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t key, uint64_t counter = 0) : key_(key), counter_(counter) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return splitmix64_mix(key_ + (++counter_) * kGolden); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    uint64_t key() const { return key_; }
    uint64_t counter() const { return counter_; }

   private:
    static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    uint64_t key_;
    uint64_t counter_;
};

/// Key of the substream identified by `ids` under a master seed.
inline uint64_t substream_key(uint64_t seed, std::initializer_list<uint64_t> ids) {
    uint64_t k = splitmix64_mix(seed ^ 0x6A09E667F3BCC909ULL);
    for (uint64_t id : ids) {
        k = splitmix64_mix(k + 0x9E3779B97F4A7C15ULL * (id + 1));
    }
    return k;
}

}  // namespace frio

#endif
