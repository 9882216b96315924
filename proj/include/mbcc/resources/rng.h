// Copyright 2026 The mbcc Authors
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

#ifndef MBCC_RESOURCES_RNG_H
#define MBCC_RESOURCES_RNG_H

#include <cstdint>
#include <random>

namespace mbcc {

/// splitmix64 finalizer; maps (seed, stream) to an independent engine seed.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Seeded source of randomness owned by one resource instance.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard,
/// and converts to doubles itself so sampled values are identical across
/// standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }
    /// Standard normal via Box-Muller.
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace mbcc

#endif
