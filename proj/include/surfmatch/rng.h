// Copyright 2026 Surfmatch Contributors
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

#ifndef SURFMATCH_RNG_H
#define SURFMATCH_RNG_H

#include <cstdint>

namespace surfmatch {

/// Counter-based pseudo-random stream.
///
/// The i-th output is a pure function of (seed, stream, i), so a stream can be
/// reconstructed from its identity alone and different streams never share
/// state. Substream derivation is used to give every Monte Carlo trial its own
/// stream keyed by trial index, which makes results independent of how trials
/// are scheduled across worker threads.
///
/// The generator hashes a 64-bit counter with the splitmix64 finalizer, which
/// is bit-for-bit reproducible across platforms.
class RngStream {
   public:
    RngStream(uint64_t seed, uint64_t stream);

    uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// True with probability p (p <= 0 never, p >= 1 always).
    bool next_bernoulli(double p);

    /// Uniform integer in [0, n), n >= 1. Unbiased (rejection sampling).
    uint32_t next_below(uint32_t n);

   private:
    uint64_t key_;
    uint64_t counter_;
};

}  // namespace surfmatch

#endif
