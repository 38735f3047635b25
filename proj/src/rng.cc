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

#include "surfmatch/rng.h"

namespace surfmatch {

namespace {

// splitmix64 finalizer (Steele/Lea/Flood). Full-avalanche 64-bit mixer.
uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream)
    : key_(mix64(mix64(seed) ^ mix64(stream ^ 0x5851f42d4c957f2dULL))), counter_(0) {
}

uint64_t RngStream::next_u64() {
    return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
}

double RngStream::next_double() {
    return (next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::next_bernoulli(double p) {
    return next_double() < p;
}

uint32_t RngStream::next_below(uint32_t n) {
    // Lemire's multiply-shift with rejection of the biased region.
    uint64_t x = next_u64() & 0xffffffffULL;
    uint64_t m = x * n;
    uint32_t l = static_cast<uint32_t>(m);
    if (l < n) {
        uint32_t floor = (-n) % n;
        while (l < floor) {
            x = next_u64() & 0xffffffffULL;
            m = x * n;
            l = static_cast<uint32_t>(m);
        }
    }
    return static_cast<uint32_t>(m >> 32);
}

}  // namespace surfmatch
