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

#include "surfmatch/pauli_frame.h"

namespace surfmatch {

void apply_memory_error(PauliFrame &frame, size_t qubit, double p0, RngStream &rng) {
    if (rng.next_bernoulli(p0)) {
        frame.apply(static_cast<Pauli>(rng.next_below(3) + 1), qubit);
    }
}

void apply_two_qubit_error(PauliFrame &frame, size_t control, size_t target, double p0,
                           RngStream &rng) {
    if (rng.next_bernoulli(p0)) {
        uint32_t v = rng.next_below(15) + 1;  // 1..15 over (P_control, P_target) != (I, I)
        frame.apply(static_cast<Pauli>(v >> 2), control);
        frame.apply(static_cast<Pauli>(v & 3), target);
    }
}

bool sample_flip(double p0, RngStream &rng) {
    return rng.next_bernoulli(p0);
}

void propagate_cnot(PauliFrame &frame, size_t control, size_t target) {
    if (frame.x_flips.test(control)) {
        frame.x_flips.flip(target);
    }
    if (frame.z_flips.test(target)) {
        frame.z_flips.flip(control);
    }
}

}  // namespace surfmatch
