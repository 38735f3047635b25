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

#ifndef SURFMATCH_PAULI_FRAME_H
#define SURFMATCH_PAULI_FRAME_H

#include <cstdint>

#include "surfmatch/bitvec.h"
#include "surfmatch/rng.h"

namespace surfmatch {

enum class Pauli : uint8_t {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
};

/// Accumulated X/Z error record over a register of qubits. Phases are not
/// tracked; a qubit with both bits set carries a Y. Composition is bitwise
/// XOR, so applying the same frame twice is the identity.
struct PauliFrame {
    BitVec x_flips;
    BitVec z_flips;

    PauliFrame() = default;
    explicit PauliFrame(size_t n) : x_flips(n), z_flips(n) {
    }

    void apply(Pauli p, size_t qubit) {
        if (p == Pauli::X || p == Pauli::Y) {
            x_flips.flip(qubit);
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            z_flips.flip(qubit);
        }
    }

    void xor_with(const PauliFrame &other) {
        x_flips.xor_with(other.x_flips);
        z_flips.xor_with(other.z_flips);
    }

    bool operator==(const PauliFrame &) const = default;
};

enum class Extraction : uint8_t {
    IDEAL,
    CIRCUIT,
};

/// Noise and decoding parameters. A single rate p0 drives all four error
/// processes (init, readout, memory, two-qubit gate), each lasting one time
/// unit.
struct ErrorModel {
    double p0 = 0.0;
    Extraction extraction = Extraction::IDEAL;
    int time_edge_weight = 1;
    // Attach detection events to the open time edge of the history as well as
    // to space boundaries. Off by default: the experiments always close the
    // history with an ideal extraction round.
    bool time_boundaries = false;
};

/// With probability p0 applies X, Y or Z (uniformly) to an idle qubit.
void apply_memory_error(PauliFrame &frame, size_t qubit, double p0, RngStream &rng);

/// With probability p0 applies one of the 15 nontrivial two-qubit Paulis
/// (uniformly) to the pair.
void apply_two_qubit_error(PauliFrame &frame, size_t control, size_t target, double p0,
                           RngStream &rng);

/// Classical flip with probability p0; shared by init and readout errors.
bool sample_flip(double p0, RngStream &rng);

/// Ideal CNOT conjugation on the frame: X on the control spreads to the
/// target, Z on the target spreads to the control.
void propagate_cnot(PauliFrame &frame, size_t control, size_t target);

}  // namespace surfmatch

#endif
