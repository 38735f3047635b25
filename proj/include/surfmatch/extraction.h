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

#ifndef SURFMATCH_EXTRACTION_H
#define SURFMATCH_EXTRACTION_H

#include <cstdint>
#include <vector>

#include "surfmatch/lattice.h"
#include "surfmatch/pauli_frame.h"

namespace surfmatch {

/// A syndrome extraction round takes six time units: ancilla preparation,
/// four interaction steps (N, W, E, S), ancilla measurement. Data qubits
/// suffer memory errors during the preparation and measurement units only;
/// during interaction steps they are treated as gate-busy, so no extra idle
/// errors are sampled there (and none on the gate-free steps of weight-3
/// boundary stabilizers). Flip to sample memory errors during interaction
/// steps on qubits without a gate.
inline constexpr bool kMemoryErrorsDuringInteractionSteps = false;

/// Measured eigenvalue rows of one extraction round, +1/-1 per stabilizer in
/// index order.
struct RoundRows {
    std::vector<int8_t> z;
    std::vector<int8_t> x;
};

/// Eigenvalue history per stabilizer type. Round 0 is the implicit all-+1
/// reference of the initial codeword state; measured rounds are appended
/// monotonically and reported 1-based.
struct SyndromeRecord {
    std::vector<RoundRows> rounds;

    int num_rounds() const {
        return static_cast<int>(rounds.size());
    }
    void append(RoundRows rows) {
        rounds.push_back(std::move(rows));
    }
};

/// A spacetime location where the reported eigenvalue differs from the
/// previous round. Terminals of error chains.
struct DetectionEvent {
    StabType type;
    StabCoord space;
    int round;  // 1-based; round 1 compares against the all-+1 reference

    bool operator==(const DetectionEvent &) const = default;
};

/// One deterministic fault to inject into a circuit-level round, addressed by
/// its location in the six-step schedule. Used to enumerate every single
/// fault of a round.
struct FaultSite {
    enum class Kind : uint8_t {
        ANCILLA_INIT,     // index = ancilla (0..num_z+num_x), outcome unused
        DATA_MEMORY_PREP,  // index = data qubit, outcome = Pauli 1..3
        GATE,              // index = flat gate index in schedule order, outcome = 1..15
        DATA_MEMORY_MEAS,  // index = data qubit, outcome = Pauli 1..3
        ANCILLA_READOUT,   // index = ancilla, outcome unused
    };
    Kind kind;
    int index;
    int outcome;
};

/// All single-fault (location, outcome) combinations of one round.
std::vector<FaultSite> enumerate_fault_sites(const Lattice &lattice);

/// Noise-free readout of every stabilizer from the current frame. The frame
/// is untouched.
RoundRows run_ideal_round(const Lattice &lattice, const PauliFrame &frame);

/// Executes one noisy extraction round over the whole lattice, mutating the
/// frame (data errors persist; ancilla bits are cleared after measurement).
/// Needs a frame sized num_data + num_z_stabs + num_x_stabs; ancilla bits
/// follow the data bits, Z ancillas first. If `inject` is non-null that fault
/// is applied deterministically in addition to the sampled noise.
RoundRows run_circuit_round(const Lattice &lattice, PauliFrame &frame, const ErrorModel &model,
                            RngStream &rng, const FaultSite *inject = nullptr);

/// Events of one stabilizer type across the whole record.
std::vector<DetectionEvent> collect_detection_events(const Lattice &lattice,
                                                     const SyndromeRecord &record, StabType type);

/// Events contributed by one appended row given the previous row (or the
/// all-+1 reference for round 1).
void append_detection_events(const Lattice &lattice, StabType type, int round,
                             const std::vector<int8_t> &row, const std::vector<int8_t> *prev_row,
                             std::vector<DetectionEvent> &events);

int ancilla_frame_offset(const Lattice &lattice, StabType type);

}  // namespace surfmatch

#endif
