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

#ifndef SURFMATCH_DECODER_H
#define SURFMATCH_DECODER_H

#include <cstdint>
#include <vector>

#include "surfmatch/matching.h"

namespace surfmatch {

/// Data-qubit flips implied by a matching. X corrections come from
/// Z-stabilizer (face) matchings, Z corrections from X-stabilizer matchings.
struct Correction {
    BitVec x_flips;
    BitVec z_flips;

    explicit Correction(size_t num_data) : x_flips(num_data), z_flips(num_data) {
    }
};

/// Logical classes violated by a residual error. The toric code has two
/// logical qubits (bits X1, X2, Z1, Z2); the surface code uses X1/Z1 only.
struct FailureReport {
    static constexpr uint8_t kX1 = 1;
    static constexpr uint8_t kX2 = 2;
    static constexpr uint8_t kZ1 = 4;
    static constexpr uint8_t kZ2 = 8;

    uint8_t classes = 0;

    bool failed() const {
        return classes != 0;
    }
    bool failed_x() const {
        return classes & (kX1 | kX2);
    }
    bool failed_z() const {
        return classes & (kZ1 | kZ2);
    }
};

/// Which residual classes end a time-to-failure trial.
enum class FailureMask : uint8_t {
    ANY,
    X_ONLY,
    Z_ONLY,
};

/// Accumulates the data flips for one matched graph: each real-real pair
/// contributes the deterministic shortest chain between its space
/// coordinates (a pure time displacement asserts a measurement error and
/// flips nothing); a real-boundary pair contributes the exit chain through
/// the attached space boundary (nothing for a time boundary).
void matching_to_correction(const Matching &matching, const MatchGraph &graph,
                            const Lattice &lattice, Correction &correction);

/// Full pipeline for one stabilizer type: build, prune, decompose, match each
/// component, accumulate corrections.
void decode_events(const std::vector<DetectionEvent> &events, const Lattice &lattice,
                   const ErrorModel &model, int total_rounds, Correction &correction);

/// Checks the residual frame XOR correction against the logical operator
/// representatives. Throws std::logic_error if the residual has a nontrivial
/// syndrome (the correction must annihilate it by construction).
FailureReport assess_logical_failure(const PauliFrame &frame, const Correction &correction,
                                     const Lattice &lattice);

}  // namespace surfmatch

#endif
