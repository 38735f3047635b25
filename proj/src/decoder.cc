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

#include "surfmatch/decoder.h"

#include <stdexcept>

namespace surfmatch {

void matching_to_correction(const Matching &matching, const MatchGraph &graph,
                            const Lattice &lattice, Correction &correction) {
    BitVec &flips = graph.type == StabType::Z ? correction.x_flips : correction.z_flips;
    int real = graph.num_real();
    for (auto [u, v] : matching.pairs) {
        if (v < real) {
            for (int q : shortest_correction_path(lattice, graph.type, graph.nodes[u].space,
                                                  graph.nodes[v].space)) {
                flips.flip(q);
            }
        } else {
            const BoundaryAttach &attach = graph.boundary[u];
            if (attach.boundary == BoundaryId::TIME) {
                continue;
            }
            for (int q : boundary_correction_path(lattice, graph.type, graph.nodes[u].space,
                                                  attach.boundary)) {
                flips.flip(q);
            }
        }
    }
}

void decode_events(const std::vector<DetectionEvent> &events, const Lattice &lattice,
                   const ErrorModel &model, int total_rounds, Correction &correction) {
    if (events.empty()) {
        return;
    }
    MatchGraph graph = prune_edges(build_graph(events, lattice, model, total_rounds));
    for (const MatchGraph &component : connected_components(graph)) {
        Matching matching = min_weight_perfect_matching(component);
        matching_to_correction(matching, component, lattice, correction);
    }
}

FailureReport assess_logical_failure(const PauliFrame &frame, const Correction &correction,
                                     const Lattice &lattice) {
    // Residual parity over a data-qubit set; the frame may be longer than the
    // data register (ancilla tail ignored).
    auto residual_parity = [&](const BitVec &frame_bits, const BitVec &corr_bits,
                               const std::vector<int> &qubits) {
        int parity = 0;
        for (int q : qubits) {
            parity ^= frame_bits.test(q) ^ corr_bits.test(q);
        }
        return parity != 0;
    };
    for (const auto &support : lattice.z_support) {
        if (residual_parity(frame.x_flips, correction.x_flips, support)) {
            throw std::logic_error("correction leaves a nontrivial Z-stabilizer syndrome");
        }
    }
    for (const auto &support : lattice.x_support) {
        if (residual_parity(frame.z_flips, correction.z_flips, support)) {
            throw std::logic_error("correction leaves a nontrivial X-stabilizer syndrome");
        }
    }

    FailureReport report;
    for (size_t i = 0; i < lattice.logical_z.size(); ++i) {
        if (residual_parity(frame.x_flips, correction.x_flips, lattice.logical_z[i])) {
            report.classes |= i == 0 ? FailureReport::kX1 : FailureReport::kX2;
        }
    }
    for (size_t i = 0; i < lattice.logical_x.size(); ++i) {
        if (residual_parity(frame.z_flips, correction.z_flips, lattice.logical_x[i])) {
            report.classes |= i == 0 ? FailureReport::kZ1 : FailureReport::kZ2;
        }
    }
    return report;
}

}  // namespace surfmatch
