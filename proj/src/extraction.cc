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

#include "surfmatch/extraction.h"

#include <stdexcept>

namespace surfmatch {

int ancilla_frame_offset(const Lattice &lattice, StabType type) {
    return lattice.num_data() + (type == StabType::Z ? 0 : lattice.num_z_stabs());
}

RoundRows run_ideal_round(const Lattice &lattice, const PauliFrame &frame) {
    RoundRows rows;
    rows.z.resize(lattice.num_z_stabs());
    rows.x.resize(lattice.num_x_stabs());
    for (int i = 0; i < lattice.num_z_stabs(); ++i) {
        int parity = 0;
        for (int q : lattice.z_support[i]) {
            parity ^= frame.x_flips.test(q);
        }
        rows.z[i] = parity ? -1 : 1;
    }
    for (int i = 0; i < lattice.num_x_stabs(); ++i) {
        int parity = 0;
        for (int q : lattice.x_support[i]) {
            parity ^= frame.z_flips.test(q);
        }
        rows.x[i] = parity ? -1 : 1;
    }
    return rows;
}

std::vector<FaultSite> enumerate_fault_sites(const Lattice &lattice) {
    std::vector<FaultSite> sites;
    int num_anc = lattice.num_z_stabs() + lattice.num_x_stabs();
    for (int a = 0; a < num_anc; ++a) {
        sites.push_back({FaultSite::Kind::ANCILLA_INIT, a, 0});
    }
    for (int q = 0; q < lattice.num_data(); ++q) {
        for (int p = 1; p <= 3; ++p) {
            sites.push_back({FaultSite::Kind::DATA_MEMORY_PREP, q, p});
        }
    }
    int num_gates = 0;
    for (const auto &step : lattice.schedule) {
        num_gates += static_cast<int>(step.size());
    }
    for (int g = 0; g < num_gates; ++g) {
        for (int outcome = 1; outcome <= 15; ++outcome) {
            sites.push_back({FaultSite::Kind::GATE, g, outcome});
        }
    }
    for (int q = 0; q < lattice.num_data(); ++q) {
        for (int p = 1; p <= 3; ++p) {
            sites.push_back({FaultSite::Kind::DATA_MEMORY_MEAS, q, p});
        }
    }
    for (int a = 0; a < num_anc; ++a) {
        sites.push_back({FaultSite::Kind::ANCILLA_READOUT, a, 0});
    }
    return sites;
}

RoundRows run_circuit_round(const Lattice &lattice, PauliFrame &frame, const ErrorModel &model,
                            RngStream &rng, const FaultSite *inject) {
    if (model.extraction != Extraction::CIRCUIT) {
        throw std::invalid_argument("run_circuit_round requires circuit extraction mode");
    }
    static_assert(!kMemoryErrorsDuringInteractionSteps,
                  "idle memory errors during interaction steps are not implemented");
    double p0 = model.p0;
    int num_data = lattice.num_data();
    int z_off = ancilla_frame_offset(lattice, StabType::Z);
    int x_off = ancilla_frame_offset(lattice, StabType::X);
    auto injected = [&](FaultSite::Kind kind, int index) {
        return inject && inject->kind == kind && inject->index == index;
    };

    // Step 1: ancilla preparation (Z in |0>, X in |+>) plus memory errors on
    // idle data qubits. An init flip is the orthogonal state: X on a Z
    // ancilla, Z on an X ancilla.
    for (int q = 0; q < num_data; ++q) {
        apply_memory_error(frame, q, p0, rng);
        if (injected(FaultSite::Kind::DATA_MEMORY_PREP, q)) {
            frame.apply(static_cast<Pauli>(inject->outcome), q);
        }
    }
    for (int i = 0; i < lattice.num_z_stabs(); ++i) {
        int anc = z_off + i;
        frame.x_flips.reset(anc);
        frame.z_flips.reset(anc);
        if (sample_flip(p0, rng) != injected(FaultSite::Kind::ANCILLA_INIT, i)) {
            frame.x_flips.flip(anc);
        }
    }
    for (int i = 0; i < lattice.num_x_stabs(); ++i) {
        int anc = x_off + i;
        frame.x_flips.reset(anc);
        frame.z_flips.reset(anc);
        if (sample_flip(p0, rng) != injected(FaultSite::Kind::ANCILLA_INIT, lattice.num_z_stabs() + i)) {
            frame.z_flips.flip(anc);
        }
    }

    // Steps 2-5: interactions in N, W, E, S order.
    int gate_counter = 0;
    for (const auto &step : lattice.schedule) {
        for (const auto &gate : step) {
            int anc = (gate.ancilla_type == StabType::Z ? z_off : x_off) + gate.stab_index;
            size_t control, target;
            if (gate.ancilla_type == StabType::Z) {
                control = gate.data_qubit;
                target = anc;
            } else {
                control = anc;
                target = gate.data_qubit;
            }
            propagate_cnot(frame, control, target);
            apply_two_qubit_error(frame, control, target, p0, rng);
            if (injected(FaultSite::Kind::GATE, gate_counter)) {
                frame.apply(static_cast<Pauli>(inject->outcome >> 2), control);
                frame.apply(static_cast<Pauli>(inject->outcome & 3), target);
            }
            ++gate_counter;
        }
    }

    // Step 6: measurement with readout flips, memory errors on data qubits,
    // then ancilla reset.
    RoundRows rows;
    rows.z.resize(lattice.num_z_stabs());
    rows.x.resize(lattice.num_x_stabs());
    for (int q = 0; q < num_data; ++q) {
        apply_memory_error(frame, q, p0, rng);
        if (injected(FaultSite::Kind::DATA_MEMORY_MEAS, q)) {
            frame.apply(static_cast<Pauli>(inject->outcome), q);
        }
    }
    for (int i = 0; i < lattice.num_z_stabs(); ++i) {
        int anc = z_off + i;
        bool flipped = frame.x_flips.test(anc);
        if (sample_flip(p0, rng) != injected(FaultSite::Kind::ANCILLA_READOUT, i)) {
            flipped = !flipped;
        }
        rows.z[i] = flipped ? -1 : 1;
        frame.x_flips.reset(anc);
        frame.z_flips.reset(anc);
    }
    for (int i = 0; i < lattice.num_x_stabs(); ++i) {
        int anc = x_off + i;
        bool flipped = frame.z_flips.test(anc);
        if (sample_flip(p0, rng) != injected(FaultSite::Kind::ANCILLA_READOUT, lattice.num_z_stabs() + i)) {
            flipped = !flipped;
        }
        rows.x[i] = flipped ? -1 : 1;
        frame.x_flips.reset(anc);
        frame.z_flips.reset(anc);
    }
    return rows;
}

void append_detection_events(const Lattice &lattice, StabType type, int round,
                             const std::vector<int8_t> &row, const std::vector<int8_t> *prev_row,
                             std::vector<DetectionEvent> &events) {
    for (size_t i = 0; i < row.size(); ++i) {
        int8_t prev = prev_row ? (*prev_row)[i] : int8_t{1};
        if (row[i] != prev) {
            events.push_back({type, lattice.stab_coord(type, static_cast<int>(i)), round});
        }
    }
}

std::vector<DetectionEvent> collect_detection_events(const Lattice &lattice,
                                                     const SyndromeRecord &record, StabType type) {
    std::vector<DetectionEvent> events;
    for (int t = 0; t < record.num_rounds(); ++t) {
        const auto &row = type == StabType::Z ? record.rounds[t].z : record.rounds[t].x;
        const std::vector<int8_t> *prev =
            t == 0 ? nullptr : (type == StabType::Z ? &record.rounds[t - 1].z : &record.rounds[t - 1].x);
        append_detection_events(lattice, type, t + 1, row, prev, events);
    }
    return events;
}

}  // namespace surfmatch
