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

#ifndef SURFMATCH_LATTICE_H
#define SURFMATCH_LATTICE_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace surfmatch {

enum class CodeKind : uint8_t {
    TORIC,
    SURFACE,
};

/// Z stabilizers (faces) detect X errors on data qubits; X stabilizers
/// (intersections) detect Z errors.
enum class StabType : uint8_t {
    Z,
    X,
};

struct CodeSpec {
    CodeKind kind;
    int distance;  // odd, >= 3
};

/// Grid coordinate of a stabilizer on its own sublattice.
struct StabCoord {
    int row;
    int col;

    bool operator==(const StabCoord &) const = default;
};

/// Identifies which boundary a chain exits through. Z-stabilizer chains exit
/// left/right, X-stabilizer chains exit top/bottom; TIME is the open future
/// edge of the syndrome history (only used when time boundaries are enabled).
enum class BoundaryId : uint8_t {
    LEFT = 0,
    RIGHT = 1,
    TOP = 0,
    BOTTOM = 1,
    TIME = 2,
};

/// One CNOT of the extraction schedule. For Z ancillas the data qubit is the
/// control; for X ancillas the ancilla is the control.
struct ScheduledGate {
    StabType ancilla_type;
    int stab_index;  // index into the stabilizer list of that type
    int data_qubit;
};

/// Geometry of a toric or surface code of odd distance d.
///
/// Both codes are laid out on a diagram grid where data qubits sit at even-sum
/// positions and ancillas at odd-sum positions. Data qubits come in two
/// orientations:
///
///   primary(r, c)   at diagram (2r, 2c)       - d x d for both codes
///   secondary(r, c) at diagram (2r+1, 2c+1)   - d x d toric, (d-1) x (d-1) surface
///
/// Z stabilizers sit at diagram (2r, 2c+1) (d x d toric, d x (d-1) surface) and
/// act on primary(r, c), primary(r, c+1), secondary(r-1, c), secondary(r, c).
/// X stabilizers sit at diagram (2r+1, 2c) (d x d toric, (d-1) x d surface) and
/// act on primary(r, c), primary(r+1, c), secondary(r, c-1), secondary(r, c).
/// The toric code wraps both axes; the surface code drops out-of-range
/// secondary qubits, leaving weight-3 stabilizers on the boundary rows/columns.
///
/// Linear data-qubit ids are row-major: all primary qubits first, then all
/// secondary qubits. Stabilizer indices are row-major over their own grid.
struct Lattice {
    CodeKind kind;
    int distance;

    int primary_rows, primary_cols;
    int secondary_rows, secondary_cols;
    int z_rows, z_cols;
    int x_rows, x_cols;

    // support[i] lists data-qubit ids, one entry per stabilizer (row-major).
    std::vector<std::vector<int>> z_support;
    std::vector<std::vector<int>> x_support;

    // Logical operator representatives as data-qubit chains. logical_x[i] and
    // logical_z[i] overlap in an odd number of qubits; all other combinations
    // are even. Toric has two pairs, surface one.
    std::vector<std::vector<int>> logical_x;
    std::vector<std::vector<int>> logical_z;

    // CNOT schedule, one step per interaction direction (N, W, E, S). Within a
    // step no qubit is touched twice.
    std::array<std::vector<ScheduledGate>, 4> schedule;

    int num_data() const {
        return primary_rows * primary_cols + secondary_rows * secondary_cols;
    }
    int num_z_stabs() const {
        return z_rows * z_cols;
    }
    int num_x_stabs() const {
        return x_rows * x_cols;
    }
    int num_stabs(StabType t) const {
        return t == StabType::Z ? num_z_stabs() : num_x_stabs();
    }
    bool periodic() const {
        return kind == CodeKind::TORIC;
    }

    int primary_id(int r, int c) const {
        return r * primary_cols + c;
    }
    int secondary_id(int r, int c) const {
        return primary_rows * primary_cols + r * secondary_cols + c;
    }

    int stab_index(StabType t, StabCoord s) const {
        return t == StabType::Z ? s.row * z_cols + s.col : s.row * x_cols + s.col;
    }
    StabCoord stab_coord(StabType t, int index) const {
        int cols = t == StabType::Z ? z_cols : x_cols;
        return {index / cols, index % cols};
    }
    const std::vector<std::vector<int>> &supports(StabType t) const {
        return t == StabType::Z ? z_support : x_support;
    }
};

/// Builds the lattice for a code spec. Throws std::invalid_argument for even
/// or too-small distances.
Lattice build_lattice(const CodeSpec &spec);

/// Length of the shortest data-qubit chain with terminals a and b (same
/// stabilizer type). Manhattan distance, with per-axis wraparound on the
/// torus.
int chain_distance(const Lattice &lattice, StabType type, StabCoord a, StabCoord b);

struct BoundaryInfo {
    BoundaryId boundary;
    int weight;  // data-qubit flips needed to leave the code
};

/// Closest boundary for a chain terminating at stabilizer a. Surface code
/// only; ties go to the lower-indexed boundary (LEFT/TOP).
BoundaryInfo nearest_boundary(const Lattice &lattice, StabType type, StabCoord a);

/// Deterministic minimum-length chain of data qubits with terminals a and b.
/// Walks the row axis fully before the column axis and wraps an axis only
/// when strictly shorter.
std::vector<int> shortest_correction_path(const Lattice &lattice, StabType type, StabCoord a,
                                          StabCoord b);

/// Deterministic minimum-length chain from stabilizer a out through the given
/// boundary. Surface code only.
std::vector<int> boundary_correction_path(const Lattice &lattice, StabType type, StabCoord a,
                                          BoundaryId boundary);

/// Human-readable geometry dump (stabilizer supports and logical chains, one
/// per line) used for golden-file tests.
std::string dump_lattice(const Lattice &lattice);

const char *code_kind_name(CodeKind kind);

}  // namespace surfmatch

#endif
