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

#include "surfmatch/lattice.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace surfmatch {

namespace {

int wrap(int v, int n) {
    return ((v % n) + n) % n;
}

// Data-qubit neighbors of a stabilizer in interaction order N, W, E, S, or -1
// where the surface code has no qubit in that direction.
std::array<int, 4> stab_neighbors(const Lattice &lat, StabType type, int r, int c) {
    bool wraps = lat.periodic();
    auto pri = [&](int pr, int pc) { return lat.primary_id(wrap(pr, lat.primary_rows), wrap(pc, lat.primary_cols)); };
    auto sec = [&](int sr, int sc) -> int {
        if (wraps) {
            return lat.secondary_id(wrap(sr, lat.secondary_rows), wrap(sc, lat.secondary_cols));
        }
        if (sr < 0 || sr >= lat.secondary_rows || sc < 0 || sc >= lat.secondary_cols) {
            return -1;
        }
        return lat.secondary_id(sr, sc);
    };
    if (type == StabType::Z) {
        // Diagram position (2r, 2c+1).
        return {sec(r - 1, c), pri(r, c), pri(r, c + 1), sec(r, c)};
    }
    // Diagram position (2r+1, 2c).
    return {pri(r, c), sec(r, c - 1), sec(r, c), pri(r + 1, c)};
}

void check_schedule(const Lattice &lat) {
    int total = lat.num_data() + lat.num_z_stabs() + lat.num_x_stabs();
    std::vector<char> used(total);
    for (const auto &step : lat.schedule) {
        std::fill(used.begin(), used.end(), 0);
        for (const auto &gate : step) {
            int anc = lat.num_data() + (gate.ancilla_type == StabType::Z ? gate.stab_index : lat.num_z_stabs() + gate.stab_index);
            if (used[gate.data_qubit]++ || used[anc]++) {
                throw std::logic_error("extraction schedule touches a qubit twice in one step");
            }
        }
    }
}

// Shortest per-axis displacement from a to b; wraps only when strictly
// shorter, so the result is unique for odd periods.
int axis_step(int from, int to, int period, bool wraps) {
    int diff = to - from;
    if (!wraps) {
        return diff;
    }
    int alt = diff > 0 ? diff - period : diff + period;
    return std::abs(alt) < std::abs(diff) ? alt : diff;
}

}  // namespace

Lattice build_lattice(const CodeSpec &spec) {
    int d = spec.distance;
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("code distance must be an odd integer >= 3");
    }

    Lattice lat;
    lat.kind = spec.kind;
    lat.distance = d;
    lat.primary_rows = lat.primary_cols = d;
    if (spec.kind == CodeKind::TORIC) {
        lat.secondary_rows = lat.secondary_cols = d;
        lat.z_rows = lat.z_cols = d;
        lat.x_rows = lat.x_cols = d;
    } else {
        lat.secondary_rows = lat.secondary_cols = d - 1;
        lat.z_rows = d;
        lat.z_cols = d - 1;
        lat.x_rows = d - 1;
        lat.x_cols = d;
    }

    lat.z_support.resize(lat.num_z_stabs());
    for (int r = 0; r < lat.z_rows; ++r) {
        for (int c = 0; c < lat.z_cols; ++c) {
            auto nbr = stab_neighbors(lat, StabType::Z, r, c);
            auto &sup = lat.z_support[lat.stab_index(StabType::Z, {r, c})];
            for (int q : nbr) {
                if (q >= 0) {
                    sup.push_back(q);
                }
            }
        }
    }
    lat.x_support.resize(lat.num_x_stabs());
    for (int r = 0; r < lat.x_rows; ++r) {
        for (int c = 0; c < lat.x_cols; ++c) {
            auto nbr = stab_neighbors(lat, StabType::X, r, c);
            auto &sup = lat.x_support[lat.stab_index(StabType::X, {r, c})];
            for (int q : nbr) {
                if (q >= 0) {
                    sup.push_back(q);
                }
            }
        }
    }

    // Logical representatives. The first X/Z pair exists for both codes:
    // logical X runs along the top primary row (left-right), logical Z down
    // the left primary column (top-bottom). The toric code has a second pair
    // on the secondary sublattice.
    std::vector<int> x0, z0;
    for (int c = 0; c < d; ++c) {
        x0.push_back(lat.primary_id(0, c));
    }
    for (int r = 0; r < d; ++r) {
        z0.push_back(lat.primary_id(r, 0));
    }
    lat.logical_x.push_back(std::move(x0));
    lat.logical_z.push_back(std::move(z0));
    if (spec.kind == CodeKind::TORIC) {
        std::vector<int> x1, z1;
        for (int r = 0; r < d; ++r) {
            x1.push_back(lat.secondary_id(r, 0));
        }
        for (int c = 0; c < d; ++c) {
            z1.push_back(lat.secondary_id(0, c));
        }
        lat.logical_x.push_back(std::move(x1));
        lat.logical_z.push_back(std::move(z1));
    }

    // Interaction schedule: every ancilla touches its N, W, E, S neighbor in
    // that order, both stabilizer types simultaneously.
    for (int dir = 0; dir < 4; ++dir) {
        for (StabType type : {StabType::Z, StabType::X}) {
            int rows = type == StabType::Z ? lat.z_rows : lat.x_rows;
            int cols = type == StabType::Z ? lat.z_cols : lat.x_cols;
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cols; ++c) {
                    int q = stab_neighbors(lat, type, r, c)[dir];
                    if (q >= 0) {
                        lat.schedule[dir].push_back({type, lat.stab_index(type, {r, c}), q});
                    }
                }
            }
        }
    }
    check_schedule(lat);
    return lat;
}

int chain_distance(const Lattice &lattice, StabType type, StabCoord a, StabCoord b) {
    int rows = type == StabType::Z ? lattice.z_rows : lattice.x_rows;
    int cols = type == StabType::Z ? lattice.z_cols : lattice.x_cols;
    if (a.row < 0 || a.row >= rows || a.col < 0 || a.col >= cols || b.row < 0 || b.row >= rows ||
        b.col < 0 || b.col >= cols) {
        throw std::invalid_argument("stabilizer coordinate out of range");
    }
    int dr = std::abs(a.row - b.row);
    int dc = std::abs(a.col - b.col);
    if (lattice.periodic()) {
        dr = std::min(dr, rows - dr);
        dc = std::min(dc, cols - dc);
    }
    return dr + dc;
}

BoundaryInfo nearest_boundary(const Lattice &lattice, StabType type, StabCoord a) {
    if (lattice.kind != CodeKind::SURFACE) {
        throw std::invalid_argument("toric code has no boundaries");
    }
    if (type == StabType::Z) {
        // Faces exit horizontally through the left/right boundaries.
        int left = a.col + 1;
        int right = lattice.z_cols - a.col;
        return left <= right ? BoundaryInfo{BoundaryId::LEFT, left} : BoundaryInfo{BoundaryId::RIGHT, right};
    }
    int top = a.row + 1;
    int bottom = lattice.x_rows - a.row;
    return top <= bottom ? BoundaryInfo{BoundaryId::TOP, top} : BoundaryInfo{BoundaryId::BOTTOM, bottom};
}

std::vector<int> shortest_correction_path(const Lattice &lattice, StabType type, StabCoord a,
                                          StabCoord b) {
    std::vector<int> path;
    int rows = type == StabType::Z ? lattice.z_rows : lattice.x_rows;
    int cols = type == StabType::Z ? lattice.z_cols : lattice.x_cols;
    bool wraps = lattice.periodic();
    int row_step = axis_step(a.row, b.row, rows, wraps);
    int col_step = axis_step(a.col, b.col, cols, wraps);

    int r = a.row, c = a.col;
    // Crossing between stabilizer cells flips the data qubit between them.
    auto step_row = [&](int dir) {
        if (type == StabType::Z) {
            path.push_back(lattice.secondary_id(wrap(dir > 0 ? r : r - 1, lattice.secondary_rows),
                                                wrap(c, lattice.secondary_cols)));
        } else {
            path.push_back(lattice.primary_id(wrap(dir > 0 ? r + 1 : r, lattice.primary_rows),
                                              wrap(c, lattice.primary_cols)));
        }
        r += dir;
    };
    auto step_col = [&](int dir) {
        if (type == StabType::Z) {
            path.push_back(lattice.primary_id(wrap(r, lattice.primary_rows),
                                              wrap(dir > 0 ? c + 1 : c, lattice.primary_cols)));
        } else {
            path.push_back(lattice.secondary_id(wrap(r, lattice.secondary_rows),
                                                wrap(dir > 0 ? c : c - 1, lattice.secondary_cols)));
        }
        c += dir;
    };
    for (int i = 0; i < std::abs(row_step); ++i) {
        step_row(row_step > 0 ? 1 : -1);
    }
    for (int i = 0; i < std::abs(col_step); ++i) {
        step_col(col_step > 0 ? 1 : -1);
    }
    return path;
}

std::vector<int> boundary_correction_path(const Lattice &lattice, StabType type, StabCoord a,
                                          BoundaryId boundary) {
    if (lattice.kind != CodeKind::SURFACE) {
        throw std::invalid_argument("toric code has no boundaries");
    }
    std::vector<int> path;
    if (type == StabType::Z) {
        if (boundary == BoundaryId::LEFT) {
            for (int c = a.col; c >= 0; --c) {
                path.push_back(lattice.primary_id(a.row, c));
            }
        } else {
            for (int c = a.col + 1; c < lattice.primary_cols; ++c) {
                path.push_back(lattice.primary_id(a.row, c));
            }
        }
    } else {
        if (boundary == BoundaryId::TOP) {
            for (int r = a.row; r >= 0; --r) {
                path.push_back(lattice.primary_id(r, a.col));
            }
        } else {
            for (int r = a.row + 1; r < lattice.primary_rows; ++r) {
                path.push_back(lattice.primary_id(r, a.col));
            }
        }
    }
    return path;
}

std::string dump_lattice(const Lattice &lattice) {
    std::ostringstream out;
    out << code_kind_name(lattice.kind) << " d=" << lattice.distance << " data=" << lattice.num_data()
        << " z_stabs=" << lattice.num_z_stabs() << " x_stabs=" << lattice.num_x_stabs() << "\n";
    auto dump_type = [&](StabType t, const char *tag) {
        const auto &sup = lattice.supports(t);
        for (size_t i = 0; i < sup.size(); ++i) {
            StabCoord s = lattice.stab_coord(t, static_cast<int>(i));
            out << tag << " " << s.row << " " << s.col << " :";
            for (int q : sup[i]) {
                out << " " << q;
            }
            out << "\n";
        }
    };
    dump_type(StabType::Z, "Z");
    dump_type(StabType::X, "X");
    for (size_t i = 0; i < lattice.logical_x.size(); ++i) {
        out << "LX" << i + 1 << " :";
        for (int q : lattice.logical_x[i]) {
            out << " " << q;
        }
        out << "\n";
    }
    for (size_t i = 0; i < lattice.logical_z.size(); ++i) {
        out << "LZ" << i + 1 << " :";
        for (int q : lattice.logical_z[i]) {
            out << " " << q;
        }
        out << "\n";
    }
    return out.str();
}

const char *code_kind_name(CodeKind kind) {
    return kind == CodeKind::TORIC ? "toric" : "surface";
}

}  // namespace surfmatch
