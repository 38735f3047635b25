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

#ifndef SURFMATCH_MATCHING_H
#define SURFMATCH_MATCHING_H

#include <cstdint>
#include <string>
#include <vector>

#include "surfmatch/extraction.h"
#include "surfmatch/lattice.h"

namespace surfmatch {

/// How a real node may leave the code instead of pairing with another node.
struct BoundaryAttach {
    BoundaryId boundary;
    int weight;
};

struct GraphEdge {
    int u;
    int v;
    int weight;
};

/// Weighted graph over detection events of a single stabilizer type.
///
/// Real nodes are indexed 0..num_real()-1, ordered by (round, row, col). On
/// the surface code every real node i owns a unique boundary node with id
/// num_real()+i; boundary nodes are implicitly interconnected by weight-0
/// edges (materialized only inside the matchers and the dump). Toric graphs
/// have no boundary nodes and always an even number of real nodes.
struct MatchGraph {
    CodeKind code;
    StabType type;
    std::vector<DetectionEvent> nodes;
    std::vector<BoundaryAttach> boundary;  // size == nodes.size() on surface, empty on toric
    std::vector<GraphEdge> edges;          // real-real edges only, u < v

    int num_real() const {
        return static_cast<int>(nodes.size());
    }
    int num_total() const {
        return num_real() + static_cast<int>(boundary.size());
    }
    bool has_boundaries() const {
        return !boundary.empty();
    }
};

/// A perfect matching of a MatchGraph: every node (real and boundary) in
/// exactly one pair. Pairs of two boundary nodes are omitted from `pairs`
/// since they carry no weight and no correction.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int64_t total_weight = 0;
};

/// All-pairs graph over the events: real-real edge weight is the space chain
/// distance plus time_edge_weight * |dt|; on the surface code each node also
/// gets its cheapest boundary attachment (space, or the open time edge when
/// model.time_boundaries is set). total_rounds is only consulted for time
/// boundaries. Throws on mixed event types or an odd toric event count.
MatchGraph build_graph(const std::vector<DetectionEvent> &events, const Lattice &lattice,
                       const ErrorModel &model, int total_rounds = 0);

/// Drops every real-real edge with weight >= a + b (sum of the endpoint
/// boundary weights); such an edge can never beat matching both endpoints to
/// their own boundaries, so the minimum matching weight is unchanged. Ties
/// are dropped too. Toric graphs pass through untouched.
MatchGraph prune_edges(MatchGraph graph);

/// Splits by real-real connectivity; boundary nodes travel with their owner.
/// Matching components independently and concatenating gives a minimum-weight
/// matching of the whole graph.
std::vector<MatchGraph> connected_components(const MatchGraph &graph);

/// Exact minimum-weight perfect matching (blossom algorithm). Throws
/// std::logic_error if no perfect matching exists, which indicates an
/// upstream construction bug.
Matching min_weight_perfect_matching(const MatchGraph &graph);

/// Exact optimum by enumeration; test oracle. Throws std::invalid_argument
/// above 12 total nodes.
Matching brute_force_matching(const MatchGraph &graph);

/// Edge-list dump (`u v w` per line, boundary nodes flagged) consumable by
/// external matching tools.
std::string dump_graph(const MatchGraph &graph);

}  // namespace surfmatch

#endif
