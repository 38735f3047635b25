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

#include "surfmatch/matching.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "surfmatch/blossom.h"

namespace surfmatch {

namespace {

bool node_order(const DetectionEvent &a, const DetectionEvent &b) {
    return std::tie(a.round, a.space.row, a.space.col) < std::tie(b.round, b.space.row, b.space.col);
}

}  // namespace

MatchGraph build_graph(const std::vector<DetectionEvent> &events, const Lattice &lattice,
                       const ErrorModel &model, int total_rounds) {
    MatchGraph graph;
    graph.code = lattice.kind;
    graph.nodes = events;
    if (!events.empty()) {
        graph.type = events.front().type;
        for (const auto &e : events) {
            if (e.type != graph.type) {
                throw std::invalid_argument("detection events of mixed stabilizer types");
            }
        }
    } else {
        graph.type = StabType::Z;
    }
    std::sort(graph.nodes.begin(), graph.nodes.end(), node_order);

    if (lattice.kind == CodeKind::TORIC && graph.num_real() % 2 != 0) {
        throw std::invalid_argument("toric detection event count must be even");
    }

    int n = graph.num_real();
    graph.edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int w = chain_distance(lattice, graph.type, graph.nodes[i].space, graph.nodes[j].space) +
                    model.time_edge_weight * std::abs(graph.nodes[i].round - graph.nodes[j].round);
            graph.edges.push_back({i, j, w});
        }
    }

    if (lattice.kind == CodeKind::SURFACE) {
        graph.boundary.reserve(n);
        for (const auto &node : graph.nodes) {
            BoundaryInfo space = nearest_boundary(lattice, graph.type, node.space);
            BoundaryAttach attach{space.boundary, space.weight};
            if (model.time_boundaries) {
                int time_w = model.time_edge_weight * (total_rounds - node.round + 1);
                if (time_w < attach.weight) {
                    attach = {BoundaryId::TIME, time_w};
                }
            }
            graph.boundary.push_back(attach);
        }
    }
    return graph;
}

MatchGraph prune_edges(MatchGraph graph) {
    if (!graph.has_boundaries()) {
        return graph;
    }
    std::erase_if(graph.edges, [&](const GraphEdge &e) {
        return e.weight >= graph.boundary[e.u].weight + graph.boundary[e.v].weight;
    });
    return graph;
}

std::vector<MatchGraph> connected_components(const MatchGraph &graph) {
    int n = graph.num_real();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adjacency(n);
    for (const auto &e : graph.edges) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    int num_comps = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) {
            continue;
        }
        comp[start] = num_comps;
        stack.push_back(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adjacency[u]) {
                if (comp[v] < 0) {
                    comp[v] = num_comps;
                    stack.push_back(v);
                }
            }
        }
        ++num_comps;
    }

    std::vector<MatchGraph> result(num_comps);
    std::vector<int> local_id(n);
    for (int i = 0; i < n; ++i) {
        auto &part = result[comp[i]];
        local_id[i] = static_cast<int>(part.nodes.size());
        part.nodes.push_back(graph.nodes[i]);
        if (graph.has_boundaries()) {
            part.boundary.push_back(graph.boundary[i]);
        }
    }
    for (auto &part : result) {
        part.code = graph.code;
        part.type = graph.type;
    }
    for (const auto &e : graph.edges) {
        result[comp[e.u]].edges.push_back({local_id[e.u], local_id[e.v], e.weight});
    }
    return result;
}

Matching min_weight_perfect_matching(const MatchGraph &graph) {
    Matching matching;
    int real = graph.num_real();
    int total = graph.num_total();
    if (total == 0) {
        return matching;
    }
    if (total % 2 != 0) {
        throw std::logic_error("matching graph has an odd number of nodes");
    }

    // Reduce to maximum-weight matching: transformed weight M - w with M
    // large enough that cardinality always dominates, so the maximum-weight
    // matching is perfect whenever a perfect matching exists.
    int64_t w_max = 0;
    for (const auto &e : graph.edges) {
        w_max = std::max<int64_t>(w_max, e.weight);
    }
    for (const auto &b : graph.boundary) {
        w_max = std::max<int64_t>(w_max, b.weight);
    }
    int64_t big = w_max * (total / 2) + 1;

    thread_local std::vector<int64_t> weight_of;  // real-real pair lookup, -1 = no edge
    weight_of.assign(static_cast<size_t>(real) * real, -1);

    std::vector<WeightedEdge> edges;
    edges.reserve(graph.edges.size() + graph.boundary.size() * (graph.boundary.size() + 1) / 2);
    for (const auto &e : graph.edges) {
        edges.push_back({e.u, e.v, big - e.weight});
        weight_of[static_cast<size_t>(e.u) * real + e.v] = e.weight;
        weight_of[static_cast<size_t>(e.v) * real + e.u] = e.weight;
    }
    for (int i = 0; i < static_cast<int>(graph.boundary.size()); ++i) {
        edges.push_back({i, real + i, big - graph.boundary[i].weight});
        for (int j = i + 1; j < static_cast<int>(graph.boundary.size()); ++j) {
            edges.push_back({real + i, real + j, big});
        }
    }

    auto result = max_weight_matching(total, edges);
    if (result.num_pairs * 2 != total) {
        throw std::logic_error("no perfect matching exists in detection event graph");
    }
    for (int u = 0; u < total; ++u) {
        int v = result.mate[u];
        if (v <= u) {
            continue;
        }
        if (u >= real) {
            continue;  // boundary-boundary pair, weightless
        }
        int64_t w;
        if (v < real) {
            w = weight_of[static_cast<size_t>(u) * real + v];
            if (w < 0) {
                throw std::logic_error("matching used a pruned edge");
            }
        } else {
            if (v != real + u) {
                throw std::logic_error("real node matched to a foreign boundary node");
            }
            w = graph.boundary[u].weight;
        }
        matching.pairs.emplace_back(u, v);
        matching.total_weight += w;
    }
    return matching;
}

Matching brute_force_matching(const MatchGraph &graph) {
    int real = graph.num_real();
    int total = graph.num_total();
    if (total > 12) {
        throw std::invalid_argument("brute force matching capped at 12 nodes");
    }
    Matching best;
    if (total == 0) {
        return best;
    }
    if (total % 2 != 0) {
        throw std::logic_error("matching graph has an odd number of nodes");
    }
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
    std::vector<std::vector<int64_t>> w(total, std::vector<int64_t>(total, kInf));
    for (const auto &e : graph.edges) {
        w[e.u][e.v] = w[e.v][e.u] = e.weight;
    }
    for (int i = 0; i < static_cast<int>(graph.boundary.size()); ++i) {
        w[i][real + i] = w[real + i][i] = graph.boundary[i].weight;
        for (int j = i + 1; j < static_cast<int>(graph.boundary.size()); ++j) {
            w[real + i][real + j] = w[real + j][real + i] = 0;
        }
    }

    std::vector<int> partner(total, -1);
    std::vector<std::pair<int, int>> current, best_pairs;
    int64_t best_weight = kInf;
    auto recurse = [&](auto &&self, int64_t acc) -> void {
        int u = -1;
        for (int i = 0; i < total; ++i) {
            if (partner[i] < 0) {
                u = i;
                break;
            }
        }
        if (u < 0) {
            if (acc < best_weight) {
                best_weight = acc;
                best_pairs = current;
            }
            return;
        }
        for (int v = u + 1; v < total; ++v) {
            if (partner[v] >= 0 || w[u][v] >= kInf) {
                continue;
            }
            partner[u] = v;
            partner[v] = u;
            current.emplace_back(u, v);
            self(self, acc + w[u][v]);
            current.pop_back();
            partner[u] = partner[v] = -1;
        }
    };
    recurse(recurse, 0);
    if (best_weight >= kInf) {
        throw std::logic_error("no perfect matching exists in detection event graph");
    }
    for (auto [u, v] : best_pairs) {
        if (u >= real) {
            continue;
        }
        best.pairs.emplace_back(u, v);
        best.total_weight += w[u][v];
    }
    return best;
}

std::string dump_graph(const MatchGraph &graph) {
    std::ostringstream out;
    for (int i = 0; i < graph.num_real(); ++i) {
        const auto &node = graph.nodes[i];
        out << "node " << i << " t=" << node.round << " r=" << node.space.row
            << " c=" << node.space.col << " real\n";
    }
    for (int i = 0; i < static_cast<int>(graph.boundary.size()); ++i) {
        out << "node " << graph.num_real() + i << " boundary\n";
    }
    for (const auto &e : graph.edges) {
        out << e.u << " " << e.v << " " << e.weight << "\n";
    }
    for (int i = 0; i < static_cast<int>(graph.boundary.size()); ++i) {
        out << i << " " << graph.num_real() + i << " " << graph.boundary[i].weight << "\n";
        for (int j = i + 1; j < static_cast<int>(graph.boundary.size()); ++j) {
            out << graph.num_real() + i << " " << graph.num_real() + j << " 0\n";
        }
    }
    return out.str();
}

}  // namespace surfmatch
