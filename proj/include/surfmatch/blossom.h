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

#ifndef SURFMATCH_BLOSSOM_H
#define SURFMATCH_BLOSSOM_H

#include <cstdint>
#include <vector>

namespace surfmatch {

struct WeightedEdge {
    int u;
    int v;
    int64_t weight;
};

struct MaxWeightMatchingResult {
    std::vector<int> mate;  // mate[i] = partner of i, or -1 if unmatched
    int64_t total_weight = 0;
    int num_pairs = 0;
};

/// Exact maximum-weight matching on a general graph (Edmonds' blossom
/// algorithm, dense primal-dual formulation, O(n^3)).
///
/// Nodes are 0..n-1. Edge weights must be positive; vertices may stay
/// unmatched when no positively-weighted augmentation exists. Parallel edges
/// keep the heaviest. Deterministic for a fixed input ordering.
MaxWeightMatchingResult max_weight_matching(int n, const std::vector<WeightedEdge> &edges);

}  // namespace surfmatch

#endif
