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

#include "surfmatch/blossom.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace surfmatch {

namespace {

// Primal-dual weighted blossom solver over an adjacency matrix.
//
// Vertices are 1..n; contracted blossoms get ids above n (at most n/2 alive,
// ids bounded by 2n). Duals are kept integral by doubling edge weights inside
// the reduced-cost arithmetic. Vertex labels start at the maximum edge weight
// and an exposed vertex whose label reaches zero stops growing its tree,
// which yields a maximum-weight (not necessarily perfect) matching.
//
// State per node id x:
//   st[x]     - id of the top-level node containing x (st[x] == x if surface)
//   lab[x]    - dual variable (vertex label, or blossom dual for ids > n)
//   match[x]  - original vertex matched to x across x's outer edge, 0 if none
//   pa[x]     - original vertex on the tree-parent side of an inner node
//   S[x]      - -1 free, 0 outer, 1 inner (meaningful for top-level nodes)
//   slack[x]  - original outer vertex with the tightest edge into x
//   flower[b] - child cycle of blossom b, base first
//   flower_from[b][x] - child of b whose subtree contains original vertex x
struct Solver {
    struct EdgeRec {
        int u = 0, v = 0;
        int64_t w = 0;
    };

    int n = 0, n_x = 0;
    std::vector<std::vector<EdgeRec>> g;
    std::vector<int64_t> lab;
    std::vector<int> match, slack, st, pa, S, vis;
    std::vector<std::vector<int>> flower, flower_from;
    std::deque<int> q;
    int lca_stamp = 0;

    int64_t e_delta(const EdgeRec &e) const {
        return lab[e.u] + lab[e.v] - g[e.u][e.v].w * 2;
    }

    void update_slack(int u, int x) {
        if (!slack[x] || e_delta(g[u][x]) < e_delta(g[slack[x]][x])) {
            slack[x] = u;
        }
    }

    void set_slack(int x) {
        slack[x] = 0;
        for (int u = 1; u <= n; ++u) {
            if (g[u][x].w > 0 && st[u] != x && S[st[u]] == 0) {
                update_slack(u, x);
            }
        }
    }

    void q_push(int x) {
        if (x <= n) {
            q.push_back(x);
        } else {
            for (int i : flower[x]) {
                q_push(i);
            }
        }
    }

    void set_st(int x, int b) {
        st[x] = b;
        if (x > n) {
            for (int i : flower[x]) {
                set_st(i, b);
            }
        }
    }

    // Position of child xr in blossom b's cycle, made even by flipping the
    // cycle direction when needed so alternation inside the blossom works out.
    int get_pr(int b, int xr) {
        int pr = static_cast<int>(std::find(flower[b].begin(), flower[b].end(), xr) -
                                  flower[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower[b].begin() + 1, flower[b].end());
            return static_cast<int>(flower[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match[u] = g[u][v].v;
        if (u > n) {
            EdgeRec e = g[u][v];
            int xr = flower_from[u][e.u];
            int pr = get_pr(u, xr);
            for (int i = 0; i < pr; ++i) {
                set_match(flower[u][i], flower[u][i ^ 1]);
            }
            set_match(xr, v);
            std::rotate(flower[u].begin(), flower[u].begin() + pr, flower[u].end());
        }
    }

    void augment(int u, int v) {
        while (true) {
            int xnv = st[match[u]];
            set_match(u, v);
            if (!xnv) {
                return;
            }
            set_match(xnv, st[pa[xnv]]);
            u = st[pa[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++lca_stamp; u || v; std::swap(u, v)) {
            if (u == 0) {
                continue;
            }
            if (vis[u] == lca_stamp) {
                return u;
            }
            vis[u] = lca_stamp;
            u = st[match[u]];
            if (u) {
                u = st[pa[u]];
            }
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n + 1;
        while (b <= n_x && st[b]) {
            ++b;
        }
        if (b > n_x) {
            n_x = b;
        }
        lab[b] = 0;
        S[b] = 0;
        match[b] = match[lca];
        flower[b].clear();
        flower[b].push_back(lca);
        for (int x = u, y; x != lca; x = st[pa[y]]) {
            flower[b].push_back(x);
            flower[b].push_back(y = st[match[x]]);
            q_push(y);
        }
        std::reverse(flower[b].begin() + 1, flower[b].end());
        for (int x = v, y; x != lca; x = st[pa[y]]) {
            flower[b].push_back(x);
            flower[b].push_back(y = st[match[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x; ++x) {
            g[b][x].w = g[x][b].w = 0;
        }
        for (int x = 1; x <= n; ++x) {
            flower_from[b][x] = 0;
        }
        for (int xs : flower[b]) {
            for (int x = 1; x <= n_x; ++x) {
                if (g[b][x].w == 0 || e_delta(g[xs][x]) < e_delta(g[b][x])) {
                    g[b][x] = g[xs][x];
                    g[x][b] = g[x][xs];
                }
            }
            for (int x = 1; x <= n; ++x) {
                if (flower_from[xs][x]) {
                    flower_from[b][x] = xs;
                }
            }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int i : flower[b]) {
            set_st(i, i);
        }
        int xr = flower_from[b][g[b][pa[b]].u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower[b][i];
            int xns = flower[b][i + 1];
            pa[xs] = g[xns][xs].u;
            S[xs] = 1;
            S[xns] = 0;
            slack[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        S[xr] = 1;
        pa[xr] = pa[b];
        for (size_t i = pr + 1; i < flower[b].size(); ++i) {
            int xs = flower[b][i];
            S[xs] = -1;
            set_slack(xs);
        }
        st[b] = 0;
    }

    bool on_found_edge(const EdgeRec &e) {
        int u = st[e.u];
        int v = st[e.v];
        if (S[v] == -1) {
            pa[v] = e.u;
            S[v] = 1;
            int nu = st[match[v]];
            slack[v] = slack[nu] = 0;
            S[nu] = 0;
            q_push(nu);
        } else if (S[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool run_phase() {
        std::fill(S.begin(), S.begin() + n_x + 1, -1);
        std::fill(slack.begin(), slack.begin() + n_x + 1, 0);
        q.clear();
        for (int x = 1; x <= n_x; ++x) {
            if (st[x] == x && !match[x]) {
                pa[x] = 0;
                S[x] = 0;
                q_push(x);
            }
        }
        if (q.empty()) {
            return false;
        }
        while (true) {
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                if (S[st[u]] != 0) {
                    continue;
                }
                for (int v = 1; v <= n; ++v) {
                    if (g[u][v].w > 0 && st[u] != st[v]) {
                        if (e_delta(g[u][v]) == 0) {
                            if (on_found_edge(g[u][v])) {
                                return true;
                            }
                        } else {
                            update_slack(u, st[v]);
                        }
                    }
                }
            }
            int64_t d = std::numeric_limits<int64_t>::max();
            for (int b = n + 1; b <= n_x; ++b) {
                if (st[b] == b && S[b] == 1) {
                    d = std::min(d, lab[b] / 2);
                }
            }
            for (int x = 1; x <= n_x; ++x) {
                if (st[x] == x && slack[x]) {
                    if (S[x] == -1) {
                        d = std::min(d, e_delta(g[slack[x]][x]));
                    } else if (S[x] == 0) {
                        d = std::min(d, e_delta(g[slack[x]][x]) / 2);
                    }
                }
            }
            for (int u = 1; u <= n; ++u) {
                if (S[st[u]] == 0) {
                    if (lab[u] <= d) {
                        return false;  // growing further cannot add weight
                    }
                    lab[u] -= d;
                } else if (S[st[u]] == 1) {
                    lab[u] += d;
                }
            }
            for (int b = n + 1; b <= n_x; ++b) {
                if (st[b] == b) {
                    if (S[b] == 0) {
                        lab[b] += d * 2;
                    } else if (S[b] == 1) {
                        lab[b] -= d * 2;
                    }
                }
            }
            q.clear();
            for (int x = 1; x <= n_x; ++x) {
                if (st[x] == x && slack[x] && st[slack[x]] != x &&
                    e_delta(g[slack[x]][x]) == 0) {
                    if (on_found_edge(g[slack[x]][x])) {
                        return true;
                    }
                }
            }
            for (int b = n + 1; b <= n_x; ++b) {
                if (st[b] == b && S[b] == 1 && lab[b] == 0) {
                    expand_blossom(b);
                }
            }
        }
    }

    void init(int num_nodes, const std::vector<WeightedEdge> &edges) {
        n = num_nodes;
        n_x = n;
        int cap = 2 * n + 1;
        if (static_cast<int>(g.size()) < cap) {
            g.assign(cap, std::vector<EdgeRec>(cap));
            lab.assign(cap, 0);
            match.assign(cap, 0);
            slack.assign(cap, 0);
            st.assign(cap, 0);
            pa.assign(cap, 0);
            S.assign(cap, 0);
            vis.assign(cap, 0);
            flower.assign(cap, {});
            flower_from.assign(cap, std::vector<int>(n + 1, 0));
            lca_stamp = 0;
        }
        for (int u = 0; u < cap; ++u) {
            st[u] = u;
            match[u] = 0;
            vis[u] = 0;
            flower[u].clear();
            if (static_cast<int>(flower_from[u].size()) < n + 1) {
                flower_from[u].assign(n + 1, 0);
            }
        }
        lca_stamp = 0;
        for (int u = 1; u <= n; ++u) {
            for (int v = 1; v <= n; ++v) {
                g[u][v] = {u, v, 0};
                flower_from[u][v] = u == v ? u : 0;
            }
        }
        int64_t w_max = 0;
        for (const auto &e : edges) {
            if (e.u == e.v) {
                continue;
            }
            int u = e.u + 1;
            int v = e.v + 1;
            if (e.weight > g[u][v].w) {
                g[u][v].w = g[v][u].w = e.weight;
            }
            w_max = std::max(w_max, e.weight);
        }
        for (int u = 1; u <= n; ++u) {
            lab[u] = w_max;
        }
    }
};

}  // namespace

MaxWeightMatchingResult max_weight_matching(int n, const std::vector<WeightedEdge> &edges) {
    for (const auto &e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw std::invalid_argument("matching edge endpoint out of range");
        }
        if (e.weight <= 0) {
            throw std::invalid_argument("matching edge weights must be positive");
        }
    }
    MaxWeightMatchingResult result;
    result.mate.assign(n, -1);
    if (n == 0) {
        return result;
    }
    thread_local Solver solver;
    solver.init(n, edges);
    while (solver.run_phase()) {
    }
    for (int u = 1; u <= n; ++u) {
        if (solver.match[u] && solver.match[u] < u) {
            result.mate[u - 1] = solver.match[u] - 1;
            result.mate[solver.match[u] - 1] = u - 1;
            result.total_weight += solver.g[u][solver.match[u]].w;
            ++result.num_pairs;
        }
    }
    return result;
}

}  // namespace surfmatch
