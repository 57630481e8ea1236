#include "ecsf/graphs.hpp"

#include <algorithm>
#include <numeric>

namespace ecsf {

static Edge normalize(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

WeightedGraph::WeightedGraph(std::vector<int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
    int n = vertex_count();
    for (int w : weights_)
        if (w < 1) throw domain_error("vertex weights must be positive");
    for (auto& e : edges_) {
        e = normalize(e);
        if (e.first < 0 || e.second >= n) throw domain_error("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
}

int WeightedGraph::total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0);
}

bool WeightedGraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.first == e.second; });
}

Composition WeightedGraph::weight_composition() const {
    return Composition(weights_);
}

bool WeightedGraph::operator<(const WeightedGraph& other) const {
    if (weights_ != other.weights_) return weights_ < other.weights_;
    return edges_ < other.edges_;
}

WeightedGraph path(int n) {
    if (n < 1) throw domain_error("path requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return WeightedGraph(std::vector<int>(static_cast<size_t>(n), 1), std::move(edges));
}

WeightedGraph star(int n) {
    if (n < 1) throw domain_error("star requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, n - 1);
    return WeightedGraph(std::vector<int>(static_cast<size_t>(n), 1), std::move(edges));
}

WeightedGraph null_graph(int n) {
    if (n < 1) throw domain_error("null graph requires n >= 1");
    return WeightedGraph(std::vector<int>(static_cast<size_t>(n), 1), {});
}

WeightedGraph cycle(int n) {
    if (n < 3) throw domain_error("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return WeightedGraph(std::vector<int>(static_cast<size_t>(n), 1), std::move(edges));
}

WeightedGraph weighted_path(const Composition& a) {
    if (a.empty()) throw domain_error("weighted path of the empty composition");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < a.length(); ++i) edges.emplace_back(i, i + 1);
    return WeightedGraph(a.parts(), std::move(edges));
}

WeightedGraph graph_of_composition(UnweightedFamily fam, const Composition& a) {
    if (a.empty()) throw domain_error("graph of the empty composition");
    WeightedGraph result;
    for (int i = 0; i < a.length(); ++i) {
        WeightedGraph member = fam == UnweightedFamily::paths ? path(a[i]) : star(a[i]);
        result = i == 0 ? member : disjoint_union(result, member);
    }
    return result;
}

WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h) {
    std::vector<int> weights = g.weights();
    weights.insert(weights.end(), h.weights().begin(), h.weights().end());
    std::vector<Edge> edges = g.edges();
    int shift = g.vertex_count();
    for (const Edge& e : h.edges()) edges.emplace_back(e.first + shift, e.second + shift);
    return WeightedGraph(std::move(weights), std::move(edges));
}

WeightedGraph delete_edges(const WeightedGraph& g, const std::vector<Edge>& s) {
    std::vector<Edge> edges = g.edges();
    for (Edge e : s) {
        e = normalize(e);
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end())
            throw domain_error("deleting edge copy absent from the graph");
        edges.erase(it);
    }
    return WeightedGraph(g.weights(), std::move(edges));
}

WeightedGraph add_edges(const WeightedGraph& g, const std::vector<Edge>& s) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), s.begin(), s.end());
    return WeightedGraph(g.weights(), std::move(edges));
}

WeightedGraph contract_edge(const WeightedGraph& g, const Edge& edge) {
    Edge e = normalize(edge);
    auto pos = std::find(g.edges().begin(), g.edges().end(), e);
    if (pos == g.edges().end()) throw domain_error("contracting an absent edge");
    if (e.first == e.second) {
        // loop: drop that copy only
        std::vector<Edge> edges = g.edges();
        edges.erase(edges.begin() + (pos - g.edges().begin()));
        return WeightedGraph(g.weights(), std::move(edges));
    }
    int keep = e.first, gone = e.second;
    std::vector<int> weights;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == gone) continue;
        int w = g.weight(v);
        if (v == keep) w += g.weight(gone);
        weights.push_back(w);
    }
    auto remap = [&](int v) { return v == gone ? keep : (v > gone ? v - 1 : v); };
    std::vector<Edge> edges;
    bool skipped = false;
    for (const Edge& f : g.edges()) {
        if (!skipped && f == e) { // remove exactly the contracted copy
            skipped = true;
            continue;
        }
        edges.emplace_back(remap(f.first), remap(f.second));
    }
    return WeightedGraph(std::move(weights), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.first), b = find(e.second);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> index(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int root = find(v);
        if (index[static_cast<size_t>(root)] < 0) {
            index[static_cast<size_t>(root)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<size_t>(index[static_cast<size_t>(root)])].push_back(v);
    }
    return comps;
}

Partition lambda_of(const WeightedGraph& g) {
    std::vector<int> sums;
    for (const auto& comp : connected_components(g)) {
        int s = 0;
        for (int v : comp) s += g.weight(v);
        sums.push_back(s);
    }
    std::sort(sums.rbegin(), sums.rend());
    return Partition(std::move(sums));
}

ExpansionCheck expansion_check(const WeightedGraph& coarse, const WeightedGraph& fine) {
    ExpansionCheck result;
    Composition alpha = coarse.weight_composition();
    Composition beta = fine.weight_composition();
    if (!coarsens(alpha, beta)) {
        result.reason = "weight composition " + beta.str() +
                        " is not a refinement of " + alpha.str();
        return result;
    }
    // blocks of consecutive fine vertices summing to each coarse weight
    VertexBlocking blocking;
    int at = 0;
    for (int u = 0; u < alpha.length(); ++u) {
        int begin = at, acc = 0;
        while (acc < alpha[u]) acc += beta[at++];
        blocking.blocks.emplace_back(begin, at);
    }
    auto block_of = [&](int fine_vertex) {
        for (int u = 0; u < static_cast<int>(blocking.blocks.size()); ++u)
            if (fine_vertex >= blocking.blocks[static_cast<size_t>(u)].first &&
                fine_vertex < blocking.blocks[static_cast<size_t>(u)].second)
                return u;
        return -1;
    };
    for (int u = 0; u < coarse.vertex_count(); ++u) {
        for (int v = u; v < coarse.vertex_count(); ++v) {
            bool coarse_edge =
                std::find(coarse.edges().begin(), coarse.edges().end(),
                          Edge{u, v}) != coarse.edges().end();
            bool covered = std::any_of(
                fine.edges().begin(), fine.edges().end(), [&](const Edge& e) {
                    int a = block_of(e.first), b = block_of(e.second);
                    return (a == u && b == v) || (a == v && b == u);
                });
            if (coarse_edge != covered) {
                result.reason = "edge condition fails on vertex pair (" +
                                std::to_string(u) + "," + std::to_string(v) + ")";
                return result;
            }
        }
    }
    result.ok = true;
    result.blocking = std::move(blocking);
    return result;
}

WeightedGraph compose_graph(const Composition& a, const WeightedGraph& g,
                            int a_vertex, int z_vertex) {
    if (a.empty()) throw domain_error("compose_graph requires a nonempty composition");
    int n = g.vertex_count();
    if (a_vertex < 0 || a_vertex >= n || z_vertex < 0 || z_vertex >= n)
        throw domain_error("distinguished vertex index out of range");
    int copies = a.size();
    WeightedGraph result = g;
    for (int i = 1; i < copies; ++i) result = disjoint_union(result, g);
    std::vector<Edge> bridges;
    for (int i = 0; i + 1 < copies; ++i)
        bridges.emplace_back(z_vertex + i * n, a_vertex + (i + 1) * n);
    result = add_edges(result, bridges);
    // Contract bridges indexed by set(a^c), highest first so that labels of
    // untouched bridges are unaffected.
    std::set<int> to_contract = set_of(complement(a));
    for (auto it = to_contract.rbegin(); it != to_contract.rend(); ++it) {
        int i = *it; // 1-based bridge index
        result = contract_edge(result, {z_vertex + (i - 1) * n, a_vertex + i * n});
    }
    return result;
}

bool is_isomorphic(const WeightedGraph& g, const WeightedGraph& h) {
    if (g.vertex_count() > 10 || h.vertex_count() > 10)
        throw resource_error("isomorphism check is limited to 10 vertices");
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    {
        std::vector<int> wg = g.weights(), wh = h.weights();
        std::sort(wg.begin(), wg.end());
        std::sort(wh.begin(), wh.end());
        if (wg != wh) return false;
    }
    auto adjacency = [n](const WeightedGraph& x) {
        std::vector<std::vector<int>> m(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n), 0));
        for (const Edge& e : x.edges()) {
            m[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] += 1;
            if (e.first != e.second)
                m[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] += 1;
        }
        return m;
    };
    auto mg = adjacency(g), mh = adjacency(h);
    std::vector<int> perm(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[static_cast<size_t>(t)]) continue;
            if (g.weight(v) != h.weight(t)) continue;
            if (mg[static_cast<size_t>(v)][static_cast<size_t>(v)] !=
                mh[static_cast<size_t>(t)][static_cast<size_t>(t)])
                continue;
            bool consistent = true;
            for (int u = 0; u < v; ++u) {
                if (mg[static_cast<size_t>(v)][static_cast<size_t>(u)] !=
                    mh[static_cast<size_t>(t)][static_cast<size_t>(perm[static_cast<size_t>(u)])]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            perm[static_cast<size_t>(v)] = t;
            used[static_cast<size_t>(t)] = true;
            if (self(self, v + 1)) return true;
            used[static_cast<size_t>(t)] = false;
            perm[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace ecsf
