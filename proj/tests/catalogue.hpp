#pragma once

// Graph generators shared by the test binaries.

#include <random>
#include <vector>

#include "ecsf/graphs.hpp"

namespace ecsf::testing {

/// Every connected weighted multigraph with at most `max_vertices` vertices,
/// at most `max_edges` edges (loops and parallel edges allowed) and vertex
/// weights in 1..max_weight.  Labelled, so isomorphic copies do appear.
inline std::vector<WeightedGraph> small_catalogue(int max_vertices = 3,
                                                  int max_edges = 4,
                                                  int max_weight = 3) {
    std::vector<WeightedGraph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) slots.emplace_back(i, j);
        // multisets of slots as a bounded multiplicity vector
        std::vector<int> mult(slots.size(), 0);
        std::vector<std::vector<Edge>> edge_sets;
        auto rec_edges = [&](auto&& self, size_t i, int used) -> void {
            if (i == slots.size()) {
                std::vector<Edge> edges;
                for (size_t k = 0; k < slots.size(); ++k)
                    for (int c = 0; c < mult[k]; ++c) edges.push_back(slots[k]);
                edge_sets.push_back(std::move(edges));
                return;
            }
            for (int c = 0; used + c <= max_edges; ++c) {
                mult[i] = c;
                self(self, i + 1, used + c);
            }
            mult[i] = 0;
        };
        rec_edges(rec_edges, 0, 0);

        std::vector<int> weights(static_cast<size_t>(n), 1);
        auto rec_weights = [&](auto&& self, int v) -> void {
            if (v == n) {
                for (const auto& edges : edge_sets) {
                    WeightedGraph g(weights, edges);
                    if (connected_components(g).size() == 1) out.push_back(g);
                }
                return;
            }
            for (int w = 1; w <= max_weight; ++w) {
                weights[static_cast<size_t>(v)] = w;
                self(self, v + 1);
            }
        };
        rec_weights(rec_weights, 0);
    }
    return out;
}

/// Connected random graph on n vertices: a random spanning tree plus a few
/// extra edges, loops or parallels included, weights in 1..max_weight.
inline WeightedGraph random_connected(std::mt19937& rng, int n, int extra_edges,
                                      int max_weight = 3) {
    std::uniform_int_distribution<int> wd(1, max_weight);
    std::vector<int> weights;
    for (int i = 0; i < n; ++i) weights.push_back(wd(rng));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        edges.emplace_back(pd(rng), v);
    }
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int k = 0; k < extra_edges; ++k) {
        int a = vd(rng), b = vd(rng);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return WeightedGraph(std::move(weights), std::move(edges));
}

/// Random relabelling of the vertices of g.
inline WeightedGraph shuffled(std::mt19937& rng, const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> weights(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        weights[static_cast<size_t>(perm[static_cast<size_t>(i)])] = g.weight(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = perm[static_cast<size_t>(e.first)], b = perm[static_cast<size_t>(e.second)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return WeightedGraph(std::move(weights), std::move(edges));
}

} // namespace ecsf::testing
