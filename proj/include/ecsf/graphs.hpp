#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecsf/compositions.hpp"

namespace ecsf {

using Edge = std::pair<int, int>; // unordered, stored with first <= second

/// Labelled multigraph with loops and positive integer vertex weights.
/// Vertices are indexed 0..N-1; the edge multiset is kept as a sorted list
/// so repeated pairs are distinguishable by position.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<int> weights, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(weights_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int weight(int v) const { return weights_[static_cast<size_t>(v)]; }
    int total_weight() const;
    bool has_loop() const;

    /// The weight sequence read as a composition.
    Composition weight_composition() const;

    bool operator==(const WeightedGraph&) const = default;
    bool operator<(const WeightedGraph& other) const;

private:
    std::vector<int> weights_;
    std::vector<Edge> edges_;
};

// ---- families ----
WeightedGraph path(int n);
WeightedGraph star(int n);
WeightedGraph null_graph(int n);
WeightedGraph cycle(int n);
WeightedGraph weighted_path(const Composition& a);

enum class UnweightedFamily { paths, stars };
/// The labelled disjoint union G_a1 | ... | G_ak of family members.
WeightedGraph graph_of_composition(UnweightedFamily fam, const Composition& a);

// ---- surgery ----
WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h);
WeightedGraph delete_edges(const WeightedGraph& g, const std::vector<Edge>& s);
WeightedGraph add_edges(const WeightedGraph& g, const std::vector<Edge>& s);
/// Loop contraction removes the loop copy; otherwise endpoints merge at the
/// smaller label with summed weight, parallel copies becoming loops.
WeightedGraph contract_edge(const WeightedGraph& g, const Edge& e);

std::vector<std::vector<int>> connected_components(const WeightedGraph& g);
/// Partition of the total weight by component weight sums.
Partition lambda_of(const WeightedGraph& g);

// ---- expansions (inclusion-exclusion setup) ----

/// Ordered consecutive vertex ranges of the finer graph, one per coarse
/// vertex: blocks[v] = [begin, end).
struct VertexBlocking {
    std::vector<std::pair<int, int>> blocks;
};

struct ExpansionCheck {
    bool ok = false;
    VertexBlocking blocking; // valid when ok
    std::string reason;      // offending clause when !ok
};

/// Checks whether `fine` is an expansion of `coarse` and returns the
/// blocking R on success.
ExpansionCheck expansion_check(const WeightedGraph& coarse, const WeightedGraph& fine);

/// Composition of a composition with a weighted graph: |a| copies of g
/// bridged in a row at z -> a', with the bridges indexed by set of the
/// complement of `a` contracted.
WeightedGraph compose_graph(const Composition& a, const WeightedGraph& g,
                            int a_vertex, int z_vertex);

/// Weight- and adjacency-preserving bijection test (edge multiplicities
/// included).  Brute force, guarded at <= 10 vertices per graph.
bool is_isomorphic(const WeightedGraph& g, const WeightedGraph& h);

} // namespace ecsf
