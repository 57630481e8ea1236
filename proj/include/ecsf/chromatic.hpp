#pragma once

#include <string>
#include <vector>

#include "ecsf/graphs.hpp"
#include "ecsf/symfunc.hpp"

namespace ecsf {

/// Set partition of the vertex indices with every block inducing a
/// connected subgraph.
using ConnectedSetPartition = std::vector<std::vector<int>>;

/// All connected set partitions of g, ordered by decreasing block count
/// (so refinements precede the partitions they refine).
std::vector<ConnectedSetPartition> contraction_lattice(const WeightedGraph& g);

/// Signed edge-subset expansion into power sums.  Guarded at 24 edges.
SymFunc x_edge_subsets(const WeightedGraph& g);

/// Recursive deletion-contraction with memoization on a canonical graph key.
SymFunc x_deletion_contraction(const WeightedGraph& g);

/// Moebius-function expansion over the contraction lattice.  Guarded at
/// 8 vertices.
SymFunc x_mobius(const WeightedGraph& g);

/// Number of proper colourings with k colours, via p_i -> k specialization.
Integer chromatic_polynomial(const WeightedGraph& g, const Integer& k);
/// Coefficients of the chromatic polynomial, index = power of k.
std::vector<Integer> chromatic_poly_coeffs(const WeightedGraph& g);
/// Direct enumeration cross-check; guarded at 8 vertices, k <= 6.
Integer count_proper_colourings(const WeightedGraph& g, int k);

struct VerifyResult {
    bool ok = false;
    std::string detail;
    SymFunc lhs, rhs;
};

/// Checks the inclusion-exclusion identity for an expansion pair and a
/// reconnecting edge multiset.
VerifyResult verify_inclusion_exclusion(const WeightedGraph& coarse,
                                        const WeightedGraph& fine,
                                        const std::vector<Edge>& extra);

/// Checks that the alternating sum over subsets of a cycle minus one fixed
/// edge vanishes.
VerifyResult verify_k_deletion(const WeightedGraph& g,
                               const std::vector<Edge>& cycle_edges,
                               const Edge& fixed);

/// Proper-colouring enumeration of the monomials of X restricted to
/// x_1..x_k.  Guarded at 8 vertices, k <= 4.
std::map<std::vector<int>, Integer> x_oracle_colourings(const WeightedGraph& g, int k);

} // namespace ecsf
