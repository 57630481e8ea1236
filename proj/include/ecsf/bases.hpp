#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ecsf/chromatic.hpp"
#include "ecsf/compositions.hpp"
#include "ecsf/graphs.hpp"
#include "ecsf/symfunc.hpp"

namespace ecsf {

/// A source of graphs for building chromatic bases.  Either a nifty family
/// (one connected simple weighted graph per total weight n) or a
/// per-partition table lambda -> (H_lambda, lambda).
class GraphFamily {
public:
    enum class Kind { nifty, table };

    static GraphFamily paths();
    static GraphFamily stars();
    /// Explicit members, member(n) = members[n-1]; used for ad-hoc families.
    static GraphFamily from_members(std::vector<WeightedGraph> members,
                                    std::string name = "custom");
    /// The weighted-path table H_lambda = P_len(lambda) with weights lambda.
    static GraphFamily weighted_path_table();
    /// Arbitrary per-partition table.  Each graph must be simple with weight
    /// composition equal to its key.
    static GraphFamily from_table(std::map<Partition, WeightedGraph> table,
                                  std::string name = "table");

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    /// Nifty member of total weight n (validated connected, simple).
    WeightedGraph member(int n) const;
    /// Table row graph, weighted by lambda.
    WeightedGraph table_member(const Partition& l) const;
    /// Power sum expansion of the row indexed by lambda.
    SymFunc row_x(const Partition& l) const;

private:
    Kind kind_ = Kind::nifty;
    std::string name_;
    std::function<WeightedGraph(int)> nifty_;
    std::function<WeightedGraph(const Partition&)> table_;
};

/// Square matrix over the partitions of one degree in canonical order.
struct BasisMatrix {
    int degree = 0;
    std::vector<Partition> order;
    std::vector<std::vector<Rational>> rows;
};

/// Rows expand the family's X functions over power sums; throws
/// invariant_error unless the result is unit lower triangular.
BasisMatrix family_matrix(const GraphFamily& fam, int n);

/// X of the path weighted, in order, by a: signed sum of p over coarsenings.
SymFunc weighted_path_to_p(const Composition& a);
/// Coefficients of the same function over the unweighted-path chromatic
/// basis (keys are the partitions indexing X_P).
std::map<Partition, Integer> weighted_path_in_path_basis(const Composition& a);

SymFunc path_to_p(int n);
SymFunc star_to_p(int n);

/// p_lambda over the path (resp. star) chromatic basis.
std::map<Partition, Integer> p_in_path_basis(const Partition& l);
std::map<Partition, Integer> p_in_star_basis(const Partition& l);

/// Checks that p_lambda -> X_lambda is an involution degree-wise up to n.
/// Requires a neat family.
bool reciprocity_check(const GraphFamily& fam, int n);

struct NeatResult {
    bool ok = true;
    int failing_degree = 0;
    std::vector<Edge> failing_subset;
    std::string detail;
};

/// Tests the edge-deletion closure of a nifty family through degree n.
NeatResult is_neat(const GraphFamily& fam, int n);

/// True when the degree-n rows are linearly independent; throws
/// invariant_error on a singular matrix.
bool independence_check(const GraphFamily& fam, int n);

/// Image of the ribbon r_a under the endomorphism h_i -> X_{(i) o (g,w)}.
SymFunc ribbon_image_under_composition(const Composition& a, const WeightedGraph& g,
                                       int a_vertex, int z_vertex);

} // namespace ecsf
