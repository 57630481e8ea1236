#include "ecsf/chromatic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ecsf {

std::vector<ConnectedSetPartition> contraction_lattice(const WeightedGraph& g) {
    int n = g.vertex_count();
    if (n > 8) throw resource_error("contraction lattice is limited to 8 vertices");
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = true;
        adj[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] = true;
    }
    auto block_connected = [&](const std::vector<int>& block) {
        if (block.size() <= 1) return true;
        std::vector<int> stack{block[0]};
        std::set<int> seen{block[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : block) {
                if (!seen.count(u) && adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) {
                    seen.insert(u);
                    stack.push_back(u);
                }
            }
        }
        return seen.size() == block.size();
    };
    std::vector<ConnectedSetPartition> out;
    ConnectedSetPartition cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            for (const auto& block : cur)
                if (!block_connected(block)) return;
            out.push_back(cur);
            return;
        }
        // index loop: the recursion grows cur, which may reallocate
        for (size_t bi = 0; bi < cur.size(); ++bi) {
            cur[bi].push_back(v);
            self(self, v + 1);
            cur[bi].pop_back();
        }
        cur.push_back({v});
        self(self, v + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const ConnectedSetPartition& a, const ConnectedSetPartition& b) {
                  return a.size() > b.size();
              });
    return out;
}

static Partition weight_type(const WeightedGraph& g, const std::vector<Edge>& subset) {
    return lambda_of(WeightedGraph(g.weights(), subset));
}

SymFunc x_edge_subsets(const WeightedGraph& g) {
    int m = g.edge_count();
    if (m > 24) throw resource_error("edge-subset expansion is limited to 24 edges");
    SymFunc f;
    std::vector<Edge> subset;
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        subset.clear();
        for (int i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) subset.push_back(g.edges()[static_cast<size_t>(i)]);
        Rational sign = subset.size() % 2 == 0 ? 1 : -1;
        f.add_term(weight_type(g, subset), sign);
    }
    return f;
}

static SymFunc delcon(const WeightedGraph& g, std::map<WeightedGraph, SymFunc>& memo) {
    if (g.has_loop()) return SymFunc{};
    if (g.edge_count() == 0)
        return p_of(underlying_partition(g.weight_composition()));
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    // edges are sorted, so the longest run is the max-multiplicity edge
    Edge pick = g.edges()[0];
    int best = 0;
    for (size_t i = 0; i < g.edges().size();) {
        size_t j = i;
        while (j < g.edges().size() && g.edges()[j] == g.edges()[i]) ++j;
        if (static_cast<int>(j - i) > best) {
            best = static_cast<int>(j - i);
            pick = g.edges()[i];
        }
        i = j;
    }
    SymFunc result = delcon(delete_edges(g, {pick}), memo) -
                     delcon(contract_edge(g, pick), memo);
    memo.emplace(g, result);
    return result;
}

SymFunc x_deletion_contraction(const WeightedGraph& g) {
    std::map<WeightedGraph, SymFunc> memo;
    return delcon(g, memo);
}

SymFunc x_mobius(const WeightedGraph& g) {
    if (g.has_loop()) return SymFunc{};
    auto lattice = contraction_lattice(g); // decreasing block count, 0-hat first
    size_t count = lattice.size();
    // block id per vertex, for refinement tests
    std::vector<std::vector<int>> block_id(count,
                                           std::vector<int>(static_cast<size_t>(g.vertex_count())));
    for (size_t i = 0; i < count; ++i)
        for (size_t b = 0; b < lattice[i].size(); ++b)
            for (int v : lattice[i][b]) block_id[i][static_cast<size_t>(v)] = static_cast<int>(b);
    auto refines = [&](size_t s, size_t p) {
        // every block of s inside one block of p
        for (const auto& block : lattice[s]) {
            int target = block_id[p][static_cast<size_t>(block[0])];
            for (int v : block)
                if (block_id[p][static_cast<size_t>(v)] != target) return false;
        }
        return true;
    };
    std::vector<Integer> mu(count);
    SymFunc f;
    for (size_t i = 0; i < count; ++i) {
        if (lattice[i].size() == static_cast<size_t>(g.vertex_count())) {
            mu[i] = 1;
        } else {
            Integer acc = 0;
            for (size_t s = 0; s < count; ++s) {
                if (s == i || lattice[s].size() <= lattice[i].size()) continue;
                if (refines(s, i)) acc += mu[s];
            }
            mu[i] = -acc;
        }
        std::vector<int> sums;
        for (const auto& block : lattice[i]) {
            int w = 0;
            for (int v : block) w += g.weight(v);
            sums.push_back(w);
        }
        std::sort(sums.rbegin(), sums.rend());
        f.add_term(Partition(std::move(sums)), Rational(mu[i]));
    }
    return f;
}

Integer chromatic_polynomial(const WeightedGraph& g, const Integer& k) {
    return to_integer(evaluate_all_ones(x_deletion_contraction(g), k));
}

std::vector<Integer> chromatic_poly_coeffs(const WeightedGraph& g) {
    std::vector<Integer> out;
    for (const Rational& c : as_polynomial_in_k(x_deletion_contraction(g)))
        out.push_back(to_integer(c));
    return out;
}

Integer count_proper_colourings(const WeightedGraph& g, int k) {
    int n = g.vertex_count();
    if (n > 8 || k > 6) throw resource_error("colouring count is limited to 8 vertices, k <= 6");
    if (k < 0) throw domain_error("k must be nonnegative");
    Integer total = 0;
    std::vector<int> colour(static_cast<size_t>(n), 0);
    auto proper = [&]() {
        for (const Edge& e : g.edges())
            if (colour[static_cast<size_t>(e.first)] == colour[static_cast<size_t>(e.second)])
                return false;
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (proper()) ++total;
            return;
        }
        for (int c = 0; c < k; ++c) {
            colour[static_cast<size_t>(v)] = c;
            self(self, v + 1);
        }
    };
    if (k == 0) return n == 0 ? 1 : 0;
    rec(rec, 0);
    return total;
}

VerifyResult verify_inclusion_exclusion(const WeightedGraph& coarse,
                                        const WeightedGraph& fine,
                                        const std::vector<Edge>& extra) {
    VerifyResult out;
    ExpansionCheck exp = expansion_check(coarse, fine);
    if (!exp.ok) {
        out.detail = "not an expansion: " + exp.reason;
        return out;
    }
    // components of (V(fine), extra) must be exactly the blocking
    WeightedGraph skeleton(fine.weights(), extra);
    auto comps = connected_components(skeleton);
    std::set<std::set<int>> have, want;
    for (const auto& c : comps) have.insert(std::set<int>(c.begin(), c.end()));
    for (const auto& [b, e] : exp.blocking.blocks) {
        std::set<int> block;
        for (int v = b; v < e; ++v) block.insert(v);
        want.insert(std::move(block));
    }
    if (have != want) {
        out.detail = "components of the reconnecting edge set do not match the blocking";
        return out;
    }
    out.lhs = x_edge_subsets(coarse);
    size_t m = extra.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<Edge> s;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) s.push_back(extra[i]);
        Rational sign = s.size() % 2 == 0 ? 1 : -1;
        SymFunc term = x_edge_subsets(add_edges(fine, s));
        term *= sign;
        out.rhs += term;
    }
    out.ok = out.lhs == out.rhs;
    if (!out.ok) out.detail = "identity fails";
    return out;
}

VerifyResult verify_k_deletion(const WeightedGraph& g,
                               const std::vector<Edge>& cycle_edges,
                               const Edge& fixed) {
    VerifyResult out;
    // the given edges must form a cycle in g containing the fixed edge
    {
        std::vector<Edge> pool = g.edges();
        for (Edge e : cycle_edges) {
            if (e.first > e.second) std::swap(e.first, e.second);
            auto it = std::find(pool.begin(), pool.end(), e);
            if (it == pool.end()) throw domain_error("cycle edge absent from the graph");
            pool.erase(it);
        }
        std::map<int, int> degree;
        for (Edge e : cycle_edges) {
            degree[e.first] += 1;
            degree[e.second] += 1;
        }
        for (const auto& [v, d] : degree)
            if (d != 2) throw domain_error("edges do not form a cycle");
        if (degree.size() != cycle_edges.size())
            throw domain_error("edges do not form a cycle");
        Edge f = fixed;
        if (f.first > f.second) std::swap(f.first, f.second);
        if (std::find(cycle_edges.begin(), cycle_edges.end(), f) == cycle_edges.end())
            throw domain_error("fixed edge is not on the cycle");
    }
    std::vector<Edge> rest;
    {
        Edge f = fixed;
        if (f.first > f.second) std::swap(f.first, f.second);
        bool dropped = false;
        for (Edge e : cycle_edges) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (!dropped && e == f) {
                dropped = true;
                continue;
            }
            rest.push_back(e);
        }
    }
    size_t m = rest.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<Edge> s;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) s.push_back(rest[i]);
        Rational sign = s.size() % 2 == 0 ? 1 : -1;
        SymFunc term = x_edge_subsets(delete_edges(g, s));
        term *= sign;
        out.lhs += term;
    }
    out.ok = out.lhs.is_zero();
    if (!out.ok) out.detail = "alternating sum is nonzero";
    return out;
}

std::map<std::vector<int>, Integer> x_oracle_colourings(const WeightedGraph& g, int k) {
    int n = g.vertex_count();
    if (n > 8 || k > 4) throw resource_error("colouring oracle is limited to 8 vertices, k <= 4");
    if (k < 1) throw domain_error("k must be positive");
    std::map<std::vector<int>, Integer> out;
    std::vector<int> colour(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            for (const Edge& e : g.edges())
                if (colour[static_cast<size_t>(e.first)] == colour[static_cast<size_t>(e.second)])
                    return;
            std::vector<int> expo(static_cast<size_t>(k), 0);
            for (int u = 0; u < n; ++u)
                expo[static_cast<size_t>(colour[static_cast<size_t>(u)])] += g.weight(u);
            out[expo] += 1;
            return;
        }
        for (int c = 0; c < k; ++c) {
            colour[static_cast<size_t>(v)] = c;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace ecsf
