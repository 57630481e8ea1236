#include "ecsf/bases.hpp"

#include <algorithm>

namespace ecsf {

static void validate_nifty_member(const WeightedGraph& g, int n) {
    if (g.total_weight() != n)
        throw invariant_error("family member has total weight " +
                              std::to_string(g.total_weight()) + ", expected " +
                              std::to_string(n));
    if (connected_components(g).size() != 1)
        throw invariant_error("family member of weight " + std::to_string(n) +
                              " is not connected");
    std::vector<Edge> seen;
    for (const Edge& e : g.edges()) {
        if (e.first == e.second)
            throw invariant_error("family member has a loop");
        if (std::find(seen.begin(), seen.end(), e) != seen.end())
            throw invariant_error("family member has a multiple edge");
        seen.push_back(e);
    }
}

GraphFamily GraphFamily::paths() {
    GraphFamily f;
    f.kind_ = Kind::nifty;
    f.name_ = "paths";
    f.nifty_ = [](int n) { return path(n); };
    return f;
}

GraphFamily GraphFamily::stars() {
    GraphFamily f;
    f.kind_ = Kind::nifty;
    f.name_ = "stars";
    f.nifty_ = [](int n) { return star(n); };
    return f;
}

GraphFamily GraphFamily::from_members(std::vector<WeightedGraph> members,
                                      std::string name) {
    GraphFamily f;
    f.kind_ = Kind::nifty;
    f.name_ = std::move(name);
    f.nifty_ = [members = std::move(members)](int n) {
        if (n < 1 || n > static_cast<int>(members.size()))
            throw domain_error("family not defined at weight " + std::to_string(n));
        return members[static_cast<size_t>(n - 1)];
    };
    return f;
}

GraphFamily GraphFamily::weighted_path_table() {
    GraphFamily f;
    f.kind_ = Kind::table;
    f.name_ = "wpath";
    f.table_ = [](const Partition& l) {
        return weighted_path(l.as_composition());
    };
    return f;
}

GraphFamily GraphFamily::from_table(std::map<Partition, WeightedGraph> table,
                                    std::string name) {
    for (const auto& [l, g] : table) {
        if (g.vertex_count() != l.length())
            throw domain_error("table graph for " + l.str() + " must have " +
                               std::to_string(l.length()) + " vertices");
        std::vector<Edge> seen;
        for (const Edge& e : g.edges()) {
            if (e.first == e.second) throw domain_error("table graphs must be simple");
            if (std::find(seen.begin(), seen.end(), e) != seen.end())
                throw domain_error("table graphs must be simple");
            seen.push_back(e);
        }
    }
    GraphFamily f;
    f.kind_ = Kind::table;
    f.name_ = std::move(name);
    f.table_ = [table = std::move(table)](const Partition& l) {
        auto it = table.find(l);
        if (it == table.end())
            throw domain_error("table has no entry for " + l.str());
        return WeightedGraph(l.parts(), it->second.edges());
    };
    return f;
}

WeightedGraph GraphFamily::member(int n) const {
    if (kind_ != Kind::nifty) throw domain_error("not a nifty family");
    if (n < 1) throw domain_error("family members start at weight 1");
    WeightedGraph g = nifty_(n);
    validate_nifty_member(g, n);
    return g;
}

WeightedGraph GraphFamily::table_member(const Partition& l) const {
    if (kind_ != Kind::table) throw domain_error("not a table family");
    WeightedGraph g = table_(l);
    if (g.vertex_count() != l.length() || g.weights() != l.parts())
        throw invariant_error("table graph for " + l.str() + " is mis-weighted");
    return g;
}

SymFunc GraphFamily::row_x(const Partition& l) const {
    if (kind_ == Kind::table) return x_edge_subsets(table_member(l));
    SymFunc f = SymFunc::constant(1);
    for (int part : l.parts()) f *= x_edge_subsets(member(part));
    return f;
}

BasisMatrix family_matrix(const GraphFamily& fam, int n) {
    BasisMatrix m;
    m.degree = n;
    m.order = partitions_of(n);
    size_t dim = m.order.size();
    for (size_t i = 0; i < dim; ++i) {
        SymFunc x = fam.row_x(m.order[i]);
        std::vector<Rational> row(dim, Rational(0));
        for (const auto& [part, c] : x.terms()) {
            auto it = std::find(m.order.begin(), m.order.end(), part);
            if (it == m.order.end())
                throw invariant_error("row is not homogeneous of degree " +
                                      std::to_string(n));
            row[static_cast<size_t>(it - m.order.begin())] = c;
        }
        if (fam.kind() == GraphFamily::Kind::table) {
            // per-partition tables are unit lower triangular by construction
            for (size_t j = i + 1; j < dim; ++j)
                if (row[j] != 0)
                    throw invariant_error("matrix is not lower triangular at row " +
                                          m.order[i].str());
            if (row[i] != 1)
                throw invariant_error("diagonal entry is not 1 at " + m.order[i].str());
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

SymFunc weighted_path_to_p(const Composition& a) {
    if (a.empty()) throw domain_error("weighted path of the empty composition");
    SymFunc f;
    for (const Composition& b : coarsenings(a)) {
        Rational sign = (a.length() - b.length()) % 2 == 0 ? 1 : -1;
        f.add_term(underlying_partition(b), sign);
    }
    return f;
}

std::map<Partition, Integer> weighted_path_in_path_basis(const Composition& a) {
    if (a.empty()) throw domain_error("weighted path of the empty composition");
    std::map<Partition, Integer> out;
    Composition ac = complement(a);
    for (const Composition& b : coarsenings(ac)) {
        Integer sign = (ac.length() - b.length()) % 2 == 0 ? 1 : -1;
        Partition key = underlying_partition(b);
        out[key] += sign;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

SymFunc path_to_p(int n) {
    if (n < 1) throw domain_error("path_to_p requires n >= 1");
    SymFunc f;
    for (const Composition& b : compositions_of(n)) {
        Rational sign = (n - b.length()) % 2 == 0 ? 1 : -1;
        f.add_term(underlying_partition(b), sign);
    }
    return f;
}

static Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return num / den;
}

SymFunc star_to_p(int n) {
    if (n < 1) throw domain_error("star_to_p requires n >= 1");
    SymFunc f;
    for (int r = 1; r <= n; ++r) {
        Rational sign = (r - 1) % 2 == 0 ? 1 : -1;
        std::vector<int> parts{r};
        parts.insert(parts.end(), static_cast<size_t>(n - r), 1);
        std::sort(parts.rbegin(), parts.rend());
        f.add_term(Partition(std::move(parts)), sign * Rational(binomial(n - 1, r - 1)));
    }
    return f;
}

// All refinements of l read as a composition: each part split independently.
static void refinements_of(const Composition& l, size_t at, Composition prefix,
                           std::vector<Composition>& out) {
    if (at == l.parts().size()) {
        out.push_back(std::move(prefix));
        return;
    }
    for (const Composition& piece : compositions_of(l.parts()[at]))
        refinements_of(l, at + 1, concat(prefix, piece), out);
}

std::map<Partition, Integer> p_in_path_basis(const Partition& l) {
    if (l.empty()) throw domain_error("p_in_path_basis of the empty partition");
    std::vector<Composition> refs;
    refinements_of(l.as_composition(), 0, Composition{}, refs);
    std::map<Partition, Integer> out;
    for (const Composition& a : refs) {
        Integer sign = (l.size() - a.length()) % 2 == 0 ? 1 : -1;
        Partition key = underlying_partition(a);
        out[key] += sign;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

std::map<Partition, Integer> p_in_star_basis(const Partition& l) {
    if (l.empty()) throw domain_error("p_in_star_basis of the empty partition");
    std::map<Partition, Integer> out;
    std::vector<int> alpha(static_cast<size_t>(l.length()), 1);
    auto emit = [&]() {
        Integer coeff = 1;
        int asize = 0;
        for (int i = 0; i < l.length(); ++i) {
            coeff *= binomial(l[i] - 1, alpha[static_cast<size_t>(i)] - 1);
            asize += alpha[static_cast<size_t>(i)];
        }
        Integer sign = (asize - l.length()) % 2 == 0 ? 1 : -1;
        std::vector<int> parts(alpha.begin(), alpha.end());
        std::sort(parts.rbegin(), parts.rend());
        parts.insert(parts.end(), static_cast<size_t>(l.size() - asize), 1);
        std::sort(parts.rbegin(), parts.rend());
        Partition key(std::move(parts));
        out[key] += sign * coeff;
        if (out[key] == 0) out.erase(key);
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l.length()) {
            emit();
            return;
        }
        for (int v = 1; v <= l[i]; ++v) {
            alpha[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool reciprocity_check(const GraphFamily& fam, int n) {
    NeatResult neat = is_neat(fam, n);
    if (!neat.ok)
        throw domain_error("reciprocity requires a neat family: " + neat.detail);
    for (int m = 1; m <= n; ++m) {
        BasisMatrix a = family_matrix(fam, m);
        size_t dim = a.order.size();
        // phi(X_lambda) = sum_mu A[lambda][mu] X_mu; in p coordinates this is
        // A*A, which must be the identity.
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < dim; ++j) {
                Rational acc = 0;
                for (size_t k = 0; k < dim; ++k) acc += a.rows[i][k] * a.rows[k][j];
                if (acc != (i == j ? 1 : 0)) return false;
            }
        }
    }
    return true;
}

static WeightedGraph induced_subgraph(const WeightedGraph& g,
                                      const std::vector<int>& vertices) {
    std::map<int, int> index;
    std::vector<int> weights;
    for (int v : vertices) {
        index[v] = static_cast<int>(weights.size());
        weights.push_back(g.weight(v));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (index.count(e.first) && index.count(e.second))
            edges.emplace_back(index[e.first], index[e.second]);
    return WeightedGraph(std::move(weights), std::move(edges));
}

NeatResult is_neat(const GraphFamily& fam, int n) {
    NeatResult result;
    for (int m = 1; m <= n; ++m) {
        WeightedGraph g = fam.member(m);
        int ec = g.edge_count();
        if (ec > 20) throw resource_error("neatness check is limited to 20 edges");
        for (size_t mask = 0; mask < (size_t{1} << ec); ++mask) {
            std::vector<Edge> s;
            for (int i = 0; i < ec; ++i)
                if (mask & (size_t{1} << i)) s.push_back(g.edges()[static_cast<size_t>(i)]);
            WeightedGraph cut = delete_edges(g, s);
            bool all_match = true;
            for (const auto& comp : connected_components(cut)) {
                WeightedGraph piece = induced_subgraph(cut, comp);
                if (!is_isomorphic(piece, fam.member(piece.total_weight()))) {
                    all_match = false;
                    break;
                }
            }
            if (!all_match) {
                result.ok = false;
                result.failing_degree = m;
                result.failing_subset = s;
                result.detail = "deleting " + std::to_string(s.size()) +
                                " edge(s) of the weight-" + std::to_string(m) +
                                " member leaves components outside the family";
                return result;
            }
        }
    }
    return result;
}

bool independence_check(const GraphFamily& fam, int n) {
    BasisMatrix m = family_matrix(fam, n); // tables: asserts unit lower triangular
    if (fam.kind() == GraphFamily::Kind::table) return true;
    // exact Gaussian elimination for the determinant
    auto rows = m.rows;
    size_t dim = rows.size();
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && rows[pivot][col] == 0) ++pivot;
        if (pivot == dim)
            throw invariant_error("degree-" + std::to_string(n) + " matrix is singular");
        std::swap(rows[col], rows[pivot]);
        for (size_t r = col + 1; r < dim; ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[col][col];
            for (size_t c = col; c < dim; ++c) rows[r][c] -= factor * rows[col][c];
        }
    }
    return true;
}

SymFunc ribbon_image_under_composition(const Composition& a, const WeightedGraph& g,
                                       int a_vertex, int z_vertex) {
    SymFunc out;
    for (const auto& [part, c] : ribbon_to_h(a)) {
        SymFunc prod = SymFunc::constant(1);
        for (int piece : part.parts())
            prod *= x_edge_subsets(compose_graph(Composition{piece}, g, a_vertex, z_vertex));
        prod *= Rational(c);
        out += prod;
    }
    return out;
}

} // namespace ecsf
