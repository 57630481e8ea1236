#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecsf/bases.hpp"
#include "ecsf/chromatic.hpp"

using namespace ecsf;

TEST_CASE("weighted path expansion over power sums") {
    CHECK(weighted_path_to_p(Composition{1, 2, 1}) ==
          x_edge_subsets(weighted_path(Composition{1, 2, 1})));
    for (const Composition& a : compositions_of(6))
        CHECK(weighted_path_to_p(a) == x_edge_subsets(weighted_path(a)));
}

TEST_CASE("unweighted path and star expansions") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(path_to_p(n) == x_edge_subsets(path(n)));
        CHECK(star_to_p(n) == x_edge_subsets(star(n)));
    }
}

TEST_CASE("weighted path over the unweighted path basis") {
    for (int n = 1; n <= 6; ++n) {
        for (const Composition& a : compositions_of(n)) {
            SymFunc recomposed;
            for (const auto& [l, c] : weighted_path_in_path_basis(a)) {
                SymFunc prod = SymFunc::constant(Rational(c));
                for (int part : l.parts()) prod *= path_to_p(part);
                recomposed += prod;
            }
            CHECK(recomposed == weighted_path_to_p(a));
        }
    }
}

TEST_CASE("power sums over the path and star bases") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& l : partitions_of(n)) {
            SymFunc via_paths, via_stars;
            for (const auto& [m, c] : p_in_path_basis(l)) {
                SymFunc prod = SymFunc::constant(Rational(c));
                for (int part : m.parts()) prod *= path_to_p(part);
                via_paths += prod;
            }
            for (const auto& [m, c] : p_in_star_basis(l)) {
                SymFunc prod = SymFunc::constant(Rational(c));
                for (int part : m.parts()) prod *= star_to_p(part);
                via_stars += prod;
            }
            CHECK(via_paths == p_of(l));
            CHECK(via_stars == p_of(l));
        }
    }
}

TEST_CASE("family construction and rows") {
    GraphFamily paths = GraphFamily::paths();
    CHECK(paths.kind() == GraphFamily::Kind::nifty);
    CHECK(paths.member(4) == path(4));
    CHECK(paths.row_x(Partition{2, 1}) == path_to_p(2) * path_to_p(1));

    GraphFamily wpath = GraphFamily::weighted_path_table();
    CHECK(wpath.kind() == GraphFamily::Kind::table);
    CHECK(wpath.table_member(Partition{3, 1}) == weighted_path(Composition{3, 1}));
    CHECK(wpath.row_x(Partition{3, 1}) == weighted_path_to_p(Composition{3, 1}));

    // mis-weighted and disconnected members are rejected on access
    CHECK_THROWS_AS(GraphFamily::from_members({null_graph(2)}).member(1),
                    invariant_error);
    CHECK_THROWS_AS(GraphFamily::from_members({path(1), null_graph(2)}).member(2),
                    invariant_error);
}

TEST_CASE("weighted path matrix is unit lower triangular") {
    BasisMatrix m = family_matrix(GraphFamily::weighted_path_table(), 4);
    CHECK(m.order == partitions_of(4));
    std::vector<std::vector<Rational>> want = {
        {1, 0, 0, 0, 0},
        {-1, 1, 0, 0, 0},
        {-1, 0, 1, 0, 0},
        {1, -1, -1, 1, 0},
        {-1, 2, 1, -3, 1},
    };
    CHECK(m.rows == want);

    for (int n = 1; n <= 7; ++n) {
        BasisMatrix mn = family_matrix(GraphFamily::weighted_path_table(), n);
        for (size_t i = 0; i < mn.rows.size(); ++i) {
            CHECK(mn.rows[i][i] == 1);
            for (size_t j = i + 1; j < mn.rows.size(); ++j)
                CHECK(mn.rows[i][j] == 0);
        }
    }
}

TEST_CASE("path and star families are independent but not triangular") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(independence_check(GraphFamily::paths(), n));
        CHECK(independence_check(GraphFamily::stars(), n));
    }
    // the degree-3 star row has a nonzero entry above the diagonal
    BasisMatrix m = family_matrix(GraphFamily::stars(), 3);
    bool upper = false;
    for (size_t i = 0; i < m.rows.size(); ++i)
        for (size_t j = i + 1; j < m.rows.size(); ++j)
            if (m.rows[i][j] != 0) upper = true;
    CHECK(upper);
}

TEST_CASE("reciprocity for paths and stars") {
    CHECK(reciprocity_check(GraphFamily::paths(), 6));
    CHECK(reciprocity_check(GraphFamily::stars(), 6));
}

TEST_CASE("neat families") {
    CHECK(is_neat(GraphFamily::paths(), 6).ok);
    CHECK(is_neat(GraphFamily::stars(), 6).ok);

    // a family mixing paths and a star stops being deletion-closed
    std::vector<WeightedGraph> mixed = {path(1), path(2), path(3), star(4), path(5)};
    NeatResult r = is_neat(GraphFamily::from_members(mixed, "mixed"), 5);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_degree == 5);
    CHECK_FALSE(r.failing_subset.empty());
}

TEST_CASE("ribbon image matches graph composition") {
    WeightedGraph seed = weighted_path(Composition{1, 2, 1});
    for (int n = 1; n <= 3; ++n) {
        for (const Composition& a : compositions_of(n)) {
            CHECK(ribbon_image_under_composition(a, seed, 0, 1) ==
                  x_edge_subsets(compose_graph(a, seed, 0, 1)));
        }
    }
}
