#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalogue.hpp"
#include "ecsf/graphs.hpp"

using namespace ecsf;

TEST_CASE("construction normalizes and validates") {
    WeightedGraph g({1, 2}, {{1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    CHECK(g.total_weight() == 3);
    CHECK(g.weight_composition() == Composition{1, 2});
    CHECK_FALSE(g.has_loop());
    CHECK(WeightedGraph({1}, {{0, 0}}).has_loop());
    CHECK_THROWS_AS(WeightedGraph({0}, {}), domain_error);
    CHECK_THROWS_AS(WeightedGraph({1}, {{0, 1}}), domain_error);
}

TEST_CASE("families") {
    CHECK(path(4) == WeightedGraph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(star(4) == WeightedGraph({1, 1, 1, 1}, {{0, 3}, {1, 3}, {2, 3}}));
    CHECK(path(1) == star(1));
    CHECK(path(2) == star(2));
    CHECK(is_isomorphic(path(3), star(3)));
    CHECK_FALSE(is_isomorphic(path(4), star(4)));
    CHECK(cycle(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle(2), domain_error);
    CHECK(null_graph(3) == WeightedGraph({1, 1, 1}, {}));
    CHECK(weighted_path(Composition{3, 1, 2}) ==
          WeightedGraph({3, 1, 2}, {{0, 1}, {1, 2}}));
    CHECK(graph_of_composition(UnweightedFamily::paths, Composition{2, 3}) ==
          disjoint_union(path(2), path(3)));
    CHECK(graph_of_composition(UnweightedFamily::stars, Composition{1, 3}) ==
          disjoint_union(star(1), star(3)));
}

TEST_CASE("surgery") {
    WeightedGraph g({1, 2, 3}, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(delete_edges(g, {{0, 1}}) ==
          WeightedGraph({1, 2, 3}, {{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(delete_edges(g, {{0, 2}}), domain_error);
    CHECK_THROWS_AS(delete_edges(g, {{0, 1}, {0, 1}, {0, 1}}), domain_error);
    CHECK(add_edges(g, {{2, 0}}) ==
          WeightedGraph({1, 2, 3}, {{0, 1}, {0, 1}, {0, 2}, {1, 2}}));

    // contraction merges at the smaller label, sums weights, keeps the
    // parallel copy as a loop
    CHECK(contract_edge(g, {0, 1}) == WeightedGraph({3, 3}, {{0, 0}, {0, 1}}));
    // loop contraction just removes the loop
    WeightedGraph l({2}, {{0, 0}, {0, 0}});
    CHECK(contract_edge(l, {0, 0}) == WeightedGraph({2}, {{0, 0}}));
    // contracting the middle edge of a path relabels the tail
    CHECK(contract_edge(path(4), {1, 2}) ==
          WeightedGraph({1, 2, 1}, {{0, 1}, {1, 2}}));
}

TEST_CASE("components and weight type") {
    WeightedGraph g = disjoint_union(weighted_path(Composition{2, 1}),
                                     null_graph(2));
    auto comps = connected_components(g);
    CHECK(comps.size() == 3);
    CHECK(lambda_of(g) == Partition{3, 1, 1});
    CHECK(lambda_of(null_graph(4)) == Partition{1, 1, 1, 1});
    CHECK(lambda_of(cycle(5)) == Partition{5});
}

TEST_CASE("expansion recognition") {
    // one vertex of weight 5 expands to a weight (2,3) edgeless pair
    auto ok = expansion_check(WeightedGraph({5}, {}), WeightedGraph({2, 3}, {}));
    CHECK(ok.ok);
    CHECK(ok.blocking.blocks == std::vector<std::pair<int, int>>{{0, 2}});

    // weighted path (3,5) against (3,2,3): blocks {0} and {1,2}
    auto two = expansion_check(weighted_path(Composition{3, 5}),
                               WeightedGraph({3, 2, 3}, {{0, 1}, {0, 2}}));
    CHECK(two.ok);
    CHECK(two.blocking.blocks == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});

    // weight mismatch
    CHECK_FALSE(expansion_check(WeightedGraph({4}, {}), WeightedGraph({2, 3}, {})).ok);
    // missing cross edge
    CHECK_FALSE(expansion_check(weighted_path(Composition{3, 5}),
                                WeightedGraph({3, 2, 3}, {})).ok);
}

TEST_CASE("graph composition") {
    WeightedGraph seed = weighted_path(Composition{1, 2, 1});
    // one copy, nothing contracted
    CHECK(compose_graph(Composition{1}, seed, 0, 2) == seed);

    WeightedGraph left = compose_graph(Composition{1, 2}, seed, 0, 1);
    WeightedGraph right = compose_graph(Composition{2, 1}, seed, 0, 1);
    CHECK(left == WeightedGraph({1, 2, 1, 1, 3, 1, 2, 1},
                                {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}}));
    CHECK(left.total_weight() == 12);
    CHECK(right.total_weight() == 12);
    CHECK_FALSE(is_isomorphic(left, right));

    // all-ones composition contracts nothing beyond bridging
    WeightedGraph chain = compose_graph(Composition{1, 1}, seed, 0, 2);
    CHECK(chain == WeightedGraph({1, 2, 1, 1, 2, 1},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    // single-part composition contracts every bridge
    WeightedGraph glued = compose_graph(Composition{2}, seed, 0, 2);
    CHECK(glued.total_weight() == 8);
    CHECK(glued.vertex_count() == 5);
}

TEST_CASE("isomorphism is an equivalence respecting invariants") {
    std::mt19937 rng(20240817);
    for (int t = 0; t < 30; ++t) {
        WeightedGraph g = ecsf::testing::random_connected(rng, 5, 2);
        WeightedGraph h = ecsf::testing::shuffled(rng, g);
        CHECK(is_isomorphic(g, g));
        CHECK(is_isomorphic(g, h));
        CHECK(is_isomorphic(h, g));
    }
    CHECK_FALSE(is_isomorphic(path(4), cycle(4)));
    CHECK_FALSE(is_isomorphic(weighted_path(Composition{1, 2}),
                              weighted_path(Composition{2, 2})));
    CHECK_FALSE(is_isomorphic(WeightedGraph({1, 1}, {{0, 1}}),
                              WeightedGraph({1, 1}, {{0, 1}, {0, 1}})));
    CHECK_THROWS_AS(is_isomorphic(path(11), path(11)), resource_error);
}
