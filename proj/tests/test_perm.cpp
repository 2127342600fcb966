#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gps/graph.hpp"
#include "gps/perm.hpp"
#include "oracles.hpp"

using namespace gps;

TEST_CASE("permutation primitives") {
    CHECK(identity_permutation(3) == Permutation{0, 1, 2});
    CHECK(is_permutation(Permutation{2, 0, 1}));
    CHECK_FALSE(is_permutation(Permutation{0, 0, 1}));
    CHECK_FALSE(is_permutation(Permutation{0, 3, 1}));

    Permutation a{1, 2, 0}, b{0, 2, 1};
    CHECK(compose(a, b) == Permutation{2, 1, 0});  // apply a first, then b
    CHECK(compose(a, inverse(a)) == identity_permutation(3));
    CHECK(compose(inverse(a), a) == identity_permutation(3));
    CHECK_THROWS_AS(compose(a, identity_permutation(4)), std::invalid_argument);

    VertexSet s(3);
    s.set(0);
    s.set(2);
    CHECK(gps::apply(a, s).to_vector() == std::vector<int>{0, 1});  // {0,2} -> {a0,a2}
    CHECK_THROWS_AS(gps::apply(identity_permutation(4), s), std::invalid_argument);

    Graph p3 = oracles::path(3);
    Graph relabeled = relabel(p3, Permutation{1, 0, 2});  // centre moves to 0
    CHECK(relabeled.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK_THROWS_AS(relabel(p3, Permutation{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("automorphism groups match the full factorial scan") {
    for (const Graph& g : {oracles::cycle(4), oracles::cycle(5), oracles::cycle(6),
                           oracles::path(4), oracles::complete(4),
                           oracles::complete_bipartite(2, 3),
                           oracles::complete_bipartite(3, 3), oracles::empty_graph(4),
                           oracles::disjoint_union(oracles::complete(3), oracles::complete(3)),
                           oracles::disjoint_union(oracles::complete(2), oracles::path(3))}) {
        CAPTURE(g.label());
        GroupElements got = automorphisms(g);
        CHECK(got.degree == g.order());
        CHECK(got.elements == oracles::automorphisms_full_scan(g));
    }
}

TEST_CASE("known group orders") {
    CHECK(automorphisms(oracles::cycle(4)).order() == 8);
    CHECK(automorphisms(oracles::cycle(5)).order() == 10);
    CHECK(automorphisms(oracles::cycle(6)).order() == 12);
    CHECK(automorphisms(oracles::complete(5)).order() == 120);
    CHECK(automorphisms(oracles::complete_bipartite(3, 3)).order() == 72);
    CHECK(automorphisms(oracles::petersen()).order() == 120);
    CHECK(automorphisms(oracles::petersen()).elements ==
          oracles::automorphisms_degree_backtracking(oracles::petersen()));
}

TEST_CASE("bruteforce oracle path") {
    for (int n = 1; n <= 5; ++n) {
        Graph g = oracles::path(n);
        CHECK(automorphisms(g).elements == automorphisms_bruteforce(g).elements);
    }
    CHECK(automorphisms_bruteforce(oracles::cycle(6)).order() == 12);
    CHECK_THROWS_AS(automorphisms_bruteforce(oracles::empty_graph(9)), std::invalid_argument);
    CHECK_THROWS_AS(automorphisms_bruteforce(Graph{}), std::invalid_argument);
}

TEST_CASE("cap handling") {
    // 8 isolated vertices have 8! = 40320 automorphisms.
    CHECK_THROWS_AS((void)automorphisms(oracles::empty_graph(8), 100), CapExceeded);
    CHECK(automorphisms(oracles::empty_graph(5), 120).order() == 120);  // exactly at cap
    CHECK_THROWS_AS((void)automorphisms(oracles::empty_graph(5), 119), CapExceeded);
}

TEST_CASE("group membership") {
    GroupElements aut = automorphisms(oracles::cycle(4));
    CHECK(aut.contains(Permutation{1, 2, 3, 0}));
    CHECK_FALSE(aut.contains(Permutation{1, 0, 2, 3}));
}

TEST_CASE("isomorphism search") {
    Graph p3 = oracles::path(3);
    Graph star = build_graph(3, {{0, 1}, {0, 2}});
    auto iso = find_isomorphism(p3, star);
    REQUIRE(iso.has_value());
    CHECK(*iso == Permutation{1, 0, 2});  // lexicographically least of the two
    CHECK(relabel(p3, *iso) == star);

    CHECK(isomorphic(oracles::cycle(6), relabel(oracles::cycle(6), Permutation{3, 1, 4, 0, 5, 2})));
    // Same degree sequence, different graphs.
    CHECK_FALSE(isomorphic(oracles::cycle(6),
                           oracles::disjoint_union(oracles::complete(3), oracles::complete(3))));
    CHECK_FALSE(find_isomorphism(p3, oracles::path(4)).has_value());
}

TEST_CASE("orbits and vertex-transitivity") {
    CHECK(orbits(automorphisms(oracles::cycle(6))) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
    CHECK(orbits(automorphisms(oracles::path(3))) ==
          std::vector<std::vector<int>>{{0, 2}, {1}});

    CHECK(is_vertex_transitive(oracles::cycle(5)));
    CHECK(is_vertex_transitive(oracles::petersen()));
    CHECK(is_vertex_transitive(
        oracles::disjoint_union(oracles::complete(3), oracles::complete(3))));
    CHECK_FALSE(is_vertex_transitive(oracles::path(3)));
    CHECK_FALSE(is_vertex_transitive(oracles::complete_bipartite(2, 3)));
}
