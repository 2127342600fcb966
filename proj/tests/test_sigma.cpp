#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "gps/graph.hpp"
#include "gps/perm.hpp"
#include "gps/sigma.hpp"
#include "oracles.hpp"

using namespace gps;

namespace {
const Permutation kSwap02{2, 1, 0, 3, 4, 5};
const Permutation kSwap35{0, 1, 2, 5, 4, 3};
}  // namespace

TEST_CASE("is_two_fold") {
    Graph c6 = oracles::cycle(6);
    CHECK(is_two_fold(c6, identity_permutation(6), identity_permutation(6)));
    // Diagonal pairs over automorphisms are always two-fold.
    for (const auto& a : automorphisms(c6).elements) CHECK(is_two_fold(c6, a, a));
    // The classic nontrivial example on the 6-cycle.
    CHECK(is_two_fold(c6, kSwap02, kSwap35));
    CHECK(is_two_fold(c6, kSwap35, kSwap02));
    CHECK_FALSE(is_two_fold(c6, kSwap02, identity_permutation(6)));
    CHECK_THROWS_AS(is_two_fold(c6, identity_permutation(5), identity_permutation(6)),
                    std::invalid_argument);
}

TEST_CASE("two_fold_partner") {
    Graph c6 = oracles::cycle(6);
    CHECK(two_fold_partner(c6, identity_permutation(6)) == identity_permutation(6));
    CHECK(two_fold_partner(c6, kSwap02) == kSwap35);
    // A neighbouring transposition does not preserve the neighbourhood family.
    CHECK_FALSE(two_fold_partner(c6, Permutation{1, 0, 2, 3, 4, 5}).has_value());
    // Thick graphs have no unique partner.
    CHECK_THROWS_AS(two_fold_partner(oracles::cycle(4), identity_permutation(4)),
                    std::invalid_argument);
}

TEST_CASE("two_fold_pairs against the factorial-scan oracle") {
    SUBCASE("thin graph (partner construction)") {
        Graph c6 = oracles::cycle(6);
        auto pairs = two_fold_pairs(c6);
        CHECK(pairs.size() == 72);
        CHECK(pairs == oracles::two_fold_pairs_full_scan(c6));
        CHECK(std::find(pairs.begin(), pairs.end(), TwoFoldPair{kSwap02, kSwap35}) !=
              pairs.end());
        // Exactly the diagonal pairs are trivial, one per automorphism.
        std::size_t diagonal = 0;
        for (const auto& p : pairs)
            if (!p.nontrivial()) ++diagonal;
        CHECK(diagonal == automorphisms(c6).order());
    }
    SUBCASE("thick graphs (paired backtracking)") {
        // P3 is thick too: both leaves see exactly the centre.
        for (const Graph& g : {oracles::cycle(4), oracles::empty_graph(2),
                               oracles::complete_bipartite(1, 3), oracles::path(3)}) {
            CAPTURE(g.label());
            CHECK(two_fold_pairs(g) == oracles::two_fold_pairs_full_scan(g));
        }
    }
    SUBCASE("thin path has only the diagonal pairs") {
        Graph p4 = oracles::path(4);
        auto pairs = two_fold_pairs(p4);
        CHECK(pairs == oracles::two_fold_pairs_full_scan(p4));
        CHECK(pairs.size() == 2);
        for (const auto& p : pairs) CHECK_FALSE(p.nontrivial());
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS((void)two_fold_pairs(oracles::empty_graph(6), 10), CapExceeded);
    }
}

TEST_CASE("is_sigma_automorphism") {
    Graph c6 = oracles::cycle(6), k2 = oracles::complete(2);
    CHECK(is_sigma_automorphism(c6, k2, {kSwap02, kSwap35}));
    CHECK_FALSE(is_sigma_automorphism(c6, k2, {kSwap02, identity_permutation(6)}));
    // Diagonal tuples over Aut(G) work for any pattern.
    Graph c5 = oracles::cycle(5);
    for (const auto& a : automorphisms(oracles::complete(4)).elements)
        CHECK(is_sigma_automorphism(oracles::complete(4), c5,
                                    {a, a, a, a, a}));
    CHECK_THROWS_AS(is_sigma_automorphism(c6, k2, {kSwap02}), std::invalid_argument);
}

TEST_CASE("sigma_automorphism_group") {
    SUBCASE("pattern K2 recovers the two-fold pairs") {
        Graph c6 = oracles::cycle(6);
        SigmaAutGroup g = sigma_automorphism_group(c6, oracles::complete(2));
        CHECK(g.order() == 72);
        auto pairs = two_fold_pairs(c6);
        REQUIRE(g.elements.size() == pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            CHECK(g.elements[i].tuple[0] == pairs[i].alpha);
            CHECK(g.elements[i].tuple[1] == pairs[i].beta);
        }
    }
    SUBCASE("every element satisfies the defining constraints, and they form a group") {
        Graph c6 = oracles::cycle(6);
        Graph k2 = oracles::complete(2);
        SigmaAutGroup g = sigma_automorphism_group(c6, k2);
        for (const auto& el : g.elements) CHECK(is_sigma_automorphism(c6, k2, el.tuple));
        // Componentwise composition stays inside (spot-check a grid).
        auto contains = [&](const SigmaAutomorphism& el) {
            return std::binary_search(g.elements.begin(), g.elements.end(), el);
        };
        for (std::size_t i = 0; i < g.elements.size(); i += 7)
            for (std::size_t j = 0; j < g.elements.size(); j += 11) {
                SigmaAutomorphism prod;
                for (std::size_t c = 0; c < 2; ++c)
                    prod.tuple.push_back(
                        compose(g.elements[i].tuple[c], g.elements[j].tuple[c]));
                CHECK(contains(prod));
            }
    }
    SUBCASE("K4 against C5 is purely diagonal") {
        SigmaAutGroup g = sigma_automorphism_group(oracles::complete(4), oracles::cycle(5));
        CHECK(g.order() == 24);
        for (const auto& el : g.elements) CHECK_FALSE(el.nondiagonal());
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(
            sigma_automorphism_group(oracles::cycle(6), oracles::complete(1)),
            std::invalid_argument);
        Graph isolated = build_graph(3, {{0, 1}});  // vertex 2 unconstrained
        CHECK_THROWS_AS(sigma_automorphism_group(oracles::cycle(6), isolated),
                        std::invalid_argument);
    }
}

TEST_CASE("find_nondiagonal") {
    Graph c6 = oracles::cycle(6), k2 = oracles::complete(2);
    auto found = find_nondiagonal(c6, k2);
    REQUIRE(found.has_value());
    CHECK(found->nondiagonal());
    CHECK(is_sigma_automorphism(c6, k2, found->tuple));

    CHECK_FALSE(find_nondiagonal(oracles::complete(4), oracles::cycle(5)).has_value());
    CHECK_FALSE(find_nondiagonal(oracles::path(4), k2).has_value());
    // The thick path has a genuinely nondiagonal tuple: identity on one
    // fibre, leaf swap on the other.
    auto thick = find_nondiagonal(oracles::path(3), k2);
    REQUIRE(thick.has_value());
    CHECK(thick->nondiagonal());
    CHECK(is_sigma_automorphism(oracles::path(3), k2, thick->tuple));
}
