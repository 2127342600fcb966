#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "gps/fiber.hpp"
#include "gps/graph.hpp"
#include "gps/products.hpp"
#include "oracles.hpp"

using namespace gps;

TEST_CASE("RationalValue arithmetic") {
    CHECK(RationalValue(4, 6) == RationalValue(2, 3));
    CHECK(RationalValue(3, -6) == RationalValue(-1, 2));
    CHECK(RationalValue(0, 5) == RationalValue(0, 1));
    CHECK_THROWS_AS(RationalValue(1, 0), std::invalid_argument);

    CHECK(RationalValue(1, 3) < RationalValue(1, 2));
    CHECK_FALSE(RationalValue(2, 3) < RationalValue(2, 3));

    CHECK(RationalValue(1, 2).scaled(2) == RationalValue(1, 1));
    CHECK(RationalValue(2, 3).scaled(2) == RationalValue(4, 3));
    CHECK(RationalValue(1, 2).scaled(2).is_positive_integer());
    CHECK_FALSE(RationalValue(2, 3).scaled(2).is_positive_integer());
    CHECK_FALSE(RationalValue(0, 1).is_positive_integer());

    CHECK(RationalValue(2, 3).to_string() == "2/3");
    CHECK(RationalValue(6, 2).to_string() == "3");
    CHECK(RationalValue(1, -2).to_string() == "-1/2");
}

TEST_CASE("f-values on the complete-graph/pentagon product") {
    DirectProduct prod = direct_product(oracles::complete(4), oracles::cycle(5));
    // Same fibre, second coordinates at distance two on the pentagon.
    CHECK(f_value(prod, prod.index(0, 0), prod.index(0, 2)) == RationalValue(1, 2));
    // Different fibres, same second coordinate.
    CHECK(f_value(prod, prod.index(0, 0), prod.index(1, 0)) == RationalValue(2, 3));
    // Both coordinates move: the value factorises to 2/3 * 1/2.
    CHECK(f_value(prod, prod.index(0, 0), prod.index(1, 2)) == RationalValue(1, 3));
    // Adjacent second coordinates share no pentagon neighbour.
    CHECK(f_value(prod, prod.index(0, 0), prod.index(0, 1)) == RationalValue(0, 1));
    CHECK(f_value(prod, prod.index(0, 0), prod.index(0, 0)) == RationalValue(1, 1));

    CHECK_THROWS_AS(f_value(prod, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(f_value(prod, 0, 20), std::invalid_argument);

    Graph k2_plus_point = oracles::disjoint_union(oracles::complete(2), oracles::empty_graph(1));
    DirectProduct sparse = direct_product(k2_plus_point, oracles::complete(2));
    CHECK_THROWS_AS(f_value(sparse, sparse.index(2, 0), 0), std::invalid_argument);
}

TEST_CASE("common-neighbour profiles") {
    SUBCASE("pentagon") {
        CommonNeighborProfile pr = profile(oracles::cycle(5), 0);
        CHECK(pr.center == 0);
        CHECK(pr.level_values == std::vector<int>{1});
        CHECK(pr.depth() == 1);
        CHECK(pr.levels[0].to_vector() == std::vector<int>{2, 3});
        CHECK(pr.d_zero.to_vector() == std::vector<int>{0});
        CHECK(pr.d_last.to_vector() == std::vector<int>{1, 4});
        CHECK(pr.valency_relation);
    }
    SUBCASE("complete graph") {
        CommonNeighborProfile pr = profile(oracles::complete(4), 0);
        CHECK(pr.level_values == std::vector<int>{2});
        CHECK(pr.levels[0].to_vector() == std::vector<int>{1, 2, 3});
        CHECK(pr.d_last.empty());
        CHECK(pr.valency_relation);
    }
    SUBCASE("the valency relation is recorded, not assumed") {
        CommonNeighborProfile pr = profile(oracles::petersen(), 0);
        CHECK(pr.level_values == std::vector<int>{1});
        CHECK(pr.levels[0].count() == 6);  // distance-two vertices
        CHECK(pr.d_last.count() == 3);     // girth five: neighbours share nothing
        CHECK_FALSE(pr.valency_relation);  // 6 != val = 3
    }
    SUBCASE("error paths") {
        CHECK_THROWS_AS(profile(oracles::cycle(4), 0), std::domain_error);
        CHECK_THROWS_AS(profile(oracles::path(3), 0), std::invalid_argument);
        CHECK_THROWS_AS(profile(oracles::cycle(5), 7), std::invalid_argument);
        CHECK_THROWS_AS(profile(oracles::empty_graph(2), 0), std::invalid_argument);
        CHECK_THROWS_AS(profile(oracles::cycle(5), 0, 2), CapExceeded);
    }
}

TEST_CASE("fiber sets on the complete-graph/pentagon product") {
    DirectProduct prod = direct_product(oracles::complete(4), oracles::cycle(5));

    FiberSets fs = fiber_sets(prod, prod.index(0, 0));
    // X(u,i) = {u} x N_B(i): only same-fibre distance-two vertices qualify.
    CHECK(fs.x == std::vector<int>{prod.index(0, 2), prod.index(0, 3)});
    CHECK(fs.y == fs.x);
    REQUIRE(fs.xk.size() == 2);
    CHECK(fs.xk[0] == std::vector<int>{prod.index(0, 0)});
    CHECK(fs.xk[1] == fs.x);
    CHECK(fs.yk[0] == std::vector<int>{prod.index(0, 0)});
    CHECK(fs.yk[1] == fs.y);

    FiberSets other = fiber_sets(prod, prod.index(2, 3));
    CHECK(other.x == std::vector<int>{prod.index(2, 0), prod.index(2, 1)});
    CHECK(other.y == other.x);

    CHECK_THROWS_AS(fiber_sets(prod, 20), std::invalid_argument);
    DirectProduct irregular = direct_product(oracles::path(3), oracles::cycle(5));
    CHECK_THROWS_AS(fiber_sets(irregular, 0), std::invalid_argument);
    DirectProduct shared = direct_product(oracles::cycle(4), oracles::cycle(5));
    CHECK_THROWS_AS(fiber_sets(shared, 0), std::invalid_argument);  // valencies share 2
    DirectProduct isolated = direct_product(oracles::empty_graph(2), oracles::complete(2));
    CHECK_THROWS_AS(fiber_sets(isolated, 0), std::invalid_argument);
}

TEST_CASE("lemma harness") {
    Graph k4 = oracles::complete(4), c5 = oracles::cycle(5), c3 = oracles::cycle(3);

    SUBCASE("every recognised id dispatches and none fails on qualifying input") {
        REQUIRE(lemma_names().size() == 12);
        for (const std::string& name : lemma_names()) {
            LemmaReport on_main = verify_lemma(name, k4, c5);
            CHECK_MESSAGE(on_main.verdict != LemmaVerdict::Fail,
                          name, " failed: ", on_main.detail);
            LemmaReport on_alt = verify_lemma(name, c3, k4);
            CHECK_MESSAGE(on_alt.verdict != LemmaVerdict::Fail,
                          name, " failed: ", on_alt.detail);
            if (name != "GammaBip" && name != "SigmaBip") {
                CHECK(on_main.verdict == LemmaVerdict::Pass);
                CHECK(on_alt.verdict == LemmaVerdict::Pass);
            } else {
                // Neither pair has a bipartite factor on the required side.
                CHECK(on_main.verdict == LemmaVerdict::HypothesesNotMet);
                CHECK(on_alt.verdict == LemmaVerdict::HypothesesNotMet);
            }
        }
        CHECK_THROWS_AS(verify_lemma("nosuch", k4, c5), std::invalid_argument);
    }

    SUBCASE("bipartite-side statements pass where they apply") {
        LemmaReport gb = verify_lemma("GammaBip", oracles::complete(2), c3);
        CHECK(gb.verdict == LemmaVerdict::Pass);
        CHECK(gb.detail.find("order 12") != std::string::npos);
        LemmaReport sb = verify_lemma("SigmaBip", c3, oracles::complete(2));
        CHECK(sb.verdict == LemmaVerdict::Pass);
        CHECK(sb.detail.find("order 12") != std::string::npos);
    }

    SUBCASE("hypotheses are screened, never assumed") {
        LemmaReport shared = verify_lemma("vs2", oracles::cycle(4), c5);
        CHECK(shared.verdict == LemmaVerdict::HypothesesNotMet);
        CHECK(shared.detail.find("not coprime") != std::string::npos);

        LemmaReport thick = verify_lemma("Xk", k4, oracles::cycle(4));
        CHECK(thick.verdict == LemmaVerdict::HypothesesNotMet);
        CHECK(thick.detail.find("sigma is not R-thin") != std::string::npos);

        LemmaReport irregular = verify_lemma("XY", k4, oracles::path(3));
        CHECK(irregular.verdict == LemmaVerdict::HypothesesNotMet);
        CHECK(irregular.detail.find("sigma is not regular") != std::string::npos);

        CHECK(verify_lemma("X", k4, oracles::complete(1)).verdict ==
              LemmaVerdict::HypothesesNotMet);
        CHECK(verify_lemma("X", Graph(0, {}), oracles::complete(2)).verdict ==
              LemmaVerdict::HypothesesNotMet);
    }

    SUBCASE("sampling is deterministic and saturates to the full sweep") {
        LemmaReport a = verify_lemma("hom", k4, c5, 16, kDefaultAutCap, 99);
        LemmaReport b = verify_lemma("hom", k4, c5, 16, kDefaultAutCap, 99);
        CHECK(a.verdict == b.verdict);
        CHECK(a.detail == b.detail);
        LemmaReport all_by_count = verify_lemma("X", c3, k4, 1000000);
        LemmaReport all_explicit = verify_lemma("X", c3, k4, 0);
        CHECK(all_by_count.detail == all_explicit.detail);
    }

    SUBCASE("automorphism cap propagates") {
        CHECK_THROWS_AS(verify_lemma("X", k4, c5, 0, 10), CapExceeded);
    }

    SUBCASE("precomputed-group overload matches the enumerating path") {
        GroupElements aut = automorphisms(direct_product(k4, c5).product);
        for (const std::string& name : lemma_names()) {
            LemmaReport direct = verify_lemma(name, k4, c5, 16, kDefaultAutCap, 7);
            LemmaReport reused = verify_lemma(name, k4, c5, aut, 16, kDefaultAutCap, 7);
            CHECK(to_string(direct.verdict) == to_string(reused.verdict));
            CHECK(direct.detail == reused.detail);
        }
        CHECK_THROWS_AS(verify_lemma("X", k4, c3, aut), std::invalid_argument);
    }

    SUBCASE("over-cap path screens hypotheses before reporting the cap") {
        // Hypothesis violations keep their verdicts without the group.
        LemmaReport screened = detail::verify_lemma_over_cap("Xk", k4, oracles::cycle(4), 10);
        CHECK(screened.verdict == LemmaVerdict::HypothesesNotMet);
        LemmaReport no_group = detail::verify_lemma_over_cap("ijneq", k4, c5, 10);
        CHECK(no_group.verdict == LemmaVerdict::Pass);
        // A lemma that must sweep the group surfaces the cap instead.
        CHECK_THROWS_AS(detail::verify_lemma_over_cap("X", k4, c5, 10), CapExceeded);
        CHECK_THROWS_AS(detail::verify_lemma_over_cap("GammaBip", oracles::complete(2), c3, 10),
                        CapExceeded);
    }
}
