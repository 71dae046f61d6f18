#include "bchrome/error.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace bchrome;

TEST_CASE("b-coloring existence on the Petersen graph and C5")
{
    const auto p = petersen();
    CHECK(b_coloring_exists(p, 4).outcome == Outcome::No);
    const auto three = b_coloring_exists(p, 3);
    REQUIRE(three.outcome == Outcome::Yes);
    CHECK(is_b_coloring(*three.witness, p));

    const auto c5 = b_coloring_exists(cycle(5), 3);
    REQUIRE(c5.outcome == Outcome::Yes);
    CHECK(is_b_coloring(*c5.witness, cycle(5)));
    CHECK_THROWS_AS(b_coloring_exists(p, 0), Error);
}

TEST_CASE("exact b-chromatic numbers")
{
    CHECK(exact_b_chromatic(petersen()).value == 3);
    CHECK(exact_b_chromatic(petersen()).exact);
    CHECK(exact_b_chromatic(Graph(1)).value == 1);
    CHECK(exact_b_chromatic(cycle(5)).value == 3);
    // C4 has b-chromatic number 2; C6 and C7 reach 3.
    CHECK(exact_b_chromatic(cycle(4)).value == 2);
    CHECK(exact_b_chromatic(cycle(6)).value == 3);

    const auto hs = hoffman_singleton();
    const auto r = exact_b_chromatic(hs);
    CHECK(r.value == 8);
    CHECK(r.exact);
    CHECK(is_b_coloring(*r.witness, hs));
}

TEST_CASE("budgets are reported, never guessed")
{
    SearchLimits tiny;
    tiny.node_budget = 3;
    CHECK(b_coloring_exists(hoffman_singleton(), 8, tiny).outcome == Outcome::BudgetExceeded);
    const auto r = exact_b_chromatic(hoffman_singleton(), tiny);
    CHECK_FALSE(r.exact);

    SearchLimits small;
    small.max_vertices = 5;
    CHECK(b_coloring_exists(petersen(), 3, small).outcome == Outcome::BudgetExceeded);
}

TEST_CASE("search agrees with brute force on tiny graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (std::bernoulli_distribution(0.4)(rng))
                    edges.emplace_back(u, v);
        const auto g = Graph::from_edges(static_cast<std::size_t>(n), edges);
        const auto r = exact_b_chromatic(g);
        CHECK(r.exact);
        CHECK(r.value == testing::brute_b_chromatic(g));
        REQUIRE(r.witness);
        CHECK(is_b_coloring(*r.witness, g));
        const auto chi = chromatic_number(g);
        REQUIRE(chi);
        CHECK(r.value >= *chi);
        CHECK(r.value <= g.max_degree() + 1);
    }
}

TEST_CASE("chromatic numbers")
{
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(cycle(7)) == 3);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(hoffman_singleton()) == 4);
}

TEST_CASE("six-cycle enumeration")
{
    const auto cycles = enumerate_c6_through(petersen(), 0);
    CHECK(cycles.size() == 6);
    for (const auto& cyc : cycles) {
        CHECK(cyc[0] == *std::min_element(cyc.begin(), cyc.end()));
        CHECK(std::find(cyc.begin(), cyc.end(), 0) != cyc.end());
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(petersen().adjacent(cyc[i], cyc[(i + 1) % 6]));
    }
    CHECK(enumerate_c6_through(cycle(6), 4).size() == 1);
    const std::vector<Edge> tree{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    CHECK(enumerate_c6_through(Graph::from_edges(5, tree), 1).empty());

    // Totals: ten hexagons in the Petersen graph.
    long long through = 0;
    for (Vertex v = 0; v < 10; ++v)
        through += static_cast<long long>(enumerate_c6_through(petersen(), v).size());
    CHECK(through / 6 == 10);
}

TEST_CASE("transversal backtracking")
{
    CHECK(transversal_backtrack({{{1}, {2}}, 2}).has_value());
    CHECK_FALSE(transversal_backtrack({{{1}, {1}}, 2}).has_value());
    SetFamily big{std::vector<std::vector<Color>>(11, std::vector<Color>{1}), 11};
    try {
        transversal_backtrack(big);
        FAIL("expected FamilyTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FamilyTooLarge);
    }
}
