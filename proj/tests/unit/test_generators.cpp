#include "bchrome/error.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/io.hpp"

#include <doctest.h>

using namespace bchrome;

TEST_CASE("named graphs")
{
    const auto p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.regular_degree() == 3);
    CHECK(p.adjacent(5, 7));
    CHECK(p.adjacent(9, 6));
    CHECK(p.adjacent(8, 5));

    const auto hs = hoffman_singleton();
    CHECK(hs.order() == 50);
    CHECK(hs.size() == 175);
    CHECK(hs.regular_degree() == 7);
    CHECK(girth(hs) == 5);
    for (Vertex v : {0, 25, 49}) {
        const auto d = distances(hs, v);
        CHECK(*std::max_element(d.begin(), d.end()) == 2);
    }

    const auto r = robertson();
    CHECK(r.order() == 19);
    CHECK(r.regular_degree() == 4);
    CHECK(girth(r) == 5);

    CHECK(girth(cycle(5)) == 5);
    CHECK(girth(cycle(3)) == 3);
    CHECK_THROWS_AS(cycle(2), Error);
}

TEST_CASE("random regular graphs with girth at least five")
{
    const auto p = random_regular_girth({Family::RandomRegular, 3, 10, 5, 3, 20});
    CHECK(p.regular_degree() == 3);
    CHECK(girth(p) >= 5);

    for (int n : {20, 36, 58}) {
        const GenSpec spec{Family::RandomRegular, 3, n, 5, 9, 20};
        const auto g = random_regular_girth(spec);
        CHECK(g.regular_degree() == 3);
        CHECK(*girth(g) >= 5);
        CHECK(write_graph6(g) == write_graph6(random_regular_girth(spec)));
    }
    const auto seven = random_regular_girth({Family::RandomRegular, 7, 300, 5, 4, 20});
    CHECK(seven.regular_degree() == 7);
    CHECK(girth(seven) == 5);

    try {
        random_regular_girth({Family::RandomRegular, 3, 11, 5, 1, 20});
        FAIL("odd handshake accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParameter);
    }
    try {
        random_regular_girth({Family::RandomRegular, 3, 8, 5, 1, 2});
        FAIL("no cubic girth-5 graph on 8 vertices exists");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GenerationFailed);
    }
}

TEST_CASE("relabeling preserves structure")
{
    const auto hs = hoffman_singleton();
    const auto copy = relabel(hs, 17);
    CHECK(copy.size() == hs.size());
    CHECK(copy.regular_degree() == 7);
    CHECK(girth(copy) == 5);
    CHECK_FALSE(copy == hs);
}

TEST_CASE("family names")
{
    CHECK(parse_family("hoffman-singleton") == Family::HoffmanSingleton);
    CHECK(parse_family("random-regular") == Family::RandomRegular);
    CHECK_FALSE(parse_family("heawood"));
    CHECK(to_string(Family::Robertson) == "robertson");
}
