#include "bchrome/coloring.hpp"
#include "bchrome/error.hpp"
#include "bchrome/generators.hpp"

#include <doctest.h>

using namespace bchrome;

namespace {

PartialColoring total(Color k, std::vector<Color> colors) { return PartialColoring(k, std::move(colors)); }

} // namespace

TEST_CASE("available colors")
{
    const Graph isolated(1);
    CHECK(available_colors(PartialColoring(1, 3), isolated, 0) == std::vector<Color>{1, 2, 3});

    const std::vector<Edge> path{{0, 1}, {1, 2}};
    const auto p3 = Graph::from_edges(3, path);
    const auto c = total(3, {1, 2, 3});
    CHECK(available_colors(c, p3, 1).empty());
    CHECK(is_b_vertex(c, p3, 1));

    const auto c5 = cycle(5);
    const auto five = total(3, {1, 2, 3, 1, 2});
    // Vertex 4 sees color 1 on both sides; vertex 1 sees 1 and 3.
    CHECK(available_colors(five, c5, 4) == std::vector<Color>{3});
    CHECK(available_colors(five, c5, 1).empty());
}

TEST_CASE("b-coloring predicates")
{
    const auto c5 = cycle(5);
    CHECK(is_b_coloring(total(3, {1, 2, 3, 1, 2}), c5));
    CHECK_FALSE(is_proper(total(3, {1, 2, 1, 2, 1}), c5));
    CHECK_FALSE(is_b_coloring(total(3, {1, 2, 1, 2, 1}), c5));
    CHECK(is_b_coloring(total(2, {1, 2, 1, 2, 1, 2}), cycle(6)));
    CHECK(b_vertices(total(2, {1, 2, 1, 2, 1, 2}), cycle(6)).size() == 6);

    // Proper, but color 3 is unused.
    CHECK_FALSE(is_b_coloring(total(3, {1, 2, 1, 2, 1, 2}), cycle(6)));

    PartialColoring partial(5, 3);
    partial.assign(0, 1);
    CHECK_THROWS_AS(is_b_coloring(partial, c5), Error);
}

TEST_CASE("assignment guards")
{
    const auto c5 = cycle(5);
    PartialColoring c(5, 3);
    CHECK_THROWS_AS(c.assign(0, 4), Error);
    CHECK_THROWS_AS(c.assign(0, 0), Error);
    c.assign_proper(c5, 0, 1);
    CHECK_THROWS_AS(c.assign_proper(c5, 1, 1), Error);
    c.clear(0);
    CHECK_FALSE(c.is_colored(0));
}

TEST_CASE("greedy completion")
{
    PartialColoring c(5, 3);
    greedy_complete(c, cycle(5));
    CHECK(std::vector<Color>(c.colors().begin(), c.colors().end()) == std::vector<Color>{1, 2, 1, 2, 3});

    PartialColoring k3(3, 2);
    k3.assign(0, 1);
    k3.assign(1, 2);
    try {
        greedy_complete(k3, cycle(3));
        FAIL("expected CompletionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CompletionFailed);
    }

    // d-regular with k = d+1 always completes and keeps precolored vertices.
    const auto hs = hoffman_singleton();
    PartialColoring seeded(hs.order(), 8);
    seeded.assign(0, 8);
    seeded.assign(2, 8);
    greedy_complete(seeded, hs, std::vector<Vertex>{49, 48, 47});
    CHECK(seeded.is_total());
    CHECK(is_proper(seeded, hs));
    CHECK(seeded[0] == 8);
    CHECK(seeded[2] == 8);
}

TEST_CASE("certificate verification")
{
    const auto c5 = cycle(5);
    Certificate cert;
    cert.strategy = "manual";
    cert.center = 0;
    cert.k = 3;
    cert.colors = {1, 2, 3, 1, 2};
    cert.b_vertices = {{1, 3}, {2, 1}, {3, 2}};
    cert.graph = fingerprint(c5);
    CHECK(verify_certificate(cert, c5).accepted);

    auto improper = cert;
    improper.colors[1] = 1;
    CHECK(verify_certificate(improper, c5).reason == RejectReason::ImproperEdge);

    auto not_b = cert;
    not_b.colors = {1, 2, 1, 2, 3};
    not_b.b_vertices = {{1, 0}, {2, 3}, {3, 4}};
    CHECK(verify_certificate(not_b, c5).accepted);
    // Vertex 2 has color 1 but both its neighbors carry 2.
    not_b.b_vertices[1] = 2;
    CHECK(verify_certificate(not_b, c5).reason == RejectReason::NotABVertex);

    auto wrong_class = cert;
    wrong_class.b_vertices[1] = 4;
    CHECK(verify_certificate(wrong_class, c5).reason == RejectReason::WrongClass);

    auto missing = cert;
    missing.b_vertices.erase(2);
    CHECK(verify_certificate(missing, c5).reason == RejectReason::MissingBVertex);

    auto short_colors = cert;
    short_colors.colors.pop_back();
    CHECK(verify_certificate(short_colors, c5).reason == RejectReason::WrongLength);

    auto other_graph = cert;
    other_graph.graph.m = 6;
    CHECK(verify_certificate(other_graph, c5).reason == RejectReason::FingerprintMismatch);

    auto out_of_range = cert;
    out_of_range.colors[0] = 4;
    CHECK(verify_certificate(out_of_range, c5).reason == RejectReason::ColorOutOfRange);

    auto empty_class = cert;
    empty_class.k = 4;
    empty_class.b_vertices[4] = 0;
    CHECK(verify_certificate(empty_class, c5).reason == RejectReason::EmptyClass);
}
