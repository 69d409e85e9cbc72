#include "oracles.hpp"

#include "ore/construct.hpp"
#include "ore/errors.hpp"
#include "ore/recognize.hpp"

#include <doctest.h>

using namespace ore;

namespace {

// Path 0..4 plus outside vertices 5 ~ {0,1,2} and 6 ~ {2,3,4}, with 5 ~ 6.
Graph near_miss()
{
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {5, 0}, {5, 1}, {5, 2}, {6, 2}, {6, 3}, {6, 4}});
}

} // namespace

TEST_CASE("is_extremal examples")
{
    CHECK(is_extremal(GraphBuilder(Graph::complete(5)).remove_edge(1, 3).build(), 2));
    for (int d = 2; d < 8; ++d)
        CHECK(is_extremal(Graph::path(d + 1), d));
    CHECK_FALSE(is_extremal(Graph::cycle(6), 3));
    CHECK_FALSE(is_extremal(Graph::path(4), 4));
    CHECK_FALSE(is_extremal(Graph(5), 2));
    CHECK_THROWS_AS(is_extremal(Graph::complete(4), 1), DomainError);
}

TEST_CASE("certificate extraction round trip")
{
    Graph g = realize(ExtremalParams::window4(6, 3, 0, 1, 1));
    auto cert = extract_certificate(g, 3);
    REQUIRE(cert);
    CHECK(cert->window_len == 4);
    // the only window of four on a path of length 3 starts at 0 from either end
    CHECK(cert->window_start == 0);
    CHECK(cert->s_vertices.size() == 2);
    CHECK(validate_certificate(g, *cert, 3));
    CHECK(window_union_lemma(g, *cert));
    CHECK(geodesic_neighbor_lemma(g, cert->path));

    CHECK_FALSE(extract_certificate(Graph::cycle(6), 3));

    auto bare = extract_certificate(Graph::path(5), 4);
    REQUIRE(bare);
    CHECK(bare->s_vertices.empty());
    CHECK(bare->window_len == 0);
    CHECK(bare->path.size() == 5);
    CHECK(window_union_lemma(Graph::path(5), *bare));
}

TEST_CASE("certificate for a shuffled extremal graph")
{
    std::mt19937_64 rng(8);
    for (int n = 5; n <= 9; ++n)
        for (int d = 2; d < n; ++d)
            for (const auto& p : enumerate_params(n, d)) {
                Graph g = realize(p).relabelled(testing::random_permutation(rng, n));
                auto cert = extract_certificate(g, d);
                REQUIRE(cert);
                CHECK(validate_certificate(g, *cert, d));
                CHECK(window_union_lemma(g, *cert));
            }
}

TEST_CASE("validate_certificate rejects tampering")
{
    Graph g = realize(ExtremalParams::window4(7, 3, 0, 2, 1));
    auto cert = extract_certificate(g, 3);
    REQUIRE(cert);
    REQUIRE(validate_certificate(g, *cert, 3));

    SUBCASE("clique edge removed")
    {
        Graph h = GraphBuilder(g).remove_edge(cert->s_vertices[0], cert->s_vertices[1]).build();
        CHECK_FALSE(validate_certificate(h, *cert, 3));
    }
    SUBCASE("window not consecutive on the path")
    {
        Certificate c = *cert;
        std::swap(c.path[1], c.path[2]);
        CHECK_FALSE(validate_certificate(g, c, 3));
    }
    SUBCASE("window runs off the path")
    {
        Certificate c = *cert;
        c.window_start = 1;
        CHECK_FALSE(validate_certificate(g, c, 3));
    }
    SUBCASE("wrong triple choice")
    {
        Certificate c = *cert;
        c.choice[0] = c.choice[0] == TripleChoice::FirstThree ? TripleChoice::LastThree
                                                              : TripleChoice::FirstThree;
        CHECK_FALSE(validate_certificate(g, c, 3));
    }
    SUBCASE("vertex listed twice")
    {
        Certificate c = *cert;
        c.s_vertices[0] = c.path[0];
        CHECK_FALSE(validate_certificate(g, c, 3));
    }
    SUBCASE("wrong diameter")
    {
        CHECK_FALSE(validate_certificate(g, *cert, 4));
    }
    SUBCASE("out of range vertex")
    {
        Certificate c = *cert;
        c.s_vertices[0] = 40;
        CHECK_THROWS_AS(validate_certificate(g, c, 3), InputError);
    }
}

TEST_CASE("geodesic neighbour lemma")
{
    std::vector<Vertex> full{0, 1, 2, 3, 4};
    CHECK(geodesic_neighbor_lemma(Graph::path(5), full));

    std::vector<Vertex> short_path{0, 1, 2};
    CHECK_THROWS_AS(geodesic_neighbor_lemma(Graph::path(5), short_path), InputError);
    std::vector<Vertex> not_geodesic{0, 1, 2, 3};
    CHECK_THROWS_AS(geodesic_neighbor_lemma(Graph::cycle(4), not_geodesic), InputError);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 3 + trial % 8;
        Graph g = testing::random_connected_graph(rng, n, 0.2);
        int diam = diameter(g).value();
        auto ref = testing::floyd(g);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (ref[u][v] == diam)
                    for_each_geodesic(g, u, v, [&](std::span<const Vertex> path) {
                        CHECK(geodesic_neighbor_lemma(g, path));
                        return true;
                    });
    }
}

TEST_CASE("window union lemma")
{
    Graph g = near_miss();
    CHECK(testing::floyd(g)[0][4] == 3);
    CHECK(diameter(g).value() < 4);

    Certificate c;
    c.path = {0, 1, 2, 3, 4};
    c.s_vertices = {5, 6};
    c.window_start = 0;
    c.window_len = 4;
    c.choice = {TripleChoice::FirstThree, TripleChoice::LastThree};
    CHECK_FALSE(window_union_lemma(g, c));
    CHECK_FALSE(is_extremal(g, 4));

    Certificate broken = c;
    broken.s_vertices.pop_back();
    CHECK_THROWS_AS(window_union_lemma(g, broken), InputError);

    for (int n = 4; n <= 10; ++n)
        for (int d = 2; d < n; ++d)
            for (const auto& p : enumerate_params(n, d)) {
                Graph h = realize(p);
                auto cert = extract_certificate(h, d);
                REQUIRE(cert);
                CHECK(window_union_lemma(h, *cert));
            }
}

TEST_CASE("geodesic search cap is a hard error")
{
    // a limit of zero trips on the first geodesic examined
    Graph g = realize(ExtremalParams::window3(6, 3, 0));
    CHECK_THROWS_AS(extract_certificate(g, 3, 0), CapacityError);
    CHECK(extract_certificate(g, 3, 10));
}

TEST_CASE("metric and structural extremality agree on all small graphs")
{
    for (int n = 3; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = testing::graph_from_mask(n, mask);
            for (int d = 2; d < n; ++d) {
                bool metric = is_extremal(g, d);
                auto cert = extract_certificate(g, d);
                CHECK(metric == cert.has_value());
                if (cert)
                    CHECK(validate_certificate(g, *cert, d));
            }
        }
    }
}
