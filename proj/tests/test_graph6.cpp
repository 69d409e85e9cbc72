#include "oracles.hpp"

#include "ore/errors.hpp"
#include "ore/graph6.hpp"

#include <doctest.h>

using namespace ore;

TEST_CASE("encode known records")
{
    CHECK(encode_g6(Graph(0)) == "?");
    // n=3 -> 'B'; bits x01 x02 x12 = 111, padded 111000 = 56 -> 'w'
    CHECK(encode_g6(Graph::complete(3)) == "Bw");
    CHECK(encode_g6(Graph(1)) == "@");
    CHECK(encode_g6(Graph(5)) == "D??");
    CHECK_THROWS_AS(encode_g6(Graph(63)), CapacityError);
}

TEST_CASE("decode known records")
{
    CHECK(decode_g6("Bw") == Graph::complete(3));
    CHECK(decode_g6("Bw\n") == Graph::complete(3));
    CHECK(decode_g6("Bw\r\n") == Graph::complete(3));
    CHECK(decode_g6(">>graph6<<Bw") == Graph::complete(3));
    CHECK(decode_g6("?") == Graph(0));
    CHECK(decode_g6(encode_g6(Graph::path(4))) == Graph::path(4));
}

TEST_CASE("decode errors carry byte offsets")
{
    auto offset_of = [](std::string_view s) -> std::size_t {
        try {
            decode_g6(s);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("expected ParseError");
        return 0;
    };
    CHECK(offset_of(std::string("D?\n?", 4)) == 2);
    CHECK(offset_of("D?") == 2);           // truncated: n=5 needs two payload bytes
    CHECK(offset_of("Bw?") == 2);          // trailing byte
    CHECK(offset_of("Bx") == 1);           // padding bit set
    CHECK(offset_of("") == 0);
    CHECK(offset_of("~??") == 0);          // long-form order
    CHECK(offset_of(">>graph6<<B ") == 11);
}

TEST_CASE("round trip on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        int n = trial % 21;
        Graph g = testing::random_graph(rng, n, 0.4);
        std::string line = encode_g6(g);
        CHECK(line.size() == 1 + (n * (n - 1) / 2 + 5) / 6);
        CHECK(decode_g6(line) == g);
        CHECK(encode_g6(decode_g6(line)) == line);
    }
}
