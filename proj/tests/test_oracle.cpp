#include "oracles.hpp"

#include "ore/bound.hpp"
#include "ore/construct.hpp"
#include "ore/errors.hpp"
#include "ore/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace ore;

TEST_CASE("oracle examples")
{
    auto r = oracle_search(5, 2);
    CHECK(r.max_size == 9);
    CHECK(r.extremal_forms.size() == 1);
    CHECK(r.labeled_count == 10);   // K5 minus any one of its 10 edges

    for (int d = 2; d <= 6; ++d) {
        auto bare = oracle_search(d + 1, d);
        CHECK(bare.max_size == d);
        REQUIRE(bare.extremal_forms.size() == 1);
        CHECK(bare.extremal_forms[0] == canonical_form(Graph::path(d + 1)));
    }

    auto r73 = oracle_search(7, 3, {4});
    CHECK(r73.max_size == 15);
    CHECK(r73.extremal_forms.size() == enumerate_extremal_up_to_iso(7, 3).size());
}

TEST_CASE("oracle table order and small rows")
{
    auto table = oracle_table(4);
    REQUIRE(table.size() == 3);
    CHECK((table[0].n == 3 && table[0].d == 2));
    CHECK((table[1].n == 4 && table[1].d == 2));
    CHECK((table[2].n == 4 && table[2].d == 3));
    CHECK(table[1].max_size == 5);
    CHECK(table[2].max_size == 3);
    CHECK(table[1].max_size == testing::brute_extremal(4, 2).max_size);
    CHECK(table[2].max_size == testing::brute_extremal(4, 3).max_size);
}

TEST_CASE("oracle agrees with the Floyd-Warshall brute force")
{
    for (int n = 3; n <= 6; ++n)
        for (int d = 2; d < n; ++d) {
            auto r = oracle_search(n, d);
            auto ref = testing::brute_extremal(n, d);
            CHECK(r.max_size == ref.max_size);
            std::set<CanonicalForm> ref_forms;
            for (const auto& g : ref.classes)
                ref_forms.insert(canonical_form(g));
            CHECK(std::set<CanonicalForm>(r.extremal_forms.begin(), r.extremal_forms.end()) ==
                  ref_forms);
        }
    CHECK(oracle_search(6, 2).max_size == 14);
}

TEST_CASE("pruning does not change the maximum")
{
    for (int n = 3; n <= 5; ++n)
        for (int d = 2; d < n; ++d) {
            OracleOptions off;
            off.prune_below_best = false;
            auto a = oracle_search(n, d);
            auto b = oracle_search(n, d, off);
            CHECK(a.max_size == b.max_size);
            CHECK(a.extremal_forms == b.extremal_forms);
            CHECK(a.labeled_count == b.labeled_count);
        }
}

TEST_CASE("pruned mode matches full mode")
{
    for (int d = 2; d < 7; ++d) {
        OracleOptions pruned;
        pruned.pruned = true;
        pruned.workers = 2;
        auto a = oracle_search(7, d, pruned);
        auto b = oracle_search(7, d);
        CHECK(a.pruned);
        CHECK_FALSE(b.pruned);
        CHECK(a.max_size == b.max_size);
        CHECK(a.extremal_forms == b.extremal_forms);
        CHECK(a.labeled_count == b.labeled_count);
    }
}

TEST_CASE("worker count does not change the report")
{
    for (unsigned workers : {2u, 3u, 8u}) {
        auto a = oracle_search(6, 3, {1});
        auto b = oracle_search(6, 3, {workers});
        CHECK(a.max_size == b.max_size);
        CHECK(a.extremal_forms == b.extremal_forms);
        CHECK(a.labeled_count == b.labeled_count);
    }
}

TEST_CASE("oracle capacity and domain")
{
    CHECK_THROWS_AS(oracle_search(9, 3, {1, true}), CapacityError);
    CHECK_THROWS_AS(oracle_search(8, 3), CapacityError);
    CHECK_THROWS_AS(oracle_table(9), CapacityError);
    CHECK_THROWS_AS(oracle_search(5, 1), DomainError);
    CHECK_THROWS_AS(oracle_search(5, 5), DomainError);
}
