#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binomeq/binomials.hpp"
#include "binomeq/equal_index.hpp"

using namespace binomeq;

// Expected solution sets come from a Python brute force over |n|, |m| <= 300.

namespace {
std::vector<IntPair> pairs(std::initializer_list<std::pair<long, long>> v) {
    std::vector<IntPair> out;
    for (const auto& [n, m] : v) out.emplace_back(BigInt(n), BigInt(m));
    return out;
}
}  // namespace

TEST_CASE("divisor method matches brute force") {
    CHECK(solve_equal_index(3, BigInt(10)) == pairs({{-3, -4}, {0, -3}, {1, -3}, {2, -3}, {5, 0}, {5, 1}, {5, 2}, {6, 5}}));
    CHECK(solve_equal_index(3, BigInt(1)) == pairs({{0, -1}, {1, -1}, {2, -1}, {3, 0}, {3, 1}, {3, 2}}));
    CHECK(solve_equal_index(4, BigInt(5)) == pairs({{-2, 0}, {-2, 1}, {-2, 2}, {-2, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 3}}));
    CHECK(solve_equal_index(5, BigInt(-6)) ==
          pairs({{-2, 0}, {-2, 1}, {-2, 2}, {-2, 3}, {-2, 4}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}}));
    CHECK_THROWS_AS(solve_equal_index(3, BigInt(0)), DomainError);
    CHECK_THROWS_AS(solve_equal_index(2, BigInt(1)), DomainError);
}

TEST_CASE("positive filter") {
    CHECK(filter_positive(solve_equal_index(3, BigInt(10)), 3) == pairs({{6, 5}}));
    CHECK(filter_positive(solve_equal_index(4, BigInt(5)), 4).empty());
}

TEST_CASE("divisor splits") {
    const auto splits = divisor_splits(3, BigInt(1));
    CHECK(splits.size() == 8);  // +/- each divisor of 6
    CHECK(splits.front().d1 == -6);
    CHECK(splits.back().d1 == 6);
    for (const auto& s : splits) CHECK(s.target == 6);
}

TEST_CASE("k = 2 factorization") {
    CHECK(solve_equal_index_k2(BigInt(1)) == pairs({{-1, 1}, {2, 1}}));
    CHECK(solve_equal_index_k2(BigInt(2)) == pairs({{-2, 2}, {3, 2}}));
    CHECK(solve_equal_index_k2(BigInt(-3)) == pairs({{-2, 4}, {0, 3}, {1, 3}, {3, 4}}));
    CHECK(solve_equal_index_k2(BigInt(15)) ==
          pairs({{-15, 15}, {-8, 7}, {-6, 4}, {-5, 1}, {6, 1}, {7, 4}, {9, 7}, {16, 15}}));
    for (long d = 1; d <= 49; d += 2) {
        CHECK(solve_equal_index_k2(BigInt(d)).size() >= divisor_count(BigInt(d)));
    }
    CHECK_THROWS_AS(solve_equal_index_k2(BigInt(0)), DomainError);
}

TEST_CASE("collision search") {
    const auto r = collision_search(3, 40, 3, 2);
    REQUIRE(!r.collisions.empty());
    const auto& [d, ps] = *r.collisions.begin();
    CHECK(d == 2180);
    CHECK(ps == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{25, 10}, {33, 28}, {36, 32}});
    const auto s = collision_search(7, 20, 2, 1);
    REQUIRE(s.collisions.count(BigInt(8008)) == 1);
    CHECK(s.collisions.at(BigInt(8008)) == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{16, 14}, {17, 16}});
}

TEST_CASE("collision search is independent of workers and batching") {
    const auto a = collision_search(4, 120, 2, 1);
    const auto b = collision_search(4, 120, 2, 4, 1000);
    CHECK(a.collisions == b.collisions);
    CHECK(a.pairs_examined == b.pairs_examined);
    CHECK(a.pairs_examined == (120 - 4) * (120 - 5) / 2);
}
