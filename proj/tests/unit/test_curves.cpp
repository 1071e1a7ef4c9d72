#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "binomeq/binomials.hpp"
#include "binomeq/curves.hpp"

using namespace binomeq;

namespace {
bool has(const std::vector<SolutionRecord>& v, long m, long n) {
    return std::any_of(v.begin(), v.end(), [&](const SolutionRecord& r) { return r.m == m && r.n == n; });
}
}  // namespace

TEST_CASE("every elliptic model is certified") {
    CHECK(elliptic_pairs().size() == 8);
    const auto specs = verify_all_transforms();
    REQUIRE(specs.size() == 8);
    for (const auto& s : specs) {
        CAPTURE(s.k);
        CAPTURE(s.l);
        CHECK(s.certified);
        CHECK(certify(s));
    }
    CHECK(certify(curve_spec(2, 5)));
    CHECK_THROWS_AS(curve_spec(3, 5), DomainError);
}

TEST_CASE("the two repaired rows") {
    const auto a = curve_spec(2, 3);
    REQUIRE(a.correction.has_value());
    // X = 12m, Y = 72n - 36 at (m,n) = (10,16), d = 0: Y^2 = 1116^2 = 1245456
    const auto p = map_point(a, BigInt(0), BigInt(10), BigInt(16));
    CHECK(p.on_curve);
    CHECK(p.X == 120);
    CHECK(p.Y == 1116);
    CHECK(curve_spec(3, 6).correction.has_value());
    CHECK_FALSE(curve_spec(2, 4).correction.has_value());
}

TEST_CASE("mapped points lie on the curve only for solutions") {
    const auto s = curve_spec(2, 4);
    CHECK(map_point(s, BigInt(0), BigInt(10), BigInt(21)).on_curve);
    CHECK_FALSE(map_point(s, BigInt(1), BigInt(10), BigInt(21)).on_curve);
}

TEST_CASE("sporadic cubic") {
    CHECK(sporadic_point_check());
    const auto c = sporadic_cubic();
    CHECK(c.evaluate({{c.variables()[0], BigRational(-4)}, {c.variables()[1], BigRational(-9)}}) == 0);
}

TEST_CASE("bounded search against brute force") {
    // C(n,2) = C(m,3) for 3 <= m <= 1000
    const auto r = bounded_search(2, 3, BigInt(0), 1000, 2);
    REQUIRE(r.size() == 5);
    CHECK(has(r, 3, 2));
    CHECK(has(r, 5, 5));
    CHECK(has(r, 10, 16));
    CHECK(has(r, 22, 56));
    CHECK(has(r, 36, 120));
    for (const auto& rec : r) CHECK(verify_solution(rec));
    CHECK(bounded_search(2, 3, BigInt(0), 1000, 1) == r);
    // C(3,2) = C(5,4) - 2
    CHECK(has(bounded_search(2, 4, BigInt(-2), 100), 5, 3));
}

TEST_CASE("genus-2 search and point families") {
    const auto r = bounded_search_25(BigInt(66), 5, 400);
    CHECK(has(r, 11, 33));
    CHECK(has(r, 28, 444));
    CHECK(r.size() == 2);
    for (const auto& f : quintic_point_families()) CHECK(verify_point_family(f));
    CHECK(verify_parametric_family(builtin_corpus()).all_passed());
}
