#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binomeq/exact.hpp"
#include "binomeq/unipoly.hpp"

using namespace binomeq;

// Expected values below were computed independently with Python's math and sympy.

TEST_CASE("decimal round trip and rational canonical form") {
    const BigInt big = to_bigint("-100891344545564193334812497256");
    CHECK(to_string(big) == "-100891344545564193334812497256");
    CHECK_THROWS_AS(to_bigint("12a"), DomainError);
    const BigRational r = make_rational(BigInt(6), BigInt(-4));
    CHECK(to_string(r) == "-3/2");
    CHECK(r.get_den() == 2);
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("isqrt and perfect squares") {
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(15)) == 3);
    CHECK(isqrt(BigInt(16)) == 4);
    CHECK(isqrt(pow(BigInt(10), 41) + 12345) == to_bigint("316227766016837933199"));
    CHECK_THROWS_AS(isqrt(BigInt(-1)), DomainError);
    BigInt root;
    CHECK(is_perfect_square(BigInt(1245456), &root));
    CHECK(root == 1116);
    CHECK_FALSE(is_perfect_square(BigInt(1245457)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(BigInt(162), BigInt(3)) == 4);
    CHECK(padic_valuation(BigInt(-85), BigInt(5)) == 1);
    CHECK(padic_valuation(BigInt(7), BigInt(5)) == 0);
    CHECK_THROWS_AS(padic_valuation(BigInt(0), BigInt(5)), DomainError);
    CHECK_THROWS_AS(padic_valuation(BigInt(8), BigInt(1)), DomainError);
}

TEST_CASE("primes and quadratic residues") {
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    // squares mod 11: 1 3 4 5 9; squares mod 7: 1 2 4
    CHECK(is_quadratic_residue(BigInt(3), BigInt(11)));
    CHECK_FALSE(is_quadratic_residue(BigInt(3), BigInt(7)));
    CHECK_FALSE(is_quadratic_residue(BigInt(-1), BigInt(7)));
    CHECK(is_quadratic_residue(BigInt(-1), BigInt(13)));
    CHECK_THROWS_AS(is_quadratic_residue(BigInt(14), BigInt(7)), DomainError);
}

TEST_CASE("factorization and divisors") {
    const auto f = factorize(to_bigint("998244359987710471"));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<BigInt, unsigned>{BigInt(998244353), 1});
    CHECK(f[1] == std::pair<BigInt, unsigned>{BigInt(1000000007), 1});
    const auto g = factorize(to_bigint("-44565841393521102794117873673"));
    REQUIRE(g.size() == 3);
    CHECK(g[0].first == 3);
    CHECK(g[0].second == 2);
    CHECK(g[1].first == 2147483647);
    CHECK(g[2].first == to_bigint("2305843009213693951"));
    CHECK(positive_divisors(BigInt(-12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
    CHECK(divisor_count(BigInt(45)) == 6);
    CHECK(divisor_count(BigInt(1)) == 1);
    CHECK_THROWS_AS(positive_divisors(BigInt(0)), DomainError);
    CHECK(factorial(20) == to_bigint("2432902008176640000"));
}

TEST_CASE("univariate arithmetic over Q") {
    const UniPoly p = UniPoly::from_ints({-1, 0, 1});  // x^2 - 1
    const UniPoly q = UniPoly::from_ints({1, 1});      // x + 1
    const auto [quo, rem] = divmod(p, q);
    CHECK(quo == UniPoly::from_ints({-1, 1}));
    CHECK(rem.is_zero());
    CHECK(gcd(p, UniPoly::from_ints({1, 2, 1})) == q);
    CHECK(p.compose(q) == UniPoly::from_ints({0, 2, 1}));
    CHECK(p(make_rational(BigInt(1), BigInt(2))) == BigRational(-3, 4));
    CHECK(UniPoly().degree() == -1);
    const UniPoly h{BigRational(1, 2), BigRational(-3, 4)};
    CHECK(h.primitive_integer() == UniPoly::from_ints({-2, 3}));
    CHECK(h.monic() == UniPoly{BigRational(-2, 3), BigRational(1)});
}

TEST_CASE("integer and rational roots") {
    // 2 (x - 3)(x + 5)(2x - 1) x^2
    const UniPoly p = UniPoly::from_ints({2}) * UniPoly::from_ints({-3, 1}) * UniPoly::from_ints({5, 1}) *
                      UniPoly::from_ints({-1, 2}) * UniPoly::from_ints({0, 0, 1});
    CHECK(integer_roots(p) == std::vector<BigInt>{-5, 0, 3});
    CHECK(rational_roots(p) == std::vector<BigRational>{-5, 0, BigRational(1, 2), 3});
    CHECK(integer_roots(UniPoly::from_ints({1, 0, 1})).empty());
    // root far from the constant term's small divisors
    CHECK(integer_roots(UniPoly::from_ints({-1000003, 1})) == std::vector<BigInt>{1000003});
    CHECK_THROWS_AS(integer_roots(UniPoly()), DomainError);
}
