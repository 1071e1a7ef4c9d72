#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "binomeq/binomials.hpp"
#include "binomeq/corpus.hpp"

using namespace binomeq;

TEST_CASE("generalized binomials") {
    CHECK(binom(BigInt(-5), 3) == -35);
    CHECK(binom(BigInt(-1), 4) == 1);
    CHECK(binom(BigInt(3), 5) == 0);
    CHECK(binom(BigInt(7), 0) == 1);
    CHECK(binom(BigInt(100), 50) == to_bigint("100891344545564193334812497256"));
    CHECK(falling_factorial(BigInt(5), 3) == 60);
    CHECK(falling_factorial(BigInt(5), 0) == 1);
}

TEST_CASE("inverse binomials") {
    // 3003 = C(78,2) = C(15,5) = C(14,6), and is not a value of C(n,3)
    const BigInt v(3003);
    CHECK(binom_inverse(v, 2) == BigInt(78));
    CHECK(binom_inverse(v, 5) == BigInt(15));
    CHECK(binom_inverse(v, 6) == BigInt(14));
    CHECK_FALSE(binom_inverse(v, 3).has_value());
    CHECK(binom_inverse(v, 1) == v);
    CHECK(triangular_inverse(v) == BigInt(78));
    CHECK_FALSE(triangular_inverse(BigInt(3004)).has_value());
    CHECK(binom_inverse(binom(BigInt(160403633), 2), 2) == BigInt(160403633));
    CHECK_THROWS_AS(binom_inverse(BigInt(0), 2), DomainError);
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(100) == to_bigint("354224848179261915075"));
}

TEST_CASE("corpus parsing") {
    std::istringstream in("# comment\n\n2 3 0 16 10 equal-binomials printed=C(16,2)=C(10,3)\n3 2 -1 4 5 x\n");
    const auto recs = parse_corpus(in);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].source_tag() == "equal-binomials");
    CHECK(recs[1].d == -1);
    CHECK(verify_solution(recs[0]));
    std::istringstream again(format_record(recs[0]) + "\n");
    CHECK(parse_corpus(again).front() == recs[0]);

    std::istringstream bad("2 3 0 16\n");
    CHECK_THROWS_AS(parse_corpus(bad), DomainError);
    std::istringstream junk("2 3 zero 16 10 tag\n");
    CHECK_THROWS_AS(parse_corpus(junk), DomainError);
}

TEST_CASE("record verification is exact") {
    // C(10,4) = 210 = C(21,2)
    CHECK(verify_solution({2, 4, BigInt(0), BigInt(21), BigInt(10), "t"}));
    CHECK_FALSE(verify_solution({2, 4, BigInt(1), BigInt(21), BigInt(10), "t"}));
    // C(4,2) = C(8,7) - 2
    CHECK(verify_solution({2, 7, BigInt(-2), BigInt(4), BigInt(8), "t"}));
}

TEST_CASE("built-in corpus and families") {
    const Corpus c = builtin_corpus();
    CHECK(c.records.size() == 189);
    CHECK(c.families.size() == 2);
    const auto rep = verify_corpus(c);
    CHECK(rep.all_passed());
    CHECK(rep.failures() == 0);
    CHECK(rep.per_source.at("genus2-2-5") == 17);
    for (unsigned i = 1; i <= 6; ++i) CHECK(verify_fibonacci_family(i));
    for (unsigned x = 1; x <= 10; ++x) CHECK(verify_cubic_triangular_family(x));
}

TEST_CASE("fibonacci family instance i=2") {
    // n = F6 F7 = 8 * 13, k = F4 F7 = 3 * 13
    CHECK(binom(BigInt(104), 39) == binom(BigInt(103), 40));
}
