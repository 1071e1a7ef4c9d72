#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "binomeq/binomials.hpp"
#include "binomeq/sieve.hpp"

using namespace binomeq;

// Oracle: residues d mod p missed by binom(n,k) - binom(m,l) over all n, m < p^3,
// computed by brute force in Python.

TEST_CASE("binomials modulo prime powers") {
    CHECK(binom_mod(10, 3, 7) == 120 % 7);
    CHECK(binom_mod(10, 3, 7, 2) == 120 % 49);
    CHECK(binom_mod(2, 3, 11) == 0);
    for (std::uint64_t n = 0; n < 200; ++n) {
        CHECK(binom_mod(n, 4, 5, 3) == binom(BigInt(n), 4) % 125);
    }
    CHECK_THROWS_AS(binom_mod(4, 5, 5), DomainError);
}

TEST_CASE("single congruences") {
    const SieveQuery bad{2, 4, BigInt(4), 7, 1};
    CHECK(bad.modulus() == 7);
    CHECK_FALSE(congruence_solvable(bad));
    const SieveQuery ok{2, 4, BigInt(3), 7, 1};
    const auto r = check_congruence(ok);
    REQUIRE(r.solvable);
    REQUIRE(r.witness.has_value());
    const auto [n, m] = *r.witness;
    CHECK((binom(BigInt(n), 2) - binom(BigInt(m), 4) - 3) % 7 == 0);
    CHECK_FALSE(congruence_solvable({2, 4, BigInt(-3), 7, 1}));  // -3 = 4 (mod 7)
    CHECK_THROWS_AS(congruence_solvable({2, 7, BigInt(1), 7, 1}), DomainError);
}

TEST_CASE("scan finds the brute-force cells") {
    const auto rep = scan_unsolvable(10, 10, 23, 2);
    const auto* a = rep.find(2, 4, 7);
    REQUIRE(a != nullptr);
    CHECK(a->residues == std::vector<std::uint64_t>{4});
    const auto* b = rep.find(2, 4, 17);
    REQUIRE(b != nullptr);
    CHECK(b->residues == std::vector<std::uint64_t>{7});
    const auto* c = rep.find(9, 9, 13);
    REQUIRE(c != nullptr);
    CHECK(c->residues == std::vector<std::uint64_t>{5, 8});
    const auto* e = rep.find(4, 9, 11);
    REQUIRE(e != nullptr);
    CHECK(e->residues == std::vector<std::uint64_t>{7, 8, 9});
    CHECK(rep.find(5, 8, 11) == nullptr);
    CHECK(rep.entries == scan_unsolvable(10, 10, 23, 1).entries);
}

TEST_CASE("quadratic-form obstruction") {
    // 3 is a non-residue mod 5 and mod 7; 12*7+1 = 5*17, 12*11+1 = 7*19, 12*2+1 = 5^2.
    auto o = pell_obstruction(BigInt(7), 5);
    CHECK(o.applies);
    CHECK(o.valuation == 1);
    CHECK(o.modulus == 25);
    CHECK_FALSE(congruence_solvable({2, 4, BigInt(7), 5, 2}));
    o = pell_obstruction(BigInt(11), 7);
    CHECK(o.applies);
    CHECK(o.modulus == 49);
    CHECK_FALSE(pell_obstruction_applies(BigInt(2), 5));
    CHECK_FALSE(pell_obstruction_applies(BigInt(7), 11));  // 3 is a residue mod 11
    for (long m = -20; m <= 20; ++m) {
        for (long n = -20; n <= 20; ++n) CHECK(pell_identity_holds(BigInt(m), BigInt(n)));
    }
}
