#pragma once

// Exact integer and rational arithmetic plus the small number-theoretic
// helpers the rest of the library is built on.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace binomeq {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

BigInt to_bigint(const std::string& decimal);
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Rational with a canonical (reduced, positive-denominator) representation.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// floor(sqrt(v)). Throws DomainError for v < 0.
BigInt isqrt(const BigInt& v);

/// True iff v is a perfect square; writes the root when requested.
bool is_perfect_square(const BigInt& v, BigInt* root = nullptr);

/// Largest e with p^e | v. Throws DomainError for v == 0 or p < 2.
unsigned padic_valuation(const BigInt& v, const BigInt& p);

/// Deterministic trial division; adequate for the sieve ranges used here.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Euler's criterion. Requires p an odd prime not dividing a.
bool is_quadratic_residue(const BigInt& a, const BigInt& p);

BigInt factorial(unsigned k);

/// Prime factorization of |v| (v != 0): trial division, then Pollard-Brent rho.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& v);

/// Positive divisors of |v| in ascending order (v != 0).
std::vector<BigInt> positive_divisors(const BigInt& v);

/// Number of positive divisors, sigma_0(|v|).
std::size_t divisor_count(const BigInt& v);

BigInt pow(const BigInt& base, unsigned e);
BigRational pow(const BigRational& base, unsigned e);

}  // namespace binomeq
