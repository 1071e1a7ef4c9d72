#pragma once

#include <optional>

#include "binomeq/exact.hpp"

namespace binomeq {

/// n (n-1) ... (n-k+1); the empty product is 1.
BigInt falling_factorial(const BigInt& n, unsigned k);

/// Generalized binomial coefficient falling_factorial(n, k) / k!, any integer n.
BigInt binom(const BigInt& n, unsigned k);

/// The unique n >= k with binom(n, k) == value, if any. Requires value >= 1, k >= 1.
std::optional<BigInt> binom_inverse(const BigInt& value, unsigned k);

/// The unique n >= 2 with binom(n, 2) == value, via 8 value + 1 = (2n - 1)^2.
std::optional<BigInt> triangular_inverse(const BigInt& value);

/// F_0 = 0, F_1 = 1.
BigInt fibonacci(unsigned index);

}  // namespace binomeq
