#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "binomeq/exact.hpp"
#include "binomeq/unipoly.hpp"

namespace binomeq {

/// Integer pair (n, m); ordered lexicographically.
using IntPair = std::pair<BigInt, BigInt>;

/// Candidate difference n - m = d1 for binom(n,k) - binom(m,k) = d. The
/// residual ff(m + d1, k) - ff(m, k) - d k! has exactly the admissible m as roots.
struct DivisorSplit {
    BigInt d1;
    BigInt target;  // d * k!
    UniPoly residual;
};

/// One split per divisor of d k!, both signs, ascending by d1.
std::vector<DivisorSplit> divisor_splits(unsigned k, const BigInt& d);

/// Every integer solution (n, m) of binom(n,k) = binom(m,k) + d, sorted.
/// Requires k >= 3 and d != 0.
std::vector<IntPair> solve_equal_index(unsigned k, const BigInt& d);

/// Keeps the solutions with n > m >= k.
std::vector<IntPair> filter_positive(const std::vector<IntPair>& sols, unsigned k);

/// Solutions of binom(n,2) - binom(m,2) = d from factorizations 8d = d1 d2,
/// d1 <= d2, d1 + d2 = d2 - d1 = 2 (mod 4); u = (d1+d2)/2 = 2n-1, v = (d2-d1)/2 = 2m-1.
/// Since v > 0, every returned m is >= 1; the m -> 1-m reflections are omitted.
std::vector<IntPair> solve_equal_index_k2(const BigInt& d);

/// Differences binom(n,k) - binom(m,k) over k < m < n <= n_max that occur at
/// least `min_multiplicity` times, with all their pairs in ascending (n, m).
struct CollisionReport {
    unsigned k = 0;
    std::uint64_t n_max = 0;
    unsigned min_multiplicity = 0;
    std::map<BigInt, std::vector<std::pair<std::uint64_t, std::uint64_t>>> collisions;
    /// Number of (n, m) pairs examined.
    std::uint64_t pairs_examined = 0;
};

/// Rows of n are spread over `workers` threads; the merge is a total sort on
/// (difference, n, m), so the report does not depend on the worker count.
/// `max_batch` bounds the tuples held at once; more passes are made if needed.
CollisionReport collision_search(unsigned k, std::uint64_t n_max, unsigned min_multiplicity,
                                 unsigned workers = 0, std::size_t max_batch = std::size_t{1} << 23);

}  // namespace binomeq
