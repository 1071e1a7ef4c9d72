#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "binomeq/exact.hpp"

namespace binomeq {

/// Is binom(n,k) == binom(m,l) + d (mod p^exponent) solvable?
/// Requires p prime with p > max(k, l), so k! and l! are units.
struct SieveQuery {
    unsigned k = 0;
    unsigned l = 0;
    BigInt d;
    std::uint64_t p = 0;
    unsigned exponent = 1;

    std::uint64_t modulus() const;
};

/// binom(n, k) mod p^e computed as falling_factorial(n, k) * (k!)^-1. Requires p > k.
std::uint64_t binom_mod(std::uint64_t n, unsigned k, std::uint64_t p, unsigned e = 1);

struct CongruenceResult {
    bool solvable = false;
    /// Residues (n, m) realising the congruence when it is solvable.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

/// Exhaustive over all residue pairs (done by comparing the two image sets).
CongruenceResult check_congruence(const SieveQuery& q);
bool congruence_solvable(const SieveQuery& q);

/// Quadratic-form obstruction for binom(n,2) = binom(m,4) + d: with
/// X = m^2 - 3m + 1 and Y = 2n - 1 the equation reads X^2 - 3Y^2 = -2(12d + 1).
/// Applies when p > 4, 3 is a non-residue mod p and v_p(12d + 1) is odd; the
/// congruence is then unsolvable modulo p^(v+1).
struct PellObstruction {
    bool applies = false;
    unsigned valuation = 0;
    /// p^(valuation + 1); meaningful when `applies`.
    std::uint64_t modulus = 0;
};

PellObstruction pell_obstruction(const BigInt& d, std::uint64_t p);
bool pell_obstruction_applies(const BigInt& d, std::uint64_t p);

/// (m^2 - 3m + 1)^2 - 3(2n - 1)^2 == -2(12d + 1) with d = binom(n,2) - binom(m,4).
bool pell_identity_holds(const BigInt& m, const BigInt& n);

struct SieveEntry {
    unsigned k = 0;
    unsigned l = 0;
    std::uint64_t p = 0;
    /// Residues d in [0, p) for which the congruence has no solution.
    std::vector<std::uint64_t> residues;

    friend bool operator==(const SieveEntry&, const SieveEntry&) = default;
};

struct SieveReport {
    /// Sorted by (k, l, p); only cells with at least one unsolvable residue.
    std::vector<SieveEntry> entries;

    const SieveEntry* find(unsigned k, unsigned l, std::uint64_t p) const;
};

/// All k <= l with k <= k_max, l <= l_max, primes max(k,l) < p <= p_max.
/// Cells are independent and are spread over `workers` threads (0 = hardware).
SieveReport scan_unsolvable(unsigned k_max, unsigned l_max, std::uint64_t p_max, unsigned workers = 0);

}  // namespace binomeq
