#include "binomeq/sieve.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "binomeq/binomials.hpp"
#include "binomeq/parallel.hpp"

namespace binomeq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 inverse_mod(u64 a, u64 m) {
    // Extended Euclid on signed 128-bit values; a and m coprime.
    __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw DomainError("value is not invertible modulo m");
    if (s0 < 0) s0 += static_cast<__int128>(m);
    return static_cast<u64>(s0);
}

u64 prime_power(u64 p, unsigned e) {
    u64 out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (out > std::numeric_limits<u64>::max() / p) throw DomainError("modulus overflows 64 bits");
        out *= p;
    }
    return out;
}

void check_prime_above(u64 p, unsigned bound) {
    if (!is_prime(p)) throw DomainError("modulus base must be prime");
    if (p <= bound) throw DomainError("need p > max(k, l) so that the factorials are units");
}

// Table of binom(n, k) mod M for n = 0..M-1, using the factorial inverse once.
std::vector<u64> binom_image(unsigned k, u64 p, unsigned e) {
    const u64 M = prime_power(p, e);
    u64 kfact = 1;
    for (unsigned i = 2; i <= k; ++i) kfact = mulmod(kfact, i, M);
    const u64 inv = inverse_mod(kfact, M);
    std::vector<u64> out(M);
    for (u64 n = 0; n < M; ++n) {
        u64 acc = 1;
        for (unsigned i = 0; i < k; ++i) acc = mulmod(acc, (n + M - (i % M)) % M, M);
        out[n] = mulmod(acc, inv, M);
    }
    return out;
}

}  // namespace

std::uint64_t SieveQuery::modulus() const { return prime_power(p, exponent); }

std::uint64_t binom_mod(std::uint64_t n, unsigned k, std::uint64_t p, unsigned e) {
    if (!is_prime(p)) throw DomainError("binom_mod needs a prime base");
    if (p <= k) throw DomainError("binom_mod needs p > k");
    const u64 M = prime_power(p, e);
    n %= M;
    u64 acc = 1, kfact = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc = mulmod(acc, (n + M - (i % M)) % M, M);
        kfact = mulmod(kfact, i + 1, M);
    }
    return mulmod(acc, inverse_mod(kfact, M), M);
}

CongruenceResult check_congruence(const SieveQuery& q) {
    if (q.exponent == 0) throw DomainError("exponent must be at least 1");
    check_prime_above(q.p, std::max(q.k, q.l));
    const u64 M = q.modulus();
    if (M > (u64{1} << 32)) throw DomainError("modulus too large for exhaustive enumeration");
    const auto left = binom_image(q.k, q.p, q.exponent);
    const auto right = binom_image(q.l, q.p, q.exponent);
    constexpr u64 kNone = std::numeric_limits<u64>::max();
    std::vector<u64> first_n(M, kNone);
    for (u64 n = 0; n < M; ++n) {
        if (first_n[left[n]] == kNone) first_n[left[n]] = n;
    }
    const u64 dres = mpz_fdiv_ui(q.d.get_mpz_t(), M);
    for (u64 m = 0; m < M; ++m) {
        const u64 target = (right[m] + dres) % M;
        if (first_n[target] != kNone) return {true, std::make_pair(first_n[target], m)};
    }
    return {false, std::nullopt};
}

bool congruence_solvable(const SieveQuery& q) { return check_congruence(q).solvable; }

PellObstruction pell_obstruction(const BigInt& d, std::uint64_t p) {
    PellObstruction out;
    if (!is_prime(p) || p <= 4) return out;
    if (is_quadratic_residue(BigInt(3), BigInt(static_cast<unsigned long>(p)))) return out;
    out.valuation = padic_valuation(12 * d + 1, BigInt(static_cast<unsigned long>(p)));
    out.applies = out.valuation % 2 == 1;
    if (out.applies) out.modulus = prime_power(p, out.valuation + 1);
    return out;
}

bool pell_obstruction_applies(const BigInt& d, std::uint64_t p) { return pell_obstruction(d, p).applies; }

bool pell_identity_holds(const BigInt& m, const BigInt& n) {
    const BigInt d = binom(n, 2) - binom(m, 4);
    const BigInt X = m * m - 3 * m + 1;
    const BigInt Y = 2 * n - 1;
    return X * X - 3 * Y * Y == -2 * (12 * d + 1);
}

const SieveEntry* SieveReport::find(unsigned k, unsigned l, std::uint64_t p) const {
    for (const auto& e : entries) {
        if (e.k == k && e.l == l && e.p == p) return &e;
    }
    return nullptr;
}

SieveReport scan_unsolvable(unsigned k_max, unsigned l_max, std::uint64_t p_max, unsigned workers) {
    struct Cell {
        unsigned k, l;
        u64 p;
    };
    std::vector<Cell> cells;
    const auto primes = primes_up_to(p_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned l = k; l <= l_max; ++l) {
            for (u64 p : primes) {
                if (p > std::max(k, l)) cells.push_back({k, l, p});
            }
        }
    }
    std::vector<SieveEntry> results(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        const Cell& c = cells[i];
        const auto left = binom_image(c.k, c.p, 1);
        const auto right = binom_image(c.l, c.p, 1);
        std::vector<bool> hit_left(c.p, false), reachable(c.p, false);
        for (u64 v : left) hit_left[v] = true;
        for (u64 a = 0; a < c.p; ++a) {
            if (!hit_left[a]) continue;
            for (u64 b : right) reachable[(a + c.p - b) % c.p] = true;
        }
        SieveEntry e{c.k, c.l, c.p, {}};
        for (u64 d = 0; d < c.p; ++d) {
            if (!reachable[d]) e.residues.push_back(d);
        }
        results[i] = std::move(e);
    });
    SieveReport report;
    for (auto& e : results) {
        if (!e.residues.empty()) report.entries.push_back(std::move(e));
    }
    std::sort(report.entries.begin(), report.entries.end(), [](const SieveEntry& a, const SieveEntry& b) {
        return std::tie(a.k, a.l, a.p) < std::tie(b.k, b.l, b.p);
    });
    return report;
}

}  // namespace binomeq
