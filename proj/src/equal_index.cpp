#include "binomeq/equal_index.hpp"

#include <algorithm>
#include <tuple>

#include "binomeq/binomials.hpp"
#include "binomeq/parallel.hpp"

namespace binomeq {

namespace {

// ff(m + shift, k) as a polynomial in m.
UniPoly falling_factorial_poly(const BigInt& shift, unsigned k) {
    UniPoly acc = UniPoly::constant(BigRational(1));
    for (unsigned i = 0; i < k; ++i) {
        acc *= UniPoly({BigRational(BigInt(shift - i)), BigRational(1)});
    }
    return acc;
}

}  // namespace

std::vector<DivisorSplit> divisor_splits(unsigned k, const BigInt& d) {
    if (d == 0) throw DomainError("d = 0 has infinitely many trivial solutions");
    const BigInt target = d * factorial(k);
    const UniPoly base = falling_factorial_poly(BigInt(0), k);
    std::vector<DivisorSplit> out;
    for (const BigInt& q : positive_divisors(target)) {
        for (const BigInt& d1 : {BigInt(-q), BigInt(q)}) {
            UniPoly residual = falling_factorial_poly(d1, k) - base - UniPoly::constant(BigRational(target));
            out.push_back({d1, target, std::move(residual)});
        }
    }
    std::sort(out.begin(), out.end(), [](const DivisorSplit& a, const DivisorSplit& b) { return a.d1 < b.d1; });
    return out;
}

std::vector<IntPair> solve_equal_index(unsigned k, const BigInt& d) {
    if (k < 3) throw DomainError("solve_equal_index needs k >= 3");
    std::vector<IntPair> out;
    for (const auto& split : divisor_splits(k, d)) {
        for (const BigInt& m : integer_roots(split.residual)) {
            out.emplace_back(m + split.d1, m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntPair> filter_positive(const std::vector<IntPair>& sols, unsigned k) {
    std::vector<IntPair> out;
    for (const auto& s : sols) {
        if (s.first > s.second && s.second >= k) out.push_back(s);
    }
    return out;
}

std::vector<IntPair> solve_equal_index_k2(const BigInt& d) {
    if (d == 0) throw DomainError("d = 0 has infinitely many trivial solutions");
    const BigInt eight_d = 8 * d;
    std::vector<IntPair> out;
    for (const BigInt& q : positive_divisors(eight_d)) {
        for (const BigInt& d1 : {BigInt(-q), BigInt(q)}) {
            const BigInt d2 = eight_d / d1;
            if (d1 > d2) continue;
            const BigInt sum = d1 + d2, diff = d2 - d1;
            if (mpz_fdiv_ui(sum.get_mpz_t(), 4) != 2 || mpz_fdiv_ui(diff.get_mpz_t(), 4) != 2) continue;
            const BigInt u = sum / 2, v = diff / 2;
            IntPair s{(u + 1) / 2, (v + 1) / 2};
            if (binom(s.first, 2) - binom(s.second, 2) != d) {
                throw DomainError("factorization produced a non-solution");
            }
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

using u128 = unsigned __int128;

struct Hit128 {
    u128 diff;
    std::uint32_t n, m;
};

struct HitBig {
    BigInt diff;
    std::uint64_t n, m;
};

std::uint64_t bucket_of(const u128& v, std::uint64_t passes) { return static_cast<std::uint64_t>(v % passes); }
std::uint64_t bucket_of(const BigInt& v, std::uint64_t passes) { return mpz_fdiv_ui(v.get_mpz_t(), passes); }

BigInt to_big(const u128& v) {
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return (hi << 64) + lo;
}
const BigInt& to_big(const BigInt& v) { return v; }

template <class Value, class Hit>
void collect(const std::vector<Value>& values, unsigned k, std::uint64_t n_max, unsigned min_mult,
             unsigned workers, std::size_t max_batch, CollisionReport& report) {
    const std::uint64_t lo = k + 1;
    const std::uint64_t count = n_max >= lo ? n_max - lo + 1 : 0;
    const std::uint64_t total = count < 2 ? 0 : count * (count - 1) / 2;
    report.pairs_examined = total;
    const std::uint64_t passes = std::max<std::uint64_t>(1, (total + max_batch - 1) / std::max<std::size_t>(max_batch, 1));
    for (std::uint64_t pass = 0; pass < passes; ++pass) {
        // One slot per n so that concatenation order is fixed.
        std::vector<std::vector<Hit>> rows(count);
        parallel_for(count, workers, [&](std::size_t row) {
            const std::uint64_t n = lo + row;
            auto& out = rows[row];
            for (std::uint64_t m = lo; m < n; ++m) {
                Value diff = values[n] - values[m];
                if (passes > 1 && bucket_of(diff, passes) != pass) continue;
                out.push_back(Hit{std::move(diff), static_cast<decltype(Hit::n)>(n), static_cast<decltype(Hit::m)>(m)});
            }
        });
        std::vector<Hit> hits;
        for (auto& r : rows) {
            std::move(r.begin(), r.end(), std::back_inserter(hits));
            r.clear();
            r.shrink_to_fit();
        }
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
            return std::tie(a.diff, a.n, a.m) < std::tie(b.diff, b.n, b.m);
        });
        for (std::size_t i = 0; i < hits.size();) {
            std::size_t j = i;
            while (j < hits.size() && hits[j].diff == hits[i].diff) ++j;
            if (j - i >= min_mult) {
                auto& pairs = report.collisions[to_big(hits[i].diff)];
                for (std::size_t t = i; t < j; ++t) pairs.emplace_back(hits[t].n, hits[t].m);
            }
            i = j;
        }
    }
}

}  // namespace

CollisionReport collision_search(unsigned k, std::uint64_t n_max, unsigned min_multiplicity, unsigned workers,
                                 std::size_t max_batch) {
    if (k < 1) throw DomainError("collision_search needs k >= 1");
    if (min_multiplicity < 1) throw DomainError("multiplicity threshold must be positive");
    CollisionReport report;
    report.k = k;
    report.n_max = n_max;
    report.min_multiplicity = min_multiplicity;
    const BigInt top = binom(BigInt(static_cast<unsigned long>(n_max)), k);
    // Exact values either way; the 128-bit path only changes representation.
    if (top < (BigInt(1) << 126) && n_max < (std::uint64_t{1} << 32)) {
        std::vector<u128> values(n_max + 1, 0);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            const BigInt b = binom(BigInt(static_cast<unsigned long>(n)), k);
            const BigInt hi = b >> 64;
            const BigInt lo = b - (hi << 64);
            values[n] = (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
        }
        collect<u128, Hit128>(values, k, n_max, min_multiplicity, workers, max_batch, report);
    } else {
        std::vector<BigInt> values(n_max + 1);
        for (std::uint64_t n = 0; n <= n_max; ++n) values[n] = binom(BigInt(static_cast<unsigned long>(n)), k);
        collect<BigInt, HitBig>(values, k, n_max, min_multiplicity, workers, max_batch, report);
    }
    for (auto& [d, pairs] : report.collisions) std::sort(pairs.begin(), pairs.end());
    return report;
}

}  // namespace binomeq
