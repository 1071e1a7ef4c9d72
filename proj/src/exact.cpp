#include "binomeq/exact.hpp"

#include <algorithm>

namespace binomeq {

BigInt to_bigint(const std::string& decimal) {
    BigInt v;
    if (v.set_str(decimal, 10) != 0) {
        throw DomainError("not an integer: '" + decimal + "'");
    }
    return v;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw DomainError("isqrt of a negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& v, BigInt* root) {
    if (v < 0) return false;
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
    if (root != nullptr) *root = isqrt(v);
    return true;
}

unsigned padic_valuation(const BigInt& v, const BigInt& p) {
    if (v == 0) throw DomainError("valuation of zero is infinite");
    if (p < 2) throw DomainError("valuation base must be at least 2");
    BigInt rest = abs(v);
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

bool is_quadratic_residue(const BigInt& a, const BigInt& p) {
    const bool prime = p.fits_ulong_p() ? is_prime(p.get_ui())
                                        : mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
    if (p < 3 || !prime) throw DomainError("modulus must be an odd prime");
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw DomainError("residue symbol undefined when p divides a");
    BigInt e = (p - 1) / 2;
    BigInt out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out == 1;
}

BigInt factorial(unsigned k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

namespace {

// Brent's variant of Pollard's rho; n odd composite.
BigInt pollard_brent(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, g = 1, q = 1, ys;
        auto step = [&](BigInt& v) {
            v = v * v + c;
            v %= n;
        };
        std::size_t r = 1;
        while (g == 1) {
            x = y;
            for (std::size_t i = 0; i < r; ++i) step(y);
            for (std::size_t k = 0; k < r && g == 1; k += 64) {
                ys = y;
                for (std::size_t i = 0; i < std::min<std::size_t>(64, r - k); ++i) {
                    step(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const BigInt& n, std::vector<BigInt>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        primes.push_back(n);
        return;
    }
    const BigInt f = pollard_brent(n);
    split_into(f, primes);
    split_into(BigInt(n / f), primes);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& v) {
    if (v == 0) throw DomainError("cannot factor zero");
    BigInt rest = abs(v);
    std::vector<std::pair<BigInt, unsigned>> out;
    auto strip = [&](const BigInt& q) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t()) != 0) {
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
            ++e;
        }
        if (e > 0) out.emplace_back(q, e);
    };
    strip(BigInt(2));
    for (unsigned long q = 3; q < 10000 && BigInt(q) * q <= rest; q += 2) strip(BigInt(q));
    if (rest > 1) {
        std::vector<BigInt> big;
        split_into(rest, big);
        std::sort(big.begin(), big.end());
        for (const auto& q : big) strip(q);
    }
    return out;
}

std::vector<BigInt> positive_divisors(const BigInt& v) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [q, e] : factorize(v)) {
        const std::size_t base = divs.size();
        BigInt qe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            qe *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * qe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::size_t divisor_count(const BigInt& v) {
    std::size_t n = 1;
    for (const auto& fe : factorize(v)) n *= fe.second + 1;
    return n;
}

BigInt pow(const BigInt& base, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRational pow(const BigRational& base, unsigned e) {
    BigRational r(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
    r.canonicalize();
    return r;
}

}  // namespace binomeq
