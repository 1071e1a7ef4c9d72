#include "binomeq/binomials.hpp"

namespace binomeq {

BigInt falling_factorial(const BigInt& n, unsigned k) {
    BigInt acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= n - i;
    return acc;
}

BigInt binom(const BigInt& n, unsigned k) {
    if (n >= 0 && n.fits_ulong_p()) {
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k);
        return r;
    }
    // mpz_bin_ui handles negative tops with the same generalized definition.
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::optional<BigInt> binom_inverse(const BigInt& value, unsigned k) {
    if (value < 1) throw DomainError("binom_inverse needs a positive value");
    if (k == 0) throw DomainError("binom_inverse needs k >= 1");
    if (k == 2) return triangular_inverse(value);
    // n |-> binom(n, k) is strictly increasing for n >= k, with binom(k, k) = 1.
    BigInt lo = k;
    BigInt hi = k + 1;
    while (binom(hi, k) < value) hi = 2 * hi;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (binom(mid, k) < value) lo = mid + 1;
        else hi = mid;
    }
    if (binom(lo, k) == value) return lo;
    return std::nullopt;
}

std::optional<BigInt> triangular_inverse(const BigInt& value) {
    if (value < 1) return std::nullopt;
    BigInt root;
    if (!is_perfect_square(8 * value + 1, &root)) return std::nullopt;
    return (root + 1) / 2;
}

BigInt fibonacci(unsigned index) {
    BigInt f;
    mpz_fib_ui(f.get_mpz_t(), index);
    return f;
}

}  // namespace binomeq
