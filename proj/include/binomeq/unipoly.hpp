#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "binomeq/exact.hpp"

namespace binomeq {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs);
    UniPoly(std::initializer_list<BigRational> coeffs);

    static UniPoly constant(const BigRational& c);
    static UniPoly x();
    /// From integer coefficients, lowest degree first.
    static UniPoly from_ints(std::initializer_list<long> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    BigRational coefficient(std::size_t i) const;
    BigRational leading() const;
    bool has_integer_coefficients() const;

    BigRational operator()(const BigRational& at) const;
    UniPoly compose(const UniPoly& inner) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const BigRational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
    friend UniPoly operator*(const BigRational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Monic associate; zero stays zero.
    UniPoly monic() const;
    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, a positive rational multiple of *this (sign may flip).
    UniPoly primitive_integer() const;

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder of a by b over Q (b nonzero).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd over Q; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Integer roots of a nonzero polynomial, ascending. Strips the power of x,
/// then tests +/- every divisor of the constant term of the primitive part that
/// lies within the root bound.
std::vector<BigInt> integer_roots(const UniPoly& p);

/// Rational roots of a nonzero polynomial, ascending (rational root theorem).
std::vector<BigRational> rational_roots(const UniPoly& p);

}  // namespace binomeq
