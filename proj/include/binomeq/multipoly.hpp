#pragma once

#include <map>
#include <string>
#include <vector>

#include "binomeq/exact.hpp"
#include "binomeq/unipoly.hpp"

namespace binomeq {

enum class MonomialOrder { Lex, GradedLex, GradedReverseLex };

std::string to_string(MonomialOrder order);

/// Exponent tuple, one entry per variable of the owning polynomial.
using Exponents = std::vector<unsigned>;

/// True iff a < b in the given order; variables earlier in the tuple are larger.
bool monomial_less(const Exponents& a, const Exponents& b, MonomialOrder order);

/// Sparse multivariate polynomial over Q.
///
/// The variable universe is an ordered list of names; binary operations on
/// polynomials with different universes first unify them (left operand's
/// names first, then the right operand's new names). Zero coefficients are
/// never stored. The monomial order is a property of the value and decides
/// what leading_term() means; storage order is independent of it.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::Lex);

    static MultiPoly constant(std::vector<std::string> vars, const BigRational& c,
                              MonomialOrder order = MonomialOrder::Lex);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name,
                              MonomialOrder order = MonomialOrder::Lex);
    /// Embeds p(name) into the given universe.
    static MultiPoly from_unipoly(const UniPoly& p, std::vector<std::string> vars,
                                 const std::string& name, MonomialOrder order = MonomialOrder::Lex);

    const std::vector<std::string>& variables() const { return vars_; }
    MonomialOrder order() const { return order_; }
    const std::map<Exponents, BigRational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigRational constant_term() const;

    /// Adds c * monomial; drops the term when the sum cancels.
    void add_term(const Exponents& e, const BigRational& c);

    std::size_t index_of(const std::string& name) const;
    bool has_variable(const std::string& name) const;
    /// Variables with a nonzero exponent in some term.
    std::vector<std::string> used_variables() const;

    unsigned degree_in(const std::string& name) const;
    unsigned total_degree() const;
    /// Coefficient of name^power, as a polynomial in the same universe.
    MultiPoly coefficient_in(const std::string& name, unsigned power) const;

    /// Leading (exponents, coefficient) in this polynomial's order. Requires nonzero.
    std::pair<Exponents, BigRational> leading_term() const;

    MultiPoly substitute(const std::string& name, const MultiPoly& replacement) const;
    MultiPoly substitute(const std::string& name, const BigRational& value) const;
    BigRational evaluate(const std::map<std::string, BigRational>& point) const;

    /// Re-expresses in a new universe; throws if a used variable is missing.
    MultiPoly with_variables(const std::vector<std::string>& vars) const;
    MultiPoly with_order(MonomialOrder order) const;
    /// Requires every used variable to be `name`.
    UniPoly to_unipoly(const std::string& name) const;

    MultiPoly monic() const;
    MultiPoly pow(unsigned e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const BigRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
    friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    /// Equality as polynomials (after unifying universes); ignores order tag.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, BigRational> terms_;
    MonomialOrder order_ = MonomialOrder::Lex;
};

/// Union of two universes: a's names in order, then b's new names.
std::vector<std::string> unify_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

}  // namespace binomeq
