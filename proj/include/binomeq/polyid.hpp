#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binomeq/groebner.hpp"
#include "binomeq/multipoly.hpp"
#include "binomeq/unipoly.hpp"

namespace binomeq {

/// f (f-1) ... (f-k+1) / k!.
UniPoly binom_poly(const UniPoly& f, unsigned k);

/// Sign of the binom(x, 2) term in binom(f1, k) +/- binom(x, 2) = binom(f2, 2).
enum class K22Sign { Plus, Minus };

std::string to_string(K22Sign sign);

/// binom(f1, k) +/- binom(f0, 2) = binom(f2, 2), with f0 = x when absent.
struct PolySolution {
    unsigned k = 0;
    K22Sign sign = K22Sign::Plus;
    UniPoly f1;
    UniPoly f2;
    std::optional<UniPoly> f0;
    std::string label;
};

/// Left side minus right side.
UniPoly poly_identity_residual(const PolySolution& s);
bool verify_poly_identity(const PolySolution& s);

/// binom(x(3x+2), 3) + binom((2x+1)(3x+2), 3) = binom(9x^3 + 15x^2 + 6x + 1, 2).
bool verify_cubic_pair_identity();

/// Every explicit polynomial solution quoted in the literature for these equations.
std::vector<PolySolution> published_identities();

/// (f1(1-x), f2(1-x)) and (f1, 1 - f2) also solve the equation; the orbit has
/// at most four members, listed without repeats.
std::vector<PolySolution> symmetry_orbit(const PolySolution& s);
bool same_orbit(const PolySolution& a, const PolySolution& b);

/// The system obtained from f1 = a2 x^2 + a1 x + a0, f2 = b_k x^k + ... + b_0.
/// The top coefficient forces a2 = (k!/2) t^2 and b_k = (k!/2)^((k-1)/2) t^k;
/// the coefficients of x^k .. x^(2k-1) are then linear in b_0 .. b_(k-1) in turn.
struct K22System {
    unsigned k = 0;
    K22Sign sign = K22Sign::Plus;
    BigRational a2_scale;
    BigRational bk_scale;
    /// b_0 .. b_(k-1) over t, u, a0, a1 where u stands for 1/t.
    std::vector<MultiPoly> b;
    /// Coefficient of b_i in its defining equation is pivot_scale[i] * t^pivot_t_power[i].
    std::vector<BigRational> pivot_scale;
    std::vector<int> pivot_t_power;
    /// Numerators of the coefficients of x^0 .. x^(k-1), in t, a0, a1, primitive.
    std::vector<MultiPoly> residual;
};

/// Requires odd k with 3 <= k <= 19. Throws if the linear structure fails.
K22System triangular_reduce(unsigned k, K22Sign sign = K22Sign::Plus);

/// Groebner basis of the residual ideal over t, a0, a1.
GroebnerBasis k22_basis(const K22System& sys, MonomialOrder order = MonomialOrder::GradedReverseLex);

struct K22Point {
    BigRational t;
    BigRational a0;
    BigRational a1;
    friend bool operator==(const K22Point&, const K22Point&) = default;
};

PolySolution solution_from_point(const K22System& sys, const K22Point& p);

/// Some t^u lies in the residual ideal, so every solution has t = 0.
struct TPowerCertificate {
    unsigned exponent = 0;
    /// A generator of the reduced basis is exactly t^exponent.
    bool literal_in_basis = false;
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    std::size_t basis_size = 0;
};

struct K22Result {
    unsigned k = 0;
    K22Sign sign = K22Sign::Plus;
    /// One canonical member per symmetry orbit.
    std::vector<PolySolution> solutions;
    /// Every rational point with t != 0.
    std::vector<K22Point> points;
    std::optional<TPowerCertificate> certificate;
    /// Branches that were dropped and why.
    std::vector<std::string> log;
};

/// Solutions with deg f1 = 2, deg f2 = k. Points come from the ideal saturated
/// by t; when that ideal is trivial a t-power certificate is produced.
K22Result solve_k22(unsigned k, K22Sign sign = K22Sign::Plus);

/// Basis elements printed for k = 3, 5, 7, over t, a0, a1 (empty otherwise).
std::vector<std::pair<std::string, MultiPoly>> published_basis_elements(unsigned k);

}  // namespace binomeq
