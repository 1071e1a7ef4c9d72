#include "binomeq/polyid.hpp"

#include <algorithm>
#include <map>

namespace binomeq {

UniPoly binom_poly(const UniPoly& f, unsigned k) {
    UniPoly acc = UniPoly::constant(BigRational(1));
    for (unsigned i = 0; i < k; ++i) acc *= f - UniPoly::constant(BigRational(i));
    return acc * BigRational(BigInt(1), factorial(k));
}

std::string to_string(K22Sign sign) { return sign == K22Sign::Plus ? "+" : "-"; }

UniPoly poly_identity_residual(const PolySolution& s) {
    const UniPoly f0 = s.f0 ? *s.f0 : UniPoly::x();
    const UniPoly middle = binom_poly(f0, 2);
    const UniPoly lhs = s.sign == K22Sign::Plus ? binom_poly(s.f1, s.k) + middle : binom_poly(s.f1, s.k) - middle;
    return lhs - binom_poly(s.f2, 2);
}

bool verify_poly_identity(const PolySolution& s) { return poly_identity_residual(s).is_zero(); }

bool verify_cubic_pair_identity() {
    const UniPoly f0 = UniPoly::from_ints({0, 2, 3});
    const UniPoly f1 = UniPoly::from_ints({1, 2}) * UniPoly::from_ints({2, 3});
    const UniPoly f2 = UniPoly::from_ints({1, 6, 15, 9});
    return (binom_poly(f0, 3) + binom_poly(f1, 3) - binom_poly(f2, 2)).is_zero();
}

namespace {

UniPoly ints(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

UniPoly scaled(long num, long den, std::initializer_list<long> c) {
    return UniPoly::from_ints(c) * make_rational(BigInt(num), BigInt(den));
}

UniPoly from_strings(const std::vector<std::string>& coeffs, const BigRational& scale) {
    std::vector<BigRational> v;
    for (const auto& c : coeffs) v.emplace_back(to_bigint(c));
    return UniPoly(std::move(v)) * scale;
}

}  // namespace

std::vector<PolySolution> published_identities() {
    using S = K22Sign;
    std::vector<PolySolution> out;
    out.push_back({3, S::Plus, ints({3, -12, 12}), ints({-1, 15, -36, 24}), std::nullopt, "cubic family"});
    out.push_back({3, S::Plus, ints({3, -12, 12}), ints({2, -15, 36, -24}), std::nullopt, "k=3 first"});
    out.push_back({3, S::Plus, ints({5, -12, 12}), ints({5, -21, 36, -24}), std::nullopt, "k=3 second"});
    out.push_back({3, S::Plus, scaled(1, 4, {7, -12, 12}), scaled(1, 8, {7, -18, 36, -24}), std::nullopt,
                   "k=3 rational"});
    out.push_back({5, S::Plus, scaled(2, 3, {13, -40, 40}),
                   scaled(1, 27, {-364, 3955, -16000, 32000, -32000, 12800}), std::nullopt, "k=5 rational"});
    out.push_back({7, S::Plus, scaled(1, 2, {41, -140, 140}),
                   from_strings({"-41847", "594370", "-3589740", "11997160", "-24010000", "28812000", "-19208000",
                                 "5488000"},
                                BigRational(1, 96)),
                   std::nullopt, "k=7"});
    out.push_back({5, S::Plus, ints({0, 0, 15}), scaled(1, 2, {1, 7, 0, -75, 0, 225}), scaled(1, 2, {1, -5, 0, 30}),
                   "k=5 cubic f0"});
    out.push_back({7, S::Plus, ints({1, 0, 2520}),
                   from_strings({"1", "7", "0", "52920", "0", "-88905600", "0", "32006016000"}, BigRational(1, 2)),
                   scaled(1, 2, {1, -23, 0, 17640}), "k=7 cubic f0"});
    return out;
}

std::vector<PolySolution> symmetry_orbit(const PolySolution& s) {
    const UniPoly flip = ints({1, -1});
    const UniPoly one = UniPoly::constant(BigRational(1));
    auto sigma = [&](PolySolution p) {
        p.f1 = p.f1.compose(flip);
        p.f2 = p.f2.compose(flip);
        if (p.f0) p.f0 = p.f0->compose(flip);
        return p;
    };
    auto tau = [&](PolySolution p) {
        p.f2 = one - p.f2;
        return p;
    };
    std::vector<PolySolution> orbit;
    for (const PolySolution& c : {s, sigma(s), tau(s), tau(sigma(s))}) {
        const bool seen = std::any_of(orbit.begin(), orbit.end(), [&](const PolySolution& o) {
            return o.f1 == c.f1 && o.f2 == c.f2 && o.f0 == c.f0;
        });
        if (!seen) orbit.push_back(c);
    }
    return orbit;
}

bool same_orbit(const PolySolution& a, const PolySolution& b) {
    for (const auto& o : symmetry_orbit(a)) {
        if (o.k == b.k && o.sign == b.sign && o.f1 == b.f1 && o.f2 == b.f2 && o.f0 == b.f0) return true;
    }
    return false;
}

namespace {

const std::vector<std::string> kLaurentVars{"t", "u", "a0", "a1"};

using XPoly = std::vector<MultiPoly>;

// Cancels t*u = 1 in every term.
MultiPoly laurent_normalize(const MultiPoly& p) {
    const std::size_t ti = p.index_of("t"), ui = p.index_of("u");
    MultiPoly out(p.variables(), p.order());
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        const unsigned m = std::min(f[ti], f[ui]);
        f[ti] -= m;
        f[ui] -= m;
        out.add_term(f, c);
    }
    return out;
}

XPoly xmul(const XPoly& a, const XPoly& b, const std::vector<std::string>& U) {
    XPoly out(a.size() + b.size() - 1, MultiPoly(U));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    for (auto& c : out) c = laurent_normalize(c);
    return out;
}

// Single-term polynomial in t and u only: returns (coefficient, t exponent - u exponent).
std::optional<std::pair<BigRational, int>> t_monomial(const MultiPoly& p) {
    if (p.size() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    const std::size_t ti = p.index_of("t"), ui = p.index_of("u");
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != ti && i != ui && e[i] != 0) return std::nullopt;
    }
    return std::make_pair(c, static_cast<int>(e[ti]) - static_cast<int>(e[ui]));
}

MultiPoly t_power(const std::vector<std::string>& U, int e) {
    MultiPoly out(U);
    Exponents x(U.size(), 0);
    if (e >= 0) {
        x[std::find(U.begin(), U.end(), "t") - U.begin()] = static_cast<unsigned>(e);
    } else {
        x[std::find(U.begin(), U.end(), "u") - U.begin()] = static_cast<unsigned>(-e);
    }
    out.add_term(x, BigRational(1));
    return out;
}

// Integer coefficients with gcd 1, positive leading coefficient (lex).
MultiPoly primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    BigInt den = 1, num = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    BigRational f(den, num);
    f.canonicalize();
    if (p.with_order(MonomialOrder::Lex).leading_term().second < 0) f = -f;
    return p * f;
}

BigRational rat(long n, long d = 1) { return make_rational(BigInt(n), BigInt(d)); }

}  // namespace

K22System triangular_reduce(unsigned k, K22Sign sign) {
    if (k < 3 || k > 19 || k % 2 == 0) throw DomainError("k must be odd with 3 <= k <= 19");
    std::vector<std::string> U = kLaurentVars;
    for (unsigned i = 0; i < k; ++i) U.push_back("b" + std::to_string(i));

    K22System sys;
    sys.k = k;
    sys.sign = sign;
    sys.a2_scale = BigRational(factorial(k), BigInt(2));
    sys.a2_scale.canonicalize();
    sys.bk_scale = pow(sys.a2_scale, (k - 1) / 2);

    const MultiPoly t = MultiPoly::variable(U, "t");
    auto c = [&](const BigRational& v) { return MultiPoly::constant(U, v); };

    // binom(f1, k) +/- binom(x, 2) as a polynomial in x.
    const XPoly f1{MultiPoly::variable(U, "a0"), MultiPoly::variable(U, "a1"), sys.a2_scale * t * t};
    XPoly lhs{c(rat(1))};
    for (unsigned i = 0; i < k; ++i) {
        XPoly shifted = f1;
        shifted[0] -= c(rat(i));
        lhs = xmul(lhs, shifted, U);
    }
    const BigRational inv_fact(BigInt(1), factorial(k));
    for (auto& co : lhs) co = co * inv_fact;
    const BigRational half = rat(sign == K22Sign::Plus ? 1 : -1, 2);
    lhs[2] += c(half);
    lhs[1] -= c(half);

    // f2 coefficients: b_k known, b_0 .. b_(k-1) symbolic until solved.
    XPoly f2(k + 1, MultiPoly(U));
    for (unsigned i = 0; i < k; ++i) f2[i] = MultiPoly::variable(U, "b" + std::to_string(i));
    f2[k] = laurent_normalize(sys.bk_scale * t.pow(k));

    // Coefficient of x^j in binom(f1,k) +/- binom(x,2) - binom(f2,2).
    auto coefficient = [&](unsigned j) {
        MultiPoly sq(U);
        for (unsigned a = 0; a <= k; ++a) {
            if (j < a || j - a > k) continue;
            sq += f2[a] * f2[j - a];
        }
        MultiPoly out = lhs[j] - sq * rat(1, 2);
        if (j <= k) out += f2[j] * rat(1, 2);
        return laurent_normalize(out);
    };

    if (!coefficient(2 * k).is_zero()) throw DomainError("leading coefficient does not vanish");

    sys.b.assign(k, MultiPoly(kLaurentVars));
    sys.pivot_scale.assign(k, BigRational(0));
    sys.pivot_t_power.assign(k, 0);
    for (unsigned ii = k; ii-- > 0;) {
        const std::string bi = "b" + std::to_string(ii);
        const MultiPoly a = coefficient(k + ii);
        for (unsigned j = 0; j < ii; ++j) {
            if (a.degree_in("b" + std::to_string(j)) != 0) throw DomainError("equation involves an unsolved b");
        }
        if (a.degree_in(bi) != 1) throw DomainError("equation is not linear in " + bi);
        const auto piv = t_monomial(a.coefficient_in(bi, 1));
        if (!piv || piv->first == 0) throw DomainError("pivot for " + bi + " is not a constant times a power of t");
        sys.pivot_scale[ii] = piv->first;
        sys.pivot_t_power[ii] = piv->second;
        MultiPoly sol = -(a.coefficient_in(bi, 0) * t_power(U, -piv->second)) * (1 / piv->first);
        sol = laurent_normalize(sol);
        f2[ii] = sol;
        sys.b[ii] = sol.with_variables(kLaurentVars);
    }

    const std::vector<std::string> R{"t", "a0", "a1"};
    for (unsigned i = 0; i < k; ++i) {
        MultiPoly a = coefficient(i).with_variables(kLaurentVars);
        const unsigned shift = a.degree_in("u");
        a = laurent_normalize(a * t_power(kLaurentVars, static_cast<int>(shift)));
        // Reduced numerator: strip a common power of t.
        unsigned common = a.is_zero() ? 0 : UINT32_MAX;
        const std::size_t ti = a.index_of("t");
        for (const auto& [e, co] : a.terms()) common = std::min(common, e[ti]);
        MultiPoly stripped(kLaurentVars);
        for (const auto& [e, co] : a.terms()) {
            Exponents f = e;
            f[ti] -= common;
            stripped.add_term(f, co);
        }
        sys.residual.push_back(primitive(stripped.with_variables(R)));
    }
    return sys;
}

GroebnerBasis k22_basis(const K22System& sys, MonomialOrder order) {
    return groebner_basis(sys.residual, order, {"t", "a0", "a1"});
}

PolySolution solution_from_point(const K22System& sys, const K22Point& p) {
    if (p.t == 0) throw DomainError("t must be nonzero");
    const std::map<std::string, BigRational> at{{"t", p.t}, {"u", 1 / p.t}, {"a0", p.a0}, {"a1", p.a1}};
    PolySolution s;
    s.k = sys.k;
    s.sign = sys.sign;
    s.f1 = UniPoly({p.a0, p.a1, sys.a2_scale * p.t * p.t});
    std::vector<BigRational> b;
    for (const auto& bi : sys.b) b.push_back(bi.evaluate(at));
    b.push_back(sys.bk_scale * pow(p.t, sys.k));
    s.f2 = UniPoly(std::move(b));
    return s;
}

namespace {

bool coefficient_less(const PolySolution& a, const PolySolution& b) {
    auto key = [](const PolySolution& s) {
        std::vector<BigRational> v = s.f1.coefficients();
        v.insert(v.end(), s.f2.coefficients().begin(), s.f2.coefficients().end());
        return v;
    };
    return key(a) < key(b);
}

void find_points(const std::vector<MultiPoly>& gens, const std::vector<std::string>& vars,
                 const std::vector<std::string>& remaining, std::map<std::string, BigRational> fixed,
                 std::vector<K22Point>& out, std::vector<std::string>& log) {
    const GroebnerBasis g = groebner_basis(gens, MonomialOrder::GradedReverseLex, vars);
    if (g.is_unit()) {
        if (!fixed.empty()) {
            std::string where;
            for (const auto& [v, x] : fixed) where += v + "=" + to_string(x) + " ";
            log.push_back("branch " + where + "has no common solution");
        }
        return;
    }
    if (remaining.empty()) {
        out.push_back({fixed.at("t"), fixed.at("a0"), fixed.at("a1")});
        return;
    }
    const std::string& v = remaining.front();
    const auto e = eliminant(g, v);
    if (!e) throw DomainError("solution set is not finite in " + v);
    const auto roots = rational_roots(*e);
    UniPoly rest = *e;
    for (const auto& r : roots) {
        const UniPoly lin({-r, BigRational(1)});
        while (true) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = q;
        }
    }
    if (rest.degree() > 0) {
        std::string where;
        for (const auto& [x, val] : fixed) where += " " + x + "=" + to_string(val);
        log.push_back(v + ":" + where + " dropped " + std::to_string(rest.degree()) +
                      " non-rational root(s) of " + rest.to_string(v));
    }
    const std::vector<std::string> next(remaining.begin() + 1, remaining.end());
    for (const auto& r : roots) {
        std::vector<MultiPoly> more = g.generators;
        more.push_back(MultiPoly::variable(vars, v) - MultiPoly::constant(vars, r));
        auto f = fixed;
        f[v] = r;
        find_points(more, vars, next, f, out, log);
    }
}

}  // namespace

K22Result solve_k22(unsigned k, K22Sign sign) {
    const K22System sys = triangular_reduce(k, sign);
    K22Result res;
    res.k = k;
    res.sign = sign;

    // Saturate by t: z t - 1 = 0 removes every component inside t = 0.
    const std::vector<std::string> vars{"z", "t", "a0", "a1"};
    std::vector<MultiPoly> gens;
    for (const auto& p : sys.residual) gens.push_back(p.with_variables(vars));
    gens.push_back(MultiPoly::variable(vars, "z") * MultiPoly::variable(vars, "t") - MultiPoly::constant(vars, 1));
    res.log.push_back("components with t = 0 removed by saturation");

    const GroebnerBasis saturated = groebner_basis(gens, MonomialOrder::GradedReverseLex, vars);
    if (saturated.is_unit()) {
        const GroebnerBasis g = k22_basis(sys);
        const auto u = power_membership(g, "t", 0x7FFF);
        if (!u) throw DomainError("saturated ideal is trivial but no power of t was found");
        TPowerCertificate cert;
        cert.exponent = *u;
        cert.order = g.order;
        cert.basis_size = g.generators.size();
        for (const auto& p : g.generators) {
            if (p.size() == 1 && p.used_variables() == std::vector<std::string>{"t"} && p.degree_in("t") == *u) {
                cert.literal_in_basis = true;
            }
        }
        res.certificate = cert;
        return res;
    }

    find_points(saturated.generators, vars, {"a1", "a0", "t"}, {}, res.points, res.log);
    std::sort(res.points.begin(), res.points.end(), [](const K22Point& a, const K22Point& b) {
        return std::tie(a.a1, a.a0, a.t) < std::tie(b.a1, b.a0, b.t);
    });

    std::vector<PolySolution> all;
    for (const auto& p : res.points) {
        PolySolution s = solution_from_point(sys, p);
        if (s.f1.degree() != 2 || s.f2.degree() != static_cast<int>(k)) {
            res.log.push_back("point t=" + to_string(p.t) + " has degenerate degrees");
            continue;
        }
        if (!verify_poly_identity(s)) throw DomainError("recovered point does not give an identity");
        all.push_back(std::move(s));
    }
    for (const auto& s : all) {
        const bool known = std::any_of(res.solutions.begin(), res.solutions.end(),
                                       [&](const PolySolution& r) { return same_orbit(r, s); });
        if (known) continue;
        auto orbit = symmetry_orbit(s);
        res.solutions.push_back(*std::min_element(orbit.begin(), orbit.end(), coefficient_less));
    }
    std::sort(res.solutions.begin(), res.solutions.end(), coefficient_less);
    for (std::size_t i = 0; i < res.solutions.size(); ++i) {
        res.solutions[i].label = "k=" + std::to_string(k) + " #" + std::to_string(i + 1);
    }
    return res;
}

std::vector<std::pair<std::string, MultiPoly>> published_basis_elements(unsigned k) {
    const std::vector<std::string> R{"t", "a0", "a1"};
    const MultiPoly t = MultiPoly::variable(R, "t"), a0 = MultiPoly::variable(R, "a0"),
                    a1 = MultiPoly::variable(R, "a1");
    auto c = [&](long v) { return MultiPoly::constant(R, BigRational(v)); };
    if (k == 3) {
        return {{"a1^5 (a1 + 3)(a1 + 12)", a1.pow(5) * (a1 + c(3)) * (a1 + c(12))},
                {"(4 a0 - 7) a1^5 (a1 + 12)", (c(4) * a0 - c(7)) * a1.pow(5) * (a1 + c(12))}};
    }
    if (k == 5) {
        return {{"a1^9 (a1 + 60)(3 a1 + 80)", a1.pow(9) * (a1 + c(60)) * (c(3) * a1 + c(80))},
                {"a1^9 (3 a0 - 26)(a1 + 60)", a1.pow(9) * (c(3) * a0 - c(26)) * (a1 + c(60))}};
    }
    if (k == 7) {
        return {{"a1^12 (a1 + 70)", a1.pow(12) * (a1 + c(70))},
                {"a1^12 (2 a0 - 41)", a1.pow(12) * (c(2) * a0 - c(41))},
                {"a1^10 (420 t - a1)(a1 + 420 t)", a1.pow(10) * (c(420) * t - a1) * (a1 + c(420) * t)}};
    }
    return {};
}

}  // namespace binomeq
