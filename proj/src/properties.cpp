#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "binomeq/binomials.hpp"
#include "binomeq/curves.hpp"
#include "binomeq/equal_index.hpp"
#include "binomeq/groebner.hpp"
#include "binomeq/polyid.hpp"
#include "binomeq/reproduce.hpp"

namespace binomeq {

namespace {

using Rng = std::mt19937_64;
using Pair = std::pair<BigInt, BigInt>;

long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

BigInt random_bigint(Rng& g, unsigned max_bits, bool allow_negative = true) {
    const unsigned bits = static_cast<unsigned>(uniform(g, 1, max_bits));
    BigInt v = 0;
    for (unsigned done = 0; done < bits; done += 32) {
        v <<= 32;
        v += static_cast<unsigned long>(g() & 0xFFFFFFFFu);
    }
    v >>= (bits + 31) / 32 * 32 - bits;
    if (allow_negative && (g() & 1)) v = -v;
    return v;
}

std::uint64_t random_prime(Rng& g, std::uint64_t above, std::uint64_t at_most) {
    std::vector<std::uint64_t> ps;
    for (auto p : primes_up_to(at_most)) {
        if (p > above) ps.push_back(p);
    }
    return ps.at(static_cast<std::size_t>(uniform(g, 0, static_cast<long>(ps.size()) - 1)));
}

// Runs `body` `cases` times; a false return or an exception counts as a failure
// and `describe` names the first one.
class Property {
public:
    Property(std::string module, std::string name) {
        r_.module = std::move(module);
        r_.name = std::move(name);
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (ok) return;
        if (r_.failures++ == 0) r_.first_failure = describe();
    }

    template <class Body>
    void guarded(Body&& body, const std::function<std::string()>& describe) {
        bool ok = false;
        std::string err;
        try {
            ok = body();
        } catch (const std::exception& e) {
            err = e.what();
        }
        check(ok, [&] { return describe() + (err.empty() ? "" : " (" + err + ")"); });
    }

    PropertyResult result() const { return r_; }

private:
    PropertyResult r_;
};

MultiPoly random_poly(Rng& g, const std::vector<std::string>& vars, unsigned max_degree, unsigned terms, long coeff,
                      MonomialOrder order = MonomialOrder::Lex) {
    MultiPoly p(vars, order);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(vars.size(), 0);
        unsigned budget = static_cast<unsigned>(uniform(g, 0, max_degree));
        for (auto& x : e) {
            x = static_cast<unsigned>(uniform(g, 0, budget));
            budget -= x;
        }
        std::shuffle(e.begin(), e.end(), g);
        long c = 0;
        while (c == 0) c = uniform(g, -coeff, coeff);
        p.add_term(e, BigRational(c));
    }
    return p;
}

void exact_core(Rng& g, std::size_t cases, std::vector<PropertyResult>& out) {
    Property ring("exact-core", "(a+b)-b = a and (a*b)/b = a");
    for (std::size_t i = 0; i < cases; ++i) {
        const BigInt a = random_bigint(g, 300), b = random_bigint(g, 300);
        bool ok = (a + b) - b == a;
        if (b != 0) ok = ok && (a * b) / b == a;
        const BigInt den = b == 0 ? BigInt(1) : b;
        ok = ok && make_rational(a, den) * BigRational(den) == BigRational(a);
        ring.check(ok, [&] { return "a=" + to_string(a) + " b=" + to_string(b); });
    }
    out.push_back(ring.result());

    Property root("exact-core", "isqrt(v)^2 <= v < (isqrt(v)+1)^2");
    for (std::size_t i = 0; i < cases; ++i) {
        BigInt v = random_bigint(g, 400, false);
        if (i % 5 == 0) v = v * v + uniform(g, -1, 1) * (v != 0 ? 1 : 0);
        if (v < 0) v = -v;
        const BigInt s = isqrt(v);
        BigInt r;
        const bool sq = is_perfect_square(v, &r);
        const bool ok = s * s <= v && v < (s + 1) * (s + 1) && sq == (s * s == v) && (!sq || r == s);
        root.check(ok, [&] { return "v=" + to_string(v); });
    }
    out.push_back(root.result());

    Property qr("exact-core", "Euler criterion agrees with exhaustive squaring");
    for (std::size_t i = 0; i < cases; ++i) {
        const std::uint64_t p = random_prime(g, 2, 200);
        long a = 0;
        while (a % static_cast<long>(p) == 0) a = uniform(g, -100000, 100000);
        const long ar = ((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
        bool square = false;
        for (std::uint64_t x = 1; x < p && !square; ++x) square = (x * x) % p == static_cast<std::uint64_t>(ar);
        qr.check(is_quadratic_residue(BigInt(a), BigInt(static_cast<unsigned long>(p))) == square,
                 [&] { return "a=" + std::to_string(a) + " p=" + std::to_string(p); });
    }
    out.push_back(qr.result());

    Property roots("exact-core", "integer_roots agrees with evaluation on [-B, B]");
    for (std::size_t i = 0; i < cases; ++i) {
        UniPoly p = UniPoly::constant(BigRational(uniform(g, 1, 4) * (g() & 1 ? 1 : -1)));
        const long linear = uniform(g, 0, 3);
        for (long j = 0; j < linear; ++j) p *= UniPoly::from_ints({-uniform(g, -9, 9), 1});
        if (g() & 1) p *= UniPoly::from_ints({uniform(g, -5, 5), uniform(g, -5, 5), uniform(g, 1, 3)});
        if (g() & 1) p += UniPoly::constant(BigRational(uniform(g, -3, 3)));
        if (p.is_zero()) p = UniPoly::from_ints({1, 1});
        const UniPoly prim = p.primitive_integer();
        BigInt bound = 0;
        for (const auto& c : prim.coefficients()) bound = std::max<BigInt>(bound, abs(c.get_num()));
        const long B = bound.get_si() + 1;
        std::vector<BigInt> brute;
        for (long x = -B; x <= B; ++x) {
            __int128 acc = 0;
            for (int d = prim.degree(); d >= 0; --d) acc = acc * x + prim.coefficient(static_cast<std::size_t>(d)).get_num().get_si();
            if (acc == 0) brute.emplace_back(x);
        }
        roots.guarded([&] { return integer_roots(p) == brute; }, [&] { return p.to_string(); });
    }
    out.push_back(roots.result());

    Property axioms("exact-core", "MultiPoly associativity, distributivity, substitution");
    const std::vector<std::string> V{"x", "y", "z"};
    for (std::size_t i = 0; i < cases; ++i) {
        const MultiPoly a = random_poly(g, V, 3, 4, 5), b = random_poly(g, V, 3, 4, 5), c = random_poly(g, V, 3, 4, 5);
        const MultiPoly q = random_poly(g, V, 2, 3, 3);
        const std::string var = V[static_cast<std::size_t>(uniform(g, 0, 2))];
        bool ok = (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && (a * b).substitute(var, q) == a.substitute(var, q) * b.substitute(var, q);
        ok = ok && (a + b).substitute(var, q) == a.substitute(var, q) + b.substitute(var, q);
        axioms.check(ok, [&] { return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(); });
    }
    out.push_back(axioms.result());
}

void binomials(Rng& g, std::size_t cases, std::vector<PropertyResult>& out) {
    Property sym("binomials-corpus", "binom(x,2) = binom(1-x,2)");
    Property mono("binomials-corpus", "binom(n+1,k) > binom(n,k) for n >= k >= 1");
    Property pascal("binomials-corpus", "Pascal's rule for integer tops");
    Property trip("binomials-corpus", "binom_inverse(binom(n,k),k) = n");
    Property integral("binomials-corpus", "k! divides falling_factorial(n,k)");
    Property square("curve-models", "8 binom(n,2) + 1 = (2n-1)^2");
    for (std::size_t i = 0; i < cases; ++i) {
        const BigInt x = random_bigint(g, 120);
        sym.check(binom(x, 2) == binom(1 - x, 2), [&] { return "x=" + to_string(x); });
        square.check(8 * binom(x, 2) + 1 == (2 * x - 1) * (2 * x - 1), [&] { return "n=" + to_string(x); });

        const unsigned k = static_cast<unsigned>(uniform(g, 1, 12));
        BigInt n = random_bigint(g, 64, false) + k;
        mono.check(binom(n + 1, k) > binom(n, k), [&] { return "n=" + to_string(n) + " k=" + std::to_string(k); });
        trip.guarded([&] { return binom_inverse(binom(n, k), k) == std::optional<BigInt>(n); },
                     [&] { return "n=" + to_string(n) + " k=" + std::to_string(k); });

        const BigInt t = random_bigint(g, 80);
        pascal.check(binom(t, k) == binom(t - 1, k) + binom(t - 1, k - 1),
                     [&] { return "n=" + to_string(t) + " k=" + std::to_string(k); });
        const unsigned j = static_cast<unsigned>(uniform(g, 0, 15));
        integral.check(falling_factorial(t, j) % factorial(j) == 0,
                       [&] { return "n=" + to_string(t) + " k=" + std::to_string(j); });
    }
    for (auto* p : {&sym, &mono, &pascal, &trip, &integral, &square}) out.push_back(p->result());
}

void sieve(Rng& g, std::size_t cases, const Corpus& corpus, unsigned workers, std::vector<PropertyResult>& out) {
    Property sound("congruence-sieve", "obstruction implies no solution mod p^(v+1)");
    while (sound.result().cases < cases) {
        const BigInt d(uniform(g, -10000, 10000));
        const std::uint64_t p = random_prime(g, 4, 50);
        const PellObstruction ob = pell_obstruction(d, p);
        if (!ob.applies) continue;
        if (padic_valuation(12 * d + 1, BigInt(static_cast<unsigned long>(p))) != ob.valuation) {
            sound.check(false, [&] { return "valuation mismatch d=" + to_string(d); });
            continue;
        }
        sound.guarded([&] { return !congruence_solvable({2, 4, d, p, ob.valuation + 1}); },
                      [&] { return "d=" + to_string(d) + " p=" + std::to_string(p); });
    }
    out.push_back(sound.result());

    Property lift("congruence-sieve", "unsolvable mod p^e stays unsolvable mod p^(e+1)");
    auto lift_case = [&](unsigned k, unsigned l, const BigInt& d, std::uint64_t p, unsigned e) {
        lift.guarded(
            [&] { return congruence_solvable({k, l, d, p, e}) || !congruence_solvable({k, l, d, p, e + 1}); },
            [&] {
                return "(" + std::to_string(k) + "," + std::to_string(l) + ") d=" + to_string(d) + " p=" +
                       std::to_string(p) + " e=" + std::to_string(e);
            });
    };
    for (const auto& row : printed_unsolvable_table()) {
        for (auto d : row.residues) lift_case(row.k, row.l, BigInt(static_cast<unsigned long>(d)), row.p, 1);
    }
    for (std::size_t i = 0; i < cases; ++i) {
        const unsigned k = static_cast<unsigned>(uniform(g, 2, 8));
        const unsigned l = static_cast<unsigned>(uniform(g, k, 8));
        const std::uint64_t p = random_prime(g, l, 23);
        lift_case(k, l, BigInt(uniform(g, 0, static_cast<long>(p * p) - 1)), p, 1);
    }
    out.push_back(lift.result());

    Property closed("congruence-sieve", "no corpus solution lies in an unsolvable class");
    const SieveReport rep = scan_unsolvable(10, 10, 29, workers);
    for (const auto& r : corpus.records) {
        const unsigned k = std::min(r.k, r.l), l = std::max(r.k, r.l);
        const BigInt d = r.k <= r.l ? r.d : -r.d;
        for (const auto& e : rep.entries) {
            if (e.k != k || e.l != l) continue;
            BigInt res = d % BigInt(static_cast<unsigned long>(e.p));
            if (res < 0) res += static_cast<unsigned long>(e.p);
            const bool hit = std::binary_search(e.residues.begin(), e.residues.end(), res.get_ui());
            closed.check(!hit, [&] { return format_record(r) + " p=" + std::to_string(e.p); });
        }
    }
    out.push_back(closed.result());

    Property period("congruence-sieve", "binom_mod(n mod M, k) = binom(n,k) mod M");
    for (std::size_t i = 0; i < std::max<std::size_t>(cases, 1000); ++i) {
        const unsigned k = static_cast<unsigned>(uniform(g, 1, 10));
        const std::uint64_t p = random_prime(g, k, 50);
        const unsigned e = static_cast<unsigned>(uniform(g, 1, 3));
        const BigInt n = random_bigint(g, 60);
        const BigInt M = pow(BigInt(static_cast<unsigned long>(p)), e);
        BigInt nr = n % M;
        if (nr < 0) nr += M;
        BigInt expect = binom(n, k) % M;
        if (expect < 0) expect += M;
        period.guarded([&] { return BigInt(static_cast<unsigned long>(binom_mod(nr.get_ui(), k, p, e))) == expect; },
                       [&] { return "n=" + to_string(n) + " k=" + std::to_string(k) + " M=" + to_string(M); });
    }
    out.push_back(period.result());
}

void equal_index(Rng& g, std::size_t cases, std::vector<PropertyResult>& out) {
    Property oracle("equal-index-search", "divisor method equals brute force on |n|,|m| <= 300");
    constexpr long B = 300;
    for (unsigned k : {3u, 4u, 5u}) {
        std::vector<BigInt> v;
        for (long x = -B; x <= B; ++x) v.push_back(binom(BigInt(x), k));
        std::map<long, std::vector<Pair>> brute;
        for (long n = -B; n <= B; ++n) {
            for (long m = -B; m <= B; ++m) {
                const BigInt diff = v[n + B] - v[m + B];
                if (diff != 0 && abs(diff) <= 20) brute[diff.get_si()].push_back({BigInt(n), BigInt(m)});
            }
        }
        for (long d = -20; d <= 20; ++d) {
            if (d == 0) continue;
            auto expected = brute[d];
            std::sort(expected.begin(), expected.end());
            oracle.guarded(
                [&] {
                    const auto sols = solve_equal_index(k, BigInt(d));
                    for (const auto& s : sols) {
                        if (abs(s.first) > B || abs(s.second) > B) return false;
                    }
                    return sols == expected;
                },
                [&] { return "k=" + std::to_string(k) + " d=" + std::to_string(d); });
        }
    }
    // k=2 returns one solution per reflection orbit of m, the half with m >= 1.
    std::map<long, std::vector<Pair>> brute2;
    for (long n = -B; n <= B; ++n) {
        for (long m = 1; m <= B; ++m) {
            const long diff = n * (n - 1) / 2 - m * (m - 1) / 2;
            if (diff != 0 && std::labs(diff) <= 20) brute2[diff].push_back({BigInt(n), BigInt(m)});
        }
    }
    for (long d = -20; d <= 20; ++d) {
        if (d == 0) continue;
        auto expected = brute2[d];
        std::sort(expected.begin(), expected.end());
        oracle.guarded([&] { return solve_equal_index_k2(BigInt(d)) == expected; },
                       [&] { return "k=2 d=" + std::to_string(d); });
    }
    out.push_back(oracle.result());

    // binom(x,2) is invariant under x -> 1-x, so k=2 sets are compared after closing under it.
    const auto closed = [](std::vector<Pair> v) {
        const std::size_t n0 = v.size();
        for (std::size_t i = 0; i < n0; ++i) {
            const Pair s = v[i];
            v.push_back({1 - s.first, s.second});
            v.push_back({s.first, 1 - s.second});
            v.push_back({1 - s.first, 1 - s.second});
        }
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    Property exact("equal-index-search", "every emitted pair satisfies the equation");
    Property anti("equal-index-search", "(n,m) solves d iff (m,n) solves -d");
    for (std::size_t i = 0; i < cases; ++i) {
        const unsigned k = static_cast<unsigned>(uniform(g, 2, 5));
        long dv = 0;
        while (dv == 0) dv = uniform(g, -500, 500);
        const BigInt d(dv);
        const auto cell = [&] { return "k=" + std::to_string(k) + " d=" + std::to_string(dv); };
        exact.guarded(
            [&] {
                const auto sols = k == 2 ? solve_equal_index_k2(d) : solve_equal_index(k, d);
                return std::all_of(sols.begin(), sols.end(), [&](const Pair& s) {
                    return verify_solution({k, k, d, s.first, s.second, "check"});
                });
            },
            cell);
        anti.guarded(
            [&] {
                auto a = k == 2 ? solve_equal_index_k2(d) : solve_equal_index(k, d);
                const auto b = k == 2 ? solve_equal_index_k2(-d) : solve_equal_index(k, -d);
                for (auto& s : a) std::swap(s.first, s.second);
                std::sort(a.begin(), a.end());
                return k == 2 ? closed(a) == closed(b) : a == b;
            },
            cell);
    }
    out.push_back(exact.result());
    out.push_back(anti.result());

    Property sigma("equal-index-search", "k=2 solution count >= sigma_0(d) for odd d");
    for (long d = 1; d <= 50; d += 2) {
        sigma.guarded([&] { return solve_equal_index_k2(BigInt(d)).size() >= divisor_count(BigInt(d)); },
                      [&] { return "d=" + std::to_string(d); });
    }
    out.push_back(sigma.result());

    Property count("equal-index-search", "collision_search(k,N,1) sees C(N-k,2) pairs");
    for (std::size_t i = 0; i < cases; ++i) {
        const unsigned k = static_cast<unsigned>(uniform(g, 1, 7));
        const std::uint64_t N = static_cast<std::uint64_t>(uniform(g, k + 2, 80));
        count.guarded(
            [&] {
                const auto rep = collision_search(k, N, 1, 1);
                std::uint64_t total = 0;
                for (const auto& [d, v] : rep.collisions) total += v.size();
                const std::uint64_t c = (N - k) * (N - k - 1) / 2;
                return total == c && rep.pairs_examined == c;
            },
            [&] { return "k=" + std::to_string(k) + " N=" + std::to_string(N); });
    }
    out.push_back(count.result());
}

void curves(const Corpus& corpus, unsigned workers, std::vector<PropertyResult>& out) {
    Property cert("curve-models", "model(X,Y,d) - lambda (binom(n,k) - binom(m,l) - d) = 0");
    std::map<std::pair<unsigned, unsigned>, CurveSpec> specs;
    for (const auto& [k, l] : elliptic_pairs()) {
        cert.guarded(
            [&] {
                specs[{k, l}] = curve_spec(k, l);
                return certify(specs[{k, l}]);
            },
            [&] { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
    }
    out.push_back(cert.result());

    Property closure("curve-models", "published solutions map to points on the model");
    specs[{2, 5}] = curve_spec(2, 5);
    for (const auto& r : corpus.records) {
        const std::string tag = r.source_tag();
        if (tag.rfind("elliptic-", 0) != 0 && tag != "genus2-2-5") continue;
        closure.guarded([&] { return map_point(specs.at({r.k, r.l}), r.d, r.m, r.n).on_curve; },
                        [&] { return format_record(r); });
    }
    out.push_back(closure.result());

    Property agree("curve-models", "bounded search equals the published sets for m <= 2000");
    constexpr std::uint64_t bound = 2000;
    for (const auto& [k, l] : elliptic_pairs()) {
        const std::string tag = "elliptic-" + std::to_string(k) + "-" + std::to_string(l);
        for (long d = -3; d <= 3; ++d) {
            std::vector<Pair> printed, got;
            for (const auto& r : corpus.records) {
                if (r.source_tag() == tag && r.d == d && r.m <= bound) printed.push_back({r.m, r.n});
            }
            for (const auto& s : bounded_search(k, l, BigInt(d), bound, workers)) got.push_back({s.m, s.n});
            std::sort(printed.begin(), printed.end());
            std::sort(got.begin(), got.end());
            agree.check(printed == got, [&] {
                std::string s = "(" + std::to_string(k) + "," + std::to_string(l) + ") d=" + std::to_string(d) +
                                " found (m,n):";
                for (const auto& [m, n] : got) s += " (" + to_string(m) + "," + to_string(n) + ")";
                return s + " printed " + std::to_string(printed.size());
            });
        }
    }
    out.push_back(agree.result());
}

void polynomials(Rng& g, std::size_t cases, std::vector<PropertyResult>& out) {
    Property gb("poly-identity", "S-polynomials and inputs reduce to zero");
    for (std::size_t i = 0; i < cases; ++i) {
        const bool lex = i % 3 == 0;
        const std::vector<std::string> V = lex ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
        const MonomialOrder order = lex ? MonomialOrder::Lex : (i % 3 == 1 ? MonomialOrder::GradedReverseLex : MonomialOrder::GradedLex);
        std::vector<MultiPoly> in;
        const long count = uniform(g, 1, 3);
        for (long j = 0; j < count; ++j) in.push_back(random_poly(g, V, lex ? 3 : 2, 3, 4));
        gb.guarded(
            [&] {
                const GroebnerBasis b = groebner_basis(in, order, V);
                if (!is_groebner_basis(b)) return false;
                return std::all_of(in.begin(), in.end(), [&](const MultiPoly& p) { return ideal_contains(b, p); });
            },
            [&] {
                std::string s = to_string(order) + ":";
                for (const auto& p : in) s += " [" + p.to_string() + "]";
                return s;
            });
    }
    out.push_back(gb.result());

    std::vector<K22Result> solved;
    for (unsigned k : {3u, 5u, 7u}) {
        for (K22Sign s : {K22Sign::Plus, K22Sign::Minus}) solved.push_back(solve_k22(k, s));
    }

    Property orbit("poly-identity", "symmetric images of solutions are solutions");
    std::vector<PolySolution> pool = published_identities();
    for (const auto& r : solved) pool.insert(pool.end(), r.solutions.begin(), r.solutions.end());
    for (std::size_t i = 0; i < cases; ++i) {
        const PolySolution& s = pool[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(pool.size()) - 1))];
        const auto members = symmetry_orbit(s);
        const PolySolution& m = members[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(members.size()) - 1))];
        orbit.check(verify_poly_identity(m) && same_orbit(s, m), [&] { return s.label; });
    }
    out.push_back(orbit.result());

    Property distinct("poly-identity", "solver returns one member per orbit");
    Property audit("poly-identity", "returned solutions verify with deg f1 = 2, deg f2 = k");
    for (const auto& r : solved) {
        for (std::size_t i = 0; i < r.solutions.size(); ++i) {
            const auto& s = r.solutions[i];
            audit.check(verify_poly_identity(s) && s.f1.degree() == 2 && s.f2.degree() == static_cast<int>(r.k),
                        [&] { return s.label; });
            for (std::size_t j = i + 1; j < r.solutions.size(); ++j) {
                distinct.check(!same_orbit(s, r.solutions[j]), [&] { return s.label + " ~ " + r.solutions[j].label; });
            }
        }
    }
    if (distinct.result().cases == 0) distinct.check(true, [] { return std::string(); });
    out.push_back(distinct.result());
    out.push_back(audit.result());

    Property pivots("poly-identity", "each b_i enters with a constant times a power of t");
    for (unsigned k = 3; k <= 19; k += 2) {
        for (K22Sign s : {K22Sign::Plus, K22Sign::Minus}) {
            pivots.guarded(
                [&] {
                    const K22System sys = triangular_reduce(k, s);
                    return sys.pivot_scale.size() == k &&
                           std::all_of(sys.pivot_scale.begin(), sys.pivot_scale.end(),
                                       [](const BigRational& c) { return c != 0; });
                },
                [&] { return "k=" + std::to_string(k) + " sign " + to_string(s); });
        }
    }
    out.push_back(pivots.result());
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases, const Corpus& corpus,
                                               unsigned workers) {
    std::vector<PropertyResult> out;
    Rng g(seed);
    exact_core(g, cases, out);
    binomials(g, cases, out);
    sieve(g, cases, corpus, workers, out);
    equal_index(g, cases, out);
    curves(corpus, workers, out);
    polynomials(g, cases, out);
    return out;
}

}  // namespace binomeq
