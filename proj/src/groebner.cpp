#include "binomeq/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace binomeq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Four 16-bit exponent fields, variable 0 in the top field. Exponents stay
// below 2^15 so the top bit of each field can serve as a borrow guard.
constexpr u64 kGuard = 0x8000800080008000ULL;
constexpr unsigned kMaxExponent = 0x7FFF;
constexpr unsigned kMaxVars = 4;

constexpr unsigned shift_of(unsigned i) { return 16 * (3 - i); }

unsigned field(u64 m, unsigned i) { return static_cast<unsigned>((m >> shift_of(i)) & 0xFFFF); }

bool divides(u64 a, u64 b) { return (((b | kGuard) - a) & kGuard) == kGuard; }

u64 mono_mul(u64 a, u64 b) {
    const u64 r = a + b;
    if ((r & kGuard) != 0) throw DomainError("exponent overflow in Groebner kernel");
    return r;
}

u64 mono_lcm(u64 a, u64 b) {
    u64 r = 0;
    for (unsigned i = 0; i < kMaxVars; ++i) r |= static_cast<u64>(std::max(field(a, i), field(b, i))) << shift_of(i);
    return r;
}

bool coprime(u64 a, u64 b) {
    for (unsigned i = 0; i < kMaxVars; ++i) {
        if (field(a, i) != 0 && field(b, i) != 0) return false;
    }
    return true;
}

unsigned mono_degree(u64 m) {
    unsigned d = 0;
    for (unsigned i = 0; i < kMaxVars; ++i) d += field(m, i);
    return d;
}

struct Ring {
    unsigned nvars;
    MonomialOrder order;

    u128 key(u64 m) const {
        switch (order) {
            case MonomialOrder::Lex: return m;
            case MonomialOrder::GradedLex: return (static_cast<u128>(mono_degree(m)) << 64) | m;
            case MonomialOrder::GradedReverseLex: {
                u64 low = 0;
                for (unsigned i = 0; i < nvars; ++i) {
                    low |= static_cast<u64>(kMaxExponent - field(m, nvars - 1 - i)) << shift_of(i);
                }
                return (static_cast<u128>(mono_degree(m)) << 64) | low;
            }
        }
        return m;
    }

    u64 pack(const Exponents& e) const {
        u64 m = 0;
        for (unsigned i = 0; i < nvars; ++i) {
            if (e[i] > kMaxExponent) throw DomainError("exponent too large for Groebner kernel");
            m |= static_cast<u64>(e[i]) << shift_of(i);
        }
        return m;
    }

    Exponents unpack(u64 m) const {
        Exponents e(nvars);
        for (unsigned i = 0; i < nvars; ++i) e[i] = field(m, i);
        return e;
    }
};

struct Term {
    u128 key;
    u64 mono;
    BigInt c;
};

// Integer polynomial, terms in descending order.
using IPoly = std::vector<Term>;

// a * mp * P[pfrom:] - b * mq * Q[qfrom:], dropping cancelled terms.
IPoly combine(const Ring& R, const BigInt& a, u64 mp, const IPoly& P, std::size_t pfrom, const BigInt& b, u64 mq,
              const IPoly& Q, std::size_t qfrom) {
    IPoly out;
    out.reserve(P.size() - pfrom + Q.size() - qfrom);
    std::size_t i = pfrom, j = qfrom;
    auto shifted = [&](const Term& t, u64 mono, const BigInt& s, bool negate) {
        Term r;
        r.mono = mono == 0 ? t.mono : mono_mul(t.mono, mono);
        r.key = mono == 0 ? t.key : R.key(r.mono);
        r.c = t.c * s;
        if (negate) r.c = -r.c;
        return r;
    };
    Term pi, qj;
    bool have_p = false, have_q = false;
    while (true) {
        if (!have_p && i < P.size()) {
            pi = shifted(P[i++], mp, a, false);
            have_p = true;
        }
        if (!have_q && j < Q.size()) {
            qj = shifted(Q[j++], mq, b, true);
            have_q = true;
        }
        if (!have_p && !have_q) break;
        if (have_p && (!have_q || pi.key > qj.key)) {
            out.push_back(std::move(pi));
            have_p = false;
        } else if (have_q && (!have_p || qj.key > pi.key)) {
            out.push_back(std::move(qj));
            have_q = false;
        } else {
            pi.c += qj.c;
            if (pi.c != 0) out.push_back(std::move(pi));
            have_p = have_q = false;
        }
    }
    return out;
}

BigInt content(const IPoly& p) {
    BigInt g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_exact(IPoly& p, const BigInt& g) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(IPoly& p) {
    if (p.empty()) return;
    BigInt g = content(p);
    if (p.front().c < 0) g = -g;
    if (g != 1) divide_exact(p, g);
}

struct Reducers {
    std::vector<const IPoly*> polys;

    const IPoly* find(u64 m) const {
        for (const IPoly* g : polys) {
            if (divides(g->front().mono, m)) return g;
        }
        return nullptr;
    }
};

// Full reduction. On return rem is in normal form and rem = scale * p (mod the
// ideal), scale a nonzero rational.
IPoly reduce(const Ring& R, IPoly p, const Reducers& G, BigRational* scale = nullptr) {
    IPoly rem;
    std::size_t start = 0;
    unsigned steps = 0;
    BigRational s = 1;
    while (start < p.size()) {
        const IPoly* g = G.find(p[start].mono);
        if (g == nullptr) {
            rem.push_back(std::move(p[start]));
            ++start;
            continue;
        }
        const BigInt& lc = p[start].c;
        const BigInt& gl = g->front().c;
        BigInt gg;
        mpz_gcd(gg.get_mpz_t(), lc.get_mpz_t(), gl.get_mpz_t());
        BigInt a = gl / gg, b = lc / gg;
        if (a < 0) {
            a = -a;
            b = -b;
        }
        const u64 mq = p[start].mono - g->front().mono;
        p = combine(R, a, 0, p, start + 1, b, mq, *g, 1);
        start = 0;
        if (a != 1) {
            for (auto& t : rem) t.c *= a;
            s *= a;
        }
        if (++steps % 8 == 0) {
            BigInt c = content(rem);
            for (const auto& t : p) {
                if (c == 1) break;
                mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            }
            if (c > 1) {
                divide_exact(rem, c);
                divide_exact(p, c);
                s /= c;
            }
        }
    }
    if (scale != nullptr) *scale = s;
    return rem;
}

struct Elem {
    IPoly p;
    u64 lm;
    unsigned sugar;
    bool active;
};

struct Pair {
    std::size_t i, j;
    u64 lcm;
    unsigned sugar;
};

class Buchberger {
public:
    Buchberger(Ring R) : R_(R) {}

    void add_input(IPoly p) {
        if (p.empty()) return;
        unsigned sugar = 0;
        for (const auto& t : p) sugar = std::max(sugar, mono_degree(t.mono));
        IPoly h = reduce(R_, std::move(p), reducers());
        if (h.empty()) return;
        make_primitive(h);
        insert(std::move(h), sugar);
    }

    void run() {
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                const u128 ka = R_.key(a.lcm), kb = R_.key(b.lcm);
                // Sugar for graded orders, smallest lcm first for lex.
                if (R_.order != MonomialOrder::Lex && a.sugar != b.sugar) return a.sugar < b.sugar;
                if (ka != kb) return ka < kb;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            const Pair pr = *best;
            pairs_.erase(best);
            ++stats_.pairs_reduced;
            IPoly h = reduce(R_, spoly(pr), reducers());
            if (h.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            make_primitive(h);
            insert(std::move(h), pr.sugar);
        }
    }

    // Minimal basis, tails fully reduced, primitive with positive leading coefficient.
    std::vector<IPoly> reduced_basis() {
        std::vector<IPoly> basis;
        for (const auto& e : elems_) {
            if (e.active) basis.push_back(e.p);
        }
        std::sort(basis.begin(), basis.end(), [](const IPoly& a, const IPoly& b) { return a.front().key < b.front().key; });
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Reducers others;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (j != i) others.polys.push_back(&basis[j]);
            }
            IPoly tail(basis[i].begin() + 1, basis[i].end());
            IPoly head{basis[i].front()};
            BigRational s;
            IPoly r = reduce(R_, std::move(tail), others, &s);
            // head * s.num/s.den + r / ... : keep integer form s.num * head*den... via scaling.
            const BigInt num = s.get_num(), den = s.get_den();
            IPoly out;
            out.push_back(head.front());
            out.front().c *= num;
            for (auto& t : r) {
                t.c *= den;
                out.push_back(std::move(t));
            }
            make_primitive(out);
            basis[i] = std::move(out);
        }
        return basis;
    }

    const GroebnerStats& stats() const { return stats_; }

private:
    Reducers reducers() const {
        Reducers r;
        for (const auto& e : elems_) {
            if (e.active) r.polys.push_back(&e.p);
        }
        return r;
    }

    IPoly spoly(const Pair& pr) const {
        const Elem& a = elems_[pr.i];
        const Elem& b = elems_[pr.j];
        const BigInt& ca = a.p.front().c;
        const BigInt& cb = b.p.front().c;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return combine(R_, cb / g, pr.lcm - a.lm, a.p, 1, ca / g, pr.lcm - b.lm, b.p, 1);
    }

    unsigned pair_sugar(std::size_t i, std::size_t j, u64 l) const {
        const unsigned dl = mono_degree(l);
        return std::max(elems_[i].sugar + dl - mono_degree(elems_[i].lm), elems_[j].sugar + dl - mono_degree(elems_[j].lm));
    }

    void insert(IPoly h, unsigned sugar) {
        const std::size_t hi = elems_.size();
        const u64 lh = h.front().mono;
        elems_.push_back({std::move(h), lh, sugar, true});

        // New pairs, chain criterion among themselves.
        std::vector<std::pair<std::size_t, u64>> C;
        for (std::size_t g = 0; g < hi; ++g) {
            if (elems_[g].active) C.emplace_back(g, mono_lcm(lh, elems_[g].lm));
        }
        std::vector<std::pair<std::size_t, u64>> D;
        for (std::size_t idx = 0; idx < C.size(); ++idx) {
            const auto& [g1, l1] = C[idx];
            bool keep = coprime(lh, elems_[g1].lm);
            if (!keep) {
                keep = true;
                for (std::size_t r = idx + 1; r < C.size() && keep; ++r) keep = !divides(C[r].second, l1);
                for (std::size_t r = 0; r < D.size() && keep; ++r) keep = !divides(D[r].second, l1);
            }
            if (keep) D.emplace_back(g1, l1);
        }
        // Old pairs made redundant by h.
        std::vector<Pair> kept;
        for (const Pair& p : pairs_) {
            const bool drop = divides(lh, p.lcm) && mono_lcm(elems_[p.i].lm, lh) != p.lcm &&
                              mono_lcm(elems_[p.j].lm, lh) != p.lcm;
            if (!drop) kept.push_back(p);
        }
        pairs_ = std::move(kept);
        for (const auto& [g, l] : D) {
            if (coprime(lh, elems_[g].lm)) continue;
            pairs_.push_back({g, hi, l, pair_sugar(g, hi, l)});
            ++stats_.pairs_created;
        }
        for (std::size_t g = 0; g < hi; ++g) {
            if (elems_[g].active && divides(lh, elems_[g].lm)) elems_[g].active = false;
        }
        if (R_.order == MonomialOrder::Lex) interreduce(hi);
        std::size_t active = 0;
        for (const auto& e : elems_) active += e.active ? 1 : 0;
        stats_.max_basis_size = std::max(stats_.max_basis_size, active);
    }

    // Tail-reduces every active element whose tail is divisible by the new leading monomial.
    void interreduce(std::size_t hi) {
        const u64 lh = elems_[hi].lm;
        for (std::size_t g = 0; g < hi; ++g) {
            Elem& e = elems_[g];
            if (!e.active) continue;
            const bool hit = std::any_of(e.p.begin() + 1, e.p.end(), [&](const Term& t) { return divides(lh, t.mono); });
            if (!hit) continue;
            Reducers others;
            for (std::size_t j = 0; j < elems_.size(); ++j) {
                if (j != g && elems_[j].active) others.polys.push_back(&elems_[j].p);
            }
            BigRational s;
            IPoly r = reduce(R_, IPoly(e.p.begin() + 1, e.p.end()), others, &s);
            IPoly out{e.p.front()};
            out.front().c *= s.get_num();
            for (auto& t : r) {
                t.c *= s.get_den();
                out.push_back(std::move(t));
            }
            make_primitive(out);
            e.p = std::move(out);
        }
    }

    Ring R_;
    std::vector<Elem> elems_;
    std::vector<Pair> pairs_;
    GroebnerStats stats_;
};

Ring ring_for(const std::vector<std::string>& vars, MonomialOrder order) {
    if (vars.size() > kMaxVars) throw DomainError("Groebner kernel supports at most four variables");
    return Ring{static_cast<unsigned>(vars.size()), order};
}

// Clears denominators; returns the integer polynomial and the factor used.
IPoly to_ipoly(const Ring& R, const MultiPoly& p, const std::vector<std::string>& vars, BigInt* factor = nullptr) {
    const MultiPoly q = p.with_variables(vars);
    BigInt den = 1;
    for (const auto& [e, c] : q.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IPoly out;
    out.reserve(q.size());
    for (const auto& [e, c] : q.terms()) {
        Term t;
        t.mono = R.pack(e);
        t.key = R.key(t.mono);
        t.c = c.get_num() * (den / c.get_den());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    if (factor != nullptr) *factor = den;
    return out;
}

MultiPoly to_multipoly(const Ring& R, const IPoly& p, const std::vector<std::string>& vars, MonomialOrder order,
                       const BigRational& scale) {
    MultiPoly out(vars, order);
    for (const auto& t : p) out.add_term(R.unpack(t.mono), BigRational(t.c) * scale);
    return out;
}

std::vector<IPoly> basis_ipolys(const Ring& R, const GroebnerBasis& g) {
    std::vector<IPoly> out;
    for (const auto& p : g.generators) out.push_back(to_ipoly(R, p, g.variables));
    return out;
}

Reducers as_reducers(const std::vector<IPoly>& polys) {
    Reducers r;
    for (const auto& p : polys) r.polys.push_back(&p);
    return r;
}

}  // namespace

bool GroebnerBasis::is_unit() const { return generators.size() == 1 && generators.front().is_constant(); }

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& polys, MonomialOrder order, std::vector<std::string> variables) {
    if (variables.empty()) {
        for (const auto& p : polys) variables = unify_variables(variables, p.variables());
    }
    const Ring R = ring_for(variables, order);
    Buchberger bb(R);
    for (const auto& p : polys) bb.add_input(to_ipoly(R, p, variables));
    bb.run();
    GroebnerBasis out;
    out.variables = variables;
    out.order = order;
    out.stats = bb.stats();
    for (const auto& p : bb.reduced_basis()) {
        const BigRational inv(BigInt(1), p.front().c);
        out.generators.push_back(to_multipoly(R, p, variables, order, inv));
    }
    return out;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g) {
    const Ring R = ring_for(g.variables, g.order);
    const auto basis = basis_ipolys(R, g);
    BigInt den;
    IPoly ip = to_ipoly(R, p, g.variables, &den);
    BigRational s;
    const IPoly r = reduce(R, std::move(ip), as_reducers(basis), &s);
    // r = s * den * p (mod I)
    BigRational back = 1 / (s * den);
    return to_multipoly(R, r, g.variables, g.order, back);
}

bool ideal_contains(const GroebnerBasis& g, const MultiPoly& p) { return normal_form(p, g).is_zero(); }

bool is_groebner_basis(const GroebnerBasis& g) {
    const Ring R = ring_for(g.variables, g.order);
    const auto basis = basis_ipolys(R, g);
    const Reducers red = as_reducers(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const u64 li = basis[i].front().mono, lj = basis[j].front().mono;
            if (coprime(li, lj)) continue;
            const u64 l = mono_lcm(li, lj);
            IPoly s = combine(R, basis[j].front().c, l - li, basis[i], 1, basis[i].front().c, l - lj, basis[j], 1);
            if (!reduce(R, std::move(s), red).empty()) return false;
        }
    }
    return true;
}

std::optional<UniPoly> eliminant(const GroebnerBasis& g, const std::string& var, unsigned max_degree) {
    const MultiPoly x = MultiPoly::variable(g.variables, var, g.order);
    // Echelon rows (normal form, combination of powers it stands for), kept in
    // descending order of their leading monomials.
    struct Row {
        MultiPoly nf;
        std::vector<BigRational> combo;
        Exponents pivot;
    };
    std::vector<Row> rows;
    MultiPoly current = normal_form(MultiPoly::constant(g.variables, BigRational(1), g.order), g);
    for (unsigned i = 0; i <= max_degree; ++i) {
        if (i > 0) current = normal_form(current * x, g);
        Row row{current, std::vector<BigRational>(i + 1, BigRational(0)), {}};
        row.combo[i] = 1;
        for (const Row& r : rows) {
            auto it = row.nf.terms().find(r.pivot);
            if (it == row.nf.terms().end()) continue;
            const BigRational f = it->second / r.nf.terms().at(r.pivot);
            row.nf -= f * r.nf;
            for (std::size_t j = 0; j < r.combo.size(); ++j) row.combo[j] -= f * r.combo[j];
        }
        if (row.nf.is_zero()) return UniPoly(row.combo).monic();
        row.pivot = row.nf.leading_term().first;
        auto pos = std::find_if(rows.begin(), rows.end(), [&](const Row& r) {
            return monomial_less(r.pivot, row.pivot, g.order);
        });
        rows.insert(pos, std::move(row));
    }
    return std::nullopt;
}

std::optional<unsigned> power_membership(const GroebnerBasis& g, const std::string& var, unsigned max_power) {
    const MultiPoly x = MultiPoly::variable(g.variables, var, g.order);
    MultiPoly current = normal_form(MultiPoly::constant(g.variables, BigRational(1), g.order), g);
    for (unsigned u = 0; u <= max_power; ++u) {
        if (u > 0) current = normal_form(current * x, g);
        if (current.is_zero()) return u;
    }
    return std::nullopt;
}

}  // namespace binomeq
