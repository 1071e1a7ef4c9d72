#include "binomeq/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace binomeq {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({BigRational(0), BigRational(1)}); }

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<BigRational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational UniPoly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational UniPoly::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

bool UniPoly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c.get_den() == 1; });
}

BigRational UniPoly::operator()(const BigRational& at) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * BigRational(1 / leading());
}

UniPoly UniPoly::primitive_integer() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, BigInt(c.get_den()));
    BigInt content = 0;
    std::vector<BigInt> ints;
    ints.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        ints.push_back(BigInt(c.get_num()) * (den_lcm / BigInt(c.get_den())));
        content = gcd(content, ints.back());
    }
    if (ints.back() < 0) content = -content;
    std::vector<BigRational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(BigInt(v / content));
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigRational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const bool unit = (mag == 1);
        if (!unit || i == 0) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<BigRational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - db + 1), BigRational(0));
    const BigRational lead_inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        BigRational c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficient(static_cast<std::size_t>(j));
        }
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// Primitive integer polynomial with the factor x^j removed; reports j.
UniPoly strip_x_power(const UniPoly& p, std::size_t& power) {
    const auto& c = p.coefficients();
    power = 0;
    while (power < c.size() && c[power] == 0) ++power;
    return UniPoly(std::vector<BigRational>(c.begin() + static_cast<std::ptrdiff_t>(power), c.end()));
}

BigInt eval_int(const UniPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coefficient(static_cast<std::size_t>(i)).get_num();
    return acc;
}

// Fujiwara's bound 2 max |a_(n-i) / a_n|^(1/i), with the constant term halved,
// rounded up; every root of p has absolute value at most this.
BigInt root_bound(const UniPoly& p) {
    const int n = p.degree();
    const BigInt lead = abs(p.leading().get_num());
    BigInt best = 0;
    for (int i = 1; i <= n; ++i) {
        BigInt a = abs(p.coefficient(static_cast<std::size_t>(n - i)).get_num());
        if (i == n) a = (a + 1) / 2;
        BigInt q = (a + lead - 1) / lead, r;
        mpz_root(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i));
        if (pow(r, static_cast<unsigned>(i)) < q) r += 1;
        best = std::max(best, r);
    }
    return 2 * best;
}

// Positive divisors of c (c != 0) not exceeding bound, ascending. Trial division
// when the bound is small, otherwise filtered from the full divisor list.
std::vector<BigInt> divisors_up_to(const BigInt& c, const BigInt& bound) {
    std::vector<BigInt> out;
    if (bound <= (1 << 20)) {
        const unsigned long b = bound.get_ui();
        for (unsigned long q = 1; q <= b; ++q) {
            if (mpz_divisible_ui_p(c.get_mpz_t(), q)) out.emplace_back(q);
        }
        return out;
    }
    for (const BigInt& q : positive_divisors(c)) {
        if (q <= bound) out.push_back(q);
    }
    return out;
}

}  // namespace

std::vector<BigInt> integer_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("integer_roots of the zero polynomial");
    std::size_t xpow = 0;
    const UniPoly core = strip_x_power(p.primitive_integer(), xpow);
    std::vector<BigInt> roots;
    if (xpow > 0) roots.emplace_back(0);
    if (core.degree() > 0) {
        const BigInt c0(core.coefficient(0).get_num());
        for (const BigInt& q : divisors_up_to(c0, root_bound(core))) {
            for (const BigInt& cand : {BigInt(q), BigInt(-q)}) {
                if (eval_int(core, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<BigRational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    std::size_t xpow = 0;
    const UniPoly core = strip_x_power(p.primitive_integer(), xpow);
    std::vector<BigRational> roots;
    if (xpow > 0) roots.emplace_back(0);
    if (core.degree() > 0) {
        const BigInt c0(core.coefficient(0).get_num());
        const BigInt lead(core.leading().get_num());
        const auto nums = positive_divisors(c0);
        const auto dens = positive_divisors(lead);
        for (const BigInt& q : dens) {
            for (const BigInt& n : nums) {
                if (gcd(n, q) != 1) continue;
                for (const BigInt& sn : {BigInt(n), BigInt(-n)}) {
                    BigRational cand = make_rational(sn, q);
                    if (core(cand) == 0) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace binomeq
