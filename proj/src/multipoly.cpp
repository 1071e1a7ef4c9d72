#include "binomeq/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace binomeq {

std::string to_string(MonomialOrder order) {
    switch (order) {
        case MonomialOrder::Lex: return "lex";
        case MonomialOrder::GradedLex: return "grlex";
        case MonomialOrder::GradedReverseLex: return "grevlex";
    }
    return "?";
}

bool monomial_less(const Exponents& a, const Exponents& b, MonomialOrder order) {
    if (order != MonomialOrder::Lex) {
        const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
    }
    if (order == MonomialOrder::GradedReverseLex) {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::string> unify_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& name : b) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const BigRational& c, MonomialOrder order) {
    MultiPoly p(std::move(vars), order);
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name, MonomialOrder order) {
    MultiPoly p(std::move(vars), order);
    if (!p.has_variable(name)) p.vars_.push_back(name);
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, BigRational(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& q, std::vector<std::string> vars, const std::string& name,
                                  MonomialOrder order) {
    MultiPoly p(std::move(vars), order);
    if (!p.has_variable(name)) p.vars_.push_back(name);
    const std::size_t idx = p.index_of(name);
    for (std::size_t i = 0; i < q.coefficients().size(); ++i) {
        Exponents e(p.vars_.size(), 0);
        e[idx] = static_cast<unsigned>(i);
        p.add_term(e, q.coefficients()[i]);
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

BigRational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
    if (e.size() != vars_.size()) throw DomainError("exponent tuple does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::size_t MultiPoly::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

std::vector<std::string> MultiPoly::used_variables() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) out.push_back(vars_[i]);
    }
    return out;
}

unsigned MultiPoly::degree_in(const std::string& name) const {
    const std::size_t idx = index_of(name);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

MultiPoly MultiPoly::coefficient_in(const std::string& name, unsigned power) const {
    const std::size_t idx = index_of(name);
    MultiPoly out(vars_, order_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] != power) continue;
        Exponents f = e;
        f[idx] = 0;
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::pair<Exponents, BigRational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
        if (monomial_less(best->first, it->first, order_)) best = it;
    }
    return *best;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& replacement) const {
    const std::size_t idx = index_of(name);
    const auto universe = unify_variables(vars_, replacement.vars_);
    const MultiPoly rep = replacement.with_variables(universe);
    // Group terms by the exponent of `name`, then evaluate Horner-free with cached powers.
    std::map<unsigned, MultiPoly> by_power;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.resize(universe.size(), 0);
        const unsigned k = f[idx];
        f[idx] = 0;
        auto [it, inserted] = by_power.try_emplace(k, MultiPoly(universe, order_));
        it->second.add_term(f, c);
    }
    MultiPoly out(universe, order_);
    MultiPoly power = MultiPoly::constant(universe, BigRational(1), order_);
    unsigned have = 0;
    for (auto& [k, coeff] : by_power) {
        while (have < k) {
            power = power * rep;
            ++have;
        }
        out += coeff * power;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const BigRational& value) const {
    const std::size_t idx = index_of(name);
    MultiPoly out(vars_, order_);
    std::vector<BigRational> powers{BigRational(1)};
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
        Exponents f = e;
        f[idx] = 0;
        out.add_term(f, c * powers[e[idx]]);
    }
    return out;
}

BigRational MultiPoly::evaluate(const std::map<std::string, BigRational>& point) const {
    std::vector<BigRational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        values.push_back(it == point.end() ? BigRational(0) : it->second);
    }
    BigRational acc = 0;
    for (const auto& [e, c] : terms_) {
        BigRational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (point.find(vars_[i]) == point.end()) {
                throw DomainError("no value for variable '" + vars_[i] + "'");
            }
            term *= binomeq::pow(values[i], e[i]);
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> map(vars_.size());
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            if (used[i]) throw DomainError("variable '" + vars_[i] + "' is used and cannot be dropped");
            map[i] = vars.size();
        } else {
            map[i] = static_cast<std::size_t>(it - vars.begin());
        }
    }
    MultiPoly out(vars, order_);
    for (const auto& [e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (map[i] < vars.size()) f[map[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
    MultiPoly out = *this;
    out.order_ = order;
    return out;
}

UniPoly MultiPoly::to_unipoly(const std::string& name) const {
    const std::size_t idx = has_variable(name) ? index_of(name) : vars_.size();
    std::vector<BigRational> coeffs;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != idx && e[i] > 0) throw DomainError("polynomial is not univariate in '" + name + "'");
        }
        const unsigned k = idx < e.size() ? e[idx] : 0;
        if (coeffs.size() <= k) coeffs.resize(k + 1, BigRational(0));
        coeffs[k] += c;
    }
    return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * BigRational(1 / leading_term().second);
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, BigRational(1), order_);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.vars_ != vars_) {
        const auto universe = unify_variables(vars_, o.vars_);
        *this = with_variables(universe);
        const MultiPoly other = o.with_variables(universe);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
        const auto universe = unify_variables(a.vars_, b.vars_);
        return a.with_variables(universe) * b.with_variables(universe);
    }
    MultiPoly out(a.vars_, a.order_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, BigRational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [this](const auto& x, const auto& y) { return monomial_less(y.first, x.first, order_); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const BigRational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const bool is_unit_monomial = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
        bool wrote = false;
        if (mag != 1 || is_unit_monomial) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace binomeq
