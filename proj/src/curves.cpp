#include "binomeq/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "binomeq/binomials.hpp"
#include "binomeq/parallel.hpp"

namespace binomeq {

namespace {

const std::vector<std::string> kModelVars{"X", "Y", "d", "c"};
const std::vector<std::string> kMapVars{"m", "n", "c"};

MultiPoly var(const std::vector<std::string>& universe, const std::string& name) {
    return MultiPoly::variable(universe, name);
}

MultiPoly cst(const std::vector<std::string>& universe, const BigRational& c) {
    return MultiPoly::constant(universe, c);
}

MultiPoly cst(const std::vector<std::string>& universe, long c) { return cst(universe, BigRational(c)); }

// Published row with one adjustable coefficient c. Model and maps may use c;
// `printed` is the value of c as published.
struct RowTemplate {
    CurveShape shape;
    MultiPoly model;
    MultiPoly x_map;
    MultiPoly y_map;
    BigRational printed;
    std::string slot;
    std::function<std::string(const BigRational&)> equation;
    std::function<std::string(const BigRational&)> transformation;
};

std::string str(const BigRational& v) { return to_string(v); }

std::string signed_term(const BigRational& v) {
    return v < 0 ? " - " + str(BigRational(-v)) : " + " + str(v);
}

RowTemplate row_template(unsigned k, unsigned l) {
    const auto& U = kModelVars;
    const auto& V = kMapVars;
    const MultiPoly X = var(U, "X"), Y = var(U, "Y"), d = var(U, "d"), c = var(U, "c");
    const MultiPoly m = var(V, "m"), n = var(V, "n"), cm = var(V, "c");
    const MultiPoly two_n_minus_1 = cst(V, 2) * n - cst(V, 1);
    const MultiPoly n_quad = n * n - cst(V, 3) * n + cst(V, 1);
    auto fixed = [](std::string text) { return [text](const BigRational&) { return text; }; };

    if (k == 2 && l == 3) {
        return {CurveShape::WeierstrassCubic,
                Y * Y - (X * X * X - cst(U, 36) * X * X + cst(U, 288) * X + cst(U, 10368) * d + cst(U, 1296)),
                cst(V, 12) * m,
                cm * two_n_minus_1,
                BigRational(108),
                "Y scale",
                fixed("Y^2 = X^3 - 36X^2 + 288X + 10368d + 1296"),
                [](const BigRational& s) {
                    return "X = 12m, Y = " + str(BigRational(2 * s)) + "n - " + str(s);
                }};
    }
    if (k == 2 && l == 4) {
        return {CurveShape::Quartic,
                Y * Y - (cst(U, 3) * X * (X - cst(U, 1)) * (X - cst(U, 2)) * (X - cst(U, 3)) + cst(U, 72) * d +
                         cst(U, 9)),
                m,
                cm * two_n_minus_1,
                BigRational(3),
                "Y scale",
                fixed("Y^2 = 3X(X-1)(X-2)(X-3) + 72d + 9"),
                [](const BigRational& s) { return "X = m, Y = " + str(s) + "(2n - 1)"; }};
    }
    if (k == 2 && l == 6) {
        return {CurveShape::WeierstrassCubic,
                Y * Y - (X * (X + cst(U, 40)) * (X + cst(U, 60)) + cst(U, 10000) * (cst(U, 72) * d + cst(U, 9))),
                cst(V, 10) * m * m - cst(V, 50) * m,
                cm * two_n_minus_1,
                BigRational(300),
                "Y scale",
                fixed("Y^2 = X(X+40)(X+60) + 10^4(72d+9)"),
                [](const BigRational& s) { return "X = 10m^2 - 50m, Y = " + str(s) + "(2n - 1)"; }};
    }
    if (k == 2 && l == 8) {
        return {CurveShape::Quartic,
                Y * Y - (cst(U, 35) * X * (X + cst(U, 6)) * (X + cst(U, 10)) * (X + cst(U, 12)) +
                         cst(U, 176400) * (cst(U, 8) * d + cst(U, 1))),
                m * m - cst(V, 7) * m,
                cm * two_n_minus_1,
                BigRational(420),
                "Y scale",
                fixed("Y^2 = 35X(X+6)(X+10)(X+12) + 420^2(8d+1)"),
                [](const BigRational& s) { return "X = m^2 - 7m, Y = " + str(s) + "(2n - 1)"; }};
    }
    if (k == 3 && l == 4) {
        return {CurveShape::WeierstrassCubic,
                Y * Y - (X * (X - cst(U, 4)) * (X - cst(U, 8)) - cst(U, 384) * d + cst(U, 16)),
                cst(V, 4) * n,
                cm * (m * m - cst(V, 3) * m + cst(V, 1)),
                BigRational(4),
                "Y scale",
                fixed("Y^2 = X(X-4)(X-8) - 384d + 16"),
                [](const BigRational& s) { return "X = 4n, Y = " + str(s) + "(m^2 - 3m + 1)"; }};
    }
    if (k == 3 && l == 6) {
        return {CurveShape::BivariateCubic,
                cst(U, 15) * X * (X - cst(U, 1)) * (X + cst(U, 1)) -
                    (Y * (Y - cst(U, 3)) * (Y + c) + cst(U, 90) * d),
                n - cst(V, 1),
                (m - cst(V, 2)) * (m - cst(V, 3)) * cst(V, BigRational(1, 2)),
                BigRational(4),
                "third factor constant",
                [](const BigRational& s) { return "15X(X-1)(X+1) = Y(Y-3)(Y" + signed_term(s) + ") + 90d"; },
                fixed("X = n - 1, Y = (m-2)(m-3)/2")};
    }
    if (k == 4 && l == 6) {
        return {CurveShape::WeierstrassCubic,
                Y * Y - (X * (X + cst(U, 120)) * (X + cst(U, 180)) + cst(U, 810000) * (cst(U, 24) * d + cst(U, 1))),
                cst(V, 30) * m * m - cst(V, 150) * m,
                cm * n_quad,
                BigRational(900),
                "Y scale",
                fixed("Y^2 = X(X+120)(X+180) + 30^4(24d+1)"),
                [](const BigRational& s) { return "X = 30m^2 - 150m, Y = " + str(s) + "(n^2 - 3n + 1)"; }};
    }
    if (k == 4 && l == 8) {
        return {CurveShape::Quartic,
                Y * Y - (cst(U, 105) * X * (X + cst(U, 6)) * (X + cst(U, 10)) * (X + cst(U, 12)) +
                         cst(U, 176400) * (cst(U, 24) * d + cst(U, 1))),
                m * m - cst(V, 7) * m,
                cm * n_quad,
                BigRational(420),
                "Y scale",
                fixed("Y^2 = 105X(X+6)(X+10)(X+12) + 420^2(24d+1)"),
                [](const BigRational& s) { return "X = m^2 - 7m, Y = " + str(s) + "(n^2 - 3n + 1)"; }};
    }
    if (k == 2 && l == 5) {
        return {CurveShape::Quintic,
                Y * Y - (cst(U, 15) * X * (X - cst(U, 1)) * (X - cst(U, 2)) * (X - cst(U, 3)) * (X - cst(U, 4)) +
                         cst(U, 225) * (cst(U, 8) * d + cst(U, 1))),
                m,
                cm * two_n_minus_1,
                BigRational(15),
                "Y scale",
                fixed("Y^2 = 15X(X-1)(X-2)(X-3)(X-4) + 15^2(8d+1)"),
                [](const BigRational& s) { return "X = m, Y = " + str(s) + "(2n - 1)"; }};
    }
    throw DomainError("no curve model for (k,l) = (" + std::to_string(k) + "," + std::to_string(l) + ")");
}

MultiPoly binom_of_var(const std::vector<std::string>& universe, const std::string& name, unsigned k) {
    MultiPoly acc = cst(universe, 1);
    const MultiPoly x = var(universe, name);
    for (unsigned i = 0; i < k; ++i) acc = acc * (x - cst(universe, static_cast<long>(i)));
    return acc * BigRational(1, factorial(k));
}

MultiPoly compose(const MultiPoly& model, const MultiPoly& x_map, const MultiPoly& y_map) {
    return model.substitute("X", x_map).substitute("Y", y_map);
}

// Coefficients of E grouped by the exponents of every variable other than c,
// each a univariate polynomial in c.
std::vector<UniPoly> coefficients_in_c(const MultiPoly& e) {
    const std::size_t ci = e.index_of("c");
    std::map<Exponents, std::vector<BigRational>> groups;
    for (const auto& [exps, coef] : e.terms()) {
        Exponents key = exps;
        key[ci] = 0;
        auto& v = groups[key];
        if (v.size() <= exps[ci]) v.resize(exps[ci] + 1, BigRational(0));
        v[exps[ci]] = coef;
    }
    std::vector<UniPoly> out;
    for (auto& [key, v] : groups) out.emplace_back(std::move(v));
    return out;
}

CurveSpec instantiate(unsigned k, unsigned l, const RowTemplate& row, const BigRational& c, const BigRational& lambda) {
    CurveSpec s;
    s.k = k;
    s.l = l;
    s.shape = row.shape;
    s.equation_text = row.equation(c);
    s.transformation_text = row.transformation(c);
    s.model = row.model.substitute("c", c).with_variables({"X", "Y", "d"});
    s.x_map = row.x_map.substitute("c", c).with_variables({"m", "n"});
    s.y_map = row.y_map.substitute("c", c).with_variables({"m", "n"});
    s.lambda = lambda;
    return s;
}

}  // namespace

std::string to_string(CurveShape shape) {
    switch (shape) {
        case CurveShape::WeierstrassCubic: return "weierstrass-cubic";
        case CurveShape::Quartic: return "quartic";
        case CurveShape::BivariateCubic: return "bivariate-cubic";
        case CurveShape::Quintic: return "quintic";
    }
    return "unknown";
}

const std::vector<std::pair<unsigned, unsigned>>& elliptic_pairs() {
    static const std::vector<std::pair<unsigned, unsigned>> pairs{{2, 3}, {2, 4}, {2, 6}, {2, 8},
                                                                  {3, 4}, {3, 6}, {4, 6}, {4, 8}};
    return pairs;
}

MultiPoly binomial_difference(unsigned k, unsigned l) {
    const std::vector<std::string> U{"m", "n", "d"};
    return binom_of_var(U, "n", k) - binom_of_var(U, "m", l) - var(U, "d");
}

bool certify(const CurveSpec& spec) {
    const MultiPoly r = compose(spec.model, spec.x_map, spec.y_map);
    return (r - spec.lambda * binomial_difference(spec.k, spec.l)).is_zero();
}

CurveSpec curve_spec(unsigned k, unsigned l) {
    const RowTemplate row = row_template(k, l);
    const MultiPoly r = compose(row.model, row.x_map, row.y_map);
    const MultiPoly dcoef = r.coefficient_in("d", 1);
    if (!dcoef.is_constant() || dcoef.is_zero() || r.degree_in("d") != 1) {
        throw DomainError("model is not linear in d with a constant coefficient");
    }
    const BigRational lambda = -dcoef.constant_term();
    const MultiPoly residual = r - lambda * binomial_difference(k, l);

    if (residual.substitute("c", row.printed).is_zero()) {
        CurveSpec s = instantiate(k, l, row, row.printed, lambda);
        s.certified = certify(s);
        return s;
    }

    UniPoly g;
    for (const auto& p : coefficients_in_c(residual)) g = gcd(g, p);
    if (g.degree() < 1) throw DomainError("no coefficient value makes the transformation an identity");
    const auto roots = rational_roots(g);
    if (roots.empty()) throw DomainError("no rational coefficient makes the transformation an identity");
    std::vector<BigRational> pool;
    for (const auto& x : roots) {
        if (sgn(x) == sgn(row.printed)) pool.push_back(x);
    }
    if (pool.empty()) pool = roots;
    const BigRational chosen = *std::min_element(pool.begin(), pool.end(), [&](const auto& a, const auto& b) {
        return abs(a - row.printed) < abs(b - row.printed);
    });

    CurveSpec s = instantiate(k, l, row, chosen, lambda);
    s.certified = certify(s);
    if (!s.certified) throw DomainError("repaired transformation still fails");
    s.correction = CurveCorrection{row.slot, row.printed, chosen, row.transformation(row.printed), {}};
    if (row.equation(row.printed) != row.equation(chosen)) {
        s.correction->printed_text = row.equation(row.printed);
        s.correction->corrected_text = row.equation(chosen);
    } else {
        s.correction->corrected_text = row.transformation(chosen);
    }
    return s;
}

std::vector<CurveSpec> verify_all_transforms() {
    std::vector<CurveSpec> out;
    for (const auto& [k, l] : elliptic_pairs()) out.push_back(curve_spec(k, l));
    return out;
}

MappedPoint map_point(const CurveSpec& spec, const BigInt& d, const BigInt& m, const BigInt& n) {
    const std::map<std::string, BigRational> at{{"m", BigRational(m)}, {"n", BigRational(n)}};
    MappedPoint p;
    p.X = spec.x_map.evaluate(at);
    p.Y = spec.y_map.evaluate(at);
    p.on_curve = spec.model.evaluate({{"X", p.X}, {"Y", p.Y}, {"d", BigRational(d)}}) == 0;
    return p;
}

MultiPoly sporadic_cubic() {
    const std::vector<std::string> U{"X", "Y"};
    const MultiPoly u = var(U, "X"), v = var(U, "Y");
    return cst(U, 15) * u * u * u - v * v * v + cst(U, 4) * v * v - cst(U, 15) * u - cst(U, 3) * v - cst(U, 180);
}

bool sporadic_point_check() {
    const CurveSpec s = curve_spec(3, 6);
    const MultiPoly at2 = s.model.substitute("d", BigRational(2)).with_variables({"X", "Y"});
    const MultiPoly g = sporadic_cubic();
    return at2 == g && g.evaluate({{"X", BigRational(-4)}, {"Y", BigRational(-9)}}) == 0;
}

namespace {

std::optional<BigInt> invert(const BigInt& target, unsigned k) {
    if (target < 1) return std::nullopt;
    return k == 2 ? triangular_inverse(target) : binom_inverse(target, k);
}

constexpr std::int64_t kBlock = 4096;

template <class Visit>
std::vector<SolutionRecord> scan_blocks(std::int64_t lo, std::int64_t hi, unsigned workers, Visit visit) {
    if (hi < lo) return {};
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::size_t blocks = static_cast<std::size_t>((span + kBlock - 1) / kBlock);
    std::vector<std::vector<SolutionRecord>> found(blocks);
    parallel_for(blocks, workers, [&](std::size_t b) {
        const std::int64_t start = lo + static_cast<std::int64_t>(b) * kBlock;
        const std::int64_t stop = std::min<std::int64_t>(hi, start + kBlock - 1);
        for (std::int64_t m = start; m <= stop; ++m) visit(m, found[b]);
    });
    std::vector<SolutionRecord> out;
    for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
    return out;
}

BigInt big(std::int64_t v) { return BigInt(std::to_string(v)); }

}  // namespace

std::vector<SolutionRecord> bounded_search(unsigned k, unsigned l, const BigInt& d, std::uint64_t m_bound,
                                           unsigned workers) {
    if (k < 2 || l < 1) throw DomainError("bounded_search needs k >= 2 and l >= 1");
    if (m_bound > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("m bound too large");
    const std::string tag = "search-" + std::to_string(k) + "-" + std::to_string(l);
    return scan_blocks(l, static_cast<std::int64_t>(m_bound), workers, [&](std::int64_t mi, auto& out) {
        const BigInt m = big(mi);
        const BigInt target = binom(m, l) + d;
        if (auto n = invert(target, k); n && *n >= k) out.push_back({k, l, d, *n, m, tag});
    });
}

std::uint64_t default_m_bound(unsigned k, unsigned l) {
    if (k == 2 && l == 3) return 600000;
    return 10000;
}

std::vector<SolutionRecord> bounded_search_25(const BigInt& d, std::int64_t m_lo, std::int64_t m_hi, bool nontrivial,
                                              unsigned workers) {
    if (nontrivial) m_lo = std::max<std::int64_t>(m_lo, 5);
    return scan_blocks(m_lo, m_hi, workers, [&](std::int64_t mi, auto& out) {
        const BigInt m = big(mi);
        const BigInt target = binom(m, 5) + d;
        if (auto n = invert(target, 2)) out.push_back({2, 5, d, *n, m, "search-2-5"});
    });
}

const std::vector<PointFamily>& quintic_point_families() {
    static const std::vector<PointFamily> families = [] {
        const UniPoly s = UniPoly::from_ints({-1, 2});  // 2w - 1
        const UniPoly x1 = UniPoly::constant(BigRational(15)) * s * s;
        const UniPoly x2 = x1 + UniPoly::constant(BigRational(4));
        const UniPoly y1 = UniPoly::constant(BigRational(75)) * UniPoly::from_ints({31, -300, 1020, -1440, 720}) * s;
        const UniPoly y2 = UniPoly::constant(BigRational(75)) * UniPoly::from_ints({61, -420, 1140, -1440, 720}) * s;
        return std::vector<PointFamily>{{"x = 15(2w-1)^2", x1, y1}, {"x = 15(2w-1)^2 + 4", x2, y2}};
    }();
    return families;
}

bool verify_point_family(const PointFamily& f) {
    const UniPoly one = UniPoly::constant(BigRational(1));
    UniPoly quintic = UniPoly::constant(BigRational(15));
    for (long i = 0; i < 5; ++i) quintic *= f.x - UniPoly::constant(BigRational(i));
    const UniPoly w = UniPoly::x();
    const UniPoly dw = w * (w - one) * BigRational(1, 2);
    const UniPoly rhs = quintic + UniPoly::constant(BigRational(225)) * (UniPoly::constant(BigRational(8)) * dw + one);
    return (f.y * f.y - rhs).is_zero();
}

bool PointFamilyReport::all_passed() const {
    for (const auto& [name, ok] : identities) {
        if (!ok) return false;
    }
    return d66_failures == 0 && d66_records > 0 && !instances.empty();
}

PointFamilyReport verify_parametric_family(const Corpus& corpus) {
    PointFamilyReport report;
    bool instances_ok = true;
    for (const auto& f : quintic_point_families()) {
        report.identities.emplace_back(f.name, verify_point_family(f));
        for (unsigned w = 2; w <= 5; ++w) {
            const BigRational x = f.x(BigRational(w)), y = f.y(BigRational(w));
            const BigRational half = (y / 15 + 1) / 2;
            if (half.get_den() != 1 || x.get_den() != 1) {
                instances_ok = false;
                continue;
            }
            const BigInt n = half.get_num(), xi = x.get_num();
            const BigInt d = binom(BigInt(w), 2);
            instances_ok = instances_ok && verify_solution({2, 5, d, n, xi, ""});
            report.instances.emplace_back(w, xi, n);
        }
    }
    report.identities.emplace_back("integer instances w = 2..5", instances_ok);
    for (const auto& r : corpus.records) {
        if (r.source_tag() != "conjectured-d66") continue;
        ++report.d66_records;
        if (!verify_solution(r)) ++report.d66_failures;
    }
    return report;
}

}  // namespace binomeq
