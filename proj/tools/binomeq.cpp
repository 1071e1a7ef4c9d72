// Command-line front end: binomial equations binom(n,k) = binom(m,l) + d.
// Exit status: 0 success, 1 verification or reproduction mismatch, 2 usage or config error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binomeq/binomials.hpp"
#include "binomeq/corpus.hpp"
#include "binomeq/curves.hpp"
#include "binomeq/equal_index.hpp"
#include "binomeq/polyid.hpp"
#include "binomeq/reproduce.hpp"
#include "binomeq/sieve.hpp"

using namespace binomeq;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { Table, Json, Csv };

// Column order is fixed by the first row; big integers are carried as strings
// so JSON consumers never lose precision.
class Report {
public:
    explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add(std::vector<Json> values) { rows_.push_back(std::move(values)); }
    void note(std::string line) { notes_.push_back(std::move(line)); }
    bool empty() const { return rows_.empty(); }

    void write(Format fmt, std::ostream& out, std::ostream& err) const {
        switch (fmt) {
            case Format::Json:
                for (const auto& row : rows_) {
                    Json obj = Json::object();
                    for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
                    out << obj.dump() << "\n";
                }
                for (const auto& n : notes_) err << n << "\n";
                break;
            case Format::Csv:
                write_csv_line(out, columns_);
                for (const auto& row : rows_) write_csv_line(out, cells(row));
                for (const auto& n : notes_) err << n << "\n";
                break;
            case Format::Table:
                write_table(out);
                for (const auto& n : notes_) out << n << "\n";
                break;
        }
    }

private:
    static std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    static std::vector<std::string> cells(const std::vector<Json>& row) {
        std::vector<std::string> out;
        for (const auto& v : row) out.push_back(cell(v));
        return out;
    }

    static void write_csv_line(std::ostream& out, const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << ',';
            const auto& f = fields[i];
            if (f.find_first_of(",\"\n") == std::string::npos) {
                out << f;
            } else {
                out << '"';
                for (char c : f) out << (c == '"' ? "\"\"" : std::string(1, c));
                out << '"';
            }
        }
        out << "\n";
    }

    void write_table(std::ostream& out) const {
        if (rows_.empty()) return;
        std::vector<std::vector<std::string>> text{columns_};
        for (const auto& row : rows_) text.push_back(cells(row));
        std::vector<std::size_t> width(columns_.size(), 0);
        for (const auto& r : text) {
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        for (const auto& r : text) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += "  ";
                line += r[i];
                if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
            }
            out << line << "\n";
        }
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<Json>> rows_;
    std::vector<std::string> notes_;
};

Json big(const BigInt& v) { return to_string(v); }
Json rat(const BigRational& v) { return to_string(v); }

struct Options {
    std::string format = "table";
    unsigned workers = 0;
    std::string corpus_path;

    unsigned k = 0, l = 0;
    std::string d = "0", m = "0", n = "0";
    unsigned k_max = 10, l_max = 10, exponent = 1;
    std::uint64_t p = 0, p_max = 23, n_max = 0, m_bound = 0;
    std::int64_t m_min = 5;
    unsigned min_mult = 2;
    bool all_integers = false;
    std::string sign = "plus";
    bool slow = false;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Table;
}

Corpus corpus_for(const Options& o) {
    std::string path = o.corpus_path;
    if (path.empty()) {
        if (const char* env = std::getenv("BINOMEQ_CORPUS")) path = env;
    }
    return path.empty() ? builtin_corpus() : load_corpus(path);
}

std::string pairs_text(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ps) {
    std::string s;
    for (const auto& [n, m] : ps) {
        if (!s.empty()) s += ' ';
        s += "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    }
    return s;
}

std::string residues_text(const std::vector<std::uint64_t>& rs) {
    std::string s;
    for (auto r : rs) s += (s.empty() ? "" : " ") + std::to_string(r);
    return s;
}

int cmd_verify_corpus(const Options& o, Report& rep) {
    const auto r = verify_corpus(corpus_for(o));
    for (const auto& c : r.records) {
        rep.add({c.record.k, c.record.l, big(c.record.d), big(c.record.n), big(c.record.m), c.record.source_tag(),
                 c.passed ? "ok" : "FAIL"});
    }
    for (const auto& f : r.families) {
        rep.add({0, 0, "", "", "", f.name, f.failures == 0 ? "ok" : "FAIL"});
    }
    if (r.all_passed()) {
        rep.note("all records verified (" + std::to_string(r.records.size()) + " records, " +
                 std::to_string(r.families.size()) + " families)");
        return 0;
    }
    rep.note(std::to_string(r.failures()) + " failures");
    return 1;
}

int cmd_sieve_scan(const Options& o, Report& rep) {
    const auto r = scan_unsolvable(o.k_max, o.l_max, o.p_max, o.workers);
    for (const auto& e : r.entries) rep.add({e.k, e.l, e.p, residues_text(e.residues)});
    rep.note(std::to_string(r.entries.size()) + " cells with unsolvable residues");
    return 0;
}

int cmd_sieve_check(const Options& o, Report& rep) {
    const SieveQuery q{o.k, o.l, to_bigint(o.d), o.p, o.exponent};
    const auto r = check_congruence(q);
    std::string witness;
    if (r.witness) witness = "n=" + std::to_string(r.witness->first) + " m=" + std::to_string(r.witness->second);
    rep.add({o.k, o.l, o.d, q.modulus(), r.solvable ? "solvable" : "unsolvable", witness});
    if (o.k == 2 && o.l == 4 && o.p > 4) {
        const auto ob = pell_obstruction(q.d, o.p);
        if (ob.applies) rep.note("quadratic-form obstruction modulo " + std::to_string(ob.modulus));
    }
    return 0;
}

int cmd_equal_index(const Options& o, Report& rep) {
    const BigInt d = to_bigint(o.d);
    auto sols = o.k == 2 ? solve_equal_index_k2(d) : solve_equal_index(o.k, d);
    if (!o.all_integers) sols = filter_positive(sols, o.k);
    for (const auto& [n, m] : sols) rep.add({o.k, o.d, big(n), big(m)});
    rep.note(std::to_string(sols.size()) + (o.all_integers ? " integer solutions" : " solutions with n > m >= k"));
    return 0;
}

int cmd_collisions(const Options& o, Report& rep) {
    const auto r = collision_search(o.k, o.n_max, o.min_mult, o.workers);
    for (const auto& [d, ps] : r.collisions) rep.add({big(d), ps.size(), pairs_text(ps)});
    rep.note(std::to_string(r.collisions.size()) + " values of d over " + std::to_string(r.pairs_examined) +
             " pairs");
    return 0;
}

int cmd_curves_verify(const Options&, Report& rep) {
    auto pairs = elliptic_pairs();
    pairs.emplace_back(2, 5);
    int status = 0;
    for (const auto& [k, l] : pairs) {
        const auto s = curve_spec(k, l);
        const bool ok = certify(s);
        if (!ok) status = 1;
        std::string fix;
        if (s.correction) fix = s.correction->slot + ": " + s.correction->printed_text + " -> " + s.correction->corrected_text;
        rep.add({k, l, to_string(s.shape), s.equation_text, s.transformation_text, ok ? "certified" : "FAIL", fix});
    }
    return status;
}

int cmd_curves_search(const Options& o, Report& rep) {
    const BigInt d = to_bigint(o.d);
    const std::uint64_t bound = o.m_bound ? o.m_bound : default_m_bound(o.k, o.l);
    const auto sols = o.k == 2 && o.l == 5
                          ? bounded_search_25(d, o.m_min, static_cast<std::int64_t>(bound), o.m_min >= 5, o.workers)
                          : bounded_search(o.k, o.l, d, bound, o.workers);
    for (const auto& r : sols) rep.add({o.k, o.l, o.d, big(r.m), big(r.n)});
    rep.note(std::to_string(sols.size()) + " solutions with m <= " + std::to_string(bound) +
             " (complete only within this bound)");
    return 0;
}

int cmd_curves_map(const Options& o, Report& rep) {
    const auto s = curve_spec(o.k, o.l);
    const auto pt = map_point(s, to_bigint(o.d), to_bigint(o.m), to_bigint(o.n));
    rep.add({o.k, o.l, o.d, o.m, o.n, rat(pt.X), rat(pt.Y), pt.on_curve});
    return pt.on_curve ? 0 : 1;
}

int cmd_poly_verify(const Options&, Report& rep) {
    int status = 0;
    const auto add = [&](const std::string& kind, const std::string& label, bool ok) {
        if (!ok) status = 1;
        rep.add({kind, label, ok ? "ok" : "FAIL"});
    };
    add("identity", "cubic pair", verify_cubic_pair_identity());
    for (const auto& s : published_identities()) {
        bool ok = verify_poly_identity(s);
        for (const auto& t : symmetry_orbit(s)) ok = ok && verify_poly_identity(t);
        add("identity", s.label, ok);
    }
    for (unsigned k : {3u, 5u, 7u}) {
        const auto g = k22_basis(triangular_reduce(k));
        for (const auto& [label, p] : published_basis_elements(k)) {
            add("basis member k=" + std::to_string(k), label, ideal_contains(g, p));
        }
    }
    return status;
}

int cmd_poly_solve(const Options& o, Report& rep) {
    const K22Sign sign = o.sign == "minus" ? K22Sign::Minus : K22Sign::Plus;
    const auto r = solve_k22(o.k, sign);
    int status = 0;
    for (const auto& s : r.solutions) {
        const bool ok = verify_poly_identity(s);
        if (!ok) status = 1;
        rep.add({o.k, to_string(sign), s.f1.to_string(), s.f2.to_string(), ok ? "verified" : "FAIL"});
    }
    if (r.certificate) {
        rep.note("no solutions: t^" + std::to_string(r.certificate->exponent) + " lies in the ideal (" +
                 to_string(r.certificate->order) + ", " + std::to_string(r.certificate->basis_size) + " generators" +
                 (r.certificate->literal_in_basis ? ", literal basis element)" : ")"));
    } else {
        rep.note(std::to_string(r.solutions.size()) + " solutions up to x -> 1-x");
    }
    for (const auto& line : r.log) rep.note(line);
    return status;
}

int cmd_reproduce_all(const Options& o, Report& rep) {
    ReproduceConfig cfg;
    cfg.workers = o.workers;
    cfg.slow = o.slow;
    cfg.corpus = corpus_for(o);
    int status = 0;
    for (const auto& r : run_all_criteria(cfg)) {
        if (!r.passed) status = 1;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
        rep.add({r.id, r.title, r.passed ? "PASS" : "FAIL", std::string(secs), r.limit_seconds, r.summary});
        for (const auto& d : r.details) rep.note("criterion " + std::to_string(r.id) + ": " + d);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact search and verification for binom(n,k) = binom(m,l) + d"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "table, json (one record per line) or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--workers", o.workers, "worker threads, 0 = all cores");
    app.add_option("--corpus", o.corpus_path, "corpus file (default: $BINOMEQ_CORPUS, else built-in)");

    using Handler = int (*)(const Options&, Report&);
    Handler handler = nullptr;
    std::vector<std::string> columns;
    const auto bind = [&](CLI::App* sub, Handler h, std::vector<std::string> cols) {
        sub->callback([&, h, cols] {
            handler = h;
            columns = cols;
        });
    };
    const auto positive = CLI::PositiveNumber;

    auto* vc = app.add_subcommand("verify-corpus", "check every corpus record and family");
    bind(vc, cmd_verify_corpus, {"k", "l", "d", "n", "m", "source", "status"});

    auto* sieve = app.add_subcommand("sieve", "congruence obstructions");
    sieve->require_subcommand(1);
    auto* scan = sieve->add_subcommand("scan", "unsolvable residues for k <= l, max(k,l) < p <= p-max");
    scan->add_option("--k-max", o.k_max)->check(positive);
    scan->add_option("--l-max", o.l_max)->check(positive);
    scan->add_option("--p-max", o.p_max)->check(positive);
    bind(scan, cmd_sieve_scan, {"k", "l", "p", "unsolvable"});
    auto* check = sieve->add_subcommand("check", "one congruence modulo p^exponent");
    check->add_option("--k", o.k)->required()->check(positive);
    check->add_option("--l", o.l)->required()->check(positive);
    check->add_option("--d", o.d)->required();
    check->add_option("--p", o.p)->required()->check(positive);
    check->add_option("--exponent", o.exponent)->check(positive);
    bind(check, cmd_sieve_check, {"k", "l", "d", "modulus", "result", "witness"});

    auto* eq = app.add_subcommand("equal-index", "solve binom(n,k) = binom(m,k) + d");
    eq->add_option("--k", o.k)->required()->check(CLI::Range(2u, 64u));
    eq->add_option("--d", o.d)->required();
    eq->add_flag("--all-integers", o.all_integers, "keep every integer solution, not only n > m >= k");
    bind(eq, cmd_equal_index, {"k", "d", "n", "m"});

    auto* col = app.add_subcommand("collisions", "repeated differences binom(n,k) - binom(m,k), k < m < n <= N");
    col->add_option("--k", o.k)->required()->check(positive);
    col->add_option("--n-max", o.n_max)->required()->check(positive);
    col->add_option("--min-mult", o.min_mult)->check(positive);
    bind(col, cmd_collisions, {"d", "count", "pairs"});

    auto* curves = app.add_subcommand("curves", "curve models and bounded searches");
    curves->require_subcommand(1);
    auto* cv = curves->add_subcommand("verify", "certify every curve model symbolically");
    bind(cv, cmd_curves_verify, {"k", "l", "shape", "model", "map", "status", "correction"});
    auto* cs = curves->add_subcommand("search", "solutions with m up to a bound");
    cs->add_option("--k", o.k)->required()->check(positive);
    cs->add_option("--l", o.l)->required()->check(positive);
    cs->add_option("--d", o.d)->required();
    cs->add_option("--m-bound", o.m_bound, "default: per (k,l) bound")->check(positive);
    cs->add_option("--m-min", o.m_min, "(2,5) only: smallest m, may be negative");
    bind(cs, cmd_curves_search, {"k", "l", "d", "m", "n"});
    auto* cm = curves->add_subcommand("map", "image of (m,n) on the curve model");
    cm->add_option("--k", o.k)->required()->check(positive);
    cm->add_option("--l", o.l)->required()->check(positive);
    cm->add_option("--d", o.d)->required();
    cm->add_option("--m", o.m)->required();
    cm->add_option("--n", o.n)->required();
    bind(cm, cmd_curves_map, {"k", "l", "d", "m", "n", "X", "Y", "on_curve"});

    auto* poly = app.add_subcommand("poly", "polynomial solutions of binom(f1,k) +/- binom(x,2) = binom(f2,2)");
    poly->require_subcommand(1);
    auto* pv = poly->add_subcommand("verify", "published identities and basis elements");
    bind(pv, cmd_poly_verify, {"kind", "label", "status"});
    auto* ps = poly->add_subcommand("solve", "all solutions with deg f1 = 2, deg f2 = k");
    ps->add_option("--k", o.k)->required()->check(CLI::IsMember({3u, 5u, 7u, 9u, 11u, 13u, 15u, 17u, 19u}));
    ps->add_option("--sign", o.sign)->check(CLI::IsMember({"plus", "minus"}));
    bind(ps, cmd_poly_solve, {"k", "sign", "f1", "f2", "status"});

    auto* ra = app.add_subcommand("reproduce-all", "run every acceptance scenario");
    ra->add_flag("--slow", o.slow, "include k = 15, 17, 19");
    bind(ra, cmd_reproduce_all, {"id", "title", "status", "seconds", "limit", "summary"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Report rep(columns);
        const int status = handler(o, rep);
        rep.write(parse_format(o.format), std::cout, std::cerr);
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
