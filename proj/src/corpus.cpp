#include "binomeq/corpus.hpp"

#include <fstream>
#include <sstream>

#include "binomeq/binomials.hpp"

namespace binomeq {

namespace detail {
extern const char* const kCorpusText;
}

std::string SolutionRecord::source_tag() const {
    std::istringstream is(source);
    std::string tag;
    is >> tag;
    return tag;
}

bool verify_solution(const SolutionRecord& r) { return binom(r.n, r.k) == binom(r.m, r.l) + r.d; }

std::vector<SolutionRecord> parse_corpus(std::istream& in) {
    std::vector<SolutionRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream is(line);
        long k = 0, l = 0;
        std::string d, n, m;
        if (!(is >> k >> l >> d >> n >> m) || k < 0 || l < 0) {
            throw DomainError("corpus line " + std::to_string(lineno) + ": expected 'k l d n m source'");
        }
        SolutionRecord r;
        r.k = static_cast<unsigned>(k);
        r.l = static_cast<unsigned>(l);
        try {
            r.d = to_bigint(d);
            r.n = to_bigint(n);
            r.m = to_bigint(m);
        } catch (const DomainError& e) {
            throw DomainError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
        std::getline(is >> std::ws, r.source);
        while (!r.source.empty() && (r.source.back() == '\r' || r.source.back() == ' ')) r.source.pop_back();
        if (r.source.empty()) throw DomainError("corpus line " + std::to_string(lineno) + ": missing source");
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_record(const SolutionRecord& r) {
    std::ostringstream os;
    os << r.k << ' ' << r.l << ' ' << r.d.get_str() << ' ' << r.n.get_str() << ' ' << r.m.get_str() << ' '
       << r.source;
    return os.str();
}

const std::string& builtin_corpus_text() {
    static const std::string text(detail::kCorpusText);
    return text;
}

namespace {

std::vector<ParametricFamily> builtin_families() {
    return {
        {"fibonacci", "binom(F(2i+2)F(2i+3), F(2i)F(2i+3)) = binom(F(2i+2)F(2i+3)-1, F(2i)F(2i+3)+1)",
         verify_fibonacci_family, 1, 5},
        {"cubic-triangular", "binom(12x^2-12x+3, 3) + binom(x, 2) = binom(24x^3-36x^2+15x-1, 2)",
         verify_cubic_triangular_family, 0, 50},
    };
}

}  // namespace

Corpus builtin_corpus() {
    std::istringstream is(builtin_corpus_text());
    return Corpus{parse_corpus(is), builtin_families()};
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open corpus file '" + path + "'");
    return Corpus{parse_corpus(in), builtin_families()};
}

bool verify_fibonacci_family(unsigned i) {
    const BigInt a = fibonacci(2 * i + 2) * fibonacci(2 * i + 3);
    const BigInt b = fibonacci(2 * i) * fibonacci(2 * i + 3);
    if (!b.fits_ulong_p()) throw DomainError("Fibonacci family index too large");
    const unsigned lower = static_cast<unsigned>(b.get_ui());
    return binom(a, lower) == binom(a - 1, lower + 1);
}

bool verify_cubic_triangular_family(unsigned x) {
    const BigInt v = x;
    const BigInt top3 = 12 * v * v - 12 * v + 3;
    const BigInt top2 = 24 * v * v * v - 36 * v * v + 15 * v - 1;
    return binom(top3, 3) + binom(v, 2) == binom(top2, 2);
}

std::size_t CorpusReport::failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.passed ? 0 : 1;
    for (const auto& f : families) n += f.failures;
    return n;
}

bool CorpusReport::all_passed() const { return failures() == 0; }

CorpusReport verify_corpus(const Corpus& corpus) {
    CorpusReport report;
    report.records.reserve(corpus.records.size());
    for (const auto& r : corpus.records) {
        report.records.push_back({r, verify_solution(r)});
        ++report.per_source[r.source_tag()];
    }
    for (const auto& fam : corpus.families) {
        FamilyCheck check{fam.name, fam.default_instances, 0};
        for (unsigned i = 0; i < fam.default_instances; ++i) {
            if (!fam.verify_instance(fam.first_index + i)) ++check.failures;
        }
        report.families.push_back(check);
    }
    return report;
}

}  // namespace binomeq
