#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "binomeq/exact.hpp"

namespace binomeq {

/// One published solution, normalized so that binom(n, k) = binom(m, l) + d.
struct SolutionRecord {
    unsigned k = 0;
    unsigned l = 0;
    BigInt d;
    BigInt n;
    BigInt m;
    /// Source tag followed by free-form notes (the published pair, orientation flags).
    std::string source;

    /// First whitespace-separated token of `source`.
    std::string source_tag() const;
    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

bool verify_solution(const SolutionRecord& r);

/// A named parametric family whose instances are checked one index at a time.
struct ParametricFamily {
    std::string name;
    std::string description;
    std::function<bool(unsigned)> verify_instance;
    unsigned first_index = 1;
    unsigned default_instances = 5;
};

struct Corpus {
    std::vector<SolutionRecord> records;
    std::vector<ParametricFamily> families;
};

/// Reads `k l d n m source...` lines; blank lines and `#` comments are skipped.
/// Throws DomainError naming the line on malformed input.
std::vector<SolutionRecord> parse_corpus(std::istream& in);
std::string format_record(const SolutionRecord& r);

/// Corpus text compiled into the library from data/corpus.txt.
const std::string& builtin_corpus_text();
/// Built-in records plus the built-in parametric families.
Corpus builtin_corpus();
/// Reads records from `path`; families are always the built-in ones.
Corpus load_corpus(const std::string& path);

/// binom(F(2i+2)F(2i+3), F(2i)F(2i+3)) == binom(F(2i+2)F(2i+3) - 1, F(2i)F(2i+3) + 1).
bool verify_fibonacci_family(unsigned i);
/// binom(12x^2-12x+3, 3) + binom(x, 2) == binom(24x^3-36x^2+15x-1, 2) at integer x.
bool verify_cubic_triangular_family(unsigned x);

struct RecordCheck {
    SolutionRecord record;
    bool passed = false;
};

struct FamilyCheck {
    std::string name;
    unsigned instances = 0;
    unsigned failures = 0;
};

struct CorpusReport {
    std::vector<RecordCheck> records;
    std::vector<FamilyCheck> families;
    /// Record count per source tag.
    std::map<std::string, std::size_t> per_source;

    std::size_t failures() const;
    bool all_passed() const;
};

/// Checks every record and `default_instances` of every family.
CorpusReport verify_corpus(const Corpus& corpus);

}  // namespace binomeq
