#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binomeq/corpus.hpp"
#include "binomeq/sieve.hpp"

namespace binomeq {

/// Unsolvable residues as published, d taken in 1..p.
const std::vector<SieveEntry>& printed_unsolvable_table();

/// Residues u mod 75 for which binom(n,2) = binom(m,4) + d has no solution
/// when d = u (mod 75), as published.
const std::vector<std::uint64_t>& printed_mod75_residues();

struct CriterionResult {
    unsigned id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string summary;
    /// One line per mismatch or note.
    std::vector<std::string> details;
};

struct ReproduceConfig {
    unsigned workers = 0;
    /// Adds the k = 15, 17, 19 polynomial cases.
    bool slow = false;
    std::uint64_t seed = 20240917;
    std::size_t property_cases = 500;
    Corpus corpus = builtin_corpus();
};

/// (id, title) for every acceptance criterion, ids 1..10.
const std::vector<std::pair<unsigned, std::string>>& criteria();

/// A criterion passes only if every check holds and it ran within its time limit.
CriterionResult run_criterion(unsigned id, const ReproduceConfig& config);
std::vector<CriterionResult> run_all_criteria(const ReproduceConfig& config);

struct PropertyResult {
    std::string module;
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0 && cases > 0; }
};

/// Every randomized invariant, `cases` draws each from a generator seeded with
/// `seed`; exhaustive checks report their actual instance count.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases, const Corpus& corpus,
                                               unsigned workers = 0);

}  // namespace binomeq
