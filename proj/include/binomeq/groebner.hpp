#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binomeq/multipoly.hpp"
#include "binomeq/unipoly.hpp"

namespace binomeq {

struct GroebnerStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_basis_size = 0;
};

/// Reduced Groebner basis over Q: monic generators sorted by ascending leading
/// monomial. At most four variables, each exponent below 2^15.
struct GroebnerBasis {
    std::vector<std::string> variables;
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    std::vector<MultiPoly> generators;
    GroebnerStats stats;

    /// The ideal is the whole ring.
    bool is_unit() const;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria. Pairs are chosen by
/// sugar for graded orders and by smallest lcm for lex, where the basis is also
/// kept inter-reduced; coefficients are kept fraction-free during the run. `variables`
/// fixes the variable order (first is largest); empty means the union of the
/// inputs' universes. Deterministic for fixed input order.
GroebnerBasis groebner_basis(const std::vector<MultiPoly>& polys, MonomialOrder order,
                             std::vector<std::string> variables = {});

/// Remainder of full reduction by the basis (unique since the basis is reduced).
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g);

bool ideal_contains(const GroebnerBasis& g, const MultiPoly& p);

/// Every S-polynomial of the generators reduces to zero.
bool is_groebner_basis(const GroebnerBasis& g);

/// Monic generator of I cap Q[var], found from linear dependencies among the
/// normal forms of 1, var, var^2, ...; empty if none up to `max_degree`.
std::optional<UniPoly> eliminant(const GroebnerBasis& g, const std::string& var, unsigned max_degree = 256);

/// Smallest u <= max_power with var^u in the ideal.
std::optional<unsigned> power_membership(const GroebnerBasis& g, const std::string& var, unsigned max_power = 512);

}  // namespace binomeq
