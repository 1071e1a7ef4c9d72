#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "binomeq/corpus.hpp"
#include "binomeq/multipoly.hpp"
#include "binomeq/unipoly.hpp"

namespace binomeq {

enum class CurveShape { WeierstrassCubic, Quartic, BivariateCubic, Quintic };

std::string to_string(CurveShape shape);

/// A published coefficient that had to be replaced to make the transformation
/// an identity.
struct CurveCorrection {
    std::string slot;  // what the coefficient controls, e.g. "Y scale"
    BigRational printed;
    BigRational corrected;
    std::string printed_text;
    std::string corrected_text;
};

/// Curve model for binom(n,k) = binom(m,l) + d together with the coordinate
/// maps. `model` is in X, Y, d and vanishes on the curve; the maps are in m, n.
/// Certified means model(X(m,n), Y(m,n), d) == lambda * (binom(n,k) - binom(m,l) - d)
/// as polynomials in m, n, d.
struct CurveSpec {
    unsigned k = 0;
    unsigned l = 0;
    CurveShape shape = CurveShape::WeierstrassCubic;
    std::string equation_text;
    std::string transformation_text;
    MultiPoly model;
    MultiPoly x_map;
    MultiPoly y_map;
    BigRational lambda;
    bool certified = false;
    std::optional<CurveCorrection> correction;
};

/// The eight (k, l) pairs that have elliptic models.
const std::vector<std::pair<unsigned, unsigned>>& elliptic_pairs();

/// Certified spec; repairs a published coefficient when the published one fails
/// and records the repair. Also accepts (2, 5), the genus-2 quintic model.
/// Throws DomainError for other pairs, or if no repair certifies the row.
CurveSpec curve_spec(unsigned k, unsigned l);

/// binom(n,k) - binom(m,l) - d as a polynomial in m, n, d.
MultiPoly binomial_difference(unsigned k, unsigned l);

/// True iff model(X(m,n), Y(m,n), d) - lambda * binomial_difference is zero.
bool certify(const CurveSpec& spec);

/// curve_spec for every elliptic pair, in elliptic_pairs() order.
std::vector<CurveSpec> verify_all_transforms();

struct MappedPoint {
    BigRational X;
    BigRational Y;
    bool on_curve = false;
};

MappedPoint map_point(const CurveSpec& spec, const BigInt& d, const BigInt& m, const BigInt& n);

/// 15u^3 - v^3 + 4v^2 - 15u - 3v - 180, the (3,6) model at d = 2 with u = X, v = Y.
MultiPoly sporadic_cubic();
/// (3,6) model at d = 2 equals sporadic_cubic() and vanishes at (-4, -9).
bool sporadic_point_check();

/// Solutions with l <= m <= m_bound and n >= k. k = 2 uses the 8T+1 square
/// test, larger k use binom_inverse. Sorted by (m, n).
std::vector<SolutionRecord> bounded_search(unsigned k, unsigned l, const BigInt& d, std::uint64_t m_bound,
                                           unsigned workers = 0);

/// Default m bound for bounded_search: covers every known solution with margin.
std::uint64_t default_m_bound(unsigned k, unsigned l);

/// binom(n,2) = binom(m,5) + d for m in [m_lo, m_hi] and n >= 2, negative m
/// allowed. With `nontrivial` only m >= 5 is kept. Sorted by (m, n).
std::vector<SolutionRecord> bounded_search_25(const BigInt& d, std::int64_t m_lo, std::int64_t m_hi,
                                              bool nontrivial = true, unsigned workers = 0);

/// Points on y^2 = 15 x(x-1)(x-2)(x-3)(x-4) + 15^2 (8 binom(w,2) + 1) given as
/// polynomials in w.
struct PointFamily {
    std::string name;
    UniPoly x;
    UniPoly y;
};

const std::vector<PointFamily>& quintic_point_families();

/// y^2 - (15 x(x-1)(x-2)(x-3)(x-4) + 225 (8 binom(w,2) + 1)) == 0 in Q[w].
bool verify_point_family(const PointFamily& family);

struct PointFamilyReport {
    std::vector<std::pair<std::string, bool>> identities;
    /// (w, x, n) for small w where y = 15 (2n - 1) gives an integer n.
    std::vector<std::tuple<unsigned, BigInt, BigInt>> instances;
    std::size_t d66_records = 0;
    std::size_t d66_failures = 0;

    bool all_passed() const;
};

/// Both family identities, instances at w = 2..5 re-verified as solutions, and
/// the d = 66 records of the corpus.
PointFamilyReport verify_parametric_family(const Corpus& corpus);

}  // namespace binomeq
