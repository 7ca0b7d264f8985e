#pragma once

#include "isophase/combinatorics.hpp"
#include "isophase/edgegraph.hpp"
#include "isophase/params.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace isophase {

inline constexpr std::uint64_t kDefaultScaleGuard = 10'000'000;
inline constexpr double kDefaultSplit = 0.75;

/// (n)_m 2^{-C(m,2)}; no dependence on p.
double log_expected_embeddings(std::int64_t n, std::int64_t m);
double expected_embeddings(std::int64_t n, std::int64_t m);

/// C(n,m) (n)_m tau^{C(m,2)}.
double log_expected_common(std::int64_t n, std::int64_t m, const ModelParams& params);
double expected_common(std::int64_t n, std::int64_t m, const ModelParams& params);

/// |J| = C(n,m) (n)_m, the number of partial injections with domain size m.
BigInt count_partial_maps(std::int64_t n, std::int64_t m);

/// Injection pairs whose ranges share r vertices.
BigInt count_H_r(std::int64_t n, std::int64_t m, std::int64_t r);
/// Upper bound on pairs with range overlap r agreeing on at least ell points.
BigInt bound_H_r_ell(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t ell);
/// Partial-injection pairs with domain overlap d and range overlap r.
BigInt count_H_dr(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t r);
/// ceil(count_H_dr * C(min(d,r), ell) / (m)_ell).
BigInt bound_H_drl(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t r, std::int64_t ell);

/// Census of one map pair with (j,k) counts merged over paths and cycles.
struct PairClass {
    std::uint16_t d = 0;
    std::uint16_t r = 0;
    /// (j, k, count), sorted by (j, k).
    std::vector<std::array<std::uint32_t, 3>> entries;

    std::uint64_t components() const;
    friend auto operator<=>(const PairClass&, const PairClass&) = default;
};

/// Multiplicities of every pair class over all map pairs of one instance:
/// total injections for the embedding variant, partial injections otherwise.
struct PairCensus {
    Variant variant = Variant::common;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::uint64_t pairs = 0;
    std::map<PairClass, std::uint64_t> classes;
};

/// Enumerates (maps)^2 through the edge-graph decomposition; the result is
/// identical for every worker count. Throws ScaleError when the number of
/// pairs exceeds guard.
PairCensus compute_pair_census(std::int64_t n, std::int64_t m, Variant variant,
                               std::uint64_t guard = kDefaultScaleGuard, std::size_t workers = 0);

/// compute_pair_census memoised per (n, m, variant).
const PairCensus& pair_census(std::int64_t n, std::int64_t m, Variant variant,
                              std::uint64_t guard = kDefaultScaleGuard, std::size_t workers = 0);

/// log E J_f J_g for one class.
double log_class_moment(const PairClass& cls, const ModelParams& params, Variant variant);

/// E N^2 as the sum of pair moments over all map pairs.
double second_moment_exact(std::int64_t n, std::int64_t m, const ModelParams& params, Variant variant,
                           std::uint64_t guard = kDefaultScaleGuard, std::size_t workers = 0);
/// E N^2 / (E N)^2 by the same enumeration.
double moment_ratio_exact(std::int64_t n, std::int64_t m, const ModelParams& params, Variant variant,
                          std::uint64_t guard = kDefaultScaleGuard, std::size_t workers = 0);

enum class BoundMode { exact, relaxed };

struct MomentBounds {
    double c = kDefaultSplit;
    double s_total = 0.0;
    double s_one = 0.0; ///< pairs with range overlap r <= c m
    double s_two = 0.0; ///< r > c m
    /// (d, r) -> upper bound on T_{d,r}, filled by common_bounds.
    std::map<std::pair<int, int>, double> t_dr;
    double psi_m = 0.0;
};

/// Embedding majorant of E N^2 / (E N)^2 split at r <= c m. Requires 1/2 < c < 1.
MomentBounds s_bound(std::int64_t n, std::int64_t m, double p, double c, BoundMode mode,
                     std::uint64_t guard = kDefaultScaleGuard);

/// (1 + m beta^{(c m - 2)/2})^m
double psi(std::int64_t m, double c, double beta);

/// Upper bound on E J_f J_g / tau^{2C(m,2)} for pairs with overlaps (d, r, ell),
/// r <= d. Throws RegionError outside the admissible region and SymmetryError
/// for r > d (swap the two graphs: use params.mirrored() and exchange d and r).
double log_correlation_bound(std::int64_t d, std::int64_t r, std::int64_t ell, std::int64_t m,
                             const ModelParams& params);
double correlation_bound(std::int64_t d, std::int64_t r, std::int64_t ell, std::int64_t m, const ModelParams& params);

enum class TMode { exact, bound1, bound2 };

/// T_{d,r}: the contribution of pairs in H_{d,r} to E N^2 / (E N)^2, or its bounds.
/// bound1 needs the admissible region and handles r > d by the mirrored
/// exponent; bound2 needs c m <= r <= d.
double t_dr(std::int64_t n, std::int64_t m, const ModelParams& params, std::int64_t d, std::int64_t r, TMode mode,
            double c = kDefaultSplit, std::uint64_t guard = kDefaultScaleGuard);

/// Exact T_{d,r} for all 0 <= d, r <= m, indexed [d][r].
std::vector<std::vector<double>> t_table_exact(std::int64_t n, std::int64_t m, const ModelParams& params,
                                               std::uint64_t guard = kDefaultScaleGuard);

/// bound1 for every (d, r) and, where it applies, the tighter bound2.
MomentBounds common_bounds(std::int64_t n, std::int64_t m, const ModelParams& params, double c = kDefaultSplit);

struct RatioDecomposition {
    double t00 = 0.0;
    double tmm = 0.0;
    double low = 0.0;     ///< r <= d, r <= c m, without (0,0)
    double high = 0.0;    ///< c m < r <= d, without (m,m)
    double swapped = 0.0; ///< d < r
    double total = 0.0;
    /// |H_{m,0}| / |J|^2 (tau_{1,2} / tau^2)^{C(m,2)}, one summand of the total.
    double propc_lower = 0.0;
};

RatioDecomposition ratio_decomposition(std::int64_t n, std::int64_t m, const ModelParams& params,
                                       double c = kDefaultSplit, std::uint64_t guard = kDefaultScaleGuard);

} // namespace isophase
