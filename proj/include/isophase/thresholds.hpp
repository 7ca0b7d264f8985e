#pragma once

#include "isophase/params.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace isophase {

/// Relative margin under which a point counts as on the boundary of the region.
inline constexpr double kRegionBoundaryTolerance = 1e-12;

/// max(tau_{1,2}, tau_{2,1}) < tau^{3/2}, strictly; boundary points are outside.
bool in_admissible_region(double p, double q);
bool in_admissible_region(const ModelParams& params);

/// Corner of the region on q = 1 - p with p < q.
std::pair<double, double> region_corner();

/// W(x) = x + 2 lambda ln x + (lambda / x) ln(2 pi x) and its first two derivatives.
double w_eval(double x, double lambda, int order);

/// Slack default: ln ln n for n >= 16, else 1.
double default_cn(std::uint64_t n);

struct ThresholdConfig {
    std::uint64_t n = 2;
    double cn = 1.0;

    /// cn / ln n, the additive slack around the thresholds.
    double slack() const;
    /// True when the slack reaches 1, outside the regime the theorems describe.
    bool slack_warning() const;
};

/// Throws DomainError for n < 2 or a nonpositive cn; cn defaults to default_cn(n).
ThresholdConfig make_threshold_config(std::uint64_t n, std::optional<double> cn = std::nullopt);

struct MStar {
    double m_star = 0.0;
    double r_n = 0.0;      ///< 4 lambda ln n + 2 lambda + 1
    double residual = 0.0; ///< |W(m_star) - r_n|
};

/// Root of W(x) = R(n) on [1, R(n)] by bisection. Throws DomainError when R(n) < W(1).
MStar m_star(std::uint64_t n, const ModelParams& params, double tol = 1e-10);

/// R - 2 lambda ln R.
double m_star_approx(std::uint64_t n, const ModelParams& params);

/// (floor(2 log2 n + 1 - slack), ceil(2 log2 n + 1 + slack)).
std::pair<std::int64_t, std::int64_t> embed_thresholds(const ThresholdConfig& cfg);

struct CommonThresholds {
    std::int64_t m_low = 0;
    std::int64_t m_high = 0;
    MStar star;
    bool in_region = true;
};

/// (floor(m_star - slack), ceil(m_star + slack)). Throws RegionError outside the
/// admissible region unless allow_outside is set, in which case in_region is false.
CommonThresholds common_thresholds(const ThresholdConfig& cfg, const ModelParams& params, bool allow_outside = false);

struct ThresholdReport {
    std::int64_t m_minus = 0;
    std::int64_t m_plus = 0;
    double m_star = 0.0;
    double m_tilde = 0.0;
    double r_n = 0.0;
    double residual = 0.0;
};

/// Embedding thresholds together with the common-subgraph root for params.
ThresholdReport threshold_report(const ThresholdConfig& cfg, const ModelParams& params);

} // namespace isophase
