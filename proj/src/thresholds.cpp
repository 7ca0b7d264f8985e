#include "isophase/thresholds.hpp"

#include "isophase/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace isophase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double r_of(std::uint64_t n, double lambda)
{
    return 4.0 * lambda * std::log(static_cast<double>(n)) + 2.0 * lambda + 1.0;
}

} // namespace

bool in_admissible_region(const ModelParams& params)
{
    const double edge = std::pow(params.tau, 1.5);
    return std::max(params.tau12, params.tau21) < edge * (1.0 - kRegionBoundaryTolerance);
}

bool in_admissible_region(double p, double q) { return in_admissible_region(derive_params(p, q)); }

std::pair<double, double> region_corner()
{
    // On q = 1 - p: tau = 2x, tau_{1,2} = tau_{2,1} = x with x = p(1 - p).
    auto excess = [](double p) {
        const double x = p * (1.0 - p);
        return x - std::pow(2.0 * x, 1.5);
    };
    double lo = 1e-9;
    double hi = 0.5;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    const double p = 0.5 * (lo + hi);
    return {p, 1.0 - p};
}

double w_eval(double x, double lambda, int order)
{
    switch (order) {
    case 0:
        if (!(x >= 1.0))
            throw DomainError("W is evaluated on x >= 1");
        return x + 2.0 * lambda * std::log(x) + (lambda / x) * std::log(kTwoPi * x);
    case 1:
        if (!(x > 0.0))
            throw DomainError("W' needs x > 0");
        return 1.0 + (lambda / x) * (2.0 + 1.0 / x - std::log(kTwoPi * x) / x);
    case 2:
        if (!(x > 0.0))
            throw DomainError("W'' needs x > 0");
        return (2.0 * lambda / (x * x * x)) * (std::log(x) - x + std::log(kTwoPi) - 1.5);
    default:
        throw DomainError("derivative order must be 0, 1 or 2");
    }
}

double default_cn(std::uint64_t n)
{
    return n >= 16 ? std::log(std::log(static_cast<double>(n))) : 1.0;
}

double ThresholdConfig::slack() const { return cn / std::log(static_cast<double>(n)); }

bool ThresholdConfig::slack_warning() const { return slack() >= 1.0; }

ThresholdConfig make_threshold_config(std::uint64_t n, std::optional<double> cn)
{
    if (n < 2)
        throw DomainError("thresholds need n >= 2");
    ThresholdConfig cfg{n, cn.value_or(default_cn(n))};
    if (!(cfg.cn > 0.0))
        throw DomainError("C_n must be positive");
    return cfg;
}

MStar m_star(std::uint64_t n, const ModelParams& params, double tol)
{
    if (n < 2)
        throw DomainError("m_star needs n >= 2");
    const double lambda = params.lambda;
    const double r = r_of(n, lambda);
    if (r < w_eval(1.0, lambda, 0))
        throw DomainError("n too small: R(n) < W(1)");
    double lo = 1.0;
    double hi = r;
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (w_eval(mid, lambda, 0) < r)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-14 * hi)
            break;
    }
    MStar out;
    out.m_star = 0.5 * (lo + hi);
    out.r_n = r;
    out.residual = std::abs(w_eval(out.m_star, lambda, 0) - r);
    if (out.residual > tol)
        throw DomainError("bisection did not reach the requested tolerance");
    return out;
}

double m_star_approx(std::uint64_t n, const ModelParams& params)
{
    const double r = r_of(n, params.lambda);
    if (n < 2 || r < w_eval(1.0, params.lambda, 0))
        throw DomainError("n too small: R(n) < W(1)");
    return r - 2.0 * params.lambda * std::log(r);
}

std::pair<std::int64_t, std::int64_t> embed_thresholds(const ThresholdConfig& cfg)
{
    const double centre = 2.0 * std::log2(static_cast<double>(cfg.n)) + 1.0;
    const double s = cfg.slack();
    return {static_cast<std::int64_t>(std::floor(centre - s)), static_cast<std::int64_t>(std::ceil(centre + s))};
}

CommonThresholds common_thresholds(const ThresholdConfig& cfg, const ModelParams& params, bool allow_outside)
{
    CommonThresholds out;
    out.in_region = in_admissible_region(params);
    if (!out.in_region && !allow_outside)
        throw RegionError("(p, q) lies outside the admissible region");
    out.star = m_star(cfg.n, params);
    const double s = cfg.slack();
    out.m_low = static_cast<std::int64_t>(std::floor(out.star.m_star - s));
    out.m_high = static_cast<std::int64_t>(std::ceil(out.star.m_star + s));
    return out;
}

ThresholdReport threshold_report(const ThresholdConfig& cfg, const ModelParams& params)
{
    ThresholdReport rep;
    std::tie(rep.m_minus, rep.m_plus) = embed_thresholds(cfg);
    const auto star = m_star(cfg.n, params);
    rep.m_star = star.m_star;
    rep.r_n = star.r_n;
    rep.residual = star.residual;
    rep.m_tilde = m_star_approx(cfg.n, params);
    return rep;
}

} // namespace isophase
