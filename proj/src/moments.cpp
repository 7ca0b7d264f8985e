#include "isophase/moments.hpp"

#include "isophase/errors.hpp"
#include "isophase/injection.hpp"
#include "isophase/parallel.hpp"
#include "isophase/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <tuple>

namespace isophase {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_sizes(std::int64_t n, std::int64_t m)
{
    if (n < 0 || m < 0)
        throw DomainError("sizes must be nonnegative");
    if (m > n)
        throw DomainError("m must not exceed n");
}

double log_count(const BigInt& v) { return v == 0 ? kNegInf : log_big(v); }

double safe_exp(double x) { return x == kNegInf ? 0.0 : std::exp(x); }

BigInt map_count(std::int64_t n, std::int64_t m, Variant variant)
{
    return variant == Variant::embedding ? falling_factorial(n, m) : count_partial_maps(n, m);
}

BigInt guarded_pairs(std::int64_t n, std::int64_t m, Variant variant, std::uint64_t guard)
{
    require_sizes(n, m);
    const BigInt maps = map_count(n, m, variant);
    BigInt total = maps * maps;
    if (total > BigInt(guard))
        throw ScaleError("instance has " + total.str() + " map pairs, above the guard of " + std::to_string(guard));
    return total;
}

PairClass class_of(const ComponentProfile& p)
{
    PairClass cls;
    cls.d = static_cast<std::uint16_t>(p.d);
    cls.r = static_cast<std::uint16_t>(p.r);
    for (const auto& [key, count] : p.census) {
        if (!cls.entries.empty() && cls.entries.back()[0] == key.j && cls.entries.back()[1] == key.k)
            cls.entries.back()[2] += static_cast<std::uint32_t>(count);
        else
            cls.entries.push_back({key.j, key.k, static_cast<std::uint32_t>(count)});
    }
    return cls;
}

template <typename Map>
void census_of(const std::vector<Map>& maps, std::size_t workers, PairCensus& out,
               EdgeGraph (*build)(const Map&, const Map&, std::int64_t, std::int64_t))
{
    const std::size_t count = maps.size();
    const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(count, 4 * workers));
    std::vector<std::map<PairClass, std::uint64_t>> partial(blocks);
    parallel_blocks(count, workers, blocks, [&](std::size_t begin, std::size_t end, std::size_t block) {
        auto& local = partial[block];
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& g : maps)
                ++local[class_of(classify_components(build(maps[i], g, out.m, out.n)))];
    });
    for (const auto& local : partial)
        for (const auto& [cls, mult] : local)
            out.classes[cls] += mult;
}

EdgeGraph build_total(const Injection& f, const Injection& g, std::int64_t m, std::int64_t n)
{
    return build_embedding_edge_graph(f, g, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
}

EdgeGraph build_partial(const PartialInjection& f, const PartialInjection& g, std::int64_t, std::int64_t)
{
    return build_common_edge_graph(f, g);
}

void require_region(const ModelParams& params)
{
    if (!in_admissible_region(params))
        throw RegionError("(p, q) lies outside the admissible region");
}

double log_bound1(std::int64_t n, std::int64_t m, const ModelParams& params, std::int64_t d, std::int64_t r)
{
    require_region(params);
    const double log_card = log_count(count_H_dr(n, m, d, r)) - 2.0 * log_count(count_partial_maps(n, m));
    if (log_card == kNegInf)
        return kNegInf;
    const double log_inv_tau = -std::log(params.tau);
    const auto big = static_cast<double>(pairs_of(std::max(d, r)));
    const auto small = static_cast<double>(pairs_of(std::min(d, r)));
    const double gamma = r <= d ? params.gamma : params.gamma_mirror;
    return log_card + log_inv_tau * ((1.0 - gamma) * big + gamma * small);
}

} // namespace

double log_expected_embeddings(std::int64_t n, std::int64_t m)
{
    require_sizes(n, m);
    return log_falling_factorial(n, m) - static_cast<double>(pairs_of(m)) * std::log(2.0);
}

double expected_embeddings(std::int64_t n, std::int64_t m) { return std::exp(log_expected_embeddings(n, m)); }

double log_expected_common(std::int64_t n, std::int64_t m, const ModelParams& params)
{
    require_sizes(n, m);
    return log_binom(n, m) + log_falling_factorial(n, m) + static_cast<double>(pairs_of(m)) * std::log(params.tau);
}

double expected_common(std::int64_t n, std::int64_t m, const ModelParams& params)
{
    return std::exp(log_expected_common(n, m, params));
}

BigInt count_partial_maps(std::int64_t n, std::int64_t m) { return binom(n, m) * falling_factorial(n, m); }

BigInt count_H_r(std::int64_t n, std::int64_t m, std::int64_t r)
{
    require_sizes(n, m);
    if (r < 0 || r > m)
        return 0;
    return falling_factorial(n, m) * binom(m, r) * falling_factorial(m, r) * falling_factorial(n - m, m - r);
}

BigInt bound_H_r_ell(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t ell)
{
    require_sizes(n, m);
    if (ell < 0 || ell > r || r > m)
        throw DomainError("need 0 <= ell <= r <= m");
    return falling_factorial(n, m) * multinomial(m, {ell, r - ell, m - r}) * falling_factorial(m - ell, r - ell)
        * falling_factorial(n - m, m - r);
}

BigInt count_H_dr(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t r)
{
    require_sizes(n, m);
    if (d < 0 || r < 0 || d > m || r > m)
        return 0;
    const BigInt mf = factorial(m);
    return multinomial(n, {m - d, m - d, d, n - 2 * m + d}) * multinomial(n, {m - r, m - r, r, n - 2 * m + r}) * mf
        * mf;
}

BigInt bound_H_drl(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t r, std::int64_t ell)
{
    if (ell < 0 || ell > std::min(d, r))
        throw DomainError("need 0 <= ell <= min(d, r)");
    const BigInt num = count_H_dr(n, m, d, r) * binom(std::min(d, r), ell);
    const BigInt den = falling_factorial(m, ell);
    return (num + den - 1) / den;
}

std::uint64_t PairClass::components() const
{
    std::uint64_t total = 0;
    for (const auto& e : entries)
        total += e[2];
    return total;
}

PairCensus compute_pair_census(std::int64_t n, std::int64_t m, Variant variant, std::uint64_t guard,
                               std::size_t workers)
{
    const BigInt total_pairs = guarded_pairs(n, m, variant, guard);
    PairCensus out;
    out.variant = variant;
    out.n = n;
    out.m = m;
    out.pairs = static_cast<std::uint64_t>(total_pairs);
    if (workers == 0)
        workers = default_workers();
    const auto un = static_cast<std::size_t>(n);
    const auto um = static_cast<std::size_t>(m);
    if (variant == Variant::embedding)
        census_of(all_injections(um, un), workers, out, &build_total);
    else
        census_of(all_partial_injections(un, um), workers, out, &build_partial);
    return out;
}

const PairCensus& pair_census(std::int64_t n, std::int64_t m, Variant variant, std::uint64_t guard,
                              std::size_t workers)
{
    guarded_pairs(n, m, variant, guard);
    static std::mutex mutex;
    static std::map<std::tuple<std::int64_t, std::int64_t, Variant>, std::unique_ptr<PairCensus>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, m, variant}];
    if (!slot)
        slot = std::make_unique<PairCensus>(compute_pair_census(n, m, variant, guard, workers));
    return *slot;
}

double log_class_moment(const PairClass& cls, const ModelParams& params, Variant variant)
{
    ModelParams eff = params;
    if (variant == Variant::embedding)
        eff.q = 0.5;
    if (!(eff.p > 0.0 && eff.p < 1.0) || !(eff.q > 0.0 && eff.q < 1.0))
        throw ParameterError("edge probabilities must lie strictly between 0 and 1");
    double acc = 0.0;
    for (const auto& e : cls.entries)
        acc += static_cast<double>(e[2]) * eff.log_tau_jk(static_cast<int>(e[0]), static_cast<int>(e[1]));
    return acc;
}

double second_moment_exact(std::int64_t n, std::int64_t m, const ModelParams& params, Variant variant,
                           std::uint64_t guard, std::size_t workers)
{
    const auto& census = pair_census(n, m, variant, guard, workers);
    CompensatedSum s;
    for (const auto& [cls, mult] : census.classes)
        s.add(std::exp(std::log(static_cast<double>(mult)) + log_class_moment(cls, params, variant)));
    return s.value();
}

double moment_ratio_exact(std::int64_t n, std::int64_t m, const ModelParams& params, Variant variant,
                          std::uint64_t guard, std::size_t workers)
{
    const auto& census = pair_census(n, m, variant, guard, workers);
    const double log_first = variant == Variant::embedding ? log_expected_embeddings(n, m)
                                                           : log_expected_common(n, m, params);
    CompensatedSum s;
    for (const auto& [cls, mult] : census.classes)
        s.add(std::exp(std::log(static_cast<double>(mult)) + log_class_moment(cls, params, variant)
                       - 2.0 * log_first));
    return s.value();
}

MomentBounds s_bound(std::int64_t n, std::int64_t m, double p, double c, BoundMode mode, std::uint64_t guard)
{
    require_sizes(n, m);
    if (!(c > 0.5 && c < 1.0))
        throw DomainError("the split constant must satisfy 1/2 < c < 1");
    if (!(p > 0.0 && p < 1.0))
        throw ParameterError("edge probability must lie strictly between 0 and 1");
    const double phat = std::max(p, 1.0 - p);
    const double log_norm = 2.0 * log_falling_factorial(n, m);
    const double cut = c * static_cast<double>(m);
    const auto pm = pairs_of(m);

    MomentBounds out;
    out.c = c;
    CompensatedSum one;
    CompensatedSum two;
    if (mode == BoundMode::exact) {
        const auto& census = pair_census(n, m, Variant::embedding, guard);
        for (const auto& [cls, mult] : census.classes) {
            const auto exponent = pm - static_cast<std::int64_t>(cls.components());
            if (exponent < 0)
                throw StructuralError("component count exceeds C(m,2)");
            const double term = std::exp(std::log(static_cast<double>(mult))
                                         + static_cast<double>(pairs_of(cls.r)) * std::log(2.0)
                                         + static_cast<double>(exponent) * std::log(phat) - log_norm);
            (static_cast<double>(cls.r) <= cut ? one : two).add(term);
        }
    } else {
        one.add(1.0);
        for (std::int64_t r = 1; r <= m; ++r) {
            const double term = safe_exp(log_count(count_H_r(n, m, r))
                                         + static_cast<double>(pairs_of(r)) * std::log(2.0) - log_norm);
            (static_cast<double>(r) <= cut ? one : two).add(term);
        }
    }
    out.s_one = one.value();
    out.s_two = two.value();
    out.s_total = out.s_one + out.s_two;
    return out;
}

double psi(std::int64_t m, double c, double beta)
{
    const double md = static_cast<double>(m);
    return std::pow(1.0 + md * std::pow(beta, (c * md - 2.0) / 2.0), md);
}

double log_correlation_bound(std::int64_t d, std::int64_t r, std::int64_t ell, std::int64_t m,
                             const ModelParams& params)
{
    require_region(params);
    if (d < 0 || r < 0 || d > m || r > m)
        throw DomainError("need 0 <= d, r <= m");
    if (r > d)
        throw SymmetryError("r > d: exchange the graphs (mirrored parameters, d and r swapped)");
    if (ell < 0 || ell > r)
        throw DomainError("need 0 <= ell <= min(d, r)");
    const double log_inv_tau = -std::log(params.tau);
    const double expo = (1.0 - params.gamma) * static_cast<double>(pairs_of(d))
        + params.gamma * static_cast<double>(pairs_of(r));
    const double beta_expo = static_cast<double>((r - ell) * (r - 2)) / 2.0;
    return log_inv_tau * expo + beta_expo * std::log(params.beta);
}

double correlation_bound(std::int64_t d, std::int64_t r, std::int64_t ell, std::int64_t m, const ModelParams& params)
{
    return std::exp(log_correlation_bound(d, r, ell, m, params));
}

std::vector<std::vector<double>> t_table_exact(std::int64_t n, std::int64_t m, const ModelParams& params,
                                               std::uint64_t guard)
{
    const auto& census = pair_census(n, m, Variant::common, guard);
    const double shift = 2.0 * static_cast<double>(pairs_of(m)) * std::log(params.tau)
        + 2.0 * log_count(count_partial_maps(n, m));
    const auto size = static_cast<std::size_t>(m + 1);
    std::vector<std::vector<CompensatedSum>> acc(size, std::vector<CompensatedSum>(size));
    for (const auto& [cls, mult] : census.classes)
        acc[cls.d][cls.r].add(
            std::exp(std::log(static_cast<double>(mult)) + log_class_moment(cls, params, Variant::common) - shift));
    std::vector<std::vector<double>> out(size, std::vector<double>(size, 0.0));
    for (std::size_t d = 0; d < size; ++d)
        for (std::size_t r = 0; r < size; ++r)
            out[d][r] = acc[d][r].value();
    return out;
}

double t_dr(std::int64_t n, std::int64_t m, const ModelParams& params, std::int64_t d, std::int64_t r, TMode mode,
            double c, std::uint64_t guard)
{
    require_sizes(n, m);
    if (d < 0 || r < 0 || d > m || r > m)
        throw DomainError("need 0 <= d, r <= m");
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("the split constant must satisfy 0 < c < 1");
    switch (mode) {
    case TMode::exact:
        return t_table_exact(n, m, params, guard)[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)];
    case TMode::bound1:
        return safe_exp(log_bound1(n, m, params, d, r));
    case TMode::bound2:
        if (!(c * static_cast<double>(m) <= static_cast<double>(r) && r <= d))
            throw DomainError("bound2 needs c m <= r <= d");
        return safe_exp(log_bound1(n, m, params, d, r) + std::log(psi(m, c, params.beta))
                        - log_falling_factorial(m, r));
    }
    throw DomainError("unknown mode");
}

MomentBounds common_bounds(std::int64_t n, std::int64_t m, const ModelParams& params, double c)
{
    require_sizes(n, m);
    require_region(params);
    MomentBounds out;
    out.c = c;
    out.psi_m = psi(m, c, params.beta);
    for (std::int64_t d = 0; d <= m; ++d)
        for (std::int64_t r = 0; r <= m; ++r) {
            double b = t_dr(n, m, params, d, r, TMode::bound1, c);
            if (c * static_cast<double>(m) <= static_cast<double>(r) && r <= d)
                b = std::min(b, t_dr(n, m, params, d, r, TMode::bound2, c));
            out.t_dr[{static_cast<int>(d), static_cast<int>(r)}] = b;
        }
    return out;
}

RatioDecomposition ratio_decomposition(std::int64_t n, std::int64_t m, const ModelParams& params, double c,
                                       std::uint64_t guard)
{
    require_sizes(n, m);
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("the split constant must satisfy 0 < c < 1");
    const auto table = t_table_exact(n, m, params, guard);
    const double cut = c * static_cast<double>(m);
    RatioDecomposition out;
    CompensatedSum low;
    CompensatedSum high;
    CompensatedSum swapped;
    for (std::int64_t d = 0; d <= m; ++d)
        for (std::int64_t r = 0; r <= m; ++r) {
            const double v = table[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)];
            if (d == 0 && r == 0)
                out.t00 = v;
            else if (d == m && r == m)
                out.tmm = v;
            else if (r > d)
                swapped.add(v);
            else if (static_cast<double>(r) <= cut)
                low.add(v);
            else
                high.add(v);
        }
    out.low = low.value();
    out.high = high.value();
    out.swapped = swapped.value();
    CompensatedSum total;
    for (double v : {out.t00, out.tmm, out.low, out.high, out.swapped})
        total.add(v);
    out.total = total.value();
    out.propc_lower = safe_exp(log_count(count_H_dr(n, m, m, 0)) - 2.0 * log_count(count_partial_maps(n, m))
                               + static_cast<double>(pairs_of(m)) * (std::log(params.tau12) - 2.0 * std::log(params.tau)));
    return out;
}

} // namespace isophase
