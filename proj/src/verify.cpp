#include "isophase/verify.hpp"

#include "isophase/combinatorics.hpp"
#include "isophase/edgegraph.hpp"
#include "isophase/errors.hpp"
#include "isophase/injection.hpp"
#include "isophase/moments.hpp"
#include "isophase/rado.hpp"
#include "isophase/rng.hpp"
#include "isophase/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace isophase {

std::uint64_t VerifyReport::checked() const
{
    std::uint64_t s = 0;
    for (const auto& c : checks)
        s += c.checked;
    return s;
}

std::uint64_t VerifyReport::violations() const
{
    std::uint64_t s = 0;
    for (const auto& c : checks)
        s += c.violations;
    return s;
}

namespace {

class Checker {
public:
    explicit Checker(std::string suite) { report_.suite = std::move(suite); }

    void operator()(const std::string& name, bool ok)
    {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, report_.checks.size()).first;
            report_.checks.push_back({name, 0, 0});
        }
        auto& t = report_.checks[it->second];
        ++t.checked;
        t.violations += !ok;
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
    std::map<std::string, std::size_t> index_;
};

std::int64_t c2(std::size_t k) { return pairs_of(static_cast<std::int64_t>(k)); }

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

// Overlap statistics straight from the maps, for comparison with the profile.
OverlapStats direct_overlap(const std::vector<Vertex>& df, const std::vector<Vertex>& imf,
                            const std::vector<Vertex>& dg, const std::vector<Vertex>& img)
{
    OverlapStats s;
    s.m = df.size();
    for (std::size_t a = 0; a < df.size(); ++a) {
        s.r += std::find(img.begin(), img.end(), imf[a]) != img.end();
        for (std::size_t b = 0; b < dg.size(); ++b)
            if (df[a] == dg[b]) {
                ++s.d;
                s.ell += imf[a] == img[b];
            }
    }
    return s;
}

void check_common_laws(Checker& check, const ComponentProfile& p, const EdgeGraph& t)
{
    const auto zc = static_cast<std::int64_t>(p.zcal);
    std::int64_t comps = 0, cycles = 0;
    for (const auto& [cls, count] : p.census) {
        comps += static_cast<std::int64_t>(count);
        if (cls.cycle)
            cycles += static_cast<std::int64_t>(count);
    }
    // A component with V vertices has V - 1 edges, or V if it is a cycle.
    const auto vertices = static_cast<std::int64_t>(t.left.size() + t.right.size());
    check("component count", comps == vertices - static_cast<std::int64_t>(t.edges.size()) + cycles);
    check("lambduplem lower", c2(p.ell) <= zc);
    check("lambduplem upper", 2 * zc <= 2 * c2(p.ell) + static_cast<std::int64_t>(p.r - p.ell));
    check("ell <= min(d, r)", p.ell <= std::min(p.d, p.r));
}

void check_total_pair(Checker& check, const Injection& f, const Injection& g)
{
    const auto t = build_embedding_edge_graph(f, g, f.m, f.n);
    const auto p = classify_components(t);
    std::vector<Vertex> dom(f.m);
    for (std::size_t i = 0; i < f.m; ++i)
        dom[i] = static_cast<Vertex>(i);
    const auto ov = direct_overlap(dom, f.image, dom, g.image);
    check("overlap statistics", ov.d == p.d && ov.r == p.r && ov.ell == p.ell && p.d == p.m);

    const auto m = p.m;
    std::int64_t x1 = 0, x2 = 0, x3 = 0, x4 = 0, c11 = 0, x6 = 0;
    bool classes_ok = true;
    for (const auto& [cls, count] : p.census) {
        const auto c = static_cast<std::int64_t>(count);
        classes_ok = classes_ok && (cls.k == cls.j || cls.k == cls.j + 1);
        x1 += c;
        x2 += cls.j * c;
        x3 += cls.k * c;
        if (cls.k == cls.j + 1)
            x4 += c;
        if (cls.j == 1 && cls.k == 1)
            c11 += c;
        if (cls.k == cls.j && cls.j >= 2)
            x6 += c;
    }
    check("classlem k in {j, j+1}", classes_ok);
    check("X1 components", x1 == static_cast<std::int64_t>(p.components()));
    check("X2 left vertices", x2 == c2(m) && static_cast<std::int64_t>(p.left_size) == c2(m));
    check("X3 right vertices", x3 == 2 * c2(m) - c2(p.r) && static_cast<std::int64_t>(p.right_size) == x3);
    check("X4 up paths", x4 == c2(m) - c2(p.r));
    check("X5 lower", c2(p.ell) <= c11);
    check("X5 upper", 2 * c11 <= 2 * c2(p.ell) + static_cast<std::int64_t>(p.r - p.ell));
    check("X6", 2 * x6 <= c2(p.r) - c2(p.ell));
    check_common_laws(check, p, t);
}

void check_partial_pair(Checker& check, const PartialInjection& f, const PartialInjection& g)
{
    const auto t = build_common_edge_graph(f, g);
    const auto p = classify_components(t);
    const auto ov = direct_overlap(f.domain, f.image, g.domain, g.image);
    check("overlap statistics", ov.d == p.d && ov.r == p.r && ov.ell == p.ell);

    const auto m = p.m;
    const auto zc = static_cast<std::int64_t>(p.zcal);
    std::int64_t left1 = 0, right1 = 0, por1 = 0, por2 = 0, por3 = 0, por4 = 0;
    bool ccut = true;
    for (const auto& [cls, count] : p.census) {
        const auto c = static_cast<std::int64_t>(count);
        const std::int64_t j = cls.j, k = cls.k;
        ccut = ccut && std::abs(j - k) <= 1 && (j == k || !cls.cycle);
        if (j == k && !cls.cycle) {
            left1 += c;
            right1 += c;
            por2 += (j - 1) * c;
            por4 += (j - 1) * c;
        } else if (j == k) {
            por2 += j * c;
            por4 += (j - 1) * c;
            if (j >= 2)
                por3 += c;
        } else if (k == j + 1) {
            right1 += 2 * c;
            por1 += c;
            por2 += (j - 1) * c;
            por4 += (j - 1) * c;
        } else if (j == k + 1) {
            left1 += 2 * c;
            por1 -= c;
            por2 += k * c;
            por4 += k * c;
        }
    }
    check("ccut classes", ccut);
    check("sigmaident left size", static_cast<std::int64_t>(p.left_size) == 2 * c2(m) - c2(p.d));
    check("sigmaident right size", static_cast<std::int64_t>(p.right_size) == 2 * c2(m) - c2(p.r));
    check("left degree-one census", static_cast<std::int64_t>(p.left_degree_one) == left1);
    check("right degree-one census", static_cast<std::int64_t>(p.right_degree_one) == right1);
    check("left1", static_cast<std::int64_t>(p.left_degree_one) == zc + 2 * c2(m) - 2 * c2(p.d));
    check("right1", static_cast<std::int64_t>(p.right_degree_one) == zc + 2 * c2(m) - 2 * c2(p.r));
    check("por1", por1 == c2(p.d) - c2(p.r));
    check("por2", por2 == c2(p.r) - zc);
    check("por3", 2 * por3 <= c2(p.r) - zc);
    check("por4", 2 * por4 >= c2(p.r) - zc);
    check_common_laws(check, p, t);
}

HereditarilyFiniteSet random_set(Xoshiro256ss& rng, int depth)
{
    if (depth == 0)
        return {};
    std::vector<HereditarilyFiniteSet> members;
    const auto k = rng.below(4);
    for (std::uint64_t i = 0; i < k; ++i)
        members.push_back(random_set(rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(depth)))));
    return HereditarilyFiniteSet(std::move(members));
}

const double kGrid[] = {0.2, 0.5, 0.8};

} // namespace

VerifyReport verify_edgegraph(const VerifyOptions& opts)
{
    if (opts.max_m < 1 || opts.max_n < 2)
        throw DomainError("verify: need max_m >= 1 and max_n >= 2");
    Checker check("edgegraph");
    Xoshiro256ss rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.pairs; ++i) {
        const std::size_t n = 2 + rng.below(opts.max_n - 1);
        const std::size_t m = 1 + rng.below(std::min(n, opts.max_m));
        const auto f = random_injection(m, n, rng);
        auto g = random_injection(m, n, rng);
        if (i % 5 == 0)
            g = f;
        check_total_pair(check, f, g);
    }
    for (std::uint64_t i = 0; i < opts.pairs; ++i) {
        const std::size_t n = 2 + rng.below(opts.max_n - 1);
        const std::size_t m = 1 + rng.below(std::min(n, opts.max_m));
        const auto f = random_partial_injection(n, m, rng);
        auto g = random_partial_injection(n, m, rng);
        if (i % 7 == 0) {
            g = f;
            std::swap(g.image[0], g.image[m - 1]);
        }
        check_partial_pair(check, f, g);
    }
    return check.take();
}

VerifyReport verify_cardinality(const VerifyOptions&)
{
    Checker check("cardinality");
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = m; n <= 6; ++n) {
            const auto maps = all_injections(m, n);
            std::vector<std::vector<std::uint64_t>> h(m + 1, std::vector<std::uint64_t>(m + 1, 0));
            std::vector<bool> in_g(n);
            for (const auto& g : maps) {
                std::fill(in_g.begin(), in_g.end(), false);
                for (auto v : g.image)
                    in_g[v] = true;
                for (const auto& f : maps) {
                    std::size_t r = 0, ell = 0;
                    for (std::size_t a = 0; a < m; ++a) {
                        r += in_g[f.image[a]];
                        ell += f.image[a] == g.image[a];
                    }
                    ++h[r][ell];
                }
            }
            const auto mi = static_cast<std::int64_t>(m), ni = static_cast<std::int64_t>(n);
            for (std::size_t r = 0; r <= m; ++r) {
                std::uint64_t tail = 0;
                for (std::size_t ell = r + 1; ell-- > 0;) {
                    tail += h[r][ell];
                    const auto bound = bound_H_r_ell(ni, mi, static_cast<std::int64_t>(r), static_cast<std::int64_t>(ell));
                    check("cardHrl bound", bound >= tail);
                    if (ell == 0) {
                        check("cardHr", count_H_r(ni, mi, static_cast<std::int64_t>(r)) == tail);
                        check("cardHrl equality at 0", bound == tail);
                    }
                }
            }
        }

    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = m; n <= 6; ++n) {
            const auto maps = all_partial_injections(n, m);
            const auto sz = m + 1;
            std::vector<std::uint64_t> h(sz * sz * sz, 0);
            std::vector<int> gpos(n), in_gr(n);
            for (const auto& g : maps) {
                std::fill(gpos.begin(), gpos.end(), -1);
                std::fill(in_gr.begin(), in_gr.end(), 0);
                for (std::size_t b = 0; b < m; ++b) {
                    gpos[g.domain[b]] = static_cast<int>(b);
                    in_gr[g.image[b]] = 1;
                }
                for (const auto& f : maps) {
                    std::size_t d = 0, r = 0, ell = 0;
                    for (std::size_t a = 0; a < m; ++a) {
                        r += static_cast<std::size_t>(in_gr[f.image[a]]);
                        const int b = gpos[f.domain[a]];
                        if (b >= 0) {
                            ++d;
                            ell += f.image[a] == g.image[static_cast<std::size_t>(b)];
                        }
                    }
                    ++h[(d * sz + r) * sz + ell];
                }
            }
            const auto mi = static_cast<std::int64_t>(m), ni = static_cast<std::int64_t>(n);
            for (std::size_t d = 0; d <= m; ++d)
                for (std::size_t r = 0; r <= m; ++r) {
                    std::uint64_t tail = 0;
                    for (std::size_t ell = std::min(d, r) + 1; ell-- > 0;) {
                        tail += h[(d * sz + r) * sz + ell];
                        const auto bound = bound_H_drl(ni, mi, static_cast<std::int64_t>(d),
                                                       static_cast<std::int64_t>(r), static_cast<std::int64_t>(ell));
                        check("CARD2lem bound", bound >= tail);
                        if (ell == 0) {
                            check("CARD1lem", count_H_dr(ni, mi, static_cast<std::int64_t>(d),
                                                         static_cast<std::int64_t>(r)) == tail);
                            check("CARD2lem equality at 0", bound == tail);
                        }
                    }
                }
        }
    return check.take();
}

VerifyReport verify_moments(const VerifyOptions& opts)
{
    Checker check("moments");
    for (std::int64_t m = 2; m <= 3; ++m)
        for (std::int64_t n = m; n <= 5; ++n) {
            for (double p : kGrid) {
                const double ratio = moment_ratio_exact(n, m, embedding_params(p), Variant::embedding,
                                                        kDefaultScaleGuard, opts.workers);
                check("embedding ratio >= 1", ratio >= 1.0 - 1e-12);
                const auto s = s_bound(n, m, p, kDefaultSplit, BoundMode::exact);
                check("esoteric S dominates ratio", s.s_total >= ratio * (1 - 1e-12));
            }
            for (double p : kGrid)
                for (double q : kGrid) {
                    const auto params = derive_params(p, q);
                    if (!in_admissible_region(params))
                        continue;
                    const double ratio = moment_ratio_exact(n, m, params, Variant::common, kDefaultScaleGuard,
                                                            opts.workers);
                    check("common ratio >= 1", ratio >= 1.0 - 1e-12);
                    const auto table = t_table_exact(n, m, params);
                    CompensatedSum total;
                    for (std::int64_t d = 0; d <= m; ++d)
                        for (std::int64_t r = 0; r <= m; ++r) {
                            const double ex = table[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)];
                            total.add(ex);
                            if (r <= d)
                                check("t_dr <= bound1", ex <= t_dr(n, m, params, d, r, TMode::bound1) * (1 + 1e-12));
                            if (kDefaultSplit * static_cast<double>(m) <= static_cast<double>(r) && r <= d)
                                check("t_dr <= bound2", ex <= t_dr(n, m, params, d, r, TMode::bound2) * (1 + 1e-12));
                        }
                    check("sum of t_dr equals ratio", close(total.value(), ratio, 1e-9));
                }
        }

    std::vector<ModelParams> region;
    for (double p : kGrid)
        for (double q : kGrid)
            if (in_admissible_region(p, q))
                region.push_back(derive_params(p, q));
    region.push_back(derive_params(0.4, 0.6));
    Xoshiro256ss rng(opts.seed ^ 0x5eedULL);
    const std::size_t max_n = std::max<std::size_t>(opts.max_n, 2);
    const std::size_t max_m = std::max<std::size_t>(opts.max_m, 1);
    std::uint64_t done = 0;
    while (done < opts.pairs) {
        const std::size_t n = 2 + rng.below(max_n - 1);
        const std::size_t m = 1 + rng.below(std::min(n, max_m));
        const auto f = random_partial_injection(n, m, rng);
        const auto g = random_partial_injection(n, m, rng);
        const auto prof = classify_components(build_common_edge_graph(f, g));
        if (prof.r > prof.d)
            continue;
        const auto& params = region[done % region.size()];
        ++done;
        const auto mm = static_cast<std::int64_t>(m);
        const double lhs = log_pair_moment(prof, params, Variant::common)
            - 2.0 * static_cast<double>(pairs_of(mm)) * std::log(params.tau);
        const double rhs = log_correlation_bound(static_cast<std::int64_t>(prof.d), static_cast<std::int64_t>(prof.r),
                                                 static_cast<std::int64_t>(prof.ell), mm, params);
        check("correlation bound", lhs <= rhs + 1e-12);
    }
    return check.take();
}

VerifyReport verify_rado(const VerifyOptions& opts)
{
    Checker check("rado");
    for (std::uint64_t n = 0; n < (std::uint64_t{1} << 16); ++n)
        check("encode(decode(n)) = n", ackermann_encode(ackermann_decode(BigInt(n))) == n);

    Xoshiro256ss rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.pairs; ++i) {
        const auto s = random_set(rng, 4);
        check("decode(encode(s)) = s", ackermann_decode(ackermann_encode(s)) == s);
    }

    for (std::uint64_t i = 0; i < opts.pairs; ++i) {
        const auto a = random_set(rng, 4);
        // Half of the pairs are member pairs so both sides of the equivalence occur.
        HereditarilyFiniteSet b = random_set(rng, 4);
        if (i % 2 == 0 && !a.empty())
            b = a.members()[rng.below(a.size())];
        if (a == b)
            continue;
        const bool member = a.contains(b) || b.contains(a);
        check("edge preservation", member == bit_adjacent(ackermann_encode(a), ackermann_encode(b)));
    }

    for (std::uint64_t i = 0; i < opts.pairs; ++i) {
        std::vector<std::uint64_t> u, v;
        for (std::uint64_t x = 0; x <= 30; ++x) {
            const auto roll = rng.below(5);
            if (roll == 0)
                u.push_back(x);
            else if (roll == 1)
                v.push_back(x);
        }
        const auto z = extension_witness(u, v);
        bool ok = true;
        for (auto x : u)
            ok = ok && z > x && bit_adjacent(z, BigInt(x));
        for (auto x : v)
            ok = ok && z > x && !bit_adjacent(z, BigInt(x));
        check("extension witness", ok);
    }
    return check.take();
}

std::vector<VerifyReport> run_verify(const std::string& suite, const VerifyOptions& opts)
{
    std::vector<VerifyReport> out;
    const bool all = suite == "all";
    if (all || suite == "edgegraph")
        out.push_back(verify_edgegraph(opts));
    if (all || suite == "cardinality")
        out.push_back(verify_cardinality(opts));
    if (all || suite == "moments")
        out.push_back(verify_moments(opts));
    if (all || suite == "rado")
        out.push_back(verify_rado(opts));
    if (out.empty())
        throw DomainError("unknown verify suite: " + suite);
    return out;
}

} // namespace isophase
