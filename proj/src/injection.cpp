#include "isophase/injection.hpp"

#include "isophase/errors.hpp"

#include <algorithm>
#include <numeric>

namespace isophase {

namespace {

void check_distinct_below(const std::vector<Vertex>& values, std::size_t n, const char* what)
{
    std::vector<bool> seen(n, false);
    for (auto v : values) {
        if (v >= n)
            throw InvalidMapError(std::string(what) + " entry out of range");
        if (seen[v])
            throw InvalidMapError(std::string(what) + " entries must be distinct");
        seen[v] = true;
    }
}

// Visits every length-m arrangement of distinct values in 0..n-1 in lexicographic order.
template <typename Visit>
void arrangements(std::size_t m, std::size_t n, Visit&& visit)
{
    std::vector<Vertex> cur(m);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == m) {
            visit(cur);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = true;
            cur[depth] = v;
            self(self, depth + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
}

template <typename Visit>
void subsets(std::size_t m, std::size_t n, Visit&& visit)
{
    if (m > n)
        return;
    std::vector<Vertex> s(m);
    std::iota(s.begin(), s.end(), Vertex{0});
    while (true) {
        visit(s);
        std::size_t i = m;
        while (i > 0 && s[i - 1] == n - m + i - 1)
            --i;
        if (i == 0)
            return;
        ++s[i - 1];
        for (std::size_t k = i; k < m; ++k)
            s[k] = s[k - 1] + 1;
    }
}

} // namespace

void Injection::validate() const
{
    if (image.size() != m)
        throw InvalidMapError("injection image has the wrong length");
    if (m > n)
        throw InvalidMapError("injection needs m <= n");
    check_distinct_below(image, n, "injection image");
}

void PartialInjection::validate() const
{
    if (domain.size() != image.size())
        throw InvalidMapError("domain and image lengths differ");
    if (domain.size() > n)
        throw InvalidMapError("partial injection larger than its ground set");
    for (std::size_t i = 0; i < domain.size(); ++i) {
        if (domain[i] >= n)
            throw InvalidMapError("domain entry out of range");
        if (i > 0 && domain[i] <= domain[i - 1])
            throw InvalidMapError("domain must be strictly increasing");
    }
    check_distinct_below(image, n, "partial injection image");
}

std::vector<Injection> all_injections(std::size_t m, std::size_t n)
{
    std::vector<Injection> out;
    if (m > n)
        return out;
    arrangements(m, n, [&](const std::vector<Vertex>& img) { out.push_back(Injection{m, n, img}); });
    return out;
}

std::vector<PartialInjection> all_partial_injections(std::size_t n, std::size_t m)
{
    std::vector<PartialInjection> out;
    if (m > n)
        return out;
    std::vector<std::vector<Vertex>> images;
    arrangements(m, n, [&](const std::vector<Vertex>& img) { images.push_back(img); });
    subsets(m, n, [&](const std::vector<Vertex>& dom) {
        for (const auto& img : images)
            out.push_back(PartialInjection{n, dom, img});
    });
    return out;
}

Injection random_injection(std::size_t m, std::size_t n, Xoshiro256ss& rng)
{
    if (m > n)
        throw SizeError("random injection needs m <= n");
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t i = 0; i < m; ++i) {
        const auto k = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[k]);
    }
    pool.resize(m);
    return Injection{m, n, std::move(pool)};
}

PartialInjection random_partial_injection(std::size_t n, std::size_t m, Xoshiro256ss& rng)
{
    auto dom = random_injection(m, n, rng).image;
    std::sort(dom.begin(), dom.end());
    auto img = random_injection(m, n, rng).image;
    return PartialInjection{n, std::move(dom), std::move(img)};
}

std::vector<Vertex> range_of(const Injection& f)
{
    auto r = f.image;
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<Vertex> range_of(const PartialInjection& f)
{
    auto r = f.image;
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace isophase
