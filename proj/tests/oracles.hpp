#pragma once

// Brute-force reference computations. They touch the library only through
// Graph::order / Graph::adjacent and never call the solvers or moment code.

#include "isophase/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using isophase::Graph;
using isophase::Vertex;

inline std::vector<std::vector<int>> subsets_of_size(int n, int k)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u)
                s.push_back(i);
        out.push_back(s);
    }
    return out;
}

/// Ordered arrangements of k distinct values from 0..n-1.
inline std::vector<std::vector<int>> arrangements(int n, int k)
{
    std::vector<std::vector<int>> out;
    for (const auto& s : subsets_of_size(n, k)) {
        auto p = s;
        do
            out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

inline bool preserves(const Graph& x, const Graph& y, const std::vector<int>& dom, const std::vector<int>& img)
{
    for (std::size_t a = 0; a < dom.size(); ++a)
        for (std::size_t b = a + 1; b < dom.size(); ++b)
            if (x.adjacent(static_cast<Vertex>(dom[a]), static_cast<Vertex>(dom[b]))
                != y.adjacent(static_cast<Vertex>(img[a]), static_cast<Vertex>(img[b])))
                return false;
    return true;
}

inline std::uint64_t embed_count(const Graph& x, const Graph& y)
{
    const int m = static_cast<int>(x.order());
    std::vector<int> dom(static_cast<std::size_t>(m));
    std::iota(dom.begin(), dom.end(), 0);
    std::uint64_t c = 0;
    for (const auto& img : arrangements(static_cast<int>(y.order()), m))
        c += preserves(x, y, dom, img);
    return c;
}

inline std::uint64_t common_count(const Graph& x, const Graph& y, int m)
{
    std::uint64_t c = 0;
    const auto imgs = arrangements(static_cast<int>(y.order()), m);
    for (const auto& dom : subsets_of_size(static_cast<int>(x.order()), m))
        for (const auto& img : imgs)
            c += preserves(x, y, dom, img);
    return c;
}

inline int max_common(const Graph& x, const Graph& y)
{
    const int top = static_cast<int>(std::min(x.order(), y.order()));
    for (int m = top; m >= 1; --m)
        if (common_count(x, y, m) > 0)
            return m;
    return 0;
}

/// Graph on k vertices from a bit code over the pairs in lexicographic order.
inline Graph graph_from_code(int k, std::uint32_t code)
{
    isophase::GraphBuilder b(static_cast<std::size_t>(k));
    int bit = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++bit)
            if (code >> bit & 1u)
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return std::move(b).build();
}

/// Code of the graph induced on the listed vertices, pairs in list order.
inline std::uint32_t induced_code(const Graph& g, const std::vector<int>& s)
{
    std::uint32_t code = 0;
    int bit = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j, ++bit)
            if (g.adjacent(static_cast<Vertex>(s[i]), static_cast<Vertex>(s[j])))
                code |= 1u << bit;
    return code;
}

/// Moments of N over independent random graphs, tabulated by edge counts so
/// that any edge laws can be applied afterwards. Sums run over every labelled
/// pair of graphs (2^{C(a,2)} * 2^{C(b,2)} of them).
struct PairTable {
    int ex_max = 0;
    int ey_max = 0;
    /// sum_N[eX][eY] = sum of N over graph pairs with those edge counts; sum_N2 likewise.
    std::vector<std::vector<double>> sum_n, sum_n2;

    double expect(double p, double q, bool square) const
    {
        const auto& t = square ? sum_n2 : sum_n;
        double acc = 0.0;
        for (int a = 0; a <= ex_max; ++a)
            for (int b = 0; b <= ey_max; ++b)
                acc += t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                    * std::pow(p, a) * std::pow(1 - p, ex_max - a) * std::pow(q, b) * std::pow(1 - q, ey_max - b);
        return acc;
    }
};

// Number of bijections carrying labelled k-vertex graph code a onto code b.
inline std::vector<std::vector<std::uint32_t>> iso_matrix(int k)
{
    const std::uint32_t types = 1u << (k * (k - 1) / 2);
    std::vector<Graph> g;
    for (std::uint32_t c = 0; c < types; ++c)
        g.push_back(graph_from_code(k, c));
    std::vector<std::vector<std::uint32_t>> iso(types, std::vector<std::uint32_t>(types, 0));
    std::vector<int> id(static_cast<std::size_t>(k));
    std::iota(id.begin(), id.end(), 0);
    for (std::uint32_t a = 0; a < types; ++a)
        for (std::uint32_t b = 0; b < types; ++b) {
            auto perm = id;
            do
                iso[a][b] += preserves(g[a], g[b], id, perm);
            while (std::next_permutation(perm.begin(), perm.end()));
        }
    return iso;
}

// Histogram of induced codes over all k-subsets.
inline std::vector<std::uint32_t> type_histogram(const Graph& g, int k)
{
    std::vector<std::uint32_t> h(1u << (k * (k - 1) / 2), 0);
    for (const auto& s : subsets_of_size(static_cast<int>(g.order()), k))
        ++h[induced_code(g, s)];
    return h;
}

/// Embedding: X on m vertices, Y on n vertices, N = induced embeddings.
/// Common: X and Y on n vertices, N = m-isomorphisms.
inline PairTable pair_table(int n, int m, bool common)
{
    const int nx = common ? n : m;
    const int px = nx * (nx - 1) / 2;
    const int py = n * (n - 1) / 2;
    PairTable t;
    t.ex_max = px;
    t.ey_max = py;
    t.sum_n.assign(static_cast<std::size_t>(px + 1), std::vector<double>(static_cast<std::size_t>(py + 1), 0.0));
    t.sum_n2 = t.sum_n;

    const auto iso = iso_matrix(m);
    const std::size_t types = iso.size();
    std::vector<std::vector<std::uint32_t>> hx;
    for (std::uint32_t c = 0; c < (1u << px); ++c)
        hx.push_back(type_histogram(graph_from_code(nx, c), m));
    // Row sums against iso: w[c][b] = sum_a hx[c][a] iso[a][b].
    std::vector<std::vector<std::uint64_t>> w(hx.size(), std::vector<std::uint64_t>(types, 0));
    for (std::size_t c = 0; c < hx.size(); ++c)
        for (std::size_t a = 0; a < types; ++a)
            if (hx[c][a])
                for (std::size_t b = 0; b < types; ++b)
                    w[c][b] += static_cast<std::uint64_t>(hx[c][a]) * iso[a][b];

    for (std::uint32_t cy = 0; cy < (1u << py); ++cy) {
        const auto hy = type_histogram(graph_from_code(n, cy), m);
        const int ey = std::popcount(cy);
        for (std::uint32_t cx = 0; cx < (1u << px); ++cx) {
            std::uint64_t nn = 0;
            for (std::size_t b = 0; b < types; ++b)
                nn += w[cx][b] * hy[b];
            const auto ex = static_cast<std::size_t>(std::popcount(cx));
            const double v = static_cast<double>(nn);
            t.sum_n[ex][static_cast<std::size_t>(ey)] += v;
            t.sum_n2[ex][static_cast<std::size_t>(ey)] += v * v;
        }
    }
    return t;
}

/// Cached pair tables keyed by (n, m, common).
inline const PairTable& cached_pair_table(int n, int m, bool common)
{
    static std::map<std::tuple<int, int, bool>, PairTable> cache;
    auto key = std::make_tuple(n, m, common);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, pair_table(n, m, common)).first;
    return it->second;
}

/// Pair counts of total injections {0..m-1} -> {0..n-1}, indexed [r][ell]:
/// r = shared range size, ell = points with equal images.
inline std::vector<std::vector<std::uint64_t>> total_overlap_counts(int n, int m)
{
    std::vector<std::vector<std::uint64_t>> h(static_cast<std::size_t>(m + 1),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0));
    const auto maps = arrangements(n, m);
    for (const auto& f : maps)
        for (const auto& g : maps) {
            int r = 0, ell = 0;
            for (int a = 0; a < m; ++a) {
                ell += f[static_cast<std::size_t>(a)] == g[static_cast<std::size_t>(a)];
                r += std::count(g.begin(), g.end(), f[static_cast<std::size_t>(a)]) > 0;
            }
            ++h[static_cast<std::size_t>(r)][static_cast<std::size_t>(ell)];
        }
    return h;
}

/// Pair counts of partial injections with domain size m, indexed [d][r][ell].
inline std::vector<std::vector<std::vector<std::uint64_t>>> partial_overlap_counts(int n, int m)
{
    const auto sz = static_cast<std::size_t>(m + 1);
    std::vector<std::vector<std::vector<std::uint64_t>>> h(
        sz, std::vector<std::vector<std::uint64_t>>(sz, std::vector<std::uint64_t>(sz, 0)));
    struct Map {
        std::vector<int> dom, img;
    };
    std::vector<Map> maps;
    for (const auto& dom : subsets_of_size(n, m))
        for (const auto& img : arrangements(n, m))
            maps.push_back({dom, img});
    for (const auto& f : maps)
        for (const auto& g : maps) {
            int d = 0, r = 0, ell = 0;
            for (int a = 0; a < m; ++a) {
                const auto ua = static_cast<std::size_t>(a);
                r += std::count(g.img.begin(), g.img.end(), f.img[ua]) > 0;
                for (int b = 0; b < m; ++b) {
                    const auto ub = static_cast<std::size_t>(b);
                    if (f.dom[ua] == g.dom[ub]) {
                        ++d;
                        ell += f.img[ua] == g.img[ub];
                    }
                }
            }
            ++h[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)][static_cast<std::size_t>(ell)];
        }
    return h;
}

} // namespace oracle
