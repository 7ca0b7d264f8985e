#include "isophase/edgegraph.hpp"

#include "isophase/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace isophase {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

std::uint32_t index_of(const std::vector<VertexPair>& sorted, VertexPair e)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    return static_cast<std::uint32_t>(it - sorted.begin());
}

void sort_unique(std::vector<VertexPair>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Domain pairs of one map with their image pairs.
struct PairImages {
    std::vector<VertexPair> from;
    std::vector<VertexPair> to;
};

PairImages pair_images(const std::vector<Vertex>& domain, const std::vector<Vertex>& image)
{
    PairImages out;
    const auto m = domain.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            out.from.push_back(make_pair_canonical(domain[a], domain[b]));
            out.to.push_back(make_pair_canonical(image[a], image[b]));
        }
    return out;
}

EdgeGraph assemble(PairKind kind, const PairImages& pf, const PairImages& pg)
{
    EdgeGraph t;
    t.kind = kind;
    t.left = pf.from;
    t.left.insert(t.left.end(), pg.from.begin(), pg.from.end());
    sort_unique(t.left);
    t.right = pf.to;
    t.right.insert(t.right.end(), pg.to.begin(), pg.to.end());
    sort_unique(t.right);
    for (const auto* pi : {&pf, &pg})
        for (std::size_t i = 0; i < pi->from.size(); ++i)
            t.edges.emplace_back(index_of(t.left, pi->from[i]), index_of(t.right, pi->to[i]));
    std::sort(t.edges.begin(), t.edges.end());
    t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
    return t;
}

OverlapStats overlap_of(const std::vector<Vertex>& df, const std::vector<Vertex>& imf,
                        const std::vector<Vertex>& dg, const std::vector<Vertex>& img, std::size_t n)
{
    OverlapStats s;
    s.m = df.size();
    // Position of each domain vertex in g, or npos.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos_g(n, none);
    for (std::size_t i = 0; i < dg.size(); ++i)
        pos_g[dg[i]] = i;
    std::vector<bool> in_rg(n, false);
    for (auto v : img)
        in_rg[v] = true;
    for (auto v : imf)
        if (in_rg[v])
            ++s.r;

    std::vector<std::pair<std::size_t, std::size_t>> shared; // (index in f, index in g)
    for (std::size_t i = 0; i < df.size(); ++i)
        if (pos_g[df[i]] != none)
            shared.emplace_back(i, pos_g[df[i]]);
    s.d = shared.size();
    for (auto [i, k] : shared)
        if (imf[i] == img[k])
            ++s.ell;
    for (std::size_t a = 0; a < shared.size(); ++a)
        for (std::size_t b = a + 1; b < shared.size(); ++b) {
            const auto ef = make_pair_canonical(imf[shared[a].first], imf[shared[b].first]);
            const auto eg = make_pair_canonical(img[shared[a].second], img[shared[b].second]);
            if (ef == eg)
                ++s.zcal;
        }
    return s;
}

} // namespace

VertexPair make_pair_canonical(Vertex u, Vertex v)
{
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

EdgeGraph build_embedding_edge_graph(const Injection& f, const Injection& g, std::size_t m, std::size_t n)
{
    if (f.m != m || g.m != m || f.n != n || g.n != n)
        throw InvalidMapError("injections do not match the stated (m, n)");
    f.validate();
    g.validate();
    std::vector<Vertex> u(m);
    std::iota(u.begin(), u.end(), Vertex{0});
    auto t = assemble(PairKind::total, pair_images(u, f.image), pair_images(u, g.image));
    t.overlap = overlap_of(u, f.image, u, g.image, n);
    return t;
}

EdgeGraph build_common_edge_graph(const PartialInjection& f, const PartialInjection& g)
{
    f.validate();
    g.validate();
    if (f.n != g.n)
        throw InvalidMapError("partial injections on different ground sets");
    if (f.size() != g.size())
        throw InvalidMapError("partial injections of different sizes");
    auto t = assemble(PairKind::partial, pair_images(f.domain, f.image), pair_images(g.domain, g.image));
    t.overlap = overlap_of(f.domain, f.image, g.domain, g.image, f.n);
    return t;
}

std::size_t ComponentProfile::c(unsigned j, unsigned k) const
{
    std::size_t total = 0;
    for (bool cyc : {false, true})
        if (auto it = census.find(ComponentClass{j, k, cyc}); it != census.end())
            total += it->second;
    return total;
}

std::size_t ComponentProfile::cycles(unsigned j) const
{
    auto it = census.find(ComponentClass{j, j, true});
    return it == census.end() ? 0 : it->second;
}

std::size_t ComponentProfile::paths_jj(unsigned j) const
{
    auto it = census.find(ComponentClass{j, j, false});
    return it == census.end() ? 0 : it->second;
}

std::size_t ComponentProfile::components() const
{
    std::size_t total = 0;
    for (const auto& [cls, count] : census)
        total += count;
    return total;
}

ComponentProfile classify_components(const EdgeGraph& t)
{
    const std::size_t nl = t.left.size();
    const std::size_t nr = t.right.size();
    std::vector<unsigned> degree(nl + nr, 0);
    UnionFind uf(nl + nr);
    for (auto [a, b] : t.edges) {
        if (a >= nl || b >= nr)
            throw StructuralError("edge endpoint out of range");
        if (++degree[a] > 2 || ++degree[nl + b] > 2)
            throw StructuralError("vertex of degree above 2");
        uf.unite(a, nl + b);
    }

    struct Tally {
        unsigned j = 0;
        unsigned k = 0;
        bool all_two = true;
    };
    std::vector<Tally> tally(nl + nr);
    for (std::size_t v = 0; v < nl + nr; ++v) {
        if (degree[v] == 0)
            throw StructuralError("isolated vertex in edge graph");
        auto& c = tally[uf.find(v)];
        (v < nl ? c.j : c.k) += 1;
        if (degree[v] != 2)
            c.all_two = false;
    }

    ComponentProfile p;
    p.kind = t.kind;
    for (std::size_t v = 0; v < nl + nr; ++v)
        if (uf.find(v) == v)
            ++p.census[ComponentClass{tally[v].j, tally[v].k, tally[v].all_two}];
    p.m = t.overlap.m;
    p.d = t.overlap.d;
    p.r = t.overlap.r;
    p.ell = t.overlap.ell;
    p.zcal = t.overlap.zcal;
    p.left_size = nl;
    p.right_size = nr;
    for (std::size_t v = 0; v < nl; ++v)
        p.left_degree_one += degree[v] == 1;
    for (std::size_t v = nl; v < nl + nr; ++v)
        p.right_degree_one += degree[v] == 1;
    return p;
}

double log_pair_moment(const ComponentProfile& profile, const ModelParams& params, Variant variant)
{
    const double q = variant == Variant::embedding ? 0.5 : params.q;
    if (!(params.p > 0.0 && params.p < 1.0) || !(q > 0.0 && q < 1.0))
        throw ParameterError("edge probabilities must lie strictly between 0 and 1");
    ModelParams eff = params;
    eff.q = q;
    double acc = 0.0;
    for (const auto& [cls, count] : profile.census)
        acc += static_cast<double>(count) * eff.log_tau_jk(static_cast<int>(cls.j), static_cast<int>(cls.k));
    return acc;
}

double pair_moment(const ComponentProfile& profile, const ModelParams& params, Variant variant)
{
    return std::exp(log_pair_moment(profile, params, variant));
}

std::string dump_edge_graph(const EdgeGraph& t)
{
    std::ostringstream os;
    os << (t.kind == PairKind::total ? "total" : "partial") << '\n';
    os << "left " << t.left.size() << '\n';
    for (std::size_t i = 0; i < t.left.size(); ++i)
        os << "  L" << i << " {" << t.left[i].a << ',' << t.left[i].b << "}\n";
    os << "right " << t.right.size() << '\n';
    for (std::size_t i = 0; i < t.right.size(); ++i)
        os << "  R" << i << " {" << t.right[i].a << ',' << t.right[i].b << "}\n";
    os << "edges " << t.edges.size() << '\n';
    for (auto [a, b] : t.edges)
        os << "  L" << a << " R" << b << '\n';
    os << "overlap d=" << t.overlap.d << " r=" << t.overlap.r << " ell=" << t.overlap.ell
       << " zcal=" << t.overlap.zcal << '\n';
    return os.str();
}

} // namespace isophase
