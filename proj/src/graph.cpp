#include "isophase/graph.hpp"

#include "isophase/errors.hpp"
#include "isophase/rng.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace isophase {

namespace {

void check_order(std::size_t n)
{
    if (n > kMaxVertices)
        throw SizeError("graph order " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxVertices));
}

} // namespace

Graph::Graph(std::size_t n) : n_(n)
{
    check_order(n);
    rows_.assign(n, Bitset(n));
    finish();
}

void Graph::add_edge_unchecked(Vertex a, Vertex b)
{
    rows_[a].set(b);
    rows_[b].set(a);
}

void Graph::finish()
{
    co_rows_.assign(n_, Bitset(n_));
    for (std::size_t v = 0; v < n_; ++v) {
        co_rows_[v].set_all();
        co_rows_[v].subtract(rows_[v]);
        co_rows_[v].reset(v);
    }
}

Graph Graph::complete(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return std::move(b).build();
}

Graph Graph::path(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph Graph::cycle(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    if (n >= 3)
        b.add_edge(static_cast<Vertex>(n - 1), 0);
    return std::move(b).build();
}

Graph Graph::star(std::size_t leaves)
{
    GraphBuilder b(leaves + 1);
    for (Vertex i = 1; i <= leaves; ++i)
        b.add_edge(0, i);
    return std::move(b).build();
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    GraphBuilder b(n);
    for (auto [i, j] : edges)
        b.add_edge(i, j);
    return std::move(b).build();
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& r : rows_)
        twice += r.count();
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex i = 0; i < n_; ++i)
        for (auto j = rows_[i].find_next(i); j != Bitset::npos; j = rows_[i].find_next(j))
            out.emplace_back(i, static_cast<Vertex>(j));
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n)
{
    check_order(n);
    g_.n_ = n;
    g_.rows_.assign(n, Bitset(n));
}

GraphBuilder& GraphBuilder::add_edge(Vertex a, Vertex b)
{
    if (a >= g_.n_ || b >= g_.n_)
        throw InvalidSubsetError("edge endpoint out of range");
    if (a == b)
        throw InvalidSubsetError("self-loop at vertex " + std::to_string(a));
    g_.add_edge_unchecked(a, b);
    return *this;
}

Graph GraphBuilder::build() &&
{
    g_.finish();
    return std::move(g_);
}

Graph sample_gnp(const EdgeLaw& law)
{
    if (!(law.p >= 0.0 && law.p <= 1.0))
        throw ParameterError("edge probability must lie in [0, 1]");
    GraphBuilder b(law.n);
    Xoshiro256ss rng(law.seed);
    for (Vertex i = 0; i < law.n; ++i)
        for (Vertex j = i + 1; j < law.n; ++j)
            if (rng.uniform() < law.p)
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s)
{
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (s[a] >= g.order())
            throw InvalidSubsetError("subset vertex " + std::to_string(s[a]) + " out of range");
        if (a > 0 && s[a] <= s[a - 1])
            throw InvalidSubsetError("subset must be strictly increasing");
    }
    GraphBuilder b(s.size());
    for (Vertex a = 0; a < s.size(); ++a)
        for (Vertex c = a + 1; c < s.size(); ++c)
            if (g.adjacent(s[a], s[c]))
                b.add_edge(a, c);
    return std::move(b).build();
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> f)
{
    const std::size_t n = g.order();
    if (h.order() != n || f.size() != n)
        throw InvalidMapError("isomorphism check needs equal orders and a full map");
    Bitset seen(n);
    for (auto v : f) {
        if (v >= n || seen.test(v))
            throw InvalidMapError("map is not a permutation");
        seen.set(v);
    }
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) != h.adjacent(f[i], f[j]))
                return false;
    return true;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw InvalidMapError("relabelling must cover every vertex");
    GraphBuilder b(g.order());
    for (auto [i, j] : g.edges())
        b.add_edge(perm[i], perm[j]);
    return std::move(b).build();
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << '\n';
    for (auto [i, j] : g.edges())
        out << i << ' ' << j << '\n';
}

Graph read_graph(std::istream& in)
{
    long long n = -1;
    if (!(in >> n) || n < 0)
        throw ParseError("graph text must start with a nonnegative vertex count");
    if (static_cast<unsigned long long>(n) > kMaxVertices)
        throw SizeError("graph order exceeds the configured limit");
    GraphBuilder b(static_cast<std::size_t>(n));
    long long i = 0;
    long long j = 0;
    while (in >> i) {
        if (!(in >> j))
            throw ParseError("dangling edge endpoint");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError("edge endpoint out of range");
        if (i >= j)
            throw ParseError("edge lines must satisfy i < j");
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    if (!in.eof())
        throw ParseError("unexpected token in graph text");
    return std::move(b).build();
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

std::string to_text(const Graph& g)
{
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

} // namespace isophase
