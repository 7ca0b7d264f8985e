#pragma once

#include "isophase/bitset.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isophase {

/// Largest vertex count accepted by any constructor or sampler.
inline constexpr std::size_t kMaxVertices = 4096;

using Vertex = std::uint32_t;

/// Simple undirected graph on vertices 0..n-1 stored as symmetric bit rows.
/// Values are immutable once built; use GraphBuilder to assemble edges.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph star(std::size_t leaves);
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;
    std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

    bool adjacent(Vertex a, Vertex b) const noexcept { return rows_[a].test(b); }
    const Bitset& neighbours(Vertex v) const noexcept { return rows_[v]; }
    /// Vertices other than v that are not adjacent to v.
    const Bitset& non_neighbours(Vertex v) const noexcept { return co_rows_[v]; }

    /// Edges as (i, j) with i < j in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;

    void add_edge_unchecked(Vertex a, Vertex b);
    void finish();

    std::size_t n_ = 0;
    std::vector<Bitset> rows_;
    std::vector<Bitset> co_rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    /// Adds {a, b}; rejects self-loops and out-of-range endpoints.
    GraphBuilder& add_edge(Vertex a, Vertex b);
    Graph build() &&;

private:
    Graph g_;
};

struct EdgeLaw {
    std::size_t n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

/// G(n, p) sample: one uniform draw per unordered pair in lexicographic order
/// from xoshiro256** seeded through splitmix64.
Graph sample_gnp(const EdgeLaw& law);

/// Restriction of g to the strictly increasing subset s, relabelled by rank.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// True iff f (f[i] = image of i) is a graph isomorphism from g onto h.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> f);

/// Same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Fixture text format: first line "n", then one "i j" line per edge, i < j.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);
std::string to_text(const Graph& g);

} // namespace isophase
