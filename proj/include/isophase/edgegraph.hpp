#pragma once

#include "isophase/graph.hpp"
#include "isophase/injection.hpp"
#include "isophase/params.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace isophase {

/// Unordered vertex pair stored with a < b.
struct VertexPair {
    Vertex a = 0;
    Vertex b = 0;

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

VertexPair make_pair_canonical(Vertex u, Vertex v);

enum class PairKind { total, partial };

/// Overlap of two (partial) injections f, g.
struct OverlapStats {
    std::size_t m = 0;
    std::size_t d = 0;    ///< |Df ∩ Dg|
    std::size_t r = 0;    ///< |Rf ∩ Rg|
    std::size_t ell = 0;  ///< vertices u in Df ∩ Dg with f(u) = g(u)
    std::size_t zcal = 0; ///< pairs e in Df ∩ Dg with f(e) = g(e) as sets
};

/// Bipartite graph linking each domain pair e to its images f(e) and g(e).
struct EdgeGraph {
    PairKind kind = PairKind::total;
    std::vector<VertexPair> left;
    std::vector<VertexPair> right;
    /// (left index, right index), sorted and distinct.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    OverlapStats overlap;
};

EdgeGraph build_embedding_edge_graph(const Injection& f, const Injection& g, std::size_t m, std::size_t n);
EdgeGraph build_common_edge_graph(const PartialInjection& f, const PartialInjection& g);

/// Component key: j left vertices, k right vertices, cycle or not.
struct ComponentClass {
    unsigned j = 0;
    unsigned k = 0;
    bool cycle = false;

    friend auto operator<=>(const ComponentClass&, const ComponentClass&) = default;
};

struct ComponentProfile {
    PairKind kind = PairKind::total;
    /// Component counts per class; absent classes are zero.
    std::map<ComponentClass, std::size_t> census;
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t ell = 0;
    std::size_t zcal = 0;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::size_t left_degree_one = 0;
    std::size_t right_degree_one = 0;

    /// c(j,k), paths and cycles together.
    std::size_t c(unsigned j, unsigned k) const;
    std::size_t cycles(unsigned j) const;
    std::size_t paths_jj(unsigned j) const;
    std::size_t components() const;
};

/// Union-find census. Throws StructuralError on out-of-range edges, edges
/// between mismatched overlap data or any vertex of degree above 2.
ComponentProfile classify_components(const EdgeGraph& t);

enum class Variant { embedding, common };

/// log E J_f J_g = sum over classes of c(j,k) ln tau_{j,k}; the embedding
/// variant uses q = 1/2 whatever params.q holds.
double log_pair_moment(const ComponentProfile& profile, const ModelParams& params, Variant variant);
double pair_moment(const ComponentProfile& profile, const ModelParams& params, Variant variant);

/// Text listing of left vertices, right vertices and edges.
std::string dump_edge_graph(const EdgeGraph& t);

} // namespace isophase
