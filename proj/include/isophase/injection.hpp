#pragma once

#include "isophase/graph.hpp"
#include "isophase/rng.hpp"

#include <cstddef>
#include <vector>

namespace isophase {

/// Total injection {0..m-1} -> {0..n-1}; image[u] = f(u).
struct Injection {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Vertex> image;

    /// Throws InvalidMapError unless image has m distinct entries below n.
    void validate() const;

    friend bool operator==(const Injection&, const Injection&) = default;
};

/// Injection from a size-m subset of {0..n-1} into {0..n-1};
/// image[i] is the image of domain[i].
struct PartialInjection {
    std::size_t n = 0;
    std::vector<Vertex> domain;
    std::vector<Vertex> image;

    std::size_t size() const noexcept { return domain.size(); }
    void validate() const;

    friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
};

/// Every injection in lexicographic order of the image array.
std::vector<Injection> all_injections(std::size_t m, std::size_t n);

/// Every partial injection with domain size m, ordered by domain (lexicographic)
/// and then by image.
std::vector<PartialInjection> all_partial_injections(std::size_t n, std::size_t m);

Injection random_injection(std::size_t m, std::size_t n, Xoshiro256ss& rng);
PartialInjection random_partial_injection(std::size_t n, std::size_t m, Xoshiro256ss& rng);

/// Sorted range of a map.
std::vector<Vertex> range_of(const Injection& f);
std::vector<Vertex> range_of(const PartialInjection& f);

} // namespace isophase
