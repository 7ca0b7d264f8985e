#pragma once

#include "isophase/combinatorics.hpp"
#include "isophase/errors.hpp"
#include "isophase/graph.hpp"
#include "isophase/injection.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace isophase {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class SearchStatus { found, exhausted_none, budget_exceeded };

std::string_view to_string(SearchStatus s) noexcept;

/// Three-valued solver answer. witness is present iff status == found.
template <typename Witness>
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

using EmbedOutcome = SearchOutcome<Injection>;
/// Witness domain is the vertex set of x used, its sorted image the one of y.
using CommonOutcome = SearchOutcome<PartialInjection>;

struct CountResult {
    BigInt value;
    std::uint64_t nodes = 0;
};

/// Thrown by the counting solvers when the node budget runs out.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(BigInt partial, std::uint64_t nodes);

    const BigInt& partial_count() const noexcept { return partial_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    BigInt partial_;
    std::uint64_t nodes_;
};

/// J_f: every pair inside the domain keeps its adjacency under f.
bool is_partial_isomorphism(const Graph& x, const Graph& y, const PartialInjection& f);

/// Induced embedding of x (m vertices) into y (n vertices).
EmbedOutcome embed_exists(const Graph& x, const Graph& y, std::uint64_t budget = kDefaultNodeBudget);
CountResult embed_count(const Graph& x, const Graph& y, std::uint64_t budget = kDefaultNodeBudget);

/// Size-m common induced subgraph of x and y.
CommonOutcome common_exists(const Graph& x, const Graph& y, std::size_t m,
                            std::uint64_t budget = kDefaultNodeBudget);
CountResult common_count(const Graph& x, const Graph& y, std::size_t m,
                         std::uint64_t budget = kDefaultNodeBudget);

struct MaxCommonResult {
    /// Largest m with a verified common subgraph.
    std::size_t best = 0;
    /// Smallest m refuted by exhaustive search, if any.
    std::optional<std::size_t> smallest_refuted;
    /// Sizes where the budget ran out before a verdict.
    std::vector<std::size_t> inconclusive;
    PartialInjection witness;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return inconclusive.empty(); }
};

/// Descending scan over m with one exhaustive search per level; the budget
/// applies to each level separately.
MaxCommonResult max_common_size(const Graph& x, const Graph& y, std::uint64_t budget = kDefaultNodeBudget);

} // namespace isophase
