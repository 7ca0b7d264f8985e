#include "isophase/isosearch.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace isophase {

namespace {

struct BudgetAbort {};

std::vector<Vertex> by_descending_degree(const Graph& g)
{
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

const Bitset& compatible(const Graph& x, const Graph& y, Vertex u, Vertex w, Vertex v)
{
    return x.adjacent(u, w) ? y.neighbours(v) : y.non_neighbours(v);
}

// Depth-first search over pattern vertices in a static order. Domains at
// depth d hold, for every pattern vertex not yet placed, the host vertices
// consistent (edges and non-edges) with all placements so far.
class EmbedSearch {
public:
    EmbedSearch(const Graph& x, const Graph& y, std::uint64_t budget, bool counting)
        : x_(x), y_(y), m_(x.order()), budget_(budget), counting_(counting),
          order_(by_descending_degree(x)), image_(m_, 0)
    {
        domains_.assign(m_ + 1, std::vector<Bitset>(m_, Bitset(y.order())));
        for (std::size_t i = 0; i < m_; ++i)
            domains_[0][i].set_all();
    }

    void run() { descend(0); }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const BigInt& count() const noexcept { return count_; }
    bool found() const noexcept { return found_; }
    Injection witness() const { return Injection{m_, y_.order(), image_}; }

private:
    void tick(std::uint64_t k = 1)
    {
        nodes_ += k;
        if (nodes_ > budget_)
            throw BudgetAbort{};
    }

    void descend(std::size_t depth)
    {
        if (depth == m_) {
            found_ = true;
            count_ += 1;
            return;
        }
        const Vertex u = order_[depth];
        const Bitset& dom = domains_[depth][depth];
        if (counting_ && depth + 1 == m_) {
            const auto c = dom.count();
            tick(c);
            count_ += c;
            if (c > 0)
                found_ = true;
            return;
        }
        for (auto v = dom.find_first(); v != Bitset::npos; v = dom.find_next(v)) {
            tick();
            image_[u] = static_cast<Vertex>(v);
            bool wiped = false;
            for (std::size_t i = depth + 1; i < m_; ++i) {
                const Vertex w = order_[i];
                auto& next = domains_[depth + 1][i];
                next.assign_and(domains_[depth][i], compatible(x_, y_, u, w, static_cast<Vertex>(v)));
                if (next.none()) {
                    wiped = true;
                    break;
                }
            }
            if (wiped)
                continue;
            descend(depth + 1);
            if (found_ && !counting_)
                return;
        }
    }

    const Graph& x_;
    const Graph& y_;
    std::size_t m_;
    std::uint64_t budget_;
    bool counting_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::vector<std::vector<Bitset>> domains_;
    std::uint64_t nodes_ = 0;
    BigInt count_ = 0;
    bool found_ = false;
};

// Branch and bound over partial maps. x vertices are decided in a static
// order, each either mapped to a compatible y vertex or skipped, so every
// partial injection with domain size m is reached by exactly one path.
// Undecided x vertices with equal domains form a label class; the sum over
// classes of min(class size, domain size) bounds how many more can be mapped.
class CommonSearch {
public:
    CommonSearch(const Graph& x, const Graph& y, std::size_t m, std::uint64_t budget, bool counting)
        : x_(x), y_(y), n_(x.order()), m_(m), budget_(budget), counting_(counting),
          order_(by_descending_degree(x))
    {
        domains_.assign(n_ + 1, std::vector<Bitset>(n_, Bitset(y.order())));
        for (std::size_t i = 0; i < n_; ++i)
            domains_[0][i].set_all();
        mapped_.reserve(m);
        class_seen_.assign(n_, false);
    }

    void run() { descend(0); }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const BigInt& count() const noexcept { return count_; }
    bool found() const noexcept { return found_; }
    const PartialInjection& witness() const noexcept { return witness_; }

private:
    void tick(std::uint64_t k = 1)
    {
        nodes_ += k;
        if (nodes_ > budget_)
            throw BudgetAbort{};
    }

    void record(const std::vector<std::pair<Vertex, Vertex>>& pairs)
    {
        if (found_)
            return;
        auto sorted = pairs;
        std::sort(sorted.begin(), sorted.end());
        witness_.n = std::max(n_, y_.order());
        witness_.domain.clear();
        witness_.image.clear();
        for (auto [a, b] : sorted) {
            witness_.domain.push_back(a);
            witness_.image.push_back(b);
        }
        found_ = true;
    }

    std::size_t bound(std::size_t pos)
    {
        const auto& doms = domains_[pos];
        std::size_t extra = 0;
        std::fill(class_seen_.begin() + static_cast<std::ptrdiff_t>(pos), class_seen_.end(), false);
        for (std::size_t i = pos; i < n_; ++i) {
            if (class_seen_[i])
                continue;
            const auto size = doms[i].count();
            if (size == 0)
                continue;
            std::size_t members = 1;
            for (std::size_t k = i + 1; k < n_; ++k) {
                if (!class_seen_[k] && doms[k] == doms[i]) {
                    class_seen_[k] = true;
                    ++members;
                }
            }
            extra += std::min(members, size);
        }
        return mapped_.size() + extra;
    }

    void descend(std::size_t pos)
    {
        const std::size_t k = mapped_.size();
        if (k == m_) {
            count_ += 1;
            record(mapped_);
            return;
        }
        if (k + (n_ - pos) < m_)
            return;
        if (bound(pos) < m_)
            return;

        const auto& doms = domains_[pos];
        if (k + 1 == m_) {
            if (counting_) {
                std::uint64_t total = 0;
                for (std::size_t i = pos; i < n_; ++i)
                    total += doms[i].count();
                tick(total);
                count_ += total;
                if (total > 0 && !found_) {
                    for (std::size_t i = pos; i < n_; ++i) {
                        if (doms[i].any()) {
                            mapped_.emplace_back(order_[i], static_cast<Vertex>(doms[i].find_first()));
                            record(mapped_);
                            mapped_.pop_back();
                            break;
                        }
                    }
                }
                return;
            }
            for (std::size_t i = pos; i < n_; ++i) {
                tick();
                if (doms[i].any()) {
                    mapped_.emplace_back(order_[i], static_cast<Vertex>(doms[i].find_first()));
                    count_ += 1;
                    record(mapped_);
                    mapped_.pop_back();
                    return;
                }
            }
            return;
        }

        const Vertex u = order_[pos];
        const Bitset& dom = doms[pos];
        for (auto v = dom.find_first(); v != Bitset::npos; v = dom.find_next(v)) {
            tick();
            for (std::size_t i = pos + 1; i < n_; ++i)
                domains_[pos + 1][i].assign_and(doms[i], compatible(x_, y_, u, order_[i], static_cast<Vertex>(v)));
            mapped_.emplace_back(u, static_cast<Vertex>(v));
            descend(pos + 1);
            mapped_.pop_back();
            if (found_ && !counting_)
                return;
        }

        tick();
        for (std::size_t i = pos + 1; i < n_; ++i)
            domains_[pos + 1][i].assign(doms[i]);
        descend(pos + 1);
    }

    const Graph& x_;
    const Graph& y_;
    std::size_t n_;
    std::size_t m_;
    std::uint64_t budget_;
    bool counting_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Bitset>> domains_;
    std::vector<std::pair<Vertex, Vertex>> mapped_;
    std::vector<bool> class_seen_;
    std::uint64_t nodes_ = 0;
    BigInt count_ = 0;
    bool found_ = false;
    PartialInjection witness_;
};

void check_embed_sizes(const Graph& x, const Graph& y)
{
    if (x.order() > y.order())
        throw SizeError("pattern has more vertices than the host");
}

void check_common_sizes(const Graph& x, const Graph& y, std::size_t m)
{
    if (m > x.order() || m > y.order())
        throw SizeError("common subgraph size exceeds a graph order");
}

} // namespace

std::string_view to_string(SearchStatus s) noexcept
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::exhausted_none:
        return "exhausted-none";
    case SearchStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

BudgetExceededError::BudgetExceededError(BigInt partial, std::uint64_t nodes)
    : Error("node budget exceeded after " + std::to_string(nodes) + " nodes"),
      partial_(std::move(partial)), nodes_(nodes)
{
}

bool is_partial_isomorphism(const Graph& x, const Graph& y, const PartialInjection& f)
{
    f.validate();
    for (auto v : f.domain)
        if (v >= x.order())
            throw InvalidMapError("domain vertex outside x");
    for (auto v : f.image)
        if (v >= y.order())
            throw InvalidMapError("image vertex outside y");
    const auto m = f.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (x.adjacent(f.domain[a], f.domain[b]) != y.adjacent(f.image[a], f.image[b]))
                return false;
    return true;
}

EmbedOutcome embed_exists(const Graph& x, const Graph& y, std::uint64_t budget)
{
    check_embed_sizes(x, y);
    EmbedSearch s(x, y, budget, false);
    EmbedOutcome out;
    try {
        s.run();
    } catch (const BudgetAbort&) {
        out.status = SearchStatus::budget_exceeded;
        out.nodes = s.nodes();
        return out;
    }
    out.nodes = s.nodes();
    if (s.found()) {
        out.status = SearchStatus::found;
        out.witness = s.witness();
    }
    return out;
}

CountResult embed_count(const Graph& x, const Graph& y, std::uint64_t budget)
{
    check_embed_sizes(x, y);
    EmbedSearch s(x, y, budget, true);
    try {
        s.run();
    } catch (const BudgetAbort&) {
        throw BudgetExceededError(s.count(), s.nodes());
    }
    return CountResult{s.count(), s.nodes()};
}

CommonOutcome common_exists(const Graph& x, const Graph& y, std::size_t m, std::uint64_t budget)
{
    check_common_sizes(x, y, m);
    CommonSearch s(x, y, m, budget, false);
    CommonOutcome out;
    try {
        s.run();
    } catch (const BudgetAbort&) {
        out.status = SearchStatus::budget_exceeded;
        out.nodes = s.nodes();
        return out;
    }
    out.nodes = s.nodes();
    if (s.found()) {
        out.status = SearchStatus::found;
        out.witness = s.witness();
    }
    return out;
}

CountResult common_count(const Graph& x, const Graph& y, std::size_t m, std::uint64_t budget)
{
    check_common_sizes(x, y, m);
    CommonSearch s(x, y, m, budget, true);
    try {
        s.run();
    } catch (const BudgetAbort&) {
        throw BudgetExceededError(s.count(), s.nodes());
    }
    return CountResult{s.count(), s.nodes()};
}

MaxCommonResult max_common_size(const Graph& x, const Graph& y, std::uint64_t budget)
{
    MaxCommonResult res;
    const std::size_t top = std::min(x.order(), y.order());
    res.witness.n = std::max(x.order(), y.order());
    for (std::size_t m = top; m >= 1; --m) {
        auto out = common_exists(x, y, m, budget);
        res.nodes += out.nodes;
        if (out.status == SearchStatus::found) {
            res.best = m;
            res.witness = *out.witness;
            return res;
        }
        if (out.status == SearchStatus::exhausted_none)
            res.smallest_refuted = m;
        else
            res.inconclusive.push_back(m);
    }
    return res;
}

} // namespace isophase
