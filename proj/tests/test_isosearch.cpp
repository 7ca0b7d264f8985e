#include "doctest.h"
#include "oracles.hpp"

#include "isophase/errors.hpp"
#include "isophase/isosearch.hpp"
#include "isophase/rng.hpp"

#include <vector>

using namespace isophase;

namespace {

Graph single_edge() { return Graph::complete(2); }

bool verifies(const Graph& x, const Graph& y, const Injection& f)
{
    PartialInjection pf{std::max(x.order(), y.order()), {}, f.image};
    for (Vertex i = 0; i < f.m; ++i)
        pf.domain.push_back(i);
    return is_partial_isomorphism(x, y, pf);
}

} // namespace

TEST_SUITE("isosearch") {

TEST_CASE("partial isomorphism indicator")
{
    const auto k3 = Graph::complete(3);
    CHECK(is_partial_isomorphism(k3, Graph(3), PartialInjection{3, {1}, {2}}));
    CHECK(is_partial_isomorphism(k3, k3, PartialInjection{3, {0, 1, 2}, {0, 1, 2}}));
    CHECK_FALSE(is_partial_isomorphism(k3, Graph::path(3), PartialInjection{3, {0, 1, 2}, {0, 1, 2}}));
    CHECK_THROWS_AS(is_partial_isomorphism(k3, k3, PartialInjection{3, {0, 1}, {1, 1}}), InvalidMapError);
}

TEST_CASE("embedding examples")
{
    CHECK(embed_exists(Graph(2), Graph(3)).status == SearchStatus::found);
    CHECK(embed_count(Graph(2), Graph(3)).value == 6);
    CHECK(embed_exists(Graph::complete(3), Graph::path(3)).status == SearchStatus::exhausted_none);
    const auto out = embed_exists(single_edge(), Graph::path(3));
    REQUIRE(out.found());
    CHECK(verifies(single_edge(), Graph::path(3), *out.witness));
    CHECK(embed_count(single_edge(), Graph::path(3)).value == 4);
    CHECK(embed_count(single_edge(), Graph::complete(3)).value == 6);
    CHECK_THROWS_AS(embed_exists(Graph(4), Graph(3)), SizeError);
}

TEST_CASE("empty pattern embeds once")
{
    const auto out = embed_exists(Graph(0), Graph::cycle(4));
    CHECK(out.found());
    CHECK(embed_count(Graph(0), Graph::cycle(4)).value == 1);
    CHECK(common_count(Graph::cycle(4), Graph(4), 0).value == 1);
}

TEST_CASE("common subgraph examples")
{
    const auto k3 = Graph::complete(3);
    CHECK(common_exists(k3, Graph(3), 1).found());
    CHECK(common_exists(k3, Graph(3), 2).status == SearchStatus::exhausted_none);
    CHECK(common_count(k3, Graph(3), 2).value == 0);
    const auto out = common_exists(k3, k3, 3);
    REQUIRE(out.found());
    CHECK(is_partial_isomorphism(k3, k3, *out.witness));
    CHECK(common_count(k3, k3, 3).value == 6);
    CHECK(common_count(sample_gnp({2, 0.5, 1}), sample_gnp({2, 0.5, 2}), 1).value == 4);
    CHECK_THROWS_AS(common_exists(k3, k3, 4), SizeError);
}

TEST_CASE("maximum common subgraph")
{
    const auto g = sample_gnp({7, 0.5, 11});
    const auto same = max_common_size(g, g);
    CHECK(same.best == 7);
    CHECK(same.exact());
    CHECK(is_partial_isomorphism(g, g, same.witness));
    const auto k3 = max_common_size(Graph::complete(3), Graph(3));
    CHECK(k3.best == 1);
    REQUIRE(k3.smallest_refuted.has_value());
    CHECK(*k3.smallest_refuted == 2);

    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto x = sample_gnp({8, 0.5, 1000 + s});
        const auto y = sample_gnp({8, 0.5, 2000 + s});
        const auto res = max_common_size(x, y);
        CHECK(res.exact());
        CHECK(static_cast<int>(res.best) == oracle::max_common(x, y));
        CHECK(is_partial_isomorphism(x, y, res.witness));
    }
}

TEST_CASE("counts match naive enumeration for small instances")
{
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= std::min(3, n); ++m)
            for (std::uint64_t s = 0; s < 6; ++s) {
                const double p = 0.2 + 0.15 * static_cast<double>(s % 5);
                const auto x = sample_gnp({static_cast<std::size_t>(m), p, 31 * s + static_cast<std::uint64_t>(n)});
                const auto y = sample_gnp({static_cast<std::size_t>(n), 0.5, 97 * s + static_cast<std::uint64_t>(m)});
                const auto ec = embed_count(x, y);
                CHECK(ec.value == oracle::embed_count(x, y));
                CHECK((ec.value > 0) == embed_exists(x, y).found());

                const auto xx = sample_gnp({static_cast<std::size_t>(n), p, 7 * s + 3});
                const auto cc = common_count(xx, y, static_cast<std::size_t>(m));
                CHECK(cc.value == oracle::common_count(xx, y, m));
                const auto ce = common_exists(xx, y, static_cast<std::size_t>(m));
                CHECK((cc.value > 0) == ce.found());
                if (ce.found())
                    CHECK(is_partial_isomorphism(xx, y, *ce.witness));
            }
}

TEST_CASE("soundness of witnesses on larger random instances")
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto x = sample_gnp({6, 0.5, s});
        const auto y = sample_gnp({24, 0.5, 100 + s});
        const auto out = embed_exists(x, y);
        REQUIRE(out.status != SearchStatus::budget_exceeded);
        if (out.found())
            CHECK(verifies(x, y, *out.witness));
        const auto c = common_exists(sample_gnp({12, 0.5, s}), sample_gnp({12, 0.5, 50 + s}), 5);
        if (c.found())
            CHECK(is_partial_isomorphism(sample_gnp({12, 0.5, s}), sample_gnp({12, 0.5, 50 + s}), *c.witness));
    }
}

TEST_CASE("embedding is monotone under restriction of the pattern")
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto x = sample_gnp({6, 0.5, s});
        const auto y = sample_gnp({14, 0.5, 500 + s});
        if (!embed_exists(x, y).found())
            continue;
        const std::vector<Vertex> first{0, 1, 2, 3, 4};
        CHECK(embed_exists(induced_subgraph(x, first), y).found());
    }
}

TEST_CASE("relabeling leaves counts unchanged")
{
    Xoshiro256ss rng(9);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto x = sample_gnp({4, 0.5, s});
        const auto y = sample_gnp({9, 0.5, 40 + s});
        const auto px = random_injection(4, 4, rng).image;
        const auto py = random_injection(9, 9, rng).image;
        CHECK(embed_count(x, y).value == embed_count(relabel(x, px), relabel(y, py)).value);
        const auto xx = sample_gnp({9, 0.5, 80 + s});
        CHECK(common_count(xx, y, 4).value == common_count(relabel(xx, py), y, 4).value);
    }
}

TEST_CASE("budget exhaustion is reported, never guessed")
{
    const auto x = sample_gnp({12, 0.5, 1});
    const auto y = sample_gnp({12, 0.5, 2});
    const auto out = common_exists(x, y, 12, 5);
    CHECK(out.status == SearchStatus::budget_exceeded);
    CHECK_FALSE(out.witness.has_value());
    CHECK_THROWS_AS(embed_count(Graph(3), Graph(20), 10), BudgetExceededError);
    try {
        (void)embed_count(Graph(3), Graph(20), 10);
    } catch (const BudgetExceededError& e) {
        CHECK(e.partial_count() <= 6840);
        CHECK(e.nodes() > 10);
    }
}

} // TEST_SUITE
