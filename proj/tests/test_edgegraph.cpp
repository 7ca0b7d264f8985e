#include "doctest.h"
#include "oracles.hpp"

#include "isophase/combinatorics.hpp"
#include "isophase/edgegraph.hpp"
#include "isophase/errors.hpp"
#include "isophase/rng.hpp"

#include <cmath>

using namespace isophase;

namespace {

std::int64_t C2(std::size_t k) { return pairs_of(static_cast<std::int64_t>(k)); }

// Both-sides-doubled forms keep the half-integer bounds exact.
void check_total_identities(const ComponentProfile& p)
{
    const auto m = p.m;
    std::int64_t sum_j = 0, sum_k = 0, sum_up = 0, big_jj = 0;
    for (const auto& [cls, count] : p.census) {
        CHECK((cls.k == cls.j || cls.k == cls.j + 1));
        const auto c = static_cast<std::int64_t>(count);
        sum_j += cls.j * c;
        sum_k += cls.k * c;
        if (cls.k == cls.j + 1)
            sum_up += c;
        if (cls.k == cls.j && cls.j >= 2)
            big_jj += c;
    }
    CHECK(sum_j == C2(m));
    CHECK(sum_k == 2 * C2(m) - C2(p.r));
    CHECK(sum_up == C2(m) - C2(p.r));
    const auto c11 = static_cast<std::int64_t>(p.c(1, 1));
    CHECK(C2(p.ell) <= c11);
    CHECK(2 * c11 <= 2 * C2(p.ell) + static_cast<std::int64_t>(p.r - p.ell));
    CHECK(2 * big_jj <= C2(p.r) - C2(p.ell));
}

void check_partial_identities(const ComponentProfile& p)
{
    const auto m = p.m;
    const auto zc = static_cast<std::int64_t>(p.zcal);
    std::int64_t left1 = 0, right1 = 0, por1 = 0, por2 = 0, por3 = 0, por4 = 0;
    for (const auto& [cls, count] : p.census) {
        const auto c = static_cast<std::int64_t>(count);
        const std::int64_t j = cls.j, k = cls.k;
        CHECK(std::abs(j - k) <= 1);
        if (j != k)
            CHECK_FALSE(cls.cycle);
        if (j == k && !cls.cycle) {
            left1 += c;
            right1 += c;
            por2 += (j - 1) * c;
            por4 += (j - 1) * c;
        }
        if (j == k && cls.cycle) {
            por2 += j * c;
            por4 += (j - 1) * c;
            if (j >= 2)
                por3 += c;
        }
        if (k == j + 1) { // C_{j,j+1}
            right1 += 2 * c;
            por1 += c;
            por2 += (j - 1) * c;
            por4 += (j - 1) * c;
        }
        if (j == k + 1) { // C_{k+1,k}, written C_{j+1,j} with j = k
            left1 += 2 * c;
            por1 -= c;
            por2 += k * c;
            por4 += k * c;
        }
    }
    CHECK(static_cast<std::int64_t>(p.left_size) == 2 * C2(m) - C2(p.d));
    CHECK(static_cast<std::int64_t>(p.right_size) == 2 * C2(m) - C2(p.r));
    CHECK(static_cast<std::int64_t>(p.left_degree_one) == left1);
    CHECK(static_cast<std::int64_t>(p.right_degree_one) == right1);
    CHECK(static_cast<std::int64_t>(p.left_degree_one) == zc + 2 * C2(m) - 2 * C2(p.d));
    CHECK(static_cast<std::int64_t>(p.right_degree_one) == zc + 2 * C2(m) - 2 * C2(p.r));
    CHECK(por1 == C2(p.d) - C2(p.r));
    CHECK(por2 == C2(p.r) - zc);
    CHECK(2 * por3 <= C2(p.r) - zc);
    CHECK(2 * por4 >= C2(p.r) - zc);
    CHECK(C2(p.ell) <= zc);
    CHECK(2 * zc <= 2 * C2(p.ell) + static_cast<std::int64_t>(p.r - p.ell));
    CHECK(p.ell <= std::min(p.d, p.r));
}

} // namespace

TEST_SUITE("edgegraph") {

TEST_CASE("identical total maps give isolated single edges")
{
    const Injection f{4, 7, {6, 2, 0, 5}};
    const auto t = build_embedding_edge_graph(f, f, 4, 7);
    CHECK(t.left.size() == 6);
    CHECK(t.edges.size() == 6);
    const auto p = classify_components(t);
    CHECK(p.c(1, 1) == 6);
    CHECK(p.census.size() == 1);
    CHECK(p.ell == 4);
    CHECK(p.zcal == 6);
}

TEST_CASE("disjoint ranges give three (1,2) paths")
{
    const Injection f{3, 6, {0, 1, 2}};
    const Injection g{3, 6, {3, 4, 5}};
    const auto p = classify_components(build_embedding_edge_graph(f, g, 3, 6));
    CHECK(p.c(1, 2) == 3);
    CHECK(p.components() == 3);
    CHECK(p.r == 0);
}

TEST_CASE("mismatched sizes are rejected")
{
    const Injection f{3, 6, {0, 1, 2}};
    const Injection g{2, 6, {3, 4}};
    CHECK_THROWS_AS(build_embedding_edge_graph(f, g, 3, 6), InvalidMapError);
    CHECK_THROWS_AS(build_common_edge_graph(PartialInjection{5, {0, 1}, {0, 1}}, PartialInjection{5, {0}, {0}}),
                    InvalidMapError);
    CHECK_THROWS_AS(build_common_edge_graph(PartialInjection{5, {1, 0}, {0, 1}}, PartialInjection{5, {0, 1}, {0, 1}}),
                    InvalidMapError);
}

TEST_CASE("cyclic shift is one 6-cycle")
{
    const PartialInjection f{3, {0, 1, 2}, {0, 1, 2}};
    const PartialInjection g{3, {0, 1, 2}, {1, 2, 0}};
    const auto t = build_common_edge_graph(f, g);
    CHECK(t.left.size() == 3);
    CHECK(t.right.size() == 3);
    CHECK(t.edges.size() == 6);
    const auto p = classify_components(t);
    CHECK(p.cycles(3) == 1);
    CHECK(p.components() == 1);
    CHECK(p.d == 3);
    CHECK(p.r == 3);
    CHECK(p.ell == 0);
    CHECK(p.zcal == 0);

    const auto params = derive_params(0.3, 0.6);
    const double expect = std::pow(0.3, 3) * std::pow(0.6, 3) + std::pow(0.7, 3) * std::pow(0.4, 3);
    CHECK(pair_moment(p, params, Variant::common) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("identical and disjoint partial maps")
{
    const PartialInjection f{6, {0, 2, 5}, {4, 1, 3}};
    const auto same = classify_components(build_common_edge_graph(f, f));
    CHECK(same.c(1, 1) == 3);
    CHECK(same.components() == 3);
    const auto params = derive_params(0.3, 0.6);
    CHECK(pair_moment(same, params, Variant::common) == doctest::Approx(std::pow(params.tau, 3)).epsilon(1e-14));

    const PartialInjection g{6, {1, 3, 4}, {0, 2, 5}};
    const auto apart = classify_components(build_common_edge_graph(f, g));
    CHECK(apart.c(1, 1) == 6);
    CHECK(apart.components() == 6);
    CHECK(apart.d == 0);
    CHECK(apart.r == 0);

    const PartialInjection e{3, {0, 1}, {2, 0}};
    CHECK(pair_moment(classify_components(build_common_edge_graph(e, e)), params, Variant::common)
          == doctest::Approx(params.tau).epsilon(1e-14));
}

TEST_CASE("malformed edge graphs are structural errors")
{
    EdgeGraph t;
    t.left = {{0, 1}};
    t.right = {{0, 1}, {0, 2}, {1, 2}};
    t.edges = {{0, 0}, {0, 1}, {0, 2}};
    CHECK_THROWS_AS(classify_components(t), StructuralError);
    t.edges = {{0, 5}};
    CHECK_THROWS_AS(classify_components(t), StructuralError);
}

TEST_CASE("total pairs satisfy the census identities")
{
    Xoshiro256ss rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 2 + rng.below(11);
        const std::size_t m = 1 + rng.below(std::min<std::size_t>(n, 7));
        const auto f = random_injection(m, n, rng);
        auto g = random_injection(m, n, rng);
        if (trial % 5 == 0)
            g = f;
        const auto t = build_embedding_edge_graph(f, g, m, n);
        CHECK(static_cast<std::int64_t>(t.left.size()) == pairs_of(static_cast<std::int64_t>(m)));
        const auto p = classify_components(t);
        check_total_identities(p);
    }
}

TEST_CASE("partial pairs satisfy the census identities")
{
    Xoshiro256ss rng(77);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t n = 2 + rng.below(9);
        const std::size_t m = 1 + rng.below(std::min<std::size_t>(n, 6));
        const auto f = random_partial_injection(n, m, rng);
        auto g = random_partial_injection(n, m, rng);
        if (trial % 7 == 0) {
            g = f;
            std::swap(g.image[0], g.image[m - 1]);
        }
        check_partial_identities(classify_components(build_common_edge_graph(f, g)));
    }
}

TEST_CASE("all partial pairs at small scale satisfy the identities")
{
    const auto all = all_partial_injections(4, 3);
    for (const auto& f : all)
        for (const auto& g : all)
            check_partial_identities(classify_components(build_common_edge_graph(f, g)));
}

TEST_CASE("summed pair moments reproduce the second moment of graph enumeration")
{
    const auto params = derive_params(0.3, 0.6);
    const auto all = all_partial_injections(3, 2);
    CompensatedSum s;
    for (const auto& f : all)
        for (const auto& g : all)
            s.add(pair_moment(classify_components(build_common_edge_graph(f, g)), params, Variant::common));
    const auto& table = oracle::cached_pair_table(3, 2, true);
    CHECK(std::abs(s.value() - table.expect(0.3, 0.6, true)) <= 1e-9 * table.expect(0.3, 0.6, true));

    const auto embed_params = derive_params(0.3, 0.9);
    const auto inj = all_injections(2, 4);
    CompensatedSum e;
    for (const auto& f : inj)
        for (const auto& g : inj)
            e.add(pair_moment(classify_components(build_embedding_edge_graph(f, g, 2, 4)), embed_params,
                              Variant::embedding));
    const auto& et = oracle::cached_pair_table(4, 2, false);
    CHECK(std::abs(e.value() - et.expect(0.3, 0.5, true)) <= 1e-9 * et.expect(0.3, 0.5, true));
}

TEST_CASE("pair moment parameter validation")
{
    ComponentProfile p;
    ModelParams bad;
    bad.p = 1.0;
    CHECK_THROWS_AS(pair_moment(p, bad, Variant::common), ParameterError);
    CHECK_THROWS_AS(derive_params(0.0, 0.5), ParameterError);
}

TEST_CASE("debug dump lists vertices and edges")
{
    const PartialInjection f{3, {0, 1, 2}, {0, 1, 2}};
    const PartialInjection g{3, {0, 1, 2}, {1, 2, 0}};
    const auto text = dump_edge_graph(build_common_edge_graph(f, g));
    CHECK(text.find("left 3") != std::string::npos);
    CHECK(text.find("edges 6") != std::string::npos);
}

} // TEST_SUITE
