#include "doctest.h"

#include "isophase/errors.hpp"
#include "isophase/verify.hpp"

using namespace isophase;

namespace {

void require_clean(const VerifyReport& r)
{
    CHECK(r.checked() > 0);
    for (const auto& c : r.checks) {
        INFO(r.suite << ": " << c.name);
        CHECK(c.checked > 0);
        CHECK(c.violations == 0);
    }
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("edge-graph suite is clean")
{
    VerifyOptions opts;
    opts.pairs = 2000;
    opts.seed = 7;
    const auto r = verify_edgegraph(opts);
    require_clean(r);
    CHECK(r.checks.size() >= 20);
}

TEST_CASE("cardinality suite is clean")
{
    require_clean(verify_cardinality({}));
}

TEST_CASE("moment suite is clean")
{
    VerifyOptions opts;
    opts.pairs = 1000;
    require_clean(verify_moments(opts));
}

TEST_CASE("rado suite is clean")
{
    VerifyOptions opts;
    opts.pairs = 500;
    require_clean(verify_rado(opts));
}

TEST_CASE("suite selection")
{
    VerifyOptions opts;
    opts.pairs = 10;
    CHECK(run_verify("edgegraph", opts).size() == 1);
    CHECK_THROWS_AS(run_verify("nope", opts), DomainError);
    VerifyReport bad;
    bad.checks.push_back({"x", 3, 1});
    CHECK_FALSE(bad.passed());
    CHECK(bad.violations() == 1);
}

} // TEST_SUITE
