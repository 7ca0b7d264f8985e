#include "doctest.h"

#include "cli.hpp"

#include "isophase/graph.hpp"
#include "isophase/moments.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace isophase;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    Run r;
    r.code = cli::dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch_dir()
{
    const auto dir = std::filesystem::temp_directory_path() / "isophase_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path);
    f << text;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("threshold reports m_star")
{
    const auto r = run({"threshold", "--n", "1024", "--p", "0.5", "--q", "0.5", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(std::abs(j["m_star"].get<double>() - 33.52) < 0.005);
    CHECK(j["m_minus"] == 20);
    CHECK(j["m_plus"] == 22);
    CHECK(j["residual"].get<double>() <= 1e-10);
    CHECK(j["in_region"] == true);

    const auto plain = run({"threshold", "--n", "1024"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("m_star") != std::string::npos);
}

TEST_CASE("region membership")
{
    const auto out = run({"region", "--p", "0.1", "--q", "0.9"});
    CHECK(out.code == 0);
    CHECK(out.out.rfind("outside\n", 0) == 0);

    const auto in = run({"region", "--p", "0.5", "--q", "0.5", "--json"});
    CHECK(in.code == 0);
    const auto j = json::parse(in.out);
    CHECK(j["inside"] == true);
    CHECK(std::abs(j["corner"]["p"].get<double>() - 0.1464466094) < 1e-8);

    CHECK(run({"region"}).code == 0);
    CHECK(run({"region", "--p", "0.3"}).code == 2);
    CHECK(run({"region", "--p", "0", "--q", "0.5"}).code == 2);
}

TEST_CASE("verify exits cleanly and reports the identities")
{
    const auto r = run({"verify", "--suite", "edgegraph", "--pairs", "10000", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("por1") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    const auto j = run({"verify", "--suite", "rado", "--pairs", "50", "--json"});
    CHECK(j.code == 0);
    CHECK(json::parse(j.out)["passed"] == true);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"threshold"}).code == 2);
    CHECK(run({"threshold", "--n", "1024", "--bogus"}).code == 2);
    CHECK(run({"threshold", "--n", "1"}).code == 2);
    CHECK(run({"moments", "--n", "3", "--m", "2", "--variant", "other"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("experiment") != std::string::npos);
}

TEST_CASE("sample writes the seeded graph")
{
    const auto r = run({"sample", "--n", "9", "--p", "0.4", "--seed", "5"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    CHECK(read_graph(in) == sample_gnp({9, 0.4, 5}));

    const auto path = scratch_dir() / "sample.txt";
    CHECK(run({"sample", "--n", "7", "--seed", "2", "--out", path.string()}).code == 0);
    CHECK(load_graph(path.string()) == sample_gnp({7, 0.5, 2}));

    const auto j = json::parse(run({"sample", "--n", "3", "--p", "1", "--json"}).out);
    CHECK(j["edges"].size() == 3);
}

TEST_CASE("embed and common on files and samples")
{
    const auto dir = scratch_dir();
    write_file(dir / "p3.txt", to_text(Graph::path(3)));
    write_file(dir / "c5.txt", to_text(Graph::cycle(5)));
    write_file(dir / "k3.txt", to_text(Graph::complete(3)));

    const auto found = run({"embed", "--x", (dir / "p3.txt").string(), "--y", (dir / "c5.txt").string(), "--json"});
    CHECK(found.code == 0);
    CHECK(json::parse(found.out)["status"] == "found");

    const auto none = run({"embed", "--x", (dir / "k3.txt").string(), "--y", (dir / "c5.txt").string()});
    CHECK(none.code == 0);
    CHECK(none.out.find("exhausted-none") != std::string::npos);

    const auto count = run({"embed", "--x", (dir / "p3.txt").string(), "--y", (dir / "c5.txt").string(), "--count",
                            "--json"});
    CHECK(json::parse(count.out)["count"] == "10");

    const auto common = run({"common", "--x", (dir / "c5.txt").string(), "--y", (dir / "k3.txt").string(), "--max",
                             "--json"});
    CHECK(common.code == 0);
    CHECK(json::parse(common.out)["best"] == 2);

    CHECK(run({"common", "--n", "14", "--m", "10", "--budget", "5"}).code == 3);
    CHECK(run({"embed", "--m", "12", "--n", "40", "--seed", "3", "--budget", "2"}).code == 3);
    CHECK(run({"common", "--n", "8"}).code == 2);
    CHECK(run({"embed", "--x", (dir / "missing.txt").string(), "--y", (dir / "c5.txt").string()}).code == 2);
}

TEST_CASE("moments agree with the library")
{
    const auto r = run({"moments", "--n", "4", "--m", "2", "--p", "0.4", "--q", "0.6", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    const double ratio = moment_ratio_exact(4, 2, derive_params(0.4, 0.6), Variant::common);
    CHECK(j["second_moment"]["ratio"].get<double>() == doctest::Approx(ratio).epsilon(1e-12));
    CHECK(j["cardinalities"].size() == 9);
    CHECK(j["decomposition"]["total"].get<double>() == doctest::Approx(ratio).epsilon(1e-9));

    const auto big = run({"moments", "--n", "12", "--m", "6", "--json"});
    CHECK(big.code == 0);
    CHECK(json::parse(big.out)["second_moment"].contains("skipped"));

    const auto emb = run({"moments", "--n", "5", "--m", "3", "--variant", "embedding"});
    CHECK(emb.code == 0);
    CHECK(emb.out.find("s_bound") != std::string::npos);
}

TEST_CASE("experiment runs a config and exports")
{
    const auto dir = scratch_dir();
    const auto cfg = dir / "sweep.json";
    const auto csv = dir / "sweep.csv";
    write_file(cfg, R"({"problem":"common","n_values":[8],"m_values":[1,4,8],"trials":20,"master_seed":3})");
    const auto r = run({"experiment", "--config", cfg.string(), "--csv", csv.string(), "--workers", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["p_hat"] == 1.0);
    CHECK(std::filesystem::exists(csv));

    const auto bad = dir / "bad.json";
    write_file(bad, R"({"problem":"common","n_values":[8],"m_values":[3],"extra":true})");
    CHECK(run({"experiment", "--config", bad.string()}).code == 2);
    CHECK(run({"experiment", "--config", (dir / "absent.json").string()}).code == 2);

    const auto starved = dir / "starved.json";
    write_file(starved, R"({"problem":"common","n_values":[14],"m_values":[10],"trials":5,"node_budget":3})");
    CHECK(run({"experiment", "--config", starved.string()}).code == 3);
}

TEST_CASE("rado subcommands")
{
    CHECK(run({"rado", "adjacent", "0", "1"}).out == "adjacent\n");
    CHECK(run({"rado", "adjacent", "0", "2"}).out == "not adjacent\n");
    CHECK(run({"rado", "adjacent", "3", "3"}).code == 2);
    CHECK(run({"rado", "encode", "{{},{{}}}"}).out == "3\n");
    CHECK(run({"rado", "decode", "1"}).out == "{{}}\n");
    CHECK(run({"rado", "witness", "--u", "0,1", "--v", "2"}).out == "11\n");
    CHECK(run({"rado", "witness"}).out == "1\n");
    CHECK(run({"rado", "witness", "--u", "1", "--v", "1"}).code == 2);
    CHECK(run({"rado", "decode", "-4"}).code == 2);
    CHECK(json::parse(run({"rado", "encode", "{}", "--json"}).out)["code"] == "0");
    CHECK(run({"rado"}).code == 2);
}

} // TEST_SUITE
