#include "cli.hpp"

#include "isophase/errors.hpp"
#include "isophase/experiments.hpp"
#include "isophase/graph.hpp"
#include "isophase/isosearch.hpp"
#include "isophase/moments.hpp"
#include "isophase/rado.hpp"
#include "isophase/thresholds.hpp"
#include "isophase/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace isophase::cli {

namespace {

using json = nlohmann::json;

struct GraphSource {
    std::string x_path;
    std::string y_path;
    std::size_t n = 0;
    std::size_t m = 0;
    double p = 0.5;
    double q = 0.5;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultNodeBudget;
    bool count = false;
    bool max = false;
    bool json = false;
};

struct Options {
    bool json = false;
    std::size_t workers = 0;

    // sample
    std::size_t sample_n = 0;
    double sample_p = 0.5;
    std::uint64_t sample_seed = 1;
    std::string sample_out;

    GraphSource embed;
    GraphSource common;

    // threshold / region
    std::uint64_t thr_n = 0;
    double thr_p = 0.5;
    double thr_q = 0.5;
    std::optional<double> thr_cn;
    std::optional<double> region_p;
    std::optional<double> region_q;

    // moments
    std::int64_t mom_n = 0;
    std::int64_t mom_m = 0;
    double mom_p = 0.5;
    double mom_q = 0.5;
    std::string mom_variant = "common";
    double mom_c = kDefaultSplit;
    std::uint64_t mom_guard = kDefaultScaleGuard;

    // verify
    std::string ver_suite = "all";
    VerifyOptions ver;

    // experiment
    std::string exp_config;
    std::string exp_csv;
    std::string exp_jsonl;

    // rado
    std::string rado_a, rado_b, rado_set, rado_code;
    std::vector<std::uint64_t> rado_u, rado_v;
};

BigInt parse_natural(const std::string& s)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("not a natural number: " + s);
    return BigInt(s);
}

json edges_json(const Graph& g)
{
    json edges = json::array();
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j))
                edges.push_back({i, j});
    return edges;
}

Graph source_graph(const std::string& path, std::size_t n, double p, std::uint64_t seed, int which)
{
    if (!path.empty())
        return load_graph(path);
    if (n == 0)
        throw DomainError("give a graph file or a positive order");
    return sample_gnp({n, p, graph_seed(seed, which)});
}

int report_status(SearchStatus s) { return s == SearchStatus::budget_exceeded ? kExitBudget : kExitOk; }

template <typename Vec>
std::string join(const Vec& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    return os.str();
}

int run_sample(const Options& o, std::ostream& out)
{
    const auto g = sample_gnp({o.sample_n, o.sample_p, o.sample_seed});
    if (o.json) {
        out << json{{"n", o.sample_n}, {"p", o.sample_p}, {"seed", o.sample_seed}, {"edges", edges_json(g)}}.dump()
            << '\n';
        return kExitOk;
    }
    if (o.sample_out.empty()) {
        write_graph(out, g);
        return kExitOk;
    }
    std::ofstream file(o.sample_out);
    if (!file)
        throw Error("cannot write " + o.sample_out);
    write_graph(file, g);
    return kExitOk;
}

int run_embed(const GraphSource& s, std::ostream& out)
{
    const auto x = source_graph(s.x_path, s.m, s.p, s.seed, 1);
    const auto y = source_graph(s.y_path, s.n, s.q, s.seed, 2);
    json j{{"pattern_order", x.order()}, {"host_order", y.order()}};
    if (s.count) {
        try {
            const auto c = embed_count(x, y, s.budget);
            j["status"] = "counted";
            j["count"] = c.value.str();
            j["nodes"] = c.nodes;
        } catch (const BudgetExceededError& e) {
            j["status"] = "budget-exceeded";
            j["partial_count"] = e.partial_count().str();
            j["nodes"] = e.nodes();
        }
    } else {
        const auto r = embed_exists(x, y, s.budget);
        j["status"] = std::string(to_string(r.status));
        j["nodes"] = r.nodes;
        if (r.witness)
            j["witness"] = r.witness->image;
    }
    if (s.json) {
        out << j.dump() << '\n';
    } else {
        out << "status " << j["status"].get<std::string>() << '\n';
        if (j.contains("count"))
            out << "count " << j["count"].get<std::string>() << '\n';
        if (j.contains("partial_count"))
            out << "partial_count " << j["partial_count"].get<std::string>() << '\n';
        if (j.contains("witness"))
            out << "witness " << join(j["witness"].get<std::vector<Vertex>>()) << '\n';
        out << "nodes " << j["nodes"].get<std::uint64_t>() << '\n';
    }
    return j["status"] == "budget-exceeded" ? kExitBudget : kExitOk;
}

int run_common(const GraphSource& s, std::ostream& out)
{
    const auto x = source_graph(s.x_path, s.n, s.p, s.seed, 1);
    const auto y = source_graph(s.y_path, s.n, s.q, s.seed, 2);
    json j{{"x_order", x.order()}, {"y_order", y.order()}};
    int code = kExitOk;
    if (s.max) {
        const auto r = max_common_size(x, y, s.budget);
        j["best"] = r.best;
        j["exact"] = r.exact();
        j["smallest_refuted"] = r.smallest_refuted ? json(*r.smallest_refuted) : json(nullptr);
        j["inconclusive"] = r.inconclusive;
        j["domain"] = r.witness.domain;
        j["image"] = r.witness.image;
        j["nodes"] = r.nodes;
        code = r.exact() ? kExitOk : kExitBudget;
    } else {
        if (s.m == 0)
            throw DomainError("common needs --m or --max");
        j["m"] = s.m;
        if (s.count) {
            try {
                const auto c = common_count(x, y, s.m, s.budget);
                j["status"] = "counted";
                j["count"] = c.value.str();
                j["nodes"] = c.nodes;
            } catch (const BudgetExceededError& e) {
                j["status"] = "budget-exceeded";
                j["partial_count"] = e.partial_count().str();
                j["nodes"] = e.nodes();
                code = kExitBudget;
            }
        } else {
            const auto r = common_exists(x, y, s.m, s.budget);
            j["status"] = std::string(to_string(r.status));
            j["nodes"] = r.nodes;
            if (r.witness) {
                j["domain"] = r.witness->domain;
                j["image"] = r.witness->image;
            }
            code = report_status(r.status);
        }
    }
    if (s.json) {
        out << j.dump() << '\n';
        return code;
    }
    for (const auto& [key, value] : j.items()) {
        out << key << ' ';
        if (value.is_array())
            out << join(value.get<std::vector<std::size_t>>());
        else if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
    return code;
}

int run_threshold(const Options& o, std::ostream& out)
{
    const auto cfg = make_threshold_config(o.thr_n, o.thr_cn);
    const auto params = derive_params(o.thr_p, o.thr_q);
    const auto rep = threshold_report(cfg, params);
    const auto common = common_thresholds(cfg, params, true);
    json j{{"n", cfg.n},
           {"p", params.p},
           {"q", params.q},
           {"cn", cfg.cn},
           {"slack", cfg.slack()},
           {"slack_warning", cfg.slack_warning()},
           {"tau", params.tau},
           {"lambda", params.lambda},
           {"gamma", params.gamma},
           {"m_minus", rep.m_minus},
           {"m_plus", rep.m_plus},
           {"m_star", rep.m_star},
           {"m_tilde", rep.m_tilde},
           {"r_n", rep.r_n},
           {"residual", rep.residual},
           {"in_region", common.in_region},
           {"m_low", common.m_low},
           {"m_high", common.m_high}};
    if (o.json) {
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << std::setprecision(10);
    out << "embedding thresholds  m- = " << rep.m_minus << ", m+ = " << rep.m_plus << '\n';
    out << "m_star                " << rep.m_star << " (residual " << rep.residual << ")\n";
    out << "m_tilde               " << rep.m_tilde << '\n';
    out << "R(n)                  " << rep.r_n << '\n';
    out << "tau, lambda, gamma    " << params.tau << ", " << params.lambda << ", " << params.gamma << '\n';
    out << "common window         [" << common.m_low << ", " << common.m_high << "]"
        << (common.in_region ? "" : " (outside the admissible region)") << '\n';
    if (cfg.slack_warning())
        out << "warning: slack cn/ln n = " << cfg.slack() << " is at least 1\n";
    return kExitOk;
}

int run_region(const Options& o, std::ostream& out)
{
    const auto [cp, cq] = region_corner();
    const auto corner_params = derive_params(cp, cq);
    json j{{"corner", {{"p", cp}, {"q", cq}, {"lambda", corner_params.lambda}, {"gamma", corner_params.gamma}}}};
    if (o.region_p.has_value() != o.region_q.has_value())
        throw DomainError("give both --p and --q, or neither");
    if (o.region_p) {
        const auto params = derive_params(*o.region_p, *o.region_q);
        const bool inside = in_admissible_region(params);
        j["p"] = params.p;
        j["q"] = params.q;
        j["inside"] = inside;
        j["region"] = inside ? "inside" : "outside";
        j["tau"] = params.tau;
        j["tau12"] = params.tau12;
        j["tau21"] = params.tau21;
        j["tau_three_halves"] = std::pow(params.tau, 1.5);
    }
    if (o.json) {
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << std::setprecision(10);
    if (j.contains("region"))
        out << j["region"].get<std::string>() << '\n';
    out << "corner p* = " << cp << ", q* = " << cq << '\n';
    return kExitOk;
}

int run_moments(const Options& o, std::ostream& out)
{
    const Variant variant = o.mom_variant == "embedding" ? Variant::embedding : Variant::common;
    const auto n = o.mom_n, m = o.mom_m;
    if (n < 1 || m < 0 || m > n)
        throw DomainError("moments needs 0 <= m <= n and n >= 1");
    const auto params = variant == Variant::embedding ? embedding_params(o.mom_p) : derive_params(o.mom_p, o.mom_q);
    json j{{"n", n}, {"m", m}, {"p", params.p}, {"q", params.q},
           {"variant", variant == Variant::embedding ? "embedding" : "common"}};

    json cards = json::array();
    if (variant == Variant::embedding) {
        const double le = log_expected_embeddings(n, m);
        j["first_moment"] = {{"log", le}, {"value", std::exp(le)}};
        j["maps"] = falling_factorial(n, m).str();
        for (std::int64_t r = 0; r <= m; ++r)
            cards.push_back({{"r", r}, {"count", count_H_r(n, m, r).str()}});
    } else {
        const double le = log_expected_common(n, m, params);
        j["first_moment"] = {{"log", le}, {"value", std::exp(le)}};
        j["maps"] = count_partial_maps(n, m).str();
        for (std::int64_t d = 0; d <= m; ++d)
            for (std::int64_t r = 0; r <= m; ++r)
                cards.push_back({{"d", d}, {"r", r}, {"count", count_H_dr(n, m, d, r).str()}});
    }
    j["cardinalities"] = cards;

    try {
        const double second = second_moment_exact(n, m, params, variant, o.mom_guard, o.workers);
        j["second_moment"] = {{"exact", second}, {"ratio", moment_ratio_exact(n, m, params, variant, o.mom_guard, o.workers)}};
    } catch (const ScaleError& e) {
        j["second_moment"] = {{"skipped", e.what()}};
    }

    if (variant == Variant::embedding) {
        try {
            const auto s = s_bound(n, m, params.p, o.mom_c, BoundMode::relaxed, o.mom_guard);
            j["s_bound"] = {{"c", s.c}, {"total", s.s_total}, {"one", s.s_one}, {"two", s.s_two}, {"psi", s.psi_m}};
        } catch (const Error& e) {
            j["s_bound"] = {{"skipped", e.what()}};
        }
    } else {
        j["in_region"] = in_admissible_region(params);
        try {
            const auto rd = ratio_decomposition(n, m, params, o.mom_c, o.mom_guard);
            j["decomposition"] = {{"t00", rd.t00}, {"tmm", rd.tmm}, {"low", rd.low}, {"high", rd.high},
                                  {"swapped", rd.swapped}, {"total", rd.total}, {"propc_lower", rd.propc_lower}};
        } catch (const Error& e) {
            j["decomposition"] = {{"skipped", e.what()}};
        }
    }

    if (o.json) {
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << std::setprecision(12);
    out << j["variant"].get<std::string>() << " n = " << n << ", m = " << m << ", p = " << params.p
        << ", q = " << params.q << '\n';
    out << "E N        " << j["first_moment"]["value"].get<double>() << " (log " << j["first_moment"]["log"].get<double>()
        << ")\n";
    out << "maps       " << j["maps"].get<std::string>() << '\n';
    for (const auto& c : cards) {
        out << "|H";
        if (c.contains("d"))
            out << "_{" << c["d"].get<int>() << "," << c["r"].get<int>() << "}| ";
        else
            out << "_" << c["r"].get<int>() << "| ";
        out << c["count"].get<std::string>() << '\n';
    }
    const auto& sm = j["second_moment"];
    if (sm.contains("exact"))
        out << "E N^2      " << sm["exact"].get<double>() << "\nratio      " << sm["ratio"].get<double>() << '\n';
    else
        out << "E N^2      skipped: " << sm["skipped"].get<std::string>() << '\n';
    for (const char* key : {"s_bound", "decomposition"}) {
        if (!j.contains(key))
            continue;
        out << key;
        for (const auto& [k, v] : j[key].items())
            out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        out << '\n';
    }
    return kExitOk;
}

int run_verify_cmd(const Options& o, std::ostream& out)
{
    auto opts = o.ver;
    opts.workers = o.workers;
    const auto reports = run_verify(o.ver_suite, opts);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"checked", c.checked}, {"violations", c.violations}});
        arr.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checked", r.checked()},
                       {"violations", r.violations()}, {"checks", checks}});
    }
    if (o.json) {
        out << json{{"passed", ok}, {"suites", arr}}.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked()
                << " checks, " << r.violations() << " violations)\n";
            for (const auto& c : r.checks)
                out << "  " << std::left << std::setw(28) << c.name << std::right << std::setw(10) << c.checked
                    << "  violations " << c.violations << '\n';
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_experiment(const Options& o, std::ostream& out, std::ostream& err)
{
    auto cfg = load_experiment_config(o.exp_config);
    if (o.workers)
        cfg.workers = o.workers;
    if (!o.exp_csv.empty())
        cfg.csv_path = o.exp_csv;
    if (!o.exp_jsonl.empty())
        cfg.jsonl_path = o.exp_jsonl;
    const auto res = run_sweep(cfg);
    export_result(res, cfg);
    if (o.json) {
        std::ostringstream rows;
        write_jsonl(rows, res.rows);
        json j{{"outside_hypothesis", res.outside_hypothesis}, {"invalid", res.invalid()}};
        json arr = json::array();
        std::istringstream in(rows.str());
        for (std::string line; std::getline(in, line);)
            arr.push_back(json::parse(line));
        j["rows"] = arr;
        json thr = json::array();
        for (const auto& [n, x] : res.empirical_thresholds)
            thr.push_back({{"n", n}, {"crossing", x}});
        j["empirical_thresholds"] = thr;
        out << j.dump() << '\n';
    } else {
        out << std::setprecision(4);
        out << "problem n m trials successes unknowns p_hat ci_low ci_high\n";
        for (const auto& r : res.rows)
            out << to_string(r.problem) << ' ' << r.n << ' ' << r.m << ' ' << r.trials << ' ' << r.successes << ' '
                << r.unknowns << ' ' << r.p_hat << ' ' << r.ci_low << ' ' << r.ci_high << '\n';
        for (const auto& [n, x] : res.empirical_thresholds)
            out << "crossing n = " << n << ": m = " << x << '\n';
    }
    if (res.outside_hypothesis)
        err << "note: q differs from 1/2 for the embedding problem, outside the theorem's hypothesis\n";
    if (res.invalid()) {
        err << "sweep invalid: more than 5% unknown trials in " << res.invalid_cells.size() << " cell(s)\n";
        return kExitBudget;
    }
    return kExitOk;
}

int run_rado(const Options& o, const CLI::App& rado, std::ostream& out)
{
    json j;
    if (rado.got_subcommand("adjacent")) {
        const auto a = parse_natural(o.rado_a), b = parse_natural(o.rado_b);
        j = {{"a", a.str()}, {"b", b.str()}, {"adjacent", bit_adjacent(a, b)}};
        if (!o.json)
            out << (j["adjacent"].get<bool>() ? "adjacent" : "not adjacent") << '\n';
    } else if (rado.got_subcommand("encode")) {
        const auto s = parse_hf_set(o.rado_set);
        const auto code = ackermann_encode(s);
        j = {{"set", to_string(s)}, {"code", code.str()}};
        if (!o.json)
            out << code.str() << '\n';
    } else if (rado.got_subcommand("decode")) {
        const auto code = parse_natural(o.rado_code);
        const auto s = ackermann_decode(code);
        j = {{"code", code.str()}, {"set", to_string(s)}};
        if (!o.json)
            out << to_string(s) << '\n';
    } else {
        const auto z = extension_witness(o.rado_u, o.rado_v);
        j = {{"u", o.rado_u}, {"v", o.rado_v}, {"witness", z.str()}};
        if (!o.json)
            out << z.str() << '\n';
    }
    if (o.json)
        out << j.dump() << '\n';
    return kExitOk;
}

void add_graph_options(CLI::App* sub, GraphSource& s, bool embed)
{
    sub->add_option("--x", s.x_path, embed ? "pattern graph file" : "first graph file");
    sub->add_option("--y", s.y_path, embed ? "host graph file" : "second graph file");
    sub->add_option("--n", s.n, embed ? "host order when sampling" : "order of both sampled graphs");
    sub->add_option("--m", s.m, embed ? "pattern order when sampling" : "common subgraph size");
    sub->add_option("--p", s.p, embed ? "edge probability of the pattern" : "edge probability of x")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--q", s.q, embed ? "edge probability of the host" : "edge probability of y")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", s.seed, "seed for sampled graphs");
    sub->add_option("--budget", s.budget, "search-node budget")->check(CLI::PositiveNumber);
    sub->add_flag("--count", s.count, "count solutions instead of deciding existence");
    sub->add_flag("--json", s.json, "machine-readable output");
}

} // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Phase-transition toolkit for random induced subgraph problems", "isophase"};
    app.require_subcommand(1);

    auto* sample = app.add_subcommand("sample", "emit a G(n,p) graph in text format");
    sample->add_option("--n", o.sample_n, "order")->required()->check(CLI::Range(std::size_t{0}, kMaxVertices));
    sample->add_option("--p", o.sample_p, "edge probability")->check(CLI::Range(0.0, 1.0));
    sample->add_option("--seed", o.sample_seed, "seed");
    sample->add_option("--out", o.sample_out, "output file (default stdout)");
    sample->add_flag("--json", o.json, "machine-readable output");

    auto* embed = app.add_subcommand("embed", "induced embedding of x into y");
    add_graph_options(embed, o.embed, true);
    auto* common = app.add_subcommand("common", "common induced subgraph of x and y");
    add_graph_options(common, o.common, false);
    common->add_flag("--max", o.common.max, "largest common induced subgraph");

    auto* threshold = app.add_subcommand("threshold", "embedding thresholds, m_star and m_tilde");
    threshold->add_option("--n", o.thr_n, "graph order")->required();
    threshold->add_option("--p", o.thr_p, "edge probability of the first graph");
    threshold->add_option("--q", o.thr_q, "edge probability of the second graph");
    threshold->add_option("--cn", o.thr_cn, "slack C_n (default ln ln n, or 1 below 16)");
    threshold->add_flag("--json", o.json, "machine-readable output");

    auto* region = app.add_subcommand("region", "admissible-region membership and corner");
    region->add_option("--p", o.region_p, "first edge probability");
    region->add_option("--q", o.region_q, "second edge probability");
    region->add_flag("--json", o.json, "machine-readable output");

    auto* moments = app.add_subcommand("moments", "first and second moments, cardinalities and bounds");
    moments->add_option("--n", o.mom_n, "graph order")->required();
    moments->add_option("--m", o.mom_m, "subgraph size")->required();
    moments->add_option("--p", o.mom_p, "edge probability");
    moments->add_option("--q", o.mom_q, "second edge probability (common only)");
    moments->add_option("--variant", o.mom_variant, "embedding or common")
        ->check(CLI::IsMember({"embedding", "common"}));
    moments->add_option("--c", o.mom_c, "split point c in (1/2, 1)");
    moments->add_option("--guard", o.mom_guard, "largest number of map pairs to enumerate");
    moments->add_option("--workers", o.workers, "worker threads");
    moments->add_flag("--json", o.json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run the property suites");
    std::vector<std::string> suites = verify_suite_names();
    suites.push_back("all");
    verify->add_option("--suite", o.ver_suite, "suite name")->check(CLI::IsMember(suites));
    verify->add_option("--pairs", o.ver.pairs, "random cases per kind");
    verify->add_option("--seed", o.ver.seed, "seed");
    verify->add_option("--max-m", o.ver.max_m, "largest map size")->check(CLI::Range(1, 16));
    verify->add_option("--max-n", o.ver.max_n, "largest ground set")->check(CLI::Range(2, 64));
    verify->add_option("--workers", o.workers, "worker threads");
    verify->add_flag("--json", o.json, "machine-readable output");

    auto* experiment = app.add_subcommand("experiment", "run a Monte Carlo sweep from a JSON config");
    experiment->add_option("--config", o.exp_config, "config file")->required();
    experiment->add_option("--workers", o.workers, "worker threads (overrides the config)");
    experiment->add_option("--csv", o.exp_csv, "CSV output path (overrides the config)");
    experiment->add_option("--jsonl", o.exp_jsonl, "JSONL output path (overrides the config)");
    experiment->add_flag("--json", o.json, "machine-readable output");

    auto* rado = app.add_subcommand("rado", "BIT graph, Ackermann coding and extension witnesses");
    rado->require_subcommand(1);
    rado->add_flag("--json", o.json, "machine-readable output");
    auto* adjacent = rado->add_subcommand("adjacent", "bit-graph adjacency of two naturals");
    adjacent->add_option("a", o.rado_a, "first natural")->required();
    adjacent->add_option("b", o.rado_b, "second natural")->required();
    auto* encode = rado->add_subcommand("encode", "Ackermann code of a set such as {{},{{}}}");
    encode->add_option("set", o.rado_set, "set in brace notation")->required();
    auto* decode = rado->add_subcommand("decode", "set with a given Ackermann code");
    decode->add_option("code", o.rado_code, "natural number")->required();
    auto* witness = rado->add_subcommand("witness", "vertex adjacent to all of U and none of V");
    witness->add_option("--u", o.rado_u, "comma-separated naturals")->delimiter(',');
    witness->add_option("--v", o.rado_v, "comma-separated naturals")->delimiter(',');
    for (auto* sub : {adjacent, encode, decode, witness})
        sub->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help("", CLI::AppFormatMode::Normal);
        return kExitUsage;
    }

    try {
        if (*sample)
            return run_sample(o, out);
        if (*embed)
            return run_embed(o.embed, out);
        if (*common)
            return run_common(o.common, out);
        if (*threshold)
            return run_threshold(o, out);
        if (*region)
            return run_region(o, out);
        if (*moments)
            return run_moments(o, out);
        if (*verify)
            return run_verify_cmd(o, out);
        if (*experiment)
            return run_experiment(o, out, err);
        if (*rado)
            return run_rado(o, *rado, out);
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"isophase"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace isophase::cli
