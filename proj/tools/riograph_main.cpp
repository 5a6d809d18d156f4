#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "riograph/bounds.hpp"
#include "riograph/errors.hpp"
#include "riograph/exact.hpp"
#include "riograph/riordan.hpp"
#include "riograph/spectra.hpp"
#include "riograph/verify.hpp"

namespace {

using riograph::Finding;
using riograph::RiordanGraph;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::string g_expr;
    std::string f_expr;
    std::string family_name;
    int n = 0;
    int nmax = 0;  // 0 = command default
    std::uint64_t seed = 1;
    int random_count = 200;
    std::string format = "text";
    std::string output;
    std::string config_path;
    std::string checkpoint;
    std::string suite = "all";
    std::string conjecture;
    int jobs = 1;
};

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num_array(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += num(xs[i]);
    }
    return out + "]";
}

void add_graph_flags(CLI::App* cmd, Opts& o) {
    cmd->add_option("--g", o.g_expr, "numerator series expression");
    cmd->add_option("--f", o.f_expr, "multiplier series expression");
    cmd->add_option("--family", o.family_name, "named family")
        ->check(CLI::IsMember({"pascal", "catalan", "path", "complete",
                               "complete_bipartite", "null"}));
    cmd->add_option("--n", o.n, "graph order");
}

void add_common_flags(CLI::App* cmd, Opts& o) {
    cmd->add_option("--output", o.output, "write data here instead of stdout");
    cmd->add_option("--config", o.config_path, "JSON file mirroring flags");
    cmd->add_option("--jobs", o.jobs, "worker budget (output order is fixed)")
        ->check(CLI::PositiveNumber);
}

void merge_config(const CLI::App* cmd, Opts& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot open config file: " + o.config_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("bad config JSON: " + std::string(e.what()));
    }
    auto unset = [&](const char* flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() == 0;
    };
    try {
        if (j.contains("g") && unset("--g")) o.g_expr = j["g"];
        if (j.contains("f") && unset("--f")) o.f_expr = j["f"];
        if (j.contains("family") && unset("--family"))
            o.family_name = j["family"];
        if (j.contains("n") && unset("--n")) o.n = j["n"];
        if (j.contains("nmax") && unset("--nmax")) o.nmax = j["nmax"];
        if (j.contains("seed") && unset("--seed")) o.seed = j["seed"];
        if (j.contains("random-count") && unset("--random-count"))
            o.random_count = j["random-count"];
        if (j.contains("format") && unset("--format")) o.format = j["format"];
        if (j.contains("output") && unset("--output")) o.output = j["output"];
        if (j.contains("checkpoint") && unset("--checkpoint"))
            o.checkpoint = j["checkpoint"];
        if (j.contains("suite") && unset("--suite")) o.suite = j["suite"];
        if (j.contains("conjecture") && unset("--conjecture"))
            o.conjecture = j["conjecture"];
        if (j.contains("jobs") && unset("--jobs")) o.jobs = j["jobs"];
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("bad config value: " + std::string(e.what()));
    }
}

RiordanGraph graph_from(const Opts& o) {
    const bool has_pair = !o.g_expr.empty() || !o.f_expr.empty();
    const bool has_family = !o.family_name.empty();
    if (has_pair == has_family)
        throw UsageError("give either --g with --f, or --family");
    if (has_pair && (o.g_expr.empty() || o.f_expr.empty()))
        throw UsageError("--g and --f go together");
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (has_family)
        return riograph::family(riograph::family_from_name(o.family_name),
                                o.n);
    return riograph::build_graph(o.g_expr, o.f_expr, o.n);
}

void write_payload(const Opts& o, const std::string& payload) {
    if (o.output.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + o.output);
    out << payload;
}

std::string graph_json(const RiordanGraph& G) {
    std::string out = "{\"f_expr\":\"" + esc(G.f_expr) + "\",\"g_expr\":\"" +
                      esc(G.g_expr) + "\",\"n\":" + std::to_string(G.n) +
                      ",\"rows\":[";
    for (int a = 0; a < G.n; ++a) {
        if (a) out += ',';
        out += '"';
        for (int b = 0; b < G.n; ++b) out += G.adj.get(a, b) ? '1' : '0';
        out += '"';
    }
    return out + "]}\n";
}

int cmd_build(const Opts& o) {
    const RiordanGraph G = graph_from(o);
    std::string payload;
    if (o.format == "text")
        payload = riograph::export_text(G);
    else if (o.format == "dot")
        payload = riograph::export_dot(G);
    else if (o.format == "csv")
        payload = riograph::export_csv(G);
    else if (o.format == "json")
        payload = graph_json(G);
    else
        throw UsageError("unknown format: " + o.format);
    write_payload(o, payload);
    return 0;
}

int cmd_report(const Opts& o) {
    const RiordanGraph G = graph_from(o);
    const riograph::ExactSummary ex = riograph::exact_summary(G.adj);
    const riograph::GraphSpectra sp = riograph::graph_spectra(G);
    const riograph::Classification cls = riograph::classify(G);
    const std::vector<int> deg = riograph::degrees(G);

    std::string out = "{\"classification\":[";
    const auto labels = cls.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += '"' + esc(labels[i]) + '"';
    }
    out += "],\"degrees\":[";
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(deg[i]);
    }
    out += "],\"exact\":{\"charpoly\":[";
    for (std::size_t i = 0; i < ex.charpoly.size(); ++i) {
        if (i) out += ',';
        out += '"' + riograph::bigint_str(ex.charpoly[i]) + '"';
    }
    out += "],\"det\":\"" + riograph::bigint_str(ex.det) +
           "\",\"inertia\":{\"minus\":" + std::to_string(ex.inertia.minus) +
           ",\"plus\":" + std::to_string(ex.inertia.plus) +
           ",\"zero\":" + std::to_string(ex.inertia.zero) +
           "},\"nullity\":" + std::to_string(ex.nullity) +
           ",\"rank\":" + std::to_string(ex.rank) + "}";
    out += ",\"graph_descriptor\":{\"f_expr\":\"" + esc(G.f_expr) +
           "\",\"g_expr\":\"" + esc(G.g_expr) +
           "\",\"n\":" + std::to_string(G.n) + "}";
    auto spectrum = [&](const riograph::SpectrumReport& r) {
        return "{\"eigenvalues\":" + num_array(r.eigenvalues) +
               ",\"residual_bound\":" + num(r.residual_bound) +
               ",\"trace_error\":" + num(r.trace_error) + "}";
    };
    out += ",\"spectra\":{\"adjacency\":" + spectrum(sp.adjacency) +
           ",\"laplacian\":" + spectrum(sp.laplacian) +
           ",\"signless\":" + spectrum(sp.signless) + "}";
    out += ",\"summary\":{\"algebraic_connectivity\":" +
           num(sp.algebraic_connectivity) + ",\"lambda_1\":" +
           num(sp.lambda_1) + ",\"lambda_n\":" + num(sp.lambda_n) +
           ",\"mu_1\":" + num(sp.mu_1) + ",\"q_1\":" + num(sp.q_1) +
           ",\"q_2\":" + num(sp.q_2) + ",\"q_n\":" + num(sp.q_n) + "}}\n";
    write_payload(o, out);
    return 0;
}

int cmd_bounds(const Opts& o) {
    const RiordanGraph G = graph_from(o);
    const auto reports = riograph::all_bounds(G);
    std::string out;
    bool violated = false;
    for (const riograph::BoundReport& r : reports) {
        out += "{\"advisory\":" + std::string(r.advisory ? "true" : "false") +
               ",\"bound_id\":\"" + esc(r.bound_id) + "\",\"holds\":" +
               (r.holds ? "true" : "false") + ",\"hypothesis_met\":" +
               (r.hypothesis_met ? "true" : "false") + ",\"inputs\":{";
        for (std::size_t i = 0; i < r.inputs.size(); ++i) {
            if (i) out += ',';
            out += '"' + esc(r.inputs[i].first) +
                   "\":" + num(r.inputs[i].second);
        }
        out += "},\"lhs\":" + num(r.lhs) + ",\"note\":\"" + esc(r.note) +
               "\",\"relation\":\"" + riograph::relation_symbol(r.relation) +
               "\",\"rhs\":" + num(r.rhs) + ",\"slack\":" + num(r.slack) +
               "}\n";
        if (r.hypothesis_met && !r.holds && !r.advisory) violated = true;
    }
    write_payload(o, out);
    return violated ? 1 : 0;
}

int finish_findings(const Opts& o, const std::vector<Finding>& findings) {
    std::string payload;
    for (const Finding& f : findings)
        payload += riograph::finding_line(f) + '\n';
    const std::string summary = riograph::summary_json(findings);
    write_payload(o, payload);
    if (o.output.empty()) {
        std::fprintf(stderr, "%s\n", summary.c_str());
    } else {
        std::ofstream out(o.output + ".summary.json", std::ios::binary);
        if (!out)
            throw UsageError("cannot open output file: " + o.output +
                             ".summary.json");
        out << summary << '\n';
        std::fprintf(stderr, "%zu findings -> %s\n", findings.size(),
                     o.output.c_str());
    }
    return riograph::any_theorem_fail(findings) ? 1 : 0;
}

int cmd_verify(const Opts& o) {
    static const std::vector<std::string> kSuiteNames{
        "decomposition", "bounds",      "eigenvectors", "inertia",
        "nullity",       "determinant", "degrees",      "all"};
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), o.suite) ==
        kSuiteNames.end())
        throw UsageError("unknown suite: " + o.suite);
    riograph::CorpusOptions corpus;
    corpus.nmax = o.nmax > 0 ? o.nmax : 48;
    corpus.seed = o.seed;
    corpus.random_count = o.random_count;
    std::fprintf(stderr, "verify suite=%s nmax=%d seed=%llu random=%d\n",
                 o.suite.c_str(), corpus.nmax,
                 static_cast<unsigned long long>(corpus.seed),
                 corpus.random_count);
    std::vector<Finding> findings;
    if (o.checkpoint.empty()) {
        findings = riograph::run_suite(o.suite, corpus, nullptr);
    } else {
        riograph::FindingSink sink(o.checkpoint);
        findings = riograph::run_suite(o.suite, corpus, &sink);
    }
    return finish_findings(o, findings);
}

int cmd_scan(const Opts& o) {
    const int nmax = o.nmax > 0 ? o.nmax : 64;
    std::fprintf(stderr, "scan conjecture=%s nmax=%d seed=%llu random=%d\n",
                 o.conjecture.c_str(), nmax,
                 static_cast<unsigned long long>(o.seed), o.random_count);
    auto run = [&](riograph::FindingSink* sink) {
        if (o.conjecture == "det-catalan")
            return riograph::scan_det_catalan(nmax, sink);
        if (o.conjecture == "inertia-order")
            return riograph::scan_inertia_order(nmax, o.random_count, o.seed,
                                                sink);
        if (o.conjecture == "nullity-xo")
            return riograph::scan_nullity_xo(nmax, o.random_count, o.seed,
                                             sink);
        if (o.conjecture == "max-degree")
            return riograph::scan_max_degree(nmax, o.random_count, o.seed,
                                             sink);
        if (o.conjecture == "diameter")
            return riograph::scan_diameter(nmax, o.random_count, o.seed,
                                           sink);
        throw UsageError("unknown conjecture: " + o.conjecture);
    };
    std::vector<Finding> findings;
    if (o.checkpoint.empty()) {
        findings = run(nullptr);
    } else {
        riograph::FindingSink sink(o.checkpoint);
        findings = run(&sink);
    }
    return finish_findings(o, findings);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riordan graph builder, spectral reporter and claim "
                 "verifier"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* build = app.add_subcommand(
        "build", "construct a graph and export its adjacency");
    add_graph_flags(build, o);
    build->add_option("--format", o.format, "text | dot | csv | json")
        ->check(CLI::IsMember({"text", "dot", "csv", "json"}));
    add_common_flags(build, o);

    CLI::App* report = app.add_subcommand(
        "report", "exact and floating invariants of one graph as JSON");
    add_graph_flags(report, o);
    add_common_flags(report, o);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "evaluate every applicable spectral bound on one graph");
    add_graph_flags(bounds, o);
    add_common_flags(bounds, o);

    CLI::App* verify = app.add_subcommand(
        "verify", "run a claim suite over the deterministic corpus");
    verify->add_option("--suite", o.suite,
                       "decomposition | bounds | eigenvectors | inertia | "
                       "nullity | determinant | degrees | all");
    verify->add_option("--nmax", o.nmax, "corpus order cap (default 48)");
    verify->add_option("--seed", o.seed, "random corpus seed");
    verify->add_option("--random-count", o.random_count,
                       "random corpus size (default 200)");
    verify->add_option("--checkpoint", o.checkpoint,
                       "resumable JSON-lines checkpoint file");
    add_common_flags(verify, o);

    CLI::App* scan = app.add_subcommand(
        "scan", "scan one open conjecture and report findings");
    scan->add_option("--conjecture", o.conjecture,
                     "det-catalan | inertia-order | nullity-xo | "
                     "max-degree | diameter")
        ->required();
    scan->add_option("--nmax", o.nmax, "scan order cap (default 64)");
    scan->add_option("--seed", o.seed, "random corpus seed");
    scan->add_option("--random-count", o.random_count,
                     "random corpus size (default 200)");
    scan->add_option("--checkpoint", o.checkpoint,
                     "resumable JSON-lines checkpoint file");
    add_common_flags(scan, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (CLI::App* cmd : {build, report, bounds, verify, scan})
            if (cmd->parsed()) merge_config(cmd, o);
        if (build->parsed()) return cmd_build(o);
        if (report->parsed()) return cmd_report(o);
        if (bounds->parsed()) return cmd_bounds(o);
        if (verify->parsed()) return cmd_verify(o);
        if (scan->parsed()) return cmd_scan(o);
        return 2;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const riograph::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const riograph::HypothesisError& e) {
        std::fprintf(stderr, "hypothesis not met: %s\n", e.what());
        return 3;
    } catch (const riograph::ConsistencyError& e) {
        std::fprintf(stderr, "internal consistency failure: %s\n", e.what());
        return 4;
    } catch (const riograph::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 4;
    }
}
