#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "riograph/errors.hpp"
#include "riograph/exact.hpp"
#include "riograph/verify.hpp"

using namespace riograph;

namespace {

std::string detail(const Finding& f, const std::string& key) {
    for (const auto& [k, v] : f.details)
        if (k == key) return v;
    return "";
}

const Finding* find_one(const std::vector<Finding>& fs,
                        const std::string& claim_id,
                        const GraphDescriptor& d) {
    for (const Finding& f : fs)
        if (f.claim_id == claim_id && f.graph == d) return &f;
    return nullptr;
}

std::map<std::string, int> status_counts(const std::vector<Finding>& fs,
                                         const std::string& claim_id) {
    std::map<std::string, int> out;
    for (const Finding& f : fs)
        if (f.claim_id == claim_id) out[status_name(f.status)]++;
    return out;
}

std::string stream_text(const std::vector<Finding>& fs) {
    std::string out;
    for (const Finding& f : fs) out += finding_line(f) + '\n';
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

const GraphDescriptor kPascal10{"1/(1-z)", "z/(1-z)", 10};
const GraphDescriptor kCatalan4{"C", "z*C", 4};

}  // namespace

TEST_CASE("corpus is deterministic and well formed") {
    const CorpusOptions opt{10, 3, 8};
    const auto a = standard_corpus(opt);
    const auto b = standard_corpus(opt);
    REQUIRE(a.size() == 6 * 10 + 8 + 2);
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].g_expr == b[i].g_expr);
        CHECK(a[i].f_expr == b[i].f_expr);
        CHECK(a[i].adj == b[i].adj);
    }
    for (int n = 1; n <= 10; ++n) {
        CHECK(a[n - 1].g_expr == "1/(1-z)");
        CHECK(a[n - 1].n == n);
    }
    for (std::size_t i = 60; i < a.size(); ++i) {
        CHECK(a[i].n >= 8);
        CHECK(a[i].n <= 33);
        CHECK(a[i].g.coeff(0));
        CHECK_FALSE(a[i].f.coeff(0));
        CHECK(a[i].f.coeff(1));
    }
    const auto c = standard_corpus({10, 4, 8});
    bool same = true;
    for (std::size_t i = 60; i < a.size(); ++i)
        same = same && a[i].adj == c[i].adj;
    CHECK_FALSE(same);

    CHECK_THROWS_AS(standard_corpus({0, 1, 0}), HypothesisError);
    CHECK_THROWS_AS(standard_corpus({8, 1, -1}), HypothesisError);
}

TEST_CASE("random Bell instances land in the io-decomposable class") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 12; ++i) {
        const int n = 5 + static_cast<int>(rng() % 24);
        const RiordanGraph G = random_io_bell(rng, n);
        CHECK(G.n == n);
        const Classification cls = classify(G);
        CHECK(cls.bell);
        CHECK(cls.io_decomposable);
    }
}

TEST_CASE("finding lines pin the serialization format") {
    Finding f;
    f.claim_id = "demo.claim";
    f.graph = {"1/(1-z)", "z/(1-z)", 8};
    f.status = FindingStatus::finding;
    f.details = {{"alpha", "1"}, {"beta", "x\"y"}};
    f.timestamp = 42;
    CHECK(finding_line(f) ==
          "{\"claim_id\":\"demo.claim\",\"details\":{\"alpha\":\"1\","
          "\"beta\":\"x\\\"y\"},\"graph_descriptor\":{\"f_expr\":"
          "\"z/(1-z)\",\"g_expr\":\"1/(1-z)\",\"n\":8},\"status\":"
          "\"finding\",\"timestamp\":42}");

    CHECK(status_name(FindingStatus::pass) == "pass");
    CHECK(status_name(FindingStatus::fail) == "fail");
    CHECK(status_name(FindingStatus::skipped) == "skipped");
    CHECK(status_name(FindingStatus::finding) == "finding");
}

TEST_CASE("summaries count by claim and status") {
    std::vector<Finding> fs(3);
    fs[0].claim_id = "a.b";
    fs[0].status = FindingStatus::pass;
    fs[1].claim_id = "a.b";
    fs[1].status = FindingStatus::fail;
    fs[2].claim_id = "c.d";
    fs[2].status = FindingStatus::finding;
    CHECK(summary_json(fs) ==
          "{\"claims\":{\"a.b\":{\"fail\":1,\"finding\":0,\"pass\":1,"
          "\"skipped\":0},\"c.d\":{\"fail\":0,\"finding\":1,\"pass\":0,"
          "\"skipped\":0}},\"totals\":{\"fail\":1,\"finding\":1,\"pass\":1,"
          "\"skipped\":0},\"findings\":3}");

    CHECK(any_theorem_fail(fs));
    fs.erase(fs.begin() + 1);
    CHECK_FALSE(any_theorem_fail(fs));
    CHECK_FALSE(any_theorem_fail({}));
}

TEST_CASE("sinks number findings in emission order") {
    FindingSink sink;
    Finding f;
    f.claim_id = "x.y";
    sink.emit(f);
    sink.emit(f);
    REQUIRE(sink.findings().size() == 2);
    CHECK(sink.findings()[0].timestamp == 1);
    CHECK(sink.findings()[1].timestamp == 2);
    CHECK(sink.next_timestamp() == 3);
}

TEST_CASE("checkpoint resume reproduces an uninterrupted run") {
    const CorpusOptions opt{12, 1, 0};
    const auto full_path = temp_path("riograph_ckpt_full.jsonl");
    {
        FindingSink sink(full_path.string());
        run_suite("determinant", opt, &sink);
    }
    const std::string full = read_file(full_path);
    REQUIRE(!full.empty());

    // interrupt after five complete lines plus a torn sixth
    std::vector<std::string> lines;
    {
        std::istringstream in(full);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    REQUIRE(lines.size() == 12);
    const auto part_path = temp_path("riograph_ckpt_part.jsonl");
    {
        std::ofstream out(part_path, std::ios::binary);
        for (int i = 0; i < 5; ++i) out << lines[i] << '\n';
        out << lines[5].substr(0, lines[5].size() / 2);
    }
    {
        FindingSink sink(part_path.string());
        run_suite("determinant", opt, &sink);
    }
    CHECK(read_file(part_path) == full);

    // resuming over a complete file rewrites it unchanged
    {
        FindingSink sink(full_path.string());
        run_suite("determinant", opt, &sink);
    }
    CHECK(read_file(full_path) == full);

    std::filesystem::remove(full_path);
    std::filesystem::remove(part_path);
}

TEST_CASE("determinant suite matches the exact Catalan zero pattern") {
    const auto fs = run_suite("determinant", {16, 1, 0}, nullptr);
    CHECK(status_counts(fs, "determinant.catalan-even") ==
          std::map<std::string, int>{{"pass", 6}});
    CHECK(status_counts(fs, "determinant.catalan-gamma") ==
          std::map<std::string, int>{{"pass", 3}});
    CHECK(status_counts(fs, "determinant.catalan-outside") ==
          std::map<std::string, int>{{"finding", 7}});
    const Finding* cg5 =
        find_one(fs, "determinant.catalan-outside", {"C", "z*C", 5});
    REQUIRE(cg5);
    CHECK(detail(*cg5, "singular") == "false");
    CHECK(detail(*cg5, "conjecture_consistent") == "true");
}

TEST_CASE("catalan determinant scan agrees with the conjectured zero set") {
    const auto fs = scan_det_catalan(33);
    CHECK(status_counts(fs, "scan.det-catalan.even") ==
          std::map<std::string, int>{{"pass", 14}});
    CHECK(status_counts(fs, "scan.det-catalan.gamma") ==
          std::map<std::string, int>{{"pass", 5}});
    const Finding* zs =
        find_one(fs, "scan.det-catalan.zero-set", {"C", "z*C", 33});
    REQUIRE(zs);
    // the one-vertex graph is singular but outside the conjectured set
    CHECK(detail(*zs, "discrepancies") == "1");
    CHECK(detail(*zs, "agreement") == "false");
    CHECK(detail(*zs, "zeros") == "1," + detail(*zs, "conjectured"));
    CHECK_FALSE(any_theorem_fail(fs));

    CHECK_THROWS_AS(scan_det_catalan(5), HypothesisError);
}

TEST_CASE("inertia suite reproduces the exact sign counts") {
    const auto fs = run_suite("inertia", {10, 1, 0}, nullptr);
    CHECK_FALSE(any_theorem_fail(fs));

    const Finding* pg10 = find_one(fs, "inertia.exact-reconciliation",
                                   kPascal10);
    REQUIRE(pg10);
    CHECK(pg10->status == FindingStatus::pass);
    CHECK(detail(*pg10, "n_plus") == "4");
    CHECK(detail(*pg10, "n_zero") == "1");
    CHECK(detail(*pg10, "n_minus") == "5");

    const Finding* k10 = find_one(fs, "inertia.exact-reconciliation",
                                  {"1/(1-z)", "z", 10});
    REQUIRE(k10);
    CHECK(detail(*k10, "n_plus") == "1");
    CHECK(detail(*k10, "n_minus") == "9");

    // complete bipartite graphs are checkerboard, so signs balance
    const Finding* kb = find_one(fs, "inertia.bipartite-symmetric",
                                 {"1/(1-z^2)", "z", 10});
    REQUIRE(kb);
    CHECK(kb->status == FindingStatus::pass);
}

TEST_CASE("bounds suite isolates the known order-4 violation") {
    const auto fs = run_suite("bounds", {4, 1, 0}, nullptr);
    std::vector<const Finding*> fails;
    for (const Finding& f : fs)
        if (f.status == FindingStatus::fail) fails.push_back(&f);
    REQUIRE(fails.size() == 1);
    CHECK(fails[0]->claim_id == "bounds.io.tail-singular");
    CHECK(fails[0]->graph == kCatalan4);
    CHECK(any_theorem_fail(fs));
}

TEST_CASE("decomposition suite checks edge counts and io blocks") {
    const auto fs = run_suite("decomposition", {10, 1, 0}, nullptr);
    CHECK_FALSE(any_theorem_fail(fs));
    CHECK(status_counts(fs, "decomposition.edge-count") ==
          std::map<std::string, int>{{"pass", 24}});
    const Finding* pg10 = find_one(fs, "decomposition.io-block", kPascal10);
    REQUIRE(pg10);
    CHECK(pg10->status == FindingStatus::pass);
}

TEST_CASE("eigenvector and nullity suites hold on the mixed corpus") {
    const auto ev = run_suite("eigenvectors", {8, 1, 0}, nullptr);
    CHECK_FALSE(any_theorem_fail(ev));
    int pascal_pairs = 0;
    for (const Finding& f : ev)
        if (f.claim_id == "eigenvectors.pascal.adjacency.universal-pair" &&
            f.graph.g_expr == "1/(1-z)" && f.graph.f_expr == "z/(1-z)" &&
            f.status == FindingStatus::pass)
            ++pascal_pairs;
    CHECK(pascal_pairs == 7);

    const auto nu = run_suite("nullity", {10, 3, 8}, nullptr);
    CHECK_FALSE(any_theorem_fail(nu));
    CHECK(status_counts(nu, "nullity.schur-det").count("fail") == 0);
    CHECK(status_counts(nu, "nullity.transform").at("pass") >= 5);
}

TEST_CASE("degrees suite pins the universal vertices of order nine") {
    const auto fs = run_suite("degrees", {9, 1, 0}, nullptr);
    CHECK_FALSE(any_theorem_fail(fs));
    const Finding* pg9 = find_one(fs, "degrees.pascal-universal",
                                  {"1/(1-z)", "z/(1-z)", 9});
    REQUIRE(pg9);
    CHECK(pg9->status == FindingStatus::pass);
    CHECK(detail(*pg9, "expected") == "1,5,9");
    CHECK(detail(*pg9, "actual") == "1,5,9");
}

TEST_CASE("full runs are reproducible byte for byte") {
    const CorpusOptions opt{6, 3, 4};
    const auto a = run_suite("all", opt, nullptr);
    const auto b = run_suite("all", opt, nullptr);
    REQUIRE(!a.empty());
    CHECK(stream_text(a) == stream_text(b));

    CHECK_THROWS_AS(run_suite("spectralish", opt, nullptr), HypothesisError);
    CHECK_THROWS_AS(run_suite("all", {200, 1, 0}, nullptr), HypothesisError);
}

TEST_CASE("the Bell sign-count question has a negative answer at order 5") {
    const RiordanGraph c5 = build_graph("1+z^3", "z+z^4", 5);
    CHECK(classify(c5).bell);
    CHECK(c5.edge_count() == 5);
    for (int v = 1; v <= 5; ++v) CHECK(c5.degree(v) == 2);
    const ExactSummary ex = exact_summary(c5.adj);
    CHECK(ex.inertia == Inertia{3, 0, 2});
}

TEST_CASE("inertia scan replays the observed Pascal sign counts") {
    const auto fs = scan_inertia_order(16, 8, 5);
    CHECK_FALSE(any_theorem_fail(fs));
    int negatives = 0;
    for (const Finding& f : fs) {
        if (f.claim_id == "scan.inertia-order.pascal-negative") {
            CHECK(detail(f, "consistent") == "true");
            ++negatives;
        }
        if (f.claim_id == "scan.inertia-order.problem" &&
            f.graph.g_expr == "1/(1-z)")
            CHECK(detail(f, "counterexample") == "false");
    }
    CHECK(negatives == 15);

    int counterexamples = 0;
    for (const Finding& f : scan_inertia_order(17, 200, 7))
        if (f.claim_id == "scan.inertia-order.problem" &&
            detail(f, "counterexample") == "true")
            ++counterexamples;
    CHECK(counterexamples > 0);
}

TEST_CASE("kernel scan finds no odd-coordinate counterexample") {
    const auto fs = scan_nullity_xo(16, 8, 5);
    CHECK_FALSE(any_theorem_fail(fs));
    int conjecture = 0;
    for (const Finding& f : fs) {
        if (f.claim_id != "scan.nullity-xo.conjecture" ||
            f.status != FindingStatus::finding)
            continue;
        CHECK(detail(f, "odd_coordinates_vanish") == "true");
        CHECK(detail(f, "counterexample") == "false");
        ++conjecture;
    }
    CHECK(conjecture > 10);
}

TEST_CASE("degree scan confirms the maximum-degree vertex") {
    const auto fs = scan_max_degree(20, 8, 5);
    CHECK_FALSE(any_theorem_fail(fs));
    for (const Finding& f : fs)
        if (f.claim_id == "scan.max-degree.conjecture" &&
            f.status == FindingStatus::finding)
            CHECK(detail(f, "counterexample") == "false");

    const Finding* pg12 = find_one(fs, "scan.max-degree.conjecture",
                                   {"1/(1-z)", "z/(1-z)", 12});
    REQUIRE(pg12);
    CHECK(detail(*pg12, "vertex") == "9");
    CHECK(detail(*pg12, "degree") == detail(*pg12, "max_degree"));

    const Finding* cg20 = find_one(fs, "scan.max-degree.vs-first",
                                   {"C", "z*C", 20});
    REQUIRE(cg20);
    CHECK(cg20->status == FindingStatus::pass);
}

TEST_CASE("diameter scan sees two and the family ordering") {
    const auto fs = scan_diameter(12, 4, 5);
    CHECK_FALSE(any_theorem_fail(fs));
    int pascal = 0, order = 0, random_cases = 0;
    for (const Finding& f : fs) {
        if (f.claim_id == "scan.diameter.pascal") {
            CHECK(detail(f, "diameter") == "2");
            CHECK(detail(f, "counterexample") == "false");
            ++pascal;
        }
        if (f.claim_id == "scan.diameter.family-order") {
            CHECK(detail(f, "consistent") == "true");
            ++order;
        }
        if (f.claim_id == "scan.diameter.ordering") {
            CHECK(detail(f, "counterexample") == "false");
            ++random_cases;
        }
    }
    CHECK(pascal == 9);
    CHECK(order == 9);
    CHECK(random_cases == 4);

    CHECK_THROWS_AS(scan_diameter(3, 0, 1), HypothesisError);
}
