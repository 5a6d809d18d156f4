#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "riograph/riordan.hpp"

namespace riograph {

enum class FindingStatus { pass, fail, skipped, finding };

std::string status_name(FindingStatus s);

struct GraphDescriptor {
    std::string g_expr;
    std::string f_expr;
    int n = 0;

    bool operator==(const GraphDescriptor&) const = default;
};

GraphDescriptor descriptor_of(const RiordanGraph& G);

// One checked claim on one instance. `fail` is reserved for claims stated
// as theorems; conjecture outcomes use `finding`. The timestamp is the
// emission sequence number within a run, so identical runs emit identical
// streams.
struct Finding {
    std::string claim_id;
    GraphDescriptor graph;
    FindingStatus status = FindingStatus::pass;
    std::vector<std::pair<std::string, std::string>> details;
    std::uint64_t timestamp = 0;
};

// Single-line JSON with keys claim_id, details, graph_descriptor, status,
// timestamp; detail keys keep their insertion order.
std::string finding_line(const Finding& f);

// Per-claim pass/fail/skipped/finding counts plus totals, one JSON object.
std::string summary_json(const std::vector<Finding>& findings);

bool any_theorem_fail(const std::vector<Finding>& findings);

// Collects findings in order and mirrors them to a JSON-lines checkpoint
// when a path is given. On construction any existing checkpoint lines are
// read back (a torn trailing line from a hard interrupt is dropped); a
// finding whose (claim_id, descriptor) key is already present keeps its
// slot in the in-memory stream but is not written again, so an interrupted
// run resumed with the same options ends with the same file as an
// uninterrupted one.
class FindingSink {
public:
    FindingSink() = default;
    explicit FindingSink(const std::string& checkpoint_path);

    Finding& emit(Finding f);
    const std::vector<Finding>& findings() const { return findings_; }
    std::uint64_t next_timestamp() const { return seq_ + 1; }

    static std::string key(const Finding& f);

private:
    std::vector<Finding> findings_;
    std::set<std::string> written_;
    std::ofstream out_;
    bool to_file_ = false;
    std::uint64_t seq_ = 0;
};

struct CorpusOptions {
    int nmax = 48;
    std::uint64_t seed = 1;
    int random_count = 200;
};

// Deterministic corpus: the six named families at every order 1..nmax,
// then `random_count` random (g, f) pairs with polynomial g, f of degree
// <= 8, g(0) = 1, f(0) = 0, f'(0) = 1 and n in {8..33}, then
// random_count/4 random io-decomposable Bell instances obtained by filling
// the odd coefficients of g from its own prefix. All randomness comes from
// a single mt19937_64 stream seeded with `seed`.
std::vector<RiordanGraph> standard_corpus(const CorpusOptions& opt);

// One random io-decomposable Bell instance drawn from `rng` (also used by
// the corpus builder); exposed for callers that need other order ranges.
RiordanGraph random_io_bell(std::mt19937_64& rng, int n);

// Suite names: decomposition | bounds | eigenvectors | inertia | nullity |
// determinant | degrees | all. Every applicable claim is evaluated over
// the corpus; a claim whose evaluation throws becomes a skipped finding
// carrying the reason, except that a ConsistencyError becomes a fail.
// nmax is capped at 128.
std::vector<Finding> run_suite(const std::string& name,
                               const CorpusOptions& opt,
                               FindingSink* sink = nullptr);

// Exact det(CG_n) for 1 <= n <= nmax (nmax >= 6): even n >= 6 and the
// observed odd orders {11,13,15,23,33,51,61,63} must be singular; every
// other order yields a conjecture-consistency finding, plus one summary
// finding comparing the whole zero set against the conjectured
// characterization.
std::vector<Finding> scan_det_catalan(int nmax, FindingSink* sink = nullptr);

// Bell-type corpus (Pascal, Catalan, random Bell, random io-Bell, random
// bipartite Bell): flags any n+ > n- as a counterexample finding and
// replays the observed n-(PG_i) = ceil(i/2) for 2 <= i <= min(nmax, 200).
std::vector<Finding> scan_inertia_order(int nmax, int random_count,
                                        std::uint64_t seed,
                                        FindingSink* sink = nullptr);

// Singular io-decomposable Bell instances: exact rational kernel, the
// odd-coordinate vanishing conjecture, and its theorem equivalence with
// eta(G) = eta(B).
std::vector<Finding> scan_nullity_xo(int nmax, int random_count,
                                     std::uint64_t seed,
                                     FindingSink* sink = nullptr);

// io-decomposable Bell instances: is d(2^p+1) the maximum degree, plus the
// proven comparisons (vs vertex 1, vs 2^(p-1)+1 in its window, vs even
// vertices), the degree window, and the universal-vertex census.
std::vector<Finding> scan_max_degree(int nmax, int random_count,
                                     std::uint64_t seed,
                                     FindingSink* sink = nullptr);

// Diameters: diam(PG_n) = 2 and diam(PG_n) <= diam(G_n) <= diam(CG_n) over
// io-decomposable Bell instances with n >= 4, reported as findings.
std::vector<Finding> scan_diameter(int nmax, int random_count,
                                   std::uint64_t seed,
                                   FindingSink* sink = nullptr);

}  // namespace riograph
