#include "riograph/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>

#include "riograph/bounds.hpp"
#include "riograph/errors.hpp"
#include "riograph/exact.hpp"
#include "riograph/spectra.hpp"

namespace riograph {

namespace {

using Details = std::vector<std::pair<std::string, std::string>>;

constexpr std::array<int, 8> kGamma{11, 13, 15, 23, 33, 51, 61, 63};

std::string num(long long v) { return std::to_string(v); }

std::string num(int v) { return std::to_string(v); }

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

int ceil_log2(int n) {
    int p = 0;
    while ((1 << p) < n) ++p;
    return p;
}

int floor_log2(int n) {
    int p = 0;
    while ((1 << (p + 1)) <= n) ++p;
    return p;
}

long long pow3(int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v *= 3;
    return v;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

struct Emitter {
    FindingSink& sink;
    std::vector<Finding>& out;

    void push(std::string id, GraphDescriptor d, FindingStatus st,
              Details det) {
        Finding f;
        f.claim_id = std::move(id);
        f.graph = std::move(d);
        f.status = st;
        f.details = std::move(det);
        out.push_back(sink.emit(std::move(f)));
    }

    void pass_fail(const std::string& id, const GraphDescriptor& d, bool ok,
                   Details det) {
        push(id, d, ok ? FindingStatus::pass : FindingStatus::fail,
             std::move(det));
    }

    void skip(const std::string& id, const GraphDescriptor& d,
              std::string why) {
        push(id, d, FindingStatus::skipped, {{"reason", std::move(why)}});
    }
};

// One claim on one instance: a ConsistencyError is a defect and fails the
// claim, anything else recoverable becomes a skipped finding.
template <typename Fn>
void claim(Emitter& em, const std::string& id, const GraphDescriptor& d,
           Fn&& fn) {
    try {
        fn();
    } catch (const ConsistencyError& e) {
        em.push(id, d, FindingStatus::fail, {{"error", e.what()}});
    } catch (const Error& e) {
        em.push(id, d, FindingStatus::skipped, {{"reason", e.what()}});
    }
}

struct Entry {
    RiordanGraph G;
    GraphDescriptor d;
    bool unit_f = false;  // [z^1]f = 1, so the block decomposition applies
    std::optional<Classification> cls;
    std::optional<ExactSummary> exact;
};

Entry make_entry(RiordanGraph g) {
    Entry e;
    e.d = descriptor_of(g);
    e.unit_f = g.f.trunc() >= 1 && g.f.coeff(1);
    e.G = std::move(g);
    return e;
}

const Classification& cls_of(Entry& e) {
    if (!e.cls) e.cls = classify(e.G);
    return *e.cls;
}

const ExactSummary& exact_of(Entry& e) {
    if (!e.exact) e.exact = exact_summary(e.G.adj);
    return *e.exact;
}

RiordanGraph random_pair(std::mt19937_64& rng) {
    const int n = 8 + static_cast<int>(rng() % 26);
    Gf2Series g(n + 8), f(n + 8);
    g.set_coeff(0, true);
    for (int i = 1; i <= 8; ++i) g.set_coeff(i, rng() & 1);
    f.set_coeff(1, true);
    for (int i = 2; i <= 8; ++i) f.set_coeff(i, rng() & 1);
    return build_graph(g, f, n);
}

RiordanGraph random_bell(std::mt19937_64& rng) {
    const int n = 8 + static_cast<int>(rng() % 26);
    Gf2Series g(n + 8);
    g.set_coeff(0, true);
    for (int i = 1; i <= 8; ++i) g.set_coeff(i, rng() & 1);
    return build_graph(g, g.shifted_up(1), n);
}

RiordanGraph random_bipartite_bell(std::mt19937_64& rng) {
    const int n = 8 + static_cast<int>(rng() % 26);
    Gf2Series g(n + 8);
    g.set_coeff(0, true);
    for (int i = 2; i <= 8; i += 2) g.set_coeff(i, rng() & 1);
    return build_graph(g, g.shifted_up(1), n);
}

// ---------------------------------------------------------------- suites

void suite_decomposition(std::vector<Entry>& corpus, const CorpusOptions&,
                         Emitter& em) {
    struct Count {
        Family fam;
        int n;
        long long expected;
    };
    for (int k = 1; k <= 6; ++k) {
        const long long p3 = pow3(k);
        const long long p2 = 1LL << k;
        const Count cases[] = {
            {Family::pascal, static_cast<int>(p2), p3 - p2},
            {Family::pascal, static_cast<int>(p2) + 1, p3},
            {Family::catalan, static_cast<int>(p2), (p3 - 1) / 2},
            {Family::catalan, static_cast<int>(p2) + 1, (p3 - 1) / 2 + p2},
        };
        for (const Count& c : cases) {
            RiordanGraph G = family(c.fam, c.n);
            GraphDescriptor d = descriptor_of(G);
            claim(em, "decomposition.edge-count", d, [&] {
                const long long actual = G.edge_count();
                em.pass_fail("decomposition.edge-count", d,
                             actual == c.expected,
                             {{"k", num(k)},
                              {"expected", num(c.expected)},
                              {"actual", num(actual)}});
            });
        }
    }

    for (Entry& e : corpus) {
        claim(em, "decomposition.blocks", e.d, [&] {
            if (e.G.n >= 2 && !e.unit_f) {
                em.skip("decomposition.blocks", e.d, "needs [z^1]f = 1");
                return;
            }
            DecompositionBlocks b = decompose(e.G);
            em.push("decomposition.blocks", e.d, FindingStatus::pass,
                    {{"sigma", num(b.B.count_ones())},
                     {"odd_order", num(b.X.rows())},
                     {"even_order", num(b.Y.rows())}});
        });

        claim(em, "decomposition.classification", e.d, [&] {
            std::string labels;
            for (const std::string& l : cls_of(e).labels()) {
                if (!labels.empty()) labels += ',';
                labels += l;
            }
            em.push("decomposition.classification", e.d, FindingStatus::pass,
                    {{"labels", labels}});
        });

        claim(em, "decomposition.io-block", e.d, [&] {
            if (e.G.n < 2 || !e.unit_f || !cls_of(e).io_decomposable) {
                em.skip("decomposition.io-block", e.d,
                        "needs an io-decomposable graph on >= 2 vertices");
                return;
            }
            const int n1 = (e.G.n + 1) / 2;
            RiordanGraph half = build_graph(e.G.g, e.G.f, n1);
            em.pass_fail("decomposition.io-block", e.d,
                         decompose(e.G).X == half.adj,
                         {{"half_order", num(n1)}});
        });
    }
}

GraphDescriptor family_bound_descriptor(const std::string& bound_id, int k) {
    const bool pascal = bound_id.find("pascal") != std::string::npos;
    const bool even = bound_id.find("-even") != std::string::npos;
    const int n = (1 << k) + (even ? 0 : 1);
    if (pascal) return {"1/(1-z)", "z/(1-z)", n};
    return {"C", "z*C", n};
}

Details bound_details(const BoundReport& r) {
    Details det{{"lhs", num(r.lhs)},
                {"rhs", num(r.rhs)},
                {"relation", relation_symbol(r.relation)},
                {"slack", num(r.slack)}};
    if (!r.note.empty()) det.emplace_back("note", r.note);
    return det;
}

void emit_bound_report(Emitter& em, const GraphDescriptor& d,
                       const BoundReport& r) {
    const std::string id = "bounds." + r.bound_id;
    if (!r.hypothesis_met) {
        em.skip(id, d, r.note);
        return;
    }
    FindingStatus st = FindingStatus::pass;
    if (!r.holds)
        st = r.advisory ? FindingStatus::finding : FindingStatus::fail;
    em.push(id, d, st, bound_details(r));
}

void suite_bounds(std::vector<Entry>& corpus, const CorpusOptions&,
                  Emitter& em) {
    for (int k = 2; k <= 6; ++k) {
        std::vector<BoundReport> reports;
        try {
            reports = named_family_bounds(k);
        } catch (const Error& e) {
            em.skip("bounds.family", {"", "", 1 << k}, e.what());
            continue;
        }
        for (const BoundReport& r : reports)
            emit_bound_report(em, family_bound_descriptor(r.bound_id, k), r);
    }

    for (Entry& e : corpus) {
        std::vector<BoundReport> reports;
        try {
            reports = all_bounds(e.G);
        } catch (const ConsistencyError& err) {
            em.push("bounds.reports", e.d, FindingStatus::fail,
                    {{"error", err.what()}});
            continue;
        } catch (const Error& err) {
            em.skip("bounds.reports", e.d, err.what());
            continue;
        }
        for (const BoundReport& r : reports) emit_bound_report(em, e.d, r);
    }
}

void suite_eigenvectors(std::vector<Entry>& corpus, const CorpusOptions&,
                        Emitter& em) {
    for (Entry& e : corpus) {
        claim(em, "eigenvectors.claims", e.d, [&] {
            for (const EigenpairClaim& c : eigvec_claims(e.G)) {
                const std::string id = "eigenvectors." + c.claim_id;
                if (!c.applicable) {
                    em.skip(id, e.d, c.detail);
                    continue;
                }
                em.pass_fail(id, e.d, c.pass, {{"detail", c.detail}});
            }
        });
    }
}

void suite_inertia(std::vector<Entry>& corpus, const CorpusOptions&,
                   Emitter& em) {
    for (Entry& e : corpus) {
        const int n = e.G.n;
        const int n1 = (n + 1) / 2;
        const int n2 = n / 2;

        claim(em, "inertia.exact-reconciliation", e.d, [&] {
            const ExactSummary& ex = exact_of(e);
            EigenSystem es = eigen_sym(adjacency_real(e.G.adj));
            Inertia cal = calibrated_inertia(es.values, ex.nullity);
            em.pass_fail("inertia.exact-reconciliation", e.d,
                         cal == ex.inertia,
                         {{"n_plus", num(ex.inertia.plus)},
                          {"n_zero", num(ex.inertia.zero)},
                          {"n_minus", num(ex.inertia.minus)}});
        });

        claim(em, "inertia.odec-cap", e.d, [&] {
            if (!cls_of(e).o_decomposable) {
                em.skip("inertia.odec-cap", e.d,
                        "needs an o-decomposable graph");
                return;
            }
            const Inertia& in = exact_of(e).inertia;
            em.pass_fail("inertia.odec-cap", e.d,
                         std::max(in.plus, in.minus) <= n1,
                         {{"n_plus", num(in.plus)},
                          {"n_minus", num(in.minus)},
                          {"cap", num(n1)}});
        });

        claim(em, "inertia.odec-nonsingular", e.d, [&] {
            if (!cls_of(e).o_decomposable || n % 2 != 0 ||
                exact_of(e).det == 0) {
                em.skip("inertia.odec-nonsingular", e.d,
                        "needs a nonsingular o-decomposable graph of even "
                        "order");
                return;
            }
            const Inertia& in = exact_of(e).inertia;
            em.pass_fail("inertia.odec-nonsingular", e.d,
                         in.plus == n2 && in.minus == n2,
                         {{"n_plus", num(in.plus)},
                          {"n_minus", num(in.minus)}});
        });

        claim(em, "inertia.edec-cap", e.d, [&] {
            if (!cls_of(e).e_decomposable) {
                em.skip("inertia.edec-cap", e.d,
                        "needs an e-decomposable graph");
                return;
            }
            const Inertia& in = exact_of(e).inertia;
            em.pass_fail("inertia.edec-cap", e.d,
                         std::max(in.plus, in.minus) <= n2,
                         {{"n_plus", num(in.plus)},
                          {"n_minus", num(in.minus)},
                          {"cap", num(n2)}});
        });

        claim(em, "inertia.edec-singular", e.d, [&] {
            if (!cls_of(e).e_decomposable || n % 2 == 0) {
                em.skip("inertia.edec-singular", e.d,
                        "needs an e-decomposable graph of odd order");
                return;
            }
            em.pass_fail("inertia.edec-singular", e.d, exact_of(e).det == 0,
                         {{"det", bigint_str(exact_of(e).det)}});
        });

        claim(em, "inertia.bipartite-floor", e.d, [&] {
            const Classification& c = cls_of(e);
            if (!c.o_decomposable && !c.e_decomposable) {
                em.skip("inertia.bipartite-floor", e.d,
                        "needs an o- or e-decomposable graph");
                return;
            }
            const int rank_h =
                rank_int(ZMatrix::from_bits(bipartite_double(e.G)));
            const Inertia& in = exact_of(e).inertia;
            bool ok = rank_h % 2 == 0 &&
                      std::min(in.plus, in.minus) >= rank_h / 2;
            if (n % 2 == 0 && rank_h == n)
                ok = ok && in.plus == n2 && in.minus == n2 && in.zero == 0;
            em.pass_fail("inertia.bipartite-floor", e.d, ok,
                         {{"bipartite_rank", num(rank_h)},
                          {"n_plus", num(in.plus)},
                          {"n_minus", num(in.minus)}});
        });

        claim(em, "inertia.complement-negatives", e.d, [&] {
            const Classification& c = cls_of(e);
            if (!c.o_decomposable && !c.e_decomposable) {
                em.skip("inertia.complement-negatives", e.d,
                        "needs an o- or e-decomposable graph");
                return;
            }
            int bound = 0;
            if (c.o_decomposable) bound = std::max(bound, n2 - 1);
            if (c.e_decomposable) bound = std::max(bound, n1 - 1);
            EigenSystem es =
                eigen_sym(adjacency_real(complement_adj(e.G.adj)));
            int cnt = 0;
            for (double v : es.values)
                if (v <= -1.0 + 1e-9) ++cnt;
            em.pass_fail("inertia.complement-negatives", e.d, cnt >= bound,
                         {{"at_most_minus_one", num(cnt)},
                          {"bound", num(bound)}});
        });

        claim(em, "inertia.bipartite-symmetric", e.d, [&] {
            if (!cls_of(e).checkerboard) {
                em.skip("inertia.bipartite-symmetric", e.d,
                        "needs a checkerboard graph");
                return;
            }
            const Inertia& in = exact_of(e).inertia;
            em.pass_fail("inertia.bipartite-symmetric", e.d,
                         in.plus == in.minus,
                         {{"n_plus", num(in.plus)},
                          {"n_minus", num(in.minus)}});
        });

        claim(em, "inertia.laplacian-complement", e.d, [&] {
            std::vector<double> mu =
                eigen_sym(laplacian_real(e.G.adj)).values;
            std::vector<double> comp =
                eigen_sym(laplacian_real(complement_adj(e.G.adj))).values;
            double dev = 0;
            for (int j = 0; j + 1 < n; ++j)
                dev = std::max(dev,
                               std::abs(comp[j] - (n - mu[n - 2 - j])));
            if (n >= 1) dev = std::max(dev, std::abs(comp[n - 1]));
            em.pass_fail("inertia.laplacian-complement", e.d, dev <= 1e-8,
                         {{"max_deviation", num(dev)}});
        });

        claim(em, "inertia.laplacian-max", e.d, [&] {
            const double mu1 =
                n > 0 ? eigen_sym(laplacian_real(e.G.adj)).values.front()
                      : 0.0;
            const bool comp_disconnected =
                !diameter(complement_adj(e.G.adj)).has_value();
            const bool at_top = mu1 >= n - 1e-7;
            em.pass_fail("inertia.laplacian-max", e.d,
                         mu1 <= n + 1e-8 && at_top == comp_disconnected,
                         {{"mu_1", num(mu1)},
                          {"complement_disconnected",
                           bool_str(comp_disconnected)}});
        });
    }
}

void suite_nullity(std::vector<Entry>& corpus, const CorpusOptions&,
                   Emitter& em) {
    for (Entry& e : corpus) {
        const int n = e.G.n;
        const int n1 = (n + 1) / 2;
        const int n2 = n / 2;

        claim(em, "nullity.odec-sandwich", e.d, [&] {
            if (!e.unit_f || !cls_of(e).o_decomposable) {
                em.skip("nullity.odec-sandwich", e.d,
                        "needs an o-decomposable graph with [z^1]f = 1");
                return;
            }
            const int eta_b =
                n2 - rank_int(ZMatrix::from_bits(decompose(e.G).B));
            const int eta_a = exact_of(e).nullity;
            em.pass_fail("nullity.odec-sandwich", e.d,
                         eta_b <= eta_a && eta_a <= 2 * eta_b + n % 2,
                         {{"eta_graph", num(eta_a)},
                          {"eta_block", num(eta_b)}});
        });

        claim(em, "nullity.odec-even-det", e.d, [&] {
            if (!e.unit_f || !cls_of(e).o_decomposable || n % 2 != 0) {
                em.skip("nullity.odec-even-det", e.d,
                        "needs an o-decomposable graph of even order");
                return;
            }
            const BigInt det_b =
                det_exact(ZMatrix::from_bits(decompose(e.G).B));
            const BigInt& det_a = exact_of(e).det;
            em.pass_fail("nullity.odec-even-det", e.d,
                         (det_b != 0) == (det_a != 0),
                         {{"det_graph", bigint_str(det_a)},
                          {"det_block", bigint_str(det_b)}});
        });

        claim(em, "nullity.odec-odd-kernel", e.d, [&] {
            if (!e.unit_f || !cls_of(e).o_decomposable || n % 2 == 0) {
                em.skip("nullity.odec-odd-kernel", e.d,
                        "needs an o-decomposable graph of odd order");
                return;
            }
            const int eta_b =
                n2 - rank_int(ZMatrix::from_bits(decompose(e.G).B));
            if (eta_b != 0) {
                em.skip("nullity.odec-odd-kernel", e.d,
                        "needs a cross block of full column rank");
                return;
            }
            const int eta_a = exact_of(e).nullity;
            em.pass_fail("nullity.odec-odd-kernel", e.d, eta_a <= 1,
                         {{"eta_graph", num(eta_a)}});
        });

        const bool io_bell = [&] {
            try {
                const Classification& c = cls_of(e);
                return c.bell && c.io_decomposable && e.unit_f && n >= 2;
            } catch (const Error&) {
                return false;
            }
        }();

        claim(em, "nullity.stacked-rank", e.d, [&] {
            if (!io_bell) {
                em.skip("nullity.stacked-rank", e.d,
                        "needs an io-decomposable Bell graph on >= 2 "
                        "vertices");
                return;
            }
            DecompositionBlocks b = decompose(e.G);
            ZMatrix stacked(n, n1);
            for (int r = 0; r < n1; ++r)
                for (int c = 0; c < n1; ++c)
                    stacked.at(r, c) = b.X.get(r, c) ? 1 : 0;
            for (int r = 0; r < n2; ++r)
                for (int c = 0; c < n1; ++c)
                    stacked.at(n1 + r, c) = b.B.get(c, r) ? 1 : 0;
            const int rank = rank_int(stacked);
            em.pass_fail("nullity.stacked-rank", e.d, rank == n1,
                         {{"rank", num(rank)}, {"expected", num(n1)}});
        });

        claim(em, "nullity.kernel-equivalence", e.d, [&] {
            if (!io_bell) {
                em.skip("nullity.kernel-equivalence", e.d,
                        "needs an io-decomposable Bell graph on >= 2 "
                        "vertices");
                return;
            }
            const int eta_a = exact_of(e).nullity;
            if (eta_a == 0) {
                em.skip("nullity.kernel-equivalence", e.d,
                        "needs a singular graph");
                return;
            }
            const auto kernel = kernel_basis(ZMatrix::from_bits(e.G.adj));
            bool xo_zero = true;
            for (const auto& vec : kernel)
                for (int v = 1; v <= n; v += 2)
                    if (vec[v - 1] != 0) xo_zero = false;
            const int eta_b =
                n2 - rank_int(ZMatrix::from_bits(decompose(e.G).B));
            em.pass_fail("nullity.kernel-equivalence", e.d,
                         xo_zero == (eta_a == eta_b),
                         {{"odd_coordinates_vanish", bool_str(xo_zero)},
                          {"eta_graph", num(eta_a)},
                          {"eta_block", num(eta_b)},
                          {"kernel_dim", num(static_cast<long long>(
                                             kernel.size()))}});
        });

        claim(em, "nullity.transform", e.d, [&] {
            if (!io_bell) {
                em.skip("nullity.transform", e.d,
                        "needs an io-decomposable Bell graph on >= 2 "
                        "vertices");
                return;
            }
            NullityTransform nt = nullity_transform(e.G);
            em.push("nullity.transform", e.d, FindingStatus::pass,
                    {{"eta_graph", num(nt.eta_graph)},
                     {"eta_block", num(nt.eta_block)},
                     {"eta_transformed", num(nt.eta_transformed)}});
        });

        claim(em, "nullity.schur-det", e.d, [&] {
            const Classification& c = cls_of(e);
            if (!e.unit_f || n % 2 != 0 ||
                (!c.o_decomposable && !c.e_decomposable)) {
                em.skip("nullity.schur-det", e.d,
                        "needs an o- or e-decomposable graph of even order");
                return;
            }
            SchurPair sp = schur_pair_check(e.G);
            em.pass_fail("nullity.schur-det", e.d, sp.pass,
                         {{"det_graph", bigint_str(sp.det_graph)},
                          {"det_block", bigint_str(sp.det_block)}});
        });
    }
}

void suite_determinant(std::vector<Entry>&, const CorpusOptions& opt,
                       Emitter& em) {
    for (int n = 1; n <= opt.nmax; ++n) {
        RiordanGraph G = family(Family::catalan, n);
        GraphDescriptor d = descriptor_of(G);
        const bool in_gamma =
            std::find(kGamma.begin(), kGamma.end(), n) != kGamma.end();
        const std::string id = n >= 6 && n % 2 == 0
                                   ? "determinant.catalan-even"
                                   : in_gamma ? "determinant.catalan-gamma"
                                              : "determinant.catalan-outside";
        claim(em, id, d, [&] {
            const BigInt det = det_exact(ZMatrix::from_bits(G.adj));
            Details det_details{{"det", bigint_str(det)}};
            if (id == "determinant.catalan-outside") {
                det_details.emplace_back("singular", bool_str(det == 0));
                det_details.emplace_back("conjecture_consistent",
                                         bool_str(det != 0));
                em.push(id, d, FindingStatus::finding,
                        std::move(det_details));
                return;
            }
            em.pass_fail(id, d, det == 0, std::move(det_details));
        });
    }
}

void suite_degrees(std::vector<Entry>& corpus, const CorpusOptions& opt,
                   Emitter& em) {
    for (int n = 2; n <= opt.nmax; ++n) {
        RiordanGraph G = family(Family::pascal, n);
        GraphDescriptor d = descriptor_of(G);
        claim(em, "degrees.pascal-universal", d, [&] {
            const int p = floor_log2(n - 1);
            std::vector<int> expected;
            if (n == (1 << p) + 1)
                expected = {1, (n + 1) / 2, n};
            else
                expected = {1, (1 << p) + 1};
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()),
                           expected.end());
            const std::vector<int> actual = universal_vertices(G);
            em.pass_fail("degrees.pascal-universal", d, actual == expected,
                         {{"expected", join_ints(expected)},
                          {"actual", join_ints(actual)}});
        });
    }

    for (Entry& e : corpus) {
        const int n = e.G.n;
        const bool io_bell = [&] {
            try {
                const Classification& c = cls_of(e);
                return c.bell && c.io_decomposable && e.unit_f && n >= 2;
            } catch (const Error&) {
                return false;
            }
        }();
        const std::string gate = "needs an io-decomposable Bell graph on "
                                 ">= 2 vertices";

        claim(em, "degrees.formulas", e.d, [&] {
            if (!io_bell) {
                em.skip("degrees.formulas", e.d, gate);
                return;
            }
            Details det;
            bool ok = true;
            for (const DegreeFormulaCheck& c : degree_formula_checks(e.G)) {
                ok = ok && c.pass;
                det.emplace_back(c.formula, "expected " +
                                                num(c.expected) +
                                                ", actual " +
                                                num(c.actual));
            }
            em.pass_fail("degrees.formulas", e.d, ok, std::move(det));
        });

        claim(em, "degrees.universal-census", e.d, [&] {
            if (!io_bell) {
                em.skip("degrees.universal-census", e.d, gate);
                return;
            }
            const int p = floor_log2(n - 1);
            std::vector<int> allowed{1, (1 << p) + 1};
            if (p >= 1) allowed.push_back((1 << (p - 1)) + 1);
            std::sort(allowed.begin(), allowed.end());
            allowed.erase(std::unique(allowed.begin(), allowed.end()),
                          allowed.end());
            const std::vector<int> uv = universal_vertices(e.G);
            bool ok = uv.size() <= 3;
            for (int v : uv)
                ok = ok && std::find(allowed.begin(), allowed.end(), v) !=
                               allowed.end();
            em.pass_fail("degrees.universal-census", e.d, ok,
                         {{"universal", join_ints(uv)},
                          {"allowed", join_ints(allowed)}});
        });

        claim(em, "degrees.clique-chromatic", e.d, [&] {
            if (!io_bell) {
                em.skip("degrees.clique-chromatic", e.d, gate);
                return;
            }
            if (n > 32) {
                em.skip("degrees.clique-chromatic", e.d,
                        "exact search capped at order 32");
                return;
            }
            const auto [omega, chi] = clique_and_chromatic(e.G, 32);
            const int expected = ceil_log2(n) + 1;
            em.pass_fail("degrees.clique-chromatic", e.d,
                         omega == expected && chi == expected,
                         {{"omega", num(omega)},
                          {"chi", num(chi)},
                          {"expected", num(expected)}});
        });

        claim(em, "degrees.partition-independence", e.d, [&] {
            if (!io_bell) {
                em.skip("degrees.partition-independence", e.d, gate);
                return;
            }
            const auto parts = partition_moj(e.G);
            const int expected = ceil_log2(n) + 1;
            em.pass_fail(
                "degrees.partition-independence", e.d,
                static_cast<int>(parts.size()) == expected,
                {{"parts", num(static_cast<long long>(parts.size()))},
                 {"expected", num(expected)}});
        });
    }
}

using SuiteFn = void (*)(std::vector<Entry>&, const CorpusOptions&,
                         Emitter&);

constexpr std::pair<const char*, SuiteFn> kSuites[] = {
    {"decomposition", suite_decomposition},
    {"bounds", suite_bounds},
    {"eigenvectors", suite_eigenvectors},
    {"inertia", suite_inertia},
    {"nullity", suite_nullity},
    {"determinant", suite_determinant},
    {"degrees", suite_degrees},
};

// ---------------------------------------------------------------- scans

// Exact inertia through the characteristic polynomial up to order 64;
// beyond that, exact nullity calibrates the floating spectrum.
std::pair<Inertia, std::string> inertia_of(const RiordanGraph& G) {
    if (G.n <= 64) return {exact_summary(G.adj).inertia, "charpoly"};
    const int eta = G.n - rank_int(ZMatrix::from_bits(G.adj));
    try {
        EigenSystem es = eigen_sym(adjacency_real(G.adj));
        return {calibrated_inertia(es.values, eta), "calibrated"};
    } catch (const ConsistencyError& e) {
        throw HypothesisError(std::string(e.what()) +
                              " (floating calibration above order 64)");
    }
}

void inertia_problem_finding(Emitter& em, const RiordanGraph& G) {
    GraphDescriptor d = descriptor_of(G);
    claim(em, "scan.inertia-order.problem", d, [&] {
        const auto [in, method] = inertia_of(G);
        em.push("scan.inertia-order.problem", d, FindingStatus::finding,
                {{"n_plus", num(in.plus)},
                 {"n_minus", num(in.minus)},
                 {"method", method},
                 {"counterexample", bool_str(in.plus > in.minus)}});
    });
}

}  // namespace

// ------------------------------------------------------------- plumbing

std::string status_name(FindingStatus s) {
    switch (s) {
        case FindingStatus::pass: return "pass";
        case FindingStatus::fail: return "fail";
        case FindingStatus::skipped: return "skipped";
        case FindingStatus::finding: return "finding";
    }
    throw ConsistencyError("unreachable finding status");
}

GraphDescriptor descriptor_of(const RiordanGraph& G) {
    return {G.g_expr, G.f_expr, G.n};
}

std::string finding_line(const Finding& f) {
    std::string out = "{\"claim_id\":\"" + json_escape(f.claim_id) +
                      "\",\"details\":{";
    bool first = true;
    for (const auto& [k, v] : f.details) {
        if (!first) out += ',';
        first = false;
        out += '"' + json_escape(k) + "\":\"" + json_escape(v) + '"';
    }
    out += "},\"graph_descriptor\":{\"f_expr\":\"" +
           json_escape(f.graph.f_expr) + "\",\"g_expr\":\"" +
           json_escape(f.graph.g_expr) +
           "\",\"n\":" + std::to_string(f.graph.n) + "},\"status\":\"" +
           status_name(f.status) +
           "\",\"timestamp\":" + std::to_string(f.timestamp) + "}";
    return out;
}

std::string summary_json(const std::vector<Finding>& findings) {
    std::map<std::string, std::array<long long, 4>> per_claim;
    std::array<long long, 4> totals{0, 0, 0, 0};
    auto slot = [](FindingStatus s) {
        switch (s) {
            case FindingStatus::fail: return 0;
            case FindingStatus::finding: return 1;
            case FindingStatus::pass: return 2;
            case FindingStatus::skipped: return 3;
        }
        return 3;
    };
    for (const Finding& f : findings) {
        per_claim[f.claim_id][slot(f.status)]++;
        totals[slot(f.status)]++;
    }
    auto counts = [](const std::array<long long, 4>& c) {
        return "{\"fail\":" + std::to_string(c[0]) +
               ",\"finding\":" + std::to_string(c[1]) +
               ",\"pass\":" + std::to_string(c[2]) +
               ",\"skipped\":" + std::to_string(c[3]) + "}";
    };
    std::string out = "{\"claims\":{";
    bool first = true;
    for (const auto& [id, c] : per_claim) {
        if (!first) out += ',';
        first = false;
        out += '"' + json_escape(id) + "\":" + counts(c);
    }
    out += "},\"totals\":" + counts(totals) +
           ",\"findings\":" + std::to_string(findings.size()) + "}";
    return out;
}

bool any_theorem_fail(const std::vector<Finding>& findings) {
    for (const Finding& f : findings)
        if (f.status == FindingStatus::fail) return true;
    return false;
}

FindingSink::FindingSink(const std::string& checkpoint_path)
    : to_file_(true) {
    auto field = [](const std::string& text, const std::string& tag)
        -> std::optional<std::string> {
        const auto at = text.find(tag);
        if (at == std::string::npos) return std::nullopt;
        const auto from = at + tag.size();
        const auto to = text.find('"', from);
        if (to == std::string::npos) return std::nullopt;
        return text.substr(from, to - from);
    };
    std::vector<std::string> preserved;
    {
        std::ifstream in(checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            // a complete line carries every key field and ends the object
            if (line.empty() || line.back() != '}' ||
                line.find("\"timestamp\":") == std::string::npos)
                continue;
            auto claim_id = field(line, "\"claim_id\":\"");
            auto f_expr = field(line, "\"f_expr\":\"");
            auto g_expr = field(line, "\"g_expr\":\"");
            const auto nat = line.find("\"n\":");
            if (!claim_id || !f_expr || !g_expr || nat == std::string::npos)
                continue;
            Finding f;
            f.claim_id = *claim_id;
            f.graph = {*g_expr, *f_expr, std::atoi(line.c_str() + nat + 4)};
            if (written_.insert(key(f)).second)
                preserved.push_back(line);
        }
    }
    out_.open(checkpoint_path, std::ios::trunc);
    if (!out_)
        throw Error("cannot open checkpoint file: " + checkpoint_path);
    for (const std::string& line : preserved) out_ << line << '\n';
    out_.flush();
}

std::string FindingSink::key(const Finding& f) {
    return f.claim_id + '\x1f' + f.graph.g_expr + '\x1f' + f.graph.f_expr +
           '\x1f' + std::to_string(f.graph.n);
}

Finding& FindingSink::emit(Finding f) {
    f.timestamp = ++seq_;
    if (to_file_) {
        const std::string k = key(f);
        if (written_.insert(k).second) {
            out_ << finding_line(f) << '\n';
            out_.flush();
        }
    }
    findings_.push_back(std::move(f));
    return findings_.back();
}

RiordanGraph random_io_bell(std::mt19937_64& rng, int n) {
    const int t = n + 8;
    Gf2Series g(t);
    g.set_coeff(0, true);
    for (int i = 1; i <= t; ++i) {
        if (i % 2 == 1)
            g.set_coeff(i, g.coeff((i - 1) / 2));
        else
            g.set_coeff(i, rng() & 1);
    }
    return build_graph(g, g.shifted_up(1), n);
}

std::vector<RiordanGraph> standard_corpus(const CorpusOptions& opt) {
    if (opt.nmax < 1)
        throw HypothesisError("corpus needs nmax >= 1");
    if (opt.random_count < 0)
        throw HypothesisError("corpus needs random_count >= 0");
    std::vector<RiordanGraph> out;
    for (Family fam : {Family::pascal, Family::catalan, Family::path,
                       Family::complete, Family::complete_bipartite,
                       Family::null_graph})
        for (int n = 1; n <= opt.nmax; ++n) out.push_back(family(fam, n));
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.random_count; ++i)
        out.push_back(random_pair(rng));
    for (int i = 0; i < opt.random_count / 4; ++i)
        out.push_back(random_io_bell(rng, 8 + static_cast<int>(rng() % 26)));
    return out;
}

std::vector<Finding> run_suite(const std::string& name,
                               const CorpusOptions& opt, FindingSink* sink) {
    if (opt.nmax > 128)
        throw HypothesisError("suite corpus is capped at nmax <= 128");
    FindingSink local;
    FindingSink& s = sink ? *sink : local;
    std::vector<Finding> out;
    Emitter em{s, out};

    std::vector<Entry> corpus;
    for (RiordanGraph& g : standard_corpus(opt))
        corpus.push_back(make_entry(std::move(g)));

    bool found = false;
    for (const auto& [suite_name, fn] : kSuites) {
        if (name == "all" || name == suite_name) {
            fn(corpus, opt, em);
            found = true;
        }
    }
    if (!found)
        throw HypothesisError("unknown suite: " + name);
    return out;
}

std::vector<Finding> scan_det_catalan(int nmax, FindingSink* sink) {
    if (nmax < 6)
        throw HypothesisError("determinant scan needs nmax >= 6");
    FindingSink local;
    FindingSink& s = sink ? *sink : local;
    std::vector<Finding> out;
    Emitter em{s, out};

    std::vector<int> zeros, conjectured;
    for (int n = 1; n <= nmax; ++n) {
        RiordanGraph G = family(Family::catalan, n);
        GraphDescriptor d = descriptor_of(G);
        const bool in_gamma =
            std::find(kGamma.begin(), kGamma.end(), n) != kGamma.end();
        const bool predicted = (n >= 6 && n % 2 == 0) || in_gamma;
        if (predicted) conjectured.push_back(n);
        const BigInt det = det_exact(ZMatrix::from_bits(G.adj));
        if (det == 0) zeros.push_back(n);
        if (n >= 6 && n % 2 == 0) {
            em.pass_fail("scan.det-catalan.even", d, det == 0,
                         {{"det", bigint_str(det)}});
        } else if (in_gamma) {
            em.pass_fail("scan.det-catalan.gamma", d, det == 0,
                         {{"det", bigint_str(det)}});
        } else {
            em.push("scan.det-catalan.outside", d, FindingStatus::finding,
                    {{"det", bigint_str(det)},
                     {"singular", bool_str(det == 0)},
                     {"conjecture_consistent", bool_str(det != 0)}});
        }
    }
    std::vector<int> discrepancies;
    std::set_symmetric_difference(zeros.begin(), zeros.end(),
                                  conjectured.begin(), conjectured.end(),
                                  std::back_inserter(discrepancies));
    em.push("scan.det-catalan.zero-set", {"C", "z*C", nmax},
            FindingStatus::finding,
            {{"zeros", join_ints(zeros)},
             {"conjectured", join_ints(conjectured)},
             {"discrepancies", join_ints(discrepancies)},
             {"agreement", bool_str(discrepancies.empty())}});
    return out;
}

std::vector<Finding> scan_inertia_order(int nmax, int random_count,
                                        std::uint64_t seed,
                                        FindingSink* sink) {
    if (nmax < 2)
        throw HypothesisError("inertia scan needs nmax >= 2");
    FindingSink local;
    FindingSink& s = sink ? *sink : local;
    std::vector<Finding> out;
    Emitter em{s, out};

    const int top = std::min(nmax, 200);
    for (int i = 2; i <= top; ++i) {
        RiordanGraph G = family(Family::pascal, i);
        GraphDescriptor d = descriptor_of(G);
        inertia_problem_finding(em, G);
        claim(em, "scan.inertia-order.pascal-negative", d, [&] {
            const auto [in, method] = inertia_of(G);
            const int expected = (i + 1) / 2;
            em.push("scan.inertia-order.pascal-negative", d,
                    FindingStatus::finding,
                    {{"n_minus", num(in.minus)},
                     {"expected", num(expected)},
                     {"method", method},
                     {"consistent", bool_str(in.minus == expected)}});
        });
    }
    for (int n = 2; n <= top; ++n)
        inertia_problem_finding(em, family(Family::catalan, n));

    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i)
        inertia_problem_finding(em, random_bell(rng));
    for (int i = 0; i < random_count / 4; ++i)
        inertia_problem_finding(
            em, random_io_bell(rng, 8 + static_cast<int>(rng() % 26)));
    for (int i = 0; i < random_count / 4; ++i) {
        RiordanGraph G = random_bipartite_bell(rng);
        GraphDescriptor d = descriptor_of(G);
        inertia_problem_finding(em, G);
        claim(em, "scan.inertia-order.bipartite", d, [&] {
            const auto [in, method] = inertia_of(G);
            em.pass_fail("scan.inertia-order.bipartite", d,
                         in.plus == in.minus,
                         {{"n_plus", num(in.plus)},
                          {"n_minus", num(in.minus)},
                          {"method", method}});
        });
    }
    return out;
}

std::vector<Finding> scan_nullity_xo(int nmax, int random_count,
                                     std::uint64_t seed, FindingSink* sink) {
    if (nmax < 2)
        throw HypothesisError("nullity scan needs nmax >= 2");
    FindingSink local;
    FindingSink& s = sink ? *sink : local;
    std::vector<Finding> out;
    Emitter em{s, out};

    auto instance = [&](const RiordanGraph& G) {
        GraphDescriptor d = descriptor_of(G);
        auto skip_both = [&](const std::string& why) {
            em.skip("scan.nullity-xo.equivalence", d, why);
            em.skip("scan.nullity-xo.conjecture", d, why);
        };
        try {
            Classification cls = classify(G);
            if (!(cls.bell && cls.io_decomposable && G.n >= 2)) {
                skip_both("needs an io-decomposable Bell graph on >= 2 "
                          "vertices");
                return;
            }
            ZMatrix a = ZMatrix::from_bits(G.adj);
            const int eta = G.n - rank_int(a);
            if (eta == 0) {
                skip_both("nonsingular instance");
                return;
            }
            const auto kernel = kernel_basis(a);
            bool xo_zero = true;
            for (const auto& vec : kernel)
                for (int v = 1; v <= G.n; v += 2)
                    if (vec[v - 1] != 0) xo_zero = false;
            const int eta_b =
                G.n / 2 - rank_int(ZMatrix::from_bits(decompose(G).B));
            em.pass_fail("scan.nullity-xo.equivalence", d,
                         xo_zero == (eta == eta_b),
                         {{"odd_coordinates_vanish", bool_str(xo_zero)},
                          {"eta_graph", num(eta)},
                          {"eta_block", num(eta_b)}});
            em.push("scan.nullity-xo.conjecture", d, FindingStatus::finding,
                    {{"odd_coordinates_vanish", bool_str(xo_zero)},
                     {"eta_graph", num(eta)},
                     {"eta_block", num(eta_b)},
                     {"counterexample", bool_str(!xo_zero)}});
        } catch (const ConsistencyError& e) {
            em.push("scan.nullity-xo.equivalence", d, FindingStatus::fail,
                    {{"error", e.what()}});
            em.push("scan.nullity-xo.conjecture", d, FindingStatus::fail,
                    {{"error", e.what()}});
        } catch (const Error& e) {
            skip_both(e.what());
        }
    };

    for (int n = 2; n <= nmax; ++n) instance(family(Family::pascal, n));
    for (int n = 2; n <= nmax; ++n) instance(family(Family::catalan, n));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i)
        instance(random_io_bell(rng, 8 + static_cast<int>(rng() % 26)));
    return out;
}

std::vector<Finding> scan_max_degree(int nmax, int random_count,
                                     std::uint64_t seed, FindingSink* sink) {
    if (nmax < 2)
        throw HypothesisError("degree scan needs nmax >= 2");
    FindingSink local;
    FindingSink& s = sink ? *sink : local;
    std::vector<Finding> out;
    Emitter em{s, out};

    static const std::array<const char*, 6> ids = {
        "scan.max-degree.conjecture", "scan.max-degree.vs-first",
        "scan.max-degree.vs-mid",     "scan.max-degree.vs-even",
        "scan.max-degree.window",     "scan.max-degree.census"};

    auto instance = [&](const RiordanGraph& G) {
        GraphDescriptor d = descriptor_of(G);
        try {
            Classification cls = classify(G);
            if (!(cls.bell && cls.io_decomposable && G.n >= 2)) {
                for (const char* id : ids)
                    em.skip(id, d,
                            "needs an io-decomposable Bell graph on >= 2 "
                            "vertices");
                return;
            }
            const int n = G.n;
            const int p = floor_log2(n - 1);
            const int v = (1 << p) + 1;
            const std::vector<int> deg = degrees(G);
            const int dv = deg[v - 1];
            const int dmax = *std::max_element(deg.begin(), deg.end());

            em.push("scan.max-degree.conjecture", d, FindingStatus::finding,
                    {{"vertex", num(v)},
                     {"degree", num(dv)},
                     {"max_degree", num(dmax)},
                     {"counterexample", bool_str(dv != dmax)}});

            em.pass_fail("scan.max-degree.vs-first", d, dv >= deg[0],
                         {{"degree", num(dv)}, {"d_1", num(deg[0])}});

            if (p >= 1 && n <= 1 + (1 << (p - 1)) + (1 << p)) {
                const int mid = (1 << (p - 1)) + 1;
                em.pass_fail("scan.max-degree.vs-mid", d,
                             dv >= deg[mid - 1],
                             {{"degree", num(dv)},
                              {"d_mid", num(deg[mid - 1])}});
            } else {
                em.skip("scan.max-degree.vs-mid", d,
                        "needs n <= 1 + 2^(p-1) + 2^p");
            }

            int even_max = 0;
            for (int i = 2; i <= n; i += 2)
                even_max = std::max(even_max, deg[i - 1]);
            em.pass_fail("scan.max-degree.vs-even", d, dv >= even_max,
                         {{"degree", num(dv)},
                          {"even_max", num(even_max)}});

            const int lo = (1 << p) + ceil_log2(n - (1 << p));
            em.pass_fail("scan.max-degree.window", d,
                         lo <= dv && dv <= n - 1,
                         {{"degree", num(dv)},
                          {"low", num(lo)},
                          {"high", num(n - 1)}});

            std::vector<int> allowed{1, v};
            if (p >= 1) allowed.push_back((1 << (p - 1)) + 1);
            std::sort(allowed.begin(), allowed.end());
            allowed.erase(std::unique(allowed.begin(), allowed.end()),
                          allowed.end());
            const std::vector<int> uv = universal_vertices(G);
            bool census = uv.size() <= 3;
            for (int u : uv)
                census = census &&
                         std::find(allowed.begin(), allowed.end(), u) !=
                             allowed.end();
            em.pass_fail("scan.max-degree.census", d, census,
                         {{"universal", join_ints(uv)},
                          {"allowed", join_ints(allowed)}});
        } catch (const ConsistencyError& e) {
            for (const char* id : ids)
                em.push(id, d, FindingStatus::fail, {{"error", e.what()}});
        } catch (const Error& e) {
            for (const char* id : ids) em.skip(id, d, e.what());
        }
    };

    for (int n = 2; n <= nmax; ++n) instance(family(Family::pascal, n));
    for (int n = 2; n <= nmax; ++n) instance(family(Family::catalan, n));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i)
        instance(random_io_bell(rng, 8 + static_cast<int>(rng() % 26)));
    return out;
}

std::vector<Finding> scan_diameter(int nmax, int random_count,
                                   std::uint64_t seed, FindingSink* sink) {
    if (nmax < 4)
        throw HypothesisError("diameter scan needs nmax >= 4");
    FindingSink local;
    FindingSink& s = sink ? *sink : local;
    std::vector<Finding> out;
    Emitter em{s, out};

    auto diam_str = [](const std::optional<int>& v) {
        return v ? num(*v) : std::string("inf");
    };

    for (int n = 4; n <= nmax; ++n) {
        RiordanGraph pg = family(Family::pascal, n);
        RiordanGraph cg = family(Family::catalan, n);
        const auto pd = diameter(pg);
        const auto cd = diameter(cg);
        GraphDescriptor d = descriptor_of(pg);
        claim(em, "scan.diameter.pascal", d, [&] {
            em.push("scan.diameter.pascal", d, FindingStatus::finding,
                    {{"diameter", diam_str(pd)},
                     {"counterexample", bool_str(!(pd && *pd == 2))}});
        });
        claim(em, "scan.diameter.family-order", d, [&] {
            const bool ok = pd && cd && *pd <= *cd;
            em.push("scan.diameter.family-order", d, FindingStatus::finding,
                    {{"pascal", diam_str(pd)},
                     {"catalan", diam_str(cd)},
                     {"consistent", bool_str(ok)}});
        });
    }

    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        RiordanGraph G = random_io_bell(rng, 8 + static_cast<int>(rng() % 26));
        GraphDescriptor d = descriptor_of(G);
        claim(em, "scan.diameter.ordering", d, [&] {
            const auto dg = diameter(G);
            const auto pd = diameter(family(Family::pascal, G.n));
            const auto cd = diameter(family(Family::catalan, G.n));
            const bool ok = dg && pd && cd && *pd <= *dg && *dg <= *cd;
            em.push("scan.diameter.ordering", d, FindingStatus::finding,
                    {{"diameter", diam_str(dg)},
                     {"pascal", diam_str(pd)},
                     {"catalan", diam_str(cd)},
                     {"diameter_two", bool_str(dg && *dg == 2)},
                     {"counterexample", bool_str(!ok)}});
        });
    }
    return out;
}

}  // namespace riograph
