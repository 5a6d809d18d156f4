#include "riograph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "riograph/errors.hpp"
#include "riograph/spectra.hpp"

namespace riograph {

namespace {

constexpr double kSlackTol = 1e-8;
constexpr double kTieBand = 1e-9;

using Inputs = std::vector<std::pair<std::string, double>>;

struct PartitionRhs {
    double lambda = 0.0;
    double mu = 0.0;
    double q_hi = 0.0;
    double q_lo = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

// Right sides of the four partition bounds for a split into k and n-k
// vertices with m1, m2 internal edges.
PartitionRhs partition_rhs(double n, double m, double k, double m1,
                           double m2) {
    const double m3 = m - m1 - m2;
    const double a = m1 / k;
    const double b = m2 / (n - k);
    PartitionRhs r;
    r.lambda = a + b + std::sqrt((a - b) * (a - b) + m3 * m3 / (k * (n - k)));
    r.mu = n * m3 / (k * (n - k));
    r.c1 = (m + 3.0 * m1 - m2) / k;
    r.c2 = (m - m1 + 3.0 * m2) / (n - k);
    const double disc = std::sqrt((r.c1 - r.c2) * (r.c1 - r.c2) +
                                  4.0 * m3 * m3 / (k * (n - k)));
    r.q_hi = 0.5 * (r.c1 + r.c2 + disc);
    r.q_lo = 0.5 * (r.c1 + r.c2 - disc);
    return r;
}

int ceil_log2(int v) {
    int p = 0;
    while ((1 << p) < v) ++p;
    return p;
}

int floor_log2(int v) {
    int p = 0;
    while ((1 << (p + 1)) <= v) ++p;
    return p;
}

long long block_edges(const BitMatrix& sym) { return sym.count_ones() / 2; }

long long edges_within(const RiordanGraph& G, const std::vector<int>& verts) {
    long long cnt = 0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (G.adj.get(verts[a] - 1, verts[b] - 1)) ++cnt;
    return cnt;
}

// Sum over j = 0..jmax of the number of odd coefficients of s*f^j in
// degrees 0..cap.
long long gf_ones_sum(const Gf2Series& s, const Gf2Series& f, int jmax,
                      int cap) {
    long long total = 0;
    Gf2Series term = s;
    for (int j = 0; j <= jmax; ++j) {
        total += term.ones_count_prefix(cap);
        if (j < jmax) term = term * f;
    }
    return total;
}

BoundReport skipped(std::string id, Relation rel, std::string why) {
    return make_report(std::move(id), false, 0.0, 0.0, rel, {}, false,
                       std::move(why));
}

double second_smallest_laplacian(const BitMatrix& adj) {
    const EigenSystem es = eigen_sym(laplacian_real(adj));
    return es.values[es.values.size() - 2];
}

}  // namespace

std::string relation_symbol(Relation r) {
    switch (r) {
        case Relation::ge: return ">=";
        case Relation::le: return "<=";
        case Relation::eq: return "==";
    }
    return "?";
}

BoundReport make_report(std::string id, bool hypothesis, double lhs,
                        double rhs, Relation rel, Inputs inputs, bool advisory,
                        std::string note) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.hypothesis_met = hypothesis;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    r.inputs = std::move(inputs);
    r.advisory = advisory;
    r.note = std::move(note);
    if (!hypothesis) {
        r.holds = true;
        r.slack = 0.0;
        if (r.note.empty()) r.note = "skipped";
        return r;
    }
    switch (rel) {
        case Relation::ge: r.slack = lhs - rhs; break;
        case Relation::le: r.slack = rhs - lhs; break;
        case Relation::eq: r.slack = -std::abs(lhs - rhs); break;
    }
    r.holds = r.slack >= -kSlackTol;
    return r;
}

std::vector<BoundReport> quotient_bounds(const RiordanGraph& G,
                                         const std::vector<int>& subset) {
    const int n = G.n;
    std::set<int> w(subset.begin(), subset.end());
    if (w.size() != subset.size())
        throw HypothesisError("subset has repeated vertices");
    if (w.empty() || static_cast<int>(w.size()) == n)
        throw HypothesisError("subset must be nonempty and proper");
    for (int v : w)
        if (v < 1 || v > n) throw HypothesisError("vertex label out of range");

    std::vector<int> inside(w.begin(), w.end());
    std::vector<int> outside;
    for (int v = 1; v <= n; ++v)
        if (!w.count(v)) outside.push_back(v);

    const double m = static_cast<double>(G.edge_count());
    const double k = static_cast<double>(inside.size());
    const long long m1i = edges_within(G, inside);
    const long long m2i = edges_within(G, outside);
    const double m1 = static_cast<double>(m1i);
    const double m2 = static_cast<double>(m2i);
    const PartitionRhs rhs = partition_rhs(n, m, k, m1, m2);
    const GraphSpectra gs = graph_spectra(G);

    const Inputs in{{"n", double(n)}, {"m", m},        {"k", k},
                    {"m1", m1},       {"m2", m2},      {"m3", m - m1 - m2},
                    {"c1", rhs.c1},   {"c2", rhs.c2}};

    std::vector<BoundReport> out;
    out.push_back(make_report("quotient.spectral-radius", true, gs.lambda_1,
                              rhs.lambda, Relation::ge, in));
    out.push_back(make_report("quotient.laplacian-radius", true, gs.mu_1,
                              rhs.mu, Relation::ge, in));
    out.push_back(make_report("quotient.signless-radius", true, gs.q_1,
                              rhs.q_hi, Relation::ge, in));
    out.push_back(make_report("quotient.signless-second", true, gs.q_2,
                              rhs.q_lo, Relation::ge, in));
    out.push_back(make_report("quotient.signless-floor", true, gs.q_n,
                              rhs.q_lo, Relation::le, in));
    const long long d = std::llround(m - m1 - m2);
    const bool tail = d > 0 && double(d) * double(d) > 4.0 * m1 * m2;
    out.push_back(make_report("quotient.negative-tail", tail,
                              tail ? gs.lambda_n : 0.0, 0.0, Relation::le, in,
                              false,
                              tail ? "" : "needs m > m1+m2+2*sqrt(m1*m2)"));
    return out;
}

std::vector<BoundReport> riordan_bounds(const RiordanGraph& G) {
    std::vector<BoundReport> out;
    const int n = G.n;
    static const char* core_ids[] = {
        "riordan.spectral-radius",  "riordan.laplacian-radius",
        "riordan.signless-radius",  "riordan.signless-second",
        "riordan.signless-floor",   "riordan.dominates-average",
        "riordan.signless-dominates-average"};
    if (n < 2 || !G.f.coeff(1)) {
        const std::string why =
            n < 2 ? "needs n >= 2" : "needs [z^1]f = 1 for the odd/even split";
        for (const char* id : core_ids)
            out.push_back(skipped(id, Relation::ge, why));
        return out;
    }

    const int n1 = (n + 1) / 2;
    const int n2 = n / 2;
    const DecompositionBlocks blocks = decompose(G);
    const long long m1_direct = block_edges(blocks.X);
    const long long m2_direct = block_edges(blocks.Y);
    // Same block edge counts through the generating-function route. A
    // one-vertex block has no edges and no series to build.
    std::optional<RiordanGraph> H1, H2;
    if (n1 >= 2) H1.emplace(build_graph(G.g.odd_part(), G.f, n1));
    if (n2 >= 2)
        H2.emplace(build_graph((G.g * G.f).shifted_down(1).odd_part(), G.f, n2));
    const long long m1_gf = H1 ? H1->edge_count() : 0;
    const long long m2_gf = H2 ? H2->edge_count() : 0;
    if (m1_gf != m1_direct || m2_gf != m2_direct)
        throw ConsistencyError(
            "block edge counts disagree with the generating-function route");

    const double m = static_cast<double>(G.edge_count());
    const double m1 = static_cast<double>(m1_direct);
    const double m2 = static_cast<double>(m2_direct);
    const PartitionRhs rhs = partition_rhs(n, m, n1, m1, m2);
    const GraphSpectra gs = graph_spectra(G);
    const Classification cls = classify(G);

    Inputs in{{"n", double(n)}, {"m", m},        {"n1", double(n1)},
              {"n2", double(n2)}, {"m1", m1},    {"m2", m2},
              {"c1", rhs.c1},   {"c2", rhs.c2}};

    out.push_back(make_report("riordan.spectral-radius", true, gs.lambda_1,
                              rhs.lambda, Relation::ge, in));
    out.push_back(make_report("riordan.laplacian-radius", true, gs.mu_1,
                              rhs.mu, Relation::ge, in));
    out.push_back(make_report("riordan.signless-radius", true, gs.q_1,
                              rhs.q_hi, Relation::ge, in));
    out.push_back(make_report("riordan.signless-second", true, gs.q_2,
                              rhs.q_lo, Relation::ge, in));
    out.push_back(make_report("riordan.signless-floor", true, gs.q_n,
                              rhs.q_lo, Relation::le, in));
    out.push_back(make_report("riordan.dominates-average", true, rhs.lambda,
                              2.0 * m / n, Relation::ge, in));
    out.push_back(make_report("riordan.signless-dominates-average", true,
                              rhs.q_hi, 4.0 * m / n, Relation::ge, in));

    // Appell, even order: the partition bounds collapse to the average
    // bounds and the split is symmetric.
    {
        const bool hyp = cls.appell && n % 2 == 0;
        const std::string why = "needs an Appell graph of even order";
        if (hyp) {
            Inputs ain = in;
            out.push_back(make_report("appell.average-equality", true,
                                      rhs.lambda, 2.0 * m / n, Relation::eq,
                                      ain));
            out.push_back(make_report("appell.signless-average-equality", true,
                                      rhs.q_hi, 4.0 * m / n, Relation::eq,
                                      ain));
            out.push_back(make_report("appell.laplacian-radius", true, gs.mu_1,
                                      4.0 * (m - 2.0 * m1) / n, Relation::ge,
                                      ain));
            out.push_back(make_report("appell.signless-second", true, gs.q_2,
                                      8.0 * m1 / n, Relation::ge, ain));
            out.push_back(make_report("appell.signless-floor", true, gs.q_n,
                                      8.0 * m1 / n, Relation::le, ain));
            const bool tail = m > 4.0 * m1;
            out.push_back(make_report(
                "appell.negative-tail", tail, tail ? gs.lambda_n : 0.0,
                tail ? (8.0 * m1 - 2.0 * m) / n : 0.0, Relation::le, ain,
                false, tail ? "" : "needs m > 4*m1"));
        } else {
            out.push_back(skipped("appell.average-equality", Relation::eq, why));
            out.push_back(
                skipped("appell.signless-average-equality", Relation::eq, why));
            out.push_back(
                skipped("appell.laplacian-radius", Relation::ge, why));
            out.push_back(skipped("appell.signless-second", Relation::ge, why));
            out.push_back(skipped("appell.signless-floor", Relation::le, why));
            out.push_back(skipped("appell.negative-tail", Relation::le, why));
        }
    }

    // Vanishing odd part of g in the graph window: the odd-labelled block
    // is empty, so the partition bounds specialize with m1 = 0.
    {
        const bool hyp = cls.e_decomposable;
        const std::string why = "needs an e-decomposable graph";
        if (hyp) {
            out.push_back(make_report("edec.spectral-radius", true,
                                      gs.lambda_1, rhs.lambda, Relation::ge,
                                      in));
            out.push_back(make_report("edec.laplacian-radius", true, gs.mu_1,
                                      rhs.mu, Relation::ge, in));
            out.push_back(make_report("edec.signless-radius", true, gs.q_1,
                                      rhs.q_hi, Relation::ge, in));
            out.push_back(make_report("edec.signless-second", true, gs.q_2,
                                      rhs.q_lo, Relation::ge, in));
            out.push_back(make_report("edec.signless-floor", true, gs.q_n,
                                      rhs.q_lo, Relation::le, in));
        } else {
            out.push_back(skipped("edec.spectral-radius", Relation::ge, why));
            out.push_back(skipped("edec.laplacian-radius", Relation::ge, why));
            out.push_back(skipped("edec.signless-radius", Relation::ge, why));
            out.push_back(skipped("edec.signless-second", Relation::ge, why));
            out.push_back(skipped("edec.signless-floor", Relation::le, why));
        }
    }

    // Checkerboard: bipartite between the label classes.
    {
        const bool hyp = cls.checkerboard;
        const std::string why = "needs a checkerboard graph";
        if (hyp) {
            const double geo = m / std::sqrt(double(n1) * double(n2));
            out.push_back(make_report("checkerboard.radius-symmetry", true,
                                      gs.lambda_1, -gs.lambda_n, Relation::eq,
                                      in));
            out.push_back(make_report("checkerboard.radius-lower", true,
                                      gs.lambda_1, geo, Relation::ge, in));
            out.push_back(make_report("checkerboard.laplacian-signless-equality",
                                      true, gs.mu_1, gs.q_1, Relation::eq, in));
            out.push_back(make_report("checkerboard.laplacian-radius", true,
                                      gs.mu_1, n * m / (double(n1) * double(n2)),
                                      Relation::ge, in));
            out.push_back(make_report("checkerboard.signless-floor", true,
                                      gs.q_n, 0.0, Relation::eq, in));
        } else {
            out.push_back(
                skipped("checkerboard.radius-symmetry", Relation::eq, why));
            out.push_back(
                skipped("checkerboard.radius-lower", Relation::ge, why));
            out.push_back(skipped("checkerboard.laplacian-signless-equality",
                                  Relation::eq, why));
            out.push_back(
                skipped("checkerboard.laplacian-radius", Relation::ge, why));
            out.push_back(
                skipped("checkerboard.signless-floor", Relation::eq, why));
        }
    }

    // Both g and f supported on odd degrees only: the graph splits into
    // two components carried by the label classes.
    {
        const bool hyp = G.g.even_part().is_zero() && G.f.even_part().is_zero();
        const std::string why =
            "needs every even-degree coefficient of g and f to vanish";
        if (hyp) {
            double lam_split = 0.0;
            double q_split = 0.0;
            if (H1) {
                const GraphSpectra s1 = graph_spectra(*H1);
                lam_split = std::max(lam_split, s1.lambda_1);
                q_split = std::max(q_split, s1.q_1);
            }
            if (H2) {
                const GraphSpectra s2 = graph_spectra(*H2);
                lam_split = std::max(lam_split, s2.lambda_1);
                q_split = std::max(q_split, s2.q_1);
            }
            out.push_back(make_report("disconnected.components-radius", true,
                                      gs.lambda_1, lam_split, Relation::eq,
                                      in));
            out.push_back(make_report(
                "disconnected.radius-lower", true, gs.lambda_1,
                std::max(2.0 * m1 / n1, 2.0 * (m - m1) / n2), Relation::ge,
                in));
            out.push_back(make_report("disconnected.components-signless", true,
                                      gs.q_1, q_split, Relation::eq, in));
            out.push_back(make_report(
                "disconnected.signless-lower", true, gs.q_1,
                std::max(4.0 * m1 / n1, 4.0 * (m - m1) / n2), Relation::ge,
                in));
        } else {
            out.push_back(
                skipped("disconnected.components-radius", Relation::eq, why));
            out.push_back(
                skipped("disconnected.radius-lower", Relation::ge, why));
            out.push_back(
                skipped("disconnected.components-signless", Relation::eq, why));
            out.push_back(
                skipped("disconnected.signless-lower", Relation::ge, why));
        }
    }

    // Bell form: the even-labelled block is empty and m2 drops out.
    {
        const bool hyp = cls.bell;
        const std::string why = "needs a Bell graph";
        if (hyp) {
            const long long m1_bell =
                cls.io_decomposable ? build_graph(G.g, G.f, n1).edge_count()
                                    : m1_direct;
            if (m1_bell != m1_direct)
                throw ConsistencyError(
                    "io self-similar block edge count disagrees with the "
                    "direct count");
            const double mb = static_cast<double>(m1_bell);
            const PartitionRhs br = partition_rhs(n, m, n1, mb, 0.0);
            Inputs bin = in;
            bin.push_back({"m1_bell", mb});
            out.push_back(make_report("bell.spectral-radius", true,
                                      gs.lambda_1, br.lambda, Relation::ge,
                                      bin));
            out.push_back(make_report("bell.laplacian-radius", true, gs.mu_1,
                                      br.mu, Relation::ge, bin));
            out.push_back(make_report("bell.signless-radius", true, gs.q_1,
                                      br.q_hi, Relation::ge, bin));
            out.push_back(make_report("bell.signless-second", true, gs.q_2,
                                      br.q_lo, Relation::ge, bin));
            out.push_back(make_report("bell.signless-floor", true, gs.q_n,
                                      br.q_lo, Relation::le, bin));
        } else {
            out.push_back(skipped("bell.spectral-radius", Relation::ge, why));
            out.push_back(skipped("bell.laplacian-radius", Relation::ge, why));
            out.push_back(skipped("bell.signless-radius", Relation::ge, why));
            out.push_back(skipped("bell.signless-second", Relation::ge, why));
            out.push_back(skipped("bell.signless-floor", Relation::le, why));
        }
    }

    return out;
}

std::vector<BoundReport> named_family_bounds(int k) {
    if (k < 2 || k > 6)
        throw HypothesisError("closed-form family bounds need 2 <= k <= 6");
    const double p3 = std::pow(3.0, k - 1);
    const double p2 = std::ldexp(1.0, k - 1);
    const int even_n = 1 << k;
    const GraphSpectra pge = graph_spectra(family(Family::pascal, even_n));
    const GraphSpectra pgo = graph_spectra(family(Family::pascal, even_n + 1));
    const GraphSpectra cge = graph_spectra(family(Family::catalan, even_n));
    const GraphSpectra cgo = graph_spectra(family(Family::catalan, even_n + 1));
    const Inputs in{{"k", double(k)}};

    std::vector<BoundReport> out;
    auto adv = [&](const char* id, double lhs, double rhs, Relation rel) {
        out.push_back(make_report(id, true, lhs, rhs, rel, in, true));
    };

    adv("family.pascal-even-radius", pge.lambda_1,
        (p3 + std::sqrt((p3 - p2) * (p3 - p2) +
                        4.0 * (p3 - p2 / 2) * (p3 - p2 / 2))) /
                p2 -
            1.0,
        Relation::ge);
    adv("family.pascal-even-signless", pge.q_1,
        0.5 * (p3 / std::ldexp(1.0, k - 4) +
               std::sqrt((p3 - p2) * (p3 - p2) +
                         (p3 - p2 / 2) * (p3 - p2 / 2)) /
                   std::ldexp(1.0, k - 3)) -
            3.0,
        Relation::ge);
    adv("family.pascal-odd-radius", pgo.lambda_1,
        p3 * (1.0 + std::sqrt(17.0 + std::ldexp(1.0, 3 - k))) / (p2 + 1.0),
        Relation::ge);
    adv("family.pascal-odd-signless", pgo.q_1,
        p3 * (std::ldexp(1.0, k + 1) + 1.0 +
              std::sqrt(std::ldexp(1.0, 2 * k + 1) + 1.0)) /
            (p2 * (p2 + 1.0)),
        Relation::ge);
    adv("family.catalan-even-radius", cge.lambda_1,
        (5.0 * std::pow(3.0, 2 * k - 2) - p3) / std::ldexp(1.0, k),
        Relation::ge);
    adv("family.catalan-even-laplacian", cge.mu_1, p3 / std::ldexp(1.0, k - 2),
        Relation::ge);
    const double cdisc = std::sqrt(2.0 * p3 * (p3 - 1.0) + 1.0);
    adv("family.catalan-even-signless", cge.q_1, (2.0 * p3 - 1.0 + cdisc) / p2,
        Relation::ge);
    adv("family.catalan-even-signless-second", cge.q_2,
        (2.0 * p3 - 1.0 - cdisc) / p2, Relation::ge);
    adv("family.catalan-even-signless-floor", cge.q_n,
        (2.0 * p3 - 1.0 - cdisc) / p2, Relation::le);
    const double b = (p3 + std::ldexp(1.0, k) - 1.0) / 2.0;
    adv("family.catalan-odd-radius", cgo.lambda_1,
        (b + std::sqrt(b * b + (1.0 + std::ldexp(1.0, 1 - k)) * (p3 + p2) *
                                   (p3 + p2))) /
            (p2 + 1.0),
        Relation::ge);
    adv("family.catalan-odd-laplacian", cgo.mu_1,
        (std::ldexp(1.0, k) + 1.0) * (p3 + p2) /
            (std::ldexp(1.0, 2 * k - 2) + p2),
        Relation::ge);
    return out;
}

std::vector<BoundReport> io_bounds(const RiordanGraph& G) {
    static const char* ids[] = {
        "io.edge-budget",      "io.radius-lower",  "io.radius-upper",
        "io.ratio",            "io.scaled-radius-floor",
        "io.laplacian-vs-radius", "io.radius-drop", "io.signless-lower",
        "io.tail-singular",    "io.rayleigh-sum"};
    std::vector<BoundReport> out;
    const int n = G.n;
    const Classification cls = classify(G);
    if (n < 2 || !G.f.coeff(1) || !cls.io_decomposable || !cls.bell) {
        for (const char* id : ids)
            out.push_back(
                skipped(id, Relation::ge,
                        "needs an io-decomposable Bell graph on >= 2 vertices"));
        return out;
    }

    const int p = ceil_log2(n);
    const int n1 = (n + 1) / 2;
    const double m = static_cast<double>(G.edge_count());
    const GraphSpectra gs = graph_spectra(G);
    const DecompositionBlocks blocks = decompose(G);
    const EigenSystem xs = eigen_sym(adjacency_real(blocks.X));
    const double lam_block = xs.values.front();
    double eta = std::abs(xs.values.front());
    for (double v : xs.values) eta = std::min(eta, std::abs(v));
    const double sigma = singular_max(blocks.B);

    const Inputs in{{"n", double(n)},   {"m", m},
                    {"p", double(p)},   {"n1", double(n1)},
                    {"sigma_max", sigma}, {"eta", eta},
                    {"lambda1_block", lam_block}};

    out.push_back(make_report("io.edge-budget", true, m,
                              n * n / 2.0 * (1.0 - 1.0 / (p + 1)),
                              Relation::le, in));
    out.push_back(make_report("io.radius-lower", true, gs.lambda_1, double(p),
                              Relation::ge, in));
    out.push_back(make_report("io.radius-upper", true, gs.lambda_1,
                              n * (1.0 - 1.0 / (p + 1)), Relation::le, in));
    const bool has_tail = std::abs(gs.lambda_n) > 1e-9;
    out.push_back(make_report(
        "io.ratio", has_tail, has_tail ? gs.lambda_1 / std::abs(gs.lambda_n) : 0.0,
        double(p), Relation::le, in, false,
        has_tail ? "" : "needs a negative eigenvalue"));
    const double scaled = (p + 1.0) / p * gs.lambda_1;
    out.push_back(make_report("io.scaled-radius-floor", true, scaled, p + 1.0,
                              Relation::ge, in));
    out.push_back(make_report("io.laplacian-vs-radius", true, gs.mu_1, scaled,
                              Relation::ge, in));
    out.push_back(make_report("io.radius-drop", true,
                              gs.lambda_1 - lam_block, -gs.lambda_n,
                              Relation::le, in));
    out.push_back(make_report("io.signless-lower", true, gs.q_1, 2.0 * p,
                              Relation::ge, in));
    const double denom = eta + std::sqrt(eta * eta + 4.0 * sigma);
    const bool tail_ok = denom > 1e-12;
    out.push_back(make_report("io.tail-singular", tail_ok,
                              tail_ok ? std::abs(gs.lambda_n) : 0.0,
                              tail_ok ? 2.0 * sigma * sigma / denom : 0.0,
                              Relation::le, in, false,
                              tail_ok ? "" : "cross block is empty"));
    const long long total =
        n1 >= 2 ? gf_ones_sum(G.g.odd_part(), G.f, n1 - 2, n1 - 2) : 0;
    out.push_back(make_report(
        "io.rayleigh-sum", true, gs.lambda_1,
        (1.0 + std::sqrt(2.0)) / n1 * double(total), Relation::ge, in, false,
        "every product truncated at degree n1-2 before summing"));
    return out;
}

std::vector<BoundReport> laplacian_bounds(const RiordanGraph& G) {
    std::vector<BoundReport> out;
    const int n = G.n;
    static const char* ids[] = {
        "lap.sigma-radius",    "lap.sigma-proper",   "lap.median-ceil",
        "lap.median-branch",   "lap.median-floor",   "lap.median-even",
        "lap.max-degree-lower", "lap.max-degree-equality",
        "lap.min-cut-upper",   "lap.min-cut-lower"};
    if (n < 2 || !G.f.coeff(1)) {
        const std::string why =
            n < 2 ? "needs n >= 2" : "needs [z^1]f = 1 for the odd/even split";
        for (const char* id : ids) out.push_back(skipped(id, Relation::ge, why));
        return out;
    }

    const int n1 = (n + 1) / 2;
    const int n2 = n / 2;
    const GraphSpectra gs = graph_spectra(G);
    const Classification cls = classify(G);
    const DecompositionBlocks blocks = decompose(G);
    const auto& mu = gs.laplacian.eigenvalues;

    Inputs in{{"n", double(n)}, {"n1", double(n1)}, {"n2", double(n2)}};

    // sigma(B): direct ones count vs generating-function sum. The upper
    // route carries a z factor, so at n = 2 its window holds nothing and
    // the zero series stands in.
    const Gf2Series gf_prod = G.g * G.f;
    const Gf2Series upper = gf_prod.trunc() >= 1
                                ? gf_prod.odd_part().shifted_up(1)
                                : Gf2Series::zero(0);
    {
        const long long direct = blocks.B.count_ones();
        const long long via_gf =
            gf_ones_sum(upper, G.f, n2 - 1, n1 - 1) +
            gf_ones_sum(G.g.even_part(), G.f, n1 - 1, n2 - 1);
        if (via_gf != direct)
            throw ConsistencyError(
                "cross-block ones count disagrees with the "
                "generating-function sum: " +
                std::to_string(direct) + " vs " + std::to_string(via_gf));
        Inputs sin = in;
        sin.push_back({"sigma", double(direct)});
        out.push_back(make_report(
            "lap.sigma-radius", true, gs.mu_1,
            n * double(direct) / (double(n1) * double(n2)), Relation::ge,
            sin));
    }

    // Proper graphs: the j = 0 columns plus the unit subdiagonal.
    {
        const bool hyp = cls.proper;
        double rhs = 0.0;
        if (hyp) {
            const long long head = upper.ones_count_prefix(n1 - 1) +
                                   G.g.even_part().ones_count_prefix(n2 - 1);
            rhs = double(n) / (double(n1) * double(n2)) *
                  (double(head) + 2.0 * n2 - 3.0);
        }
        out.push_back(make_report("lap.sigma-proper", hyp,
                                  hyp ? gs.mu_1 : 0.0, rhs, Relation::ge, in,
                                  false, hyp ? "" : "needs a proper graph"));
    }

    // Median Laplacian eigenvalues for o-decomposable graphs.
    {
        const bool hyp = cls.o_decomposable;
        out.push_back(make_report(
            "lap.median-ceil", hyp, hyp ? mu[n1] : 0.0, double(n1),
            Relation::le, in, false, hyp ? "" : "needs an o-decomposable graph"));
        const bool bhyp = hyp && n >= 3;
        if (bhyp) {
            const double aH = second_smallest_laplacian(blocks.X);
            double rhs;
            std::string note;
            if (n % 2 == 0) {
                rhs = n2 + aH;
            } else if (aH > 1.0 + kTieBand) {
                rhs = n2 + aH;
            } else if (aH < 1.0 - kTieBand) {
                rhs = double(n1);
            } else {
                rhs = std::max(n2 + aH, double(n1));
                note = "algebraic connectivity ties the branch point";
            }
            Inputs bin = in;
            bin.push_back({"a_H", aH});
            out.push_back(make_report("lap.median-branch", true, mu[n1 - 1],
                                      rhs, Relation::le, bin, false, note));
        } else {
            out.push_back(skipped(
                "lap.median-branch", Relation::le,
                hyp ? "needs n >= 3" : "needs an o-decomposable graph"));
        }
    }

    // Median Laplacian eigenvalues for e-decomposable graphs.
    {
        const bool hyp = cls.e_decomposable;
        out.push_back(make_report(
            "lap.median-floor", hyp, hyp ? mu[n2] : 0.0, double(n2),
            Relation::le, in, false, hyp ? "" : "needs an e-decomposable graph"));
        if (hyp && n >= 4) {
            const double aH = second_smallest_laplacian(blocks.Y);
            Inputs bin = in;
            bin.push_back({"a_H", aH});
            out.push_back(make_report("lap.median-even", true, mu[n2 - 1],
                                      n1 + aH, Relation::le, bin));
        } else {
            out.push_back(skipped(
                "lap.median-even", Relation::le,
                hyp ? "needs n >= 4" : "needs an e-decomposable graph"));
        }
    }

    // io-Bell max-degree bound, its equality characterization, and the
    // second-smallest window.
    const bool io_bell = cls.io_decomposable && cls.bell;
    if (io_bell) {
        const int p = floor_log2(n - 1);
        const int cap = n - (1 << p) - 2;
        bool ok = cap <= G.g.trunc();
        std::string why = ok ? "" : "series truncation too short";
        double rhs = 0.0;
        if (ok) rhs = (1 << p) + G.g.ones_count_prefix(cap) + 1.0;
        Inputs din = in;
        din.push_back({"p", double(p)});
        out.push_back(make_report("lap.max-degree-lower", ok,
                                  ok ? gs.mu_1 : 0.0, rhs, Relation::ge, din,
                                  false, why));
        if (ok) {
            bool predicted = n == (1 << p) + 1;
            if (!predicted) {
                predicted = true;
                for (int s = 0; s <= (n - (1 << p)) / 2 - 1; ++s)
                    if (2 * s > G.g.trunc() || !G.g.coeff(2 * s)) {
                        predicted = false;
                        break;
                    }
            }
            const bool observed = std::abs(gs.mu_1 - rhs) <= 1e-8;
            out.push_back(make_report("lap.max-degree-equality", true,
                                      predicted ? 1.0 : 0.0,
                                      observed ? 1.0 : 0.0, Relation::eq, din));
        } else {
            out.push_back(skipped("lap.max-degree-equality", Relation::eq, why));
        }

        const int half = (n + 1) / 2;
        const bool complete =
            2 * G.edge_count() == static_cast<long long>(n) * (n - 1);
        if (complete) {
            out.push_back(skipped("lap.min-cut-upper", Relation::le,
                                  "needs a non-complete graph"));
        } else if (2 * half - 1 <= G.g.trunc()) {
            double tail = 1.0;
            for (int i = 1; i <= half; ++i)
                if (G.g.coeff(2 * i - 1)) tail += 1.0;
            out.push_back(make_report("lap.min-cut-upper", true, mu[n - 2],
                                      tail, Relation::le, din));
        } else {
            out.push_back(skipped("lap.min-cut-upper", Relation::le,
                                  "series truncation too short"));
        }
        const bool window = n == (1 << p) + 1 || n == (1 << p) + 2;
        out.push_back(make_report(
            "lap.min-cut-lower", window, window ? mu[n - 2] : 0.0, 1.0,
            Relation::ge, din, false,
            window ? "" : "needs n in {2^p+1, 2^p+2}"));
    } else {
        const std::string why = "needs an io-decomposable Bell graph";
        out.push_back(skipped("lap.max-degree-lower", Relation::ge, why));
        out.push_back(skipped("lap.max-degree-equality", Relation::eq, why));
        out.push_back(skipped("lap.min-cut-upper", Relation::le, why));
        out.push_back(skipped("lap.min-cut-lower", Relation::ge, why));
    }

    return out;
}

BoundReport rayleigh_bound(const RiordanGraph& G,
                           const std::vector<long long>& h) {
    const int n = G.n;
    if (!classify(G).appell)
        throw HypothesisError("Rayleigh bound needs an Appell graph");
    if (static_cast<int>(h.size()) > n)
        throw HypothesisError("polynomial degree exceeds n-1");
    bool zero = true;
    for (long long c : h)
        if (c != 0) zero = false;
    if (zero) throw HypothesisError("polynomial must be nonzero");

    // ell = z * g * h with the mod-2 coefficients of g as 0/1 integers.
    long long num = 0;
    long long den = 0;
    for (std::size_t i = 0; i < h.size(); ++i) den += h[i] * h[i];
    for (int j = 1; j <= n - 1; ++j) {
        if (j >= static_cast<int>(h.size())) break;
        long long ell = 0;
        for (int t = 0; t < j; ++t) {
            const int hi = j - 1 - t;
            if (hi < static_cast<int>(h.size()) && t <= G.g.trunc() &&
                G.g.coeff(t))
                ell += h[hi];
        }
        num += h[j] * ell;
    }
    const double rhs = 2.0 * double(num) / double(den);
    const GraphSpectra gs = graph_spectra(G);
    return make_report("rayleigh.quotient", true, gs.lambda_1, rhs,
                       Relation::ge,
                       {{"n", double(n)},
                        {"numerator", double(num)},
                        {"denominator", double(den)}});
}

std::vector<BoundReport> chromatic_bounds(const RiordanGraph& G, int cap) {
    std::vector<BoundReport> out;
    const int n = G.n;
    static const char* ids[] = {"chromatic.lower-radius",
                                "chromatic.radius-upper", "chromatic.ratio",
                                "chromatic.laplacian-gap",
                                "chromatic.io-identity", "chromatic.io-clique"};
    if (n > cap) {
        for (const char* id : ids)
            out.push_back(skipped(id, Relation::ge,
                                  "exact clique/chromatic search capped"));
        return out;
    }
    const auto [omega, chi] = clique_and_chromatic(G, cap);
    const GraphSpectra gs = graph_spectra(G);
    const Inputs in{{"n", double(n)},
                    {"omega", double(omega)},
                    {"chi", double(chi)}};
    out.push_back(make_report("chromatic.lower-radius", true, chi - 1.0,
                              gs.lambda_1, Relation::le, in));
    out.push_back(make_report("chromatic.radius-upper", true, gs.lambda_1,
                              n * (1.0 - 1.0 / omega), Relation::le, in));
    const bool has_tail = std::abs(gs.lambda_n) > 1e-9;
    out.push_back(make_report(
        "chromatic.ratio", has_tail, double(chi),
        has_tail ? 1.0 + gs.lambda_1 / std::abs(gs.lambda_n) : 0.0,
        Relation::ge, in, false, has_tail ? "" : "needs a negative eigenvalue"));
    const bool has_gap = gs.mu_1 - gs.lambda_1 > 1e-9;
    out.push_back(make_report(
        "chromatic.laplacian-gap", has_gap, double(chi),
        has_gap ? 1.0 + gs.lambda_1 / (gs.mu_1 - gs.lambda_1) : 0.0,
        Relation::ge, in, false, has_gap ? "" : "needs an edge"));
    const Classification cls = classify(G);
    const bool io_bell = cls.io_decomposable && cls.bell;
    const double target = ceil_log2(n) + 1.0;
    out.push_back(make_report(
        "chromatic.io-identity", io_bell, double(chi), io_bell ? target : 0.0,
        Relation::eq, in, false,
        io_bell ? "" : "needs an io-decomposable Bell graph"));
    out.push_back(make_report(
        "chromatic.io-clique", io_bell, double(omega), io_bell ? target : 0.0,
        Relation::eq, in, false,
        io_bell ? "" : "needs an io-decomposable Bell graph"));
    return out;
}

std::vector<BoundReport> all_bounds(const RiordanGraph& G) {
    std::vector<BoundReport> out = riordan_bounds(G);
    auto absorb = [&out](std::vector<BoundReport> more) {
        for (auto& r : more) out.push_back(std::move(r));
    };
    absorb(io_bounds(G));
    absorb(laplacian_bounds(G));
    absorb(chromatic_bounds(G));
    if (G.n >= 2) {
        std::vector<int> odds;
        for (int v = 1; v <= G.n; v += 2) odds.push_back(v);
        absorb(quotient_bounds(G, odds));
    }
    if (G.n >= 1 && classify(G).appell)
        out.push_back(
            rayleigh_bound(G, std::vector<long long>(G.n, 1)));
    return out;
}

}  // namespace riograph
