#include "riograph/riordan.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "riograph/series_expr.hpp"

namespace riograph {

namespace {

constexpr int kExprTruncSlack = 8;

int ceil_half(int n) { return (n + 1) / 2; }

// Odd-first permutation blocks, by direct index selection. Works for every
// graph; decompose() adds the generating-function cross-check on top.
struct RawBlocks {
    BitMatrix X, Y, B;
    std::vector<int> odd, even;  // 0-based row indices
};

RawBlocks extract_blocks(const BitMatrix& adj, int n) {
    RawBlocks r;
    for (int v = 0; v < n; v += 2) r.odd.push_back(v);
    for (int v = 1; v < n; v += 2) r.even.push_back(v);
    r.X = adj.select(r.odd, r.odd);
    r.Y = adj.select(r.even, r.even);
    r.B = adj.select(r.odd, r.even);
    return r;
}

}  // namespace

BinaryRiordanMatrix binary_riordan(const Gf2Series& g, const Gf2Series& f,
                                   int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw HypothesisError("matrix dimensions must be >= 0");
    if (f.coeff(0))
        throw HypothesisError("binary Riordan matrix needs f(0) = 0");
    if (rows > 0 && (g.trunc() < rows - 1 || f.trunc() < rows - 1))
        throw HypothesisError(
            "series truncation too small for the requested rows");
    BitMatrix m(rows, cols);
    Gf2Series col = g;
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) m.set(i, j, col.coeff(i));
        if (j + 1 < cols) col = col * f;
    }
    return m;
}

bool RiordanGraph::edge(int u, int v) const {
    if (u < 1 || u > n || v < 1 || v > n)
        throw HypothesisError("vertex label out of range");
    return u != v && adj.get(u - 1, v - 1);
}

int RiordanGraph::degree(int u) const {
    if (u < 1 || u > n) throw HypothesisError("vertex label out of range");
    int d = 0;
    for (int v = 0; v < n; ++v) d += adj.get(u - 1, v);
    return d;
}

RiordanGraph build_graph(const Gf2Series& g, const Gf2Series& f, int n,
                         std::string g_expr, std::string f_expr) {
    if (n < 1) throw HypothesisError("graph order must be >= 1");
    if (f.coeff(0)) throw HypothesisError("graph construction needs f(0) = 0");
    if (n >= 2 && g.trunc() < n - 2)
        throw HypothesisError("trunc(g) must be at least n-2");
    if (n >= 2 && f.trunc() < n - 1)
        throw HypothesisError("trunc(f) must be at least n-1");

    RiordanGraph G;
    G.n = n;
    G.g = g;
    G.f = f;
    G.g_expr = g_expr.empty() ? g.poly_expr() : std::move(g_expr);
    G.f_expr = f_expr.empty() ? f.poly_expr() : std::move(f_expr);
    G.adj = BitMatrix(n, n);
    Gf2Series col = g;  // g f^{j-1} for column j
    for (int j = 1; j < n; ++j) {
        for (int i = j + 1; i <= n; ++i)
            if (col.coeff(i - 2)) {
                G.adj.set(i - 1, j - 1, true);
                G.adj.set(j - 1, i - 1, true);
            }
        if (j + 1 < n) col = col * f;
    }
    return G;
}

RiordanGraph build_graph(const std::string& g_expr, const std::string& f_expr,
                         int n) {
    const int t = n + kExprTruncSlack;
    return build_graph(eval_series(g_expr, t), eval_series(f_expr, t), n,
                       g_expr, f_expr);
}

Family family_from_name(const std::string& name) {
    if (name == "pascal") return Family::pascal;
    if (name == "catalan") return Family::catalan;
    if (name == "path") return Family::path;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "null") return Family::null_graph;
    throw HypothesisError("unknown family '" + name + "'");
}

std::string family_name(Family fam) {
    switch (fam) {
        case Family::pascal: return "pascal";
        case Family::catalan: return "catalan";
        case Family::path: return "path";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::null_graph: return "null";
    }
    throw ConsistencyError("unreachable family value");
}

RiordanGraph family(Family fam, int n) {
    switch (fam) {
        case Family::pascal: return build_graph("1/(1-z)", "z/(1-z)", n);
        case Family::catalan: return build_graph("C", "z*C", n);
        case Family::path: return build_graph("1", "z", n);
        case Family::complete: return build_graph("1/(1-z)", "z", n);
        case Family::complete_bipartite:
            return build_graph("1/(1-z^2)", "z", n);
        case Family::null_graph: return build_graph("0", "z", n);
    }
    throw ConsistencyError("unreachable family value");
}

RiordanGraph family(const std::string& name, int n) {
    return family(family_from_name(name), n);
}

DecompositionBlocks decompose(const RiordanGraph& G) {
    const int n = G.n;
    const int n1 = ceil_half(n);
    const int n2 = n / 2;
    if (n >= 2 && (G.f.trunc() < 1 || !G.f.coeff(1)))
        throw HypothesisError("decomposition needs [z^1]f = 1");

    RawBlocks raw = extract_blocks(G.adj, n);
    DecompositionBlocks out;
    out.X = raw.X;
    out.Y = raw.Y;
    out.B = raw.B;
    for (int v : raw.odd) out.perm.push_back(v + 1);
    for (int v : raw.even) out.perm.push_back(v + 1);

    // Reassemble [[X,B],[B^T,Y]] and undo the permutation; this must give
    // back the adjacency matrix exactly.
    BitMatrix rebuilt(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const bool bit =
                a < n1 ? (b < n1 ? out.X.get(a, b) : out.B.get(a, b - n1))
                       : (b < n1 ? out.B.get(b, a - n1)
                                 : out.Y.get(a - n1, b - n1));
            if (bit) rebuilt.set(out.perm[a] - 1, out.perm[b] - 1, true);
        }
    if (!(rebuilt == G.adj))
        throw ConsistencyError("decomposition reassembly does not match the "
                               "adjacency matrix");

    // Independent route: the three blocks from the odd/even coefficient
    // extractions. <V_o> is the graph of (odd part of g, f), <V_e> the
    // graph of (odd part of gf/z, f), and the rectangular block is
    // B(z * odd part of gf, f) + B(even part of g, f)^T.
    if (n1 >= 2) {
        const BitMatrix x_gf = build_graph(G.g.odd_part(), G.f, n1).adj;
        if (!(x_gf == out.X))
            throw ConsistencyError("odd-vertex block disagrees with its "
                                   "generating-function form");
    }
    if (n2 >= 2) {
        const Gf2Series ye = (G.g * G.f).shifted_down(1).odd_part();
        const BitMatrix y_gf = build_graph(ye, G.f, n2).adj;
        if (!(y_gf == out.Y))
            throw ConsistencyError("even-vertex block disagrees with its "
                                   "generating-function form");
    }
    if (n1 >= 1 && n2 >= 1) {
        const Gf2Series gf = G.g * G.f;
        BitMatrix first(n1, n2);  // z * odd part of gf contributes nothing
                                  // to row 0, so n = 2 reduces to this zero
                                  // matrix even when gf is too short to
                                  // split into parts
        if (gf.trunc() >= 1)
            first = binary_riordan(gf.odd_part().shifted_up(1), G.f, n1, n2);
        const BitMatrix second =
            binary_riordan(G.g.even_part(), G.f, n2, n1).transposed();
        if (!((first ^ second) == out.B))
            throw ConsistencyError("odd-even block disagrees with its "
                                   "generating-function form");
    }
    return out;
}

std::vector<std::string> Classification::labels() const {
    std::vector<std::string> out;
    if (appell) out.push_back("appell");
    if (bell) out.push_back("bell");
    if (checkerboard) out.push_back("checkerboard");
    if (derivative) out.push_back("derivative");
    if (proper) out.push_back("proper");
    if (o_decomposable) out.push_back("o_decomposable");
    if (e_decomposable) out.push_back("e_decomposable");
    if (io_decomposable) out.push_back("io_decomposable");
    if (ie_decomposable) out.push_back("ie_decomposable");
    return out;
}

Classification classify(const RiordanGraph& G) {
    const int n = G.n;
    const int n1 = ceil_half(n);
    const int n2 = n / 2;
    const Gf2Series& g = G.g;
    const Gf2Series& f = G.f;
    Classification c;

    // Type predicates, straight off the series.
    c.appell = prefix_equal(f, Gf2Series::z(f.trunc()));
    c.bell = prefix_equal(f, g.shifted_up(1));
    {
        c.derivative = true;
        const int t = std::min(g.trunc(), f.trunc() - 1);
        for (int i = 0; i <= t && c.derivative; ++i) {
            const bool want = i % 2 == 0 ? f.coeff(i + 1) : false;
            if (g.coeff(i) != want) c.derivative = false;
        }
    }
    {
        c.checkerboard = true;
        for (int i = 1; i <= g.trunc() && c.checkerboard; i += 2)
            if (g.coeff(i)) c.checkerboard = false;
        for (int i = 0; i <= f.trunc() && c.checkerboard; i += 2)
            if (f.coeff(i)) c.checkerboard = false;
    }

    // proper: diagonal of B(g,f)_{n-1}, i.e. the adjacency subdiagonal.
    {
        const bool sem =
            n == 1 || (g.coeff(0) && (n == 2 || (f.trunc() >= 1 && f.coeff(1))));
        bool structural = true;
        for (int i = 1; i < n; ++i)
            if (!G.adj.get(i, i - 1)) structural = false;
        if (sem != structural)
            throw ConsistencyError("properness routes disagree");
        c.proper = structural;
    }

    const RawBlocks raw = extract_blocks(G.adj, n);

    // o-decomposable: even coefficients of gf vanish in the graph window
    // <=> the even-vertex block is empty.
    {
        const Gf2Series gf = g * f;
        bool sem = true;
        for (int k = 1; 2 * k <= n - 2; ++k)
            if (gf.coeff(2 * k)) sem = false;
        const bool structural = raw.Y.is_zero();
        if (sem != structural)
            throw ConsistencyError("o-decomposability routes disagree");
        c.o_decomposable = structural;
    }

    // e-decomposable: odd coefficients of g vanish in the window <=> the
    // odd-vertex block is empty.
    {
        bool sem = true;
        for (int i = 1; 2 * i - 1 <= n - 2; ++i)
            if (g.coeff(2 * i - 1)) sem = false;
        const bool structural = raw.X.is_zero();
        if (sem != structural)
            throw ConsistencyError("e-decomposability routes disagree");
        c.e_decomposable = structural;
    }

    // io: <V_o> equals the same graph at half order (labelled, 2i-1 <-> i)
    // and <V_e> is empty. For proper Bell graphs this must coincide with
    // the coefficient test [z^j]g = [z^{2j+1}]g.
    {
        bool structural = c.proper && raw.Y.is_zero();
        if (structural && n1 >= 2)
            structural = raw.X == build_graph(g, f, n1).adj;
        if (c.bell && c.proper) {
            bool sem = true;
            for (int j = 0; j <= n1 - 2; ++j)
                if (g.coeff(j) != g.coeff(2 * j + 1)) sem = false;
            if (sem != structural)
                throw ConsistencyError(
                    "io-decomposability routes disagree on a Bell graph");
        }
        c.io_decomposable = structural;
    }

    // ie: mirror image (labelled 2i <-> i).
    {
        bool structural = c.proper && raw.X.is_zero();
        if (structural && n2 >= 2)
            structural = raw.Y == build_graph(g, f, n2).adj;
        c.ie_decomposable = structural;
    }

    // One-directional checks the structure must satisfy.
    if (c.bell && !c.o_decomposable)
        throw ConsistencyError("Bell graph with a nonempty even-vertex block");
    if (c.checkerboard)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (G.adj.get(a, b) && a % 2 == b % 2)
                    throw ConsistencyError(
                        "checkerboard graph with an edge inside one part");

    return c;
}

std::vector<int> degrees(const RiordanGraph& G) {
    std::vector<int> d(G.n);
    for (int v = 1; v <= G.n; ++v) d[v - 1] = G.degree(v);
    return d;
}

std::vector<DegreeFormulaCheck> degree_formula_checks(const RiordanGraph& G) {
    const Classification c = classify(G);
    if (!(c.bell && c.io_decomposable && G.n >= 2))
        throw HypothesisError(
            "degree formulas need an io-decomposable Bell graph of order "
            ">= 2");
    const int n = G.n;
    int p = 0;
    while ((1 << (p + 1)) <= n - 1) ++p;  // p = floor(log2(n-1))

    std::vector<DegreeFormulaCheck> out;
    {
        const int v = (1 << p) + 1;
        const int expected = (1 << p) + G.g.ones_count_prefix(n - (1 << p) - 2);
        out.push_back({"d(2^p+1) = 2^p + {g}_{n-2^p-2}(1)", v, expected,
                       G.degree(v), false});
    }
    {
        const int n1 = ceil_half(n);
        const int expected = 1 + G.g.ones_count_prefix(n1 - 2);
        out.push_back({"d(2) = 1 + d_half(1)", 2, expected, G.degree(2),
                       false});
    }
    for (auto& chk : out) chk.pass = chk.expected == chk.actual;
    return out;
}

std::vector<int> universal_vertices(const RiordanGraph& G) {
    std::vector<int> out;
    for (int v = 1; v <= G.n; ++v)
        if (G.degree(v) == G.n - 1) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> partition_moj(const RiordanGraph& G) {
    const Classification c = classify(G);
    if (!(c.bell && c.io_decomposable))
        throw HypothesisError(
            "the explicit partition needs an io-decomposable Bell graph");
    const int n = G.n;
    int parts = 1;  // ceil(log2 n) + 1
    while ((1 << (parts - 1)) < n) ++parts;

    std::vector<std::vector<int>> vs;
    std::vector<bool> seen(n + 1, false);
    for (int j = 1; j <= parts - 1; ++j) {
        std::vector<int> part;
        const long long lead = 1LL << (j - 1);
        for (long long i = 0;; ++i) {
            const long long v = lead + 1 + i * (1LL << j);
            if (v > n) break;
            part.push_back(static_cast<int>(v));
        }
        vs.push_back(std::move(part));
    }
    vs.push_back({1});
    for (const auto& part : vs)
        for (int v : part) {
            if (v < 1 || v > n || seen[v])
                throw ConsistencyError("partition does not cover each vertex "
                                       "exactly once");
            seen[v] = true;
        }
    for (int v = 1; v <= n; ++v)
        if (!seen[v])
            throw ConsistencyError("partition misses vertex " +
                                   std::to_string(v));
    for (const auto& part : vs)
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (G.edge(part[a], part[b]))
                    throw ConsistencyError(
                        "partition part is not an independent set: edge " +
                        std::to_string(part[a]) + "-" +
                        std::to_string(part[b]));
    return vs;
}

std::pair<int, int> clique_and_chromatic(const RiordanGraph& G, int cap) {
    const int n = G.n;
    if (n > cap || n > 64)
        throw HypothesisError("order " + std::to_string(n) +
                              " exceeds the exact-search cap");
    std::vector<std::uint64_t> nbr(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && G.adj.get(a, b)) nbr[a] |= std::uint64_t{1} << b;

    int omega = 0;
    std::function<void(std::uint64_t, int)> expand =
        [&](std::uint64_t cand, int size) {
            if (size > omega) omega = size;
            while (cand) {
                if (size + std::popcount(cand) <= omega) return;
                const int v = std::countr_zero(cand);
                cand &= cand - 1;
                expand(cand & nbr[v], size + 1);
            }
        };
    const std::uint64_t all =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(all, 0);

    // order vertices by degree, highest first, for the coloring search
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(nbr[a]) > std::popcount(nbr[b]);
    });

    std::vector<int> color(n, -1);
    std::function<bool(int, int, int)> tryk = [&](int idx, int k, int used) {
        if (idx == n) return true;
        const int v = order[idx];
        std::uint64_t taken = 0;
        for (int u = 0; u < n; ++u)
            if (color[u] >= 0 && (nbr[v] >> u & 1))
                taken |= std::uint64_t{1} << color[u];
        const int top = std::min(k - 1, used);  // new colors introduced in order
        for (int ccol = 0; ccol <= top; ++ccol) {
            if (taken >> ccol & 1) continue;
            color[v] = ccol;
            if (tryk(idx + 1, k, std::max(used, ccol + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    int chi = std::max(omega, n > 0 ? 1 : 0);
    for (;; ++chi) {
        std::fill(color.begin(), color.end(), -1);
        if (tryk(0, chi, 0)) break;
    }
    return {omega, chi};
}

BitMatrix bipartite_double(const RiordanGraph& G) {
    BitMatrix h(G.n, G.n);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (G.adj.get(a, b) && a % 2 != b % 2) h.set(a, b, true);
    return h;
}

BitMatrix complement_adj(const BitMatrix& adj) {
    if (adj.rows() != adj.cols())
        throw HypothesisError("complement needs a square matrix");
    BitMatrix c(adj.rows(), adj.cols());
    for (int a = 0; a < adj.rows(); ++a)
        for (int b = 0; b < adj.cols(); ++b)
            if (a != b && !adj.get(a, b)) c.set(a, b, true);
    return c;
}

std::optional<int> diameter(const BitMatrix& adj) {
    const int n = adj.rows();
    std::vector<std::vector<int>> nbrs(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && adj.get(a, b)) nbrs[a].push_back(b);
    int diam = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            for (int v : nbrs[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) return std::nullopt;
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

std::optional<int> diameter(const RiordanGraph& G) { return diameter(G.adj); }

std::vector<int> neighborhood(const RiordanGraph& G, int v) {
    if (v < 1 || v > G.n) throw HypothesisError("vertex label out of range");
    std::vector<int> out;
    for (int u = 1; u <= G.n; ++u)
        if (u != v && G.adj.get(v - 1, u - 1)) out.push_back(u);
    return out;
}

std::string export_text(const RiordanGraph& G) {
    std::string out = std::to_string(G.n) + "\n";
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b) {
            if (b) out += ' ';
            out += G.adj.get(a, b) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string export_dot(const RiordanGraph& G) {
    std::string out = "graph riordan {\n";
    for (int v = 1; v <= G.n; ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (int u = 1; u <= G.n; ++u)
        for (int v = u + 1; v <= G.n; ++v)
            if (G.adj.get(u - 1, v - 1))
                out += "  " + std::to_string(u) + " -- " + std::to_string(v) +
                       ";\n";
    out += "}\n";
    return out;
}

std::string export_csv(const RiordanGraph& G) {
    std::string out;
    for (int u = 1; u <= G.n; ++u)
        for (int v = u + 1; v <= G.n; ++v)
            if (G.adj.get(u - 1, v - 1))
                out += std::to_string(u) + "," + std::to_string(v) + "\n";
    return out;
}

}  // namespace riograph
