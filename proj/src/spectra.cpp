#include "riograph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riograph/errors.hpp"

namespace riograph {

namespace {

double off_diagonal_norm(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) acc += a[i][j] * a[i][j];
    return std::sqrt(2.0 * acc);
}

double frobenius_norm(const Matrix& a) {
    double acc = 0.0;
    for (const auto& row : a)
        for (double v : row) acc += v * v;
    return std::sqrt(acc);
}

SpectrumReport make_report(std::string kind, const Matrix& m) {
    EigenSystem es = eigen_sym(m);
    SpectrumReport rep;
    rep.kind = std::move(kind);
    rep.eigenvalues = std::move(es.values);
    rep.residual_bound = es.residual;
    double trace = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) trace += m[i][i];
    rep.trace_error = std::abs(
        std::accumulate(rep.eigenvalues.begin(), rep.eigenvalues.end(), 0.0) -
        trace);
    return rep;
}

int floor_log2(int v) {
    int p = 0;
    while ((1 << (p + 1)) <= v) ++p;
    return p;
}

int ceil_log2(int v) {
    int p = 0;
    while ((1 << p) < v) ++p;
    return p;
}

// y = A x or (D - A) x over the integers.
std::vector<long long> apply_int(const BitMatrix& adj,
                                 const std::vector<long long>& x,
                                 bool laplacian) {
    const int n = adj.rows();
    std::vector<long long> y(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        long long acc = 0;
        long long deg = 0;
        for (int j = 0; j < n; ++j)
            if (adj.get(i, j)) {
                acc += x[j];
                ++deg;
            }
        y[i] = laplacian ? deg * x[i] - acc : acc;
    }
    return y;
}

bool exact_eigenpair(const BitMatrix& adj, const std::vector<long long>& x,
                     long long theta, bool laplacian) {
    const std::vector<long long> y = apply_int(adj, x, laplacian);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] != theta * x[i]) return false;
    return true;
}

std::vector<long long> diff_vector(int n, int plus_pos, int minus_pos) {
    std::vector<long long> x(static_cast<std::size_t>(n), 0);
    x[plus_pos - 1] = 1;
    x[minus_pos - 1] = -1;
    return x;
}

EigenpairClaim run_pair_claim(const std::string& id, const BitMatrix& adj,
                              int u, int v, long long theta, bool laplacian) {
    EigenpairClaim c;
    c.claim_id = id;
    c.applicable = true;
    c.pass = exact_eigenpair(adj, diff_vector(adj.rows(), u, v), theta, laplacian);
    c.detail = "value " + std::to_string(theta) + ", support {" +
               std::to_string(u) + "," + std::to_string(v) + "}";
    return c;
}

EigenpairClaim skipped_claim(const std::string& id, const std::string& why) {
    EigenpairClaim c;
    c.claim_id = id;
    c.applicable = false;
    c.pass = false;
    c.detail = why;
    return c;
}

}  // namespace

EigenSystem eigen_sym(Matrix a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw Error("eigensolver requires a square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a[i][j] - a[j][i]) > 1e-9)
                throw HypothesisError("eigensolver requires a symmetric matrix");

    Matrix v(static_cast<std::size_t>(n),
             std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    const double tol = 1e-12 * frobenius_norm(a);
    double off = off_diagonal_norm(a);
    int sweep = 0;
    for (; sweep < 100 && off > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    const double arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const double apr = a[p][r], aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = c * vrp - s * vrq;
                    v[r][q] = s * vrp + c * vrq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }
    if (off > tol)
        throw ConsistencyError("eigensolver stalled with residual " +
                               std::to_string(off));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a[x][x] > a[y][y]; });

    EigenSystem es;
    es.residual = off;
    es.values.reserve(static_cast<std::size_t>(n));
    es.vectors.reserve(static_cast<std::size_t>(n));
    for (int idx : order) {
        es.values.push_back(a[idx][idx]);
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) col[r] = v[r][idx];
        es.vectors.push_back(std::move(col));
    }
    return es;
}

Matrix adjacency_real(const BitMatrix& adj) {
    const int n = adj.rows();
    Matrix m(static_cast<std::size_t>(n),
             std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adj.get(i, j)) m[i][j] = 1.0;
    return m;
}

Matrix laplacian_real(const BitMatrix& adj) {
    Matrix m = adjacency_real(adj);
    const int n = adj.rows();
    for (int i = 0; i < n; ++i) {
        double deg = 0.0;
        for (int j = 0; j < n; ++j) deg += m[i][j];
        for (int j = 0; j < n; ++j) m[i][j] = -m[i][j];
        m[i][i] = deg;
    }
    return m;
}

Matrix signless_real(const BitMatrix& adj) {
    Matrix m = adjacency_real(adj);
    const int n = adj.rows();
    for (int i = 0; i < n; ++i) {
        double deg = 0.0;
        for (int j = 0; j < n; ++j) deg += m[i][j];
        m[i][i] = deg;
    }
    return m;
}

GraphSpectra graph_spectra(const RiordanGraph& G) {
    GraphSpectra gs;
    gs.adjacency = make_report("adjacency", adjacency_real(G.adj));
    gs.laplacian = make_report("laplacian", laplacian_real(G.adj));
    gs.signless = make_report("signless", signless_real(G.adj));
    const int n = G.n;
    gs.lambda_1 = gs.adjacency.eigenvalues.front();
    gs.lambda_n = gs.adjacency.eigenvalues.back();
    gs.mu_1 = gs.laplacian.eigenvalues.front();
    gs.algebraic_connectivity =
        n >= 2 ? gs.laplacian.eigenvalues[static_cast<std::size_t>(n) - 2] : 0.0;
    gs.q_1 = gs.signless.eigenvalues.front();
    gs.q_2 = n >= 2 ? gs.signless.eigenvalues[1] : gs.q_1;
    gs.q_n = gs.signless.eigenvalues.back();
    return gs;
}

double singular_max(const BitMatrix& b) {
    if (b.rows() == 0 || b.cols() == 0) return 0.0;
    const int r = b.rows();
    Matrix prod(static_cast<std::size_t>(r),
                std::vector<double>(static_cast<std::size_t>(r), 0.0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            double acc = 0.0;
            for (int k = 0; k < b.cols(); ++k)
                if (b.get(i, k) && b.get(j, k)) acc += 1.0;
            prod[i][j] = acc;
        }
    const EigenSystem es = eigen_sym(std::move(prod));
    return std::sqrt(std::max(0.0, es.values.front()));
}

int count_leq(const RiordanGraph& G, double threshold) {
    const EigenSystem es = eigen_sym(adjacency_real(G.adj));
    int count = 0;
    for (double v : es.values)
        if (v <= threshold + 1e-9) ++count;
    return count;
}

Inertia calibrated_inertia(const std::vector<double>& eigenvalues,
                           int exact_nullity) {
    const int n = static_cast<int>(eigenvalues.size());
    if (exact_nullity < 0 || exact_nullity > n)
        throw Error("nullity outside [0, n]");
    std::vector<double> mags;
    mags.reserve(eigenvalues.size());
    for (double v : eigenvalues) mags.push_back(std::abs(v));
    std::sort(mags.begin(), mags.end());
    double band;
    if (exact_nullity == n) {
        band = n == 0 ? 0.0 : std::max(1e-9, 2.0 * mags.back());
    } else {
        band = mags[exact_nullity] / 2.0;
        if (band < 1e-9)
            throw ConsistencyError(
                "zero band collapsed: smallest nonzero magnitude " +
                std::to_string(mags[exact_nullity]));
        if (exact_nullity > 0 && mags[exact_nullity - 1] > band)
            throw ConsistencyError(
                "zero band not separated: magnitude " +
                std::to_string(mags[exact_nullity - 1]) + " vs band " +
                std::to_string(band));
    }
    Inertia in;
    for (double v : eigenvalues) {
        if (v > band)
            ++in.plus;
        else if (v < -band)
            ++in.minus;
        else
            ++in.zero;
    }
    if (in.zero != exact_nullity)
        throw ConsistencyError("calibrated zero count " +
                               std::to_string(in.zero) + " vs exact nullity " +
                               std::to_string(exact_nullity));
    return in;
}

std::vector<EigenpairClaim> eigvec_claims(const RiordanGraph& G) {
    std::vector<EigenpairClaim> out;
    const int n = G.n;
    const bool is_pascal = n >= 1 && G.adj == family(Family::pascal, n).adj;
    const bool is_catalan = n >= 1 && G.adj == family(Family::catalan, n).adj;

    // Adjacent twins 1 and 2 in the Catalan graph: eigenvalue -1, and the
    // Laplacian eigenvalue d(1)+1 = ceil(log2 n)+1.
    if (is_catalan && n >= 2) {
        out.push_back(
            run_pair_claim("catalan.adjacency.swap-pair", G.adj, 1, 2, -1, false));
        out.push_back(run_pair_claim("catalan.laplacian.adjacent-twin-degree",
                                     G.adj, 1, 2, ceil_log2(n) + 1, true));
    } else {
        out.push_back(skipped_claim("catalan.adjacency.swap-pair",
                                    "needs a Catalan graph with n >= 2"));
        out.push_back(skipped_claim("catalan.laplacian.adjacent-twin-degree",
                                    "needs a Catalan graph with n >= 2"));
    }

    // Universal-vertex twins in the Pascal graph: eigenvalue -1 and the
    // Laplacian eigenvalue n; two independent vectors when n = 2^p + 1.
    if (is_pascal && n >= 2) {
        const int p = floor_log2(n - 1);
        if (n == (1 << p) + 1 && p >= 1) {
            const int mid = (1 << (p - 1)) + 1;
            EigenpairClaim a =
                run_pair_claim("pascal.adjacency.universal-pair", G.adj, 1, mid,
                               -1, false);
            const bool second =
                exact_eigenpair(G.adj, diff_vector(n, 1, n), -1, false);
            a.pass = a.pass && second;
            a.detail += " and {1," + std::to_string(n) + "}";
            out.push_back(std::move(a));
            EigenpairClaim l = run_pair_claim("pascal.laplacian.order-eigenvalue",
                                              G.adj, 1, mid, n, true);
            const bool lsecond =
                exact_eigenpair(G.adj, diff_vector(n, 1, n), n, true);
            l.pass = l.pass && lsecond;
            l.detail += " and {1," + std::to_string(n) + "}";
            out.push_back(std::move(l));
        } else {
            const int top = (1 << p) + 1;
            out.push_back(run_pair_claim("pascal.adjacency.universal-pair",
                                         G.adj, 1, top, -1, false));
            out.push_back(run_pair_claim("pascal.laplacian.order-eigenvalue", G.adj,
                                         1, top, n, true));
        }
    } else {
        out.push_back(skipped_claim("pascal.adjacency.universal-pair",
                                    "needs a Pascal graph with n >= 2"));
        out.push_back(skipped_claim("pascal.laplacian.order-eigenvalue",
                                    "needs a Pascal graph with n >= 2"));
    }

    // Non-adjacent twins 2 and 2^p in the Pascal graph when
    // 2^p <= n <= 2^p + 2: kernel vector, and Laplacian value ceil(n/2).
    {
        const int p = n >= 2 ? floor_log2(n) : 0;
        const bool window = is_pascal && n >= 4 && n <= (1 << p) + 2;
        if (window) {
            out.push_back(run_pair_claim("pascal.adjacency.twin-kernel", G.adj,
                                         2, 1 << p, 0, false));
            out.push_back(run_pair_claim("pascal.laplacian.twin-degree", G.adj,
                                         2, 1 << p, (n + 1) / 2, true));
        } else {
            out.push_back(
                skipped_claim("pascal.adjacency.twin-kernel",
                              "needs a Pascal graph with 2^p <= n <= 2^p+2"));
            out.push_back(
                skipped_claim("pascal.laplacian.twin-degree",
                              "needs a Pascal graph with 2^p <= n <= 2^p+2"));
        }
    }
    return out;
}

}  // namespace riograph
