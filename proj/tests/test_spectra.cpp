#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "riograph/exact.hpp"
#include "riograph/riordan.hpp"
#include "riograph/spectra.hpp"

using namespace riograph;

namespace {

Matrix random_symmetric(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    Matrix m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m[i][j] = dist(rng);
            m[j][i] = m[i][j];
        }
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

const EigenpairClaim& claim_by_id(const std::vector<EigenpairClaim>& claims,
                                  const std::string& id) {
    for (const auto& c : claims)
        if (c.claim_id == id) return c;
    static EigenpairClaim missing;
    REQUIRE_MESSAGE(false, "no claim named " << id);
    return missing;
}

}  // namespace

TEST_CASE("fixed spectra of small graphs") {
    const RiordanGraph k4 = family(Family::complete, 4);
    const GraphSpectra gs = graph_spectra(k4);
    CHECK(gs.lambda_1 == doctest::Approx(3.0).epsilon(1e-10));
    for (int i = 1; i < 4; ++i)
        CHECK(gs.adjacency.eigenvalues[i] == doctest::Approx(-1.0).epsilon(1e-10));
    for (int i = 0; i < 3; ++i)
        CHECK(gs.laplacian.eigenvalues[i] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(std::abs(gs.laplacian.eigenvalues[3]) < 1e-9);
    CHECK(gs.q_1 == doctest::Approx(6.0).epsilon(1e-10));

    const RiordanGraph p3 = family(Family::path, 3);
    const GraphSpectra ps = graph_spectra(p3);
    CHECK(ps.lambda_1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(std::abs(ps.adjacency.eigenvalues[1]) < 1e-9);
    CHECK(ps.lambda_n == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("eigen decomposition reconstructs random symmetric matrices") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 9;
        const Matrix m = random_symmetric(n, rng);
        const EigenSystem es = eigen_sym(m);
        REQUIRE(static_cast<int>(es.values.size()) == n);
        for (int i = 0; i + 1 < n; ++i) CHECK(es.values[i] >= es.values[i + 1]);
        double trace = 0.0;
        for (int i = 0; i < n; ++i) trace += m[i][i];
        double sum = 0.0;
        for (double v : es.values) sum += v;
        CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
        for (int i = 0; i < n; ++i) {
            const auto& v = es.vectors[i];
            for (int r = 0; r < n; ++r) {
                double acc = 0.0;
                for (int c = 0; c < n; ++c) acc += m[r][c] * v[c];
                CHECK(std::abs(acc - es.values[i] * v[r]) < 1e-7);
            }
            for (int j = 0; j < n; ++j) {
                const double expected = i == j ? 1.0 : 0.0;
                CHECK(std::abs(dot(v, es.vectors[j]) - expected) < 1e-8);
            }
        }
    }
}

TEST_CASE("eigen solver rejects bad input") {
    CHECK_THROWS_AS(eigen_sym({{0.0, 1.0}, {0.0, 0.0}}), HypothesisError);
    CHECK_THROWS_AS(eigen_sym({{0.0, 1.0}}), Error);
    const EigenSystem empty = eigen_sym({});
    CHECK(empty.values.empty());
}

TEST_CASE("complete graph spectral radius is n-1") {
    for (int n = 2; n <= 12; ++n) {
        const GraphSpectra gs = graph_spectra(family(Family::complete, n));
        CHECK(gs.lambda_1 == doctest::Approx(n - 1.0).epsilon(1e-9));
        CHECK(gs.mu_1 == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
    }
}

TEST_CASE("universal vertex pushes the laplacian radius to n") {
    const GraphSpectra gs = graph_spectra(family(Family::pascal, 9));
    CHECK(gs.mu_1 == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("bipartite graphs have signless nullity") {
    const GraphSpectra gs = graph_spectra(family(Family::complete_bipartite, 6));
    CHECK(std::abs(gs.q_n) < 1e-8);
    CHECK(gs.lambda_1 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(gs.lambda_n == doctest::Approx(-3.0).epsilon(1e-9));
}

TEST_CASE("single vertex degenerates cleanly") {
    const GraphSpectra gs = graph_spectra(family(Family::path, 1));
    CHECK(gs.lambda_1 == 0.0);
    CHECK(gs.lambda_n == 0.0);
    CHECK(gs.q_2 == gs.q_1);
    CHECK(gs.algebraic_connectivity == 0.0);
}

TEST_CASE("laplacian rows sum to zero and traces match") {
    for (const auto& [fam, n] : {std::pair{Family::pascal, 10},
                                 std::pair{Family::catalan, 9}}) {
        const RiordanGraph G = family(fam, n);
        const Matrix lap = laplacian_real(G.adj);
        for (const auto& row : lap) {
            double s = 0.0;
            for (double v : row) s += v;
            CHECK(s == 0.0);
        }
        const GraphSpectra gs = graph_spectra(G);
        CHECK(gs.adjacency.trace_error < 1e-8);
        CHECK(gs.laplacian.trace_error < 1e-8);
        CHECK(gs.signless.trace_error < 1e-8);
    }
}

TEST_CASE("complement laplacian spectrum is the reflected spectrum") {
    const RiordanGraph cases[] = {family(Family::pascal, 10),
                                  family(Family::catalan, 9),
                                  build_graph("1+z+z^3", "z/(1+z)", 11)};
    for (const RiordanGraph& G : cases) {
        const int n = G.n;
        const GraphSpectra gs = graph_spectra(G);
        const EigenSystem comp = eigen_sym(laplacian_real(complement_adj(G.adj)));
        CHECK(std::abs(comp.values[n - 1]) < 1e-8);
        for (int i = 0; i + 1 < n; ++i)
            CHECK(comp.values[i] ==
                  doctest::Approx(n - gs.laplacian.eigenvalues[n - 2 - i])
                      .epsilon(1e-8));
    }
}

TEST_CASE("degree bounds on laplacian extremes") {
    for (const auto& [fam, n] : {std::pair{Family::pascal, 10},
                                 std::pair{Family::catalan, 8},
                                 std::pair{Family::path, 6}}) {
        const RiordanGraph G = family(fam, n);
        const std::vector<int> deg = degrees(G);
        const int dmax = *std::max_element(deg.begin(), deg.end());
        const int dmin = *std::min_element(deg.begin(), deg.end());
        const GraphSpectra gs = graph_spectra(G);
        CHECK(gs.mu_1 >= dmax + 1 - 1e-9);
        CHECK(gs.algebraic_connectivity <= dmin + 1e-9);
    }
}

TEST_CASE("largest singular value of bit blocks") {
    BitMatrix ones(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.set(i, j, true);
    CHECK(singular_max(ones) == doctest::Approx(2.0).epsilon(1e-10));

    BitMatrix eye(3, 3);
    for (int i = 0; i < 3; ++i) eye.set(i, i, true);
    CHECK(singular_max(eye) == doctest::Approx(1.0).epsilon(1e-10));

    BitMatrix row(1, 3);
    for (int j = 0; j < 3; ++j) row.set(0, j, true);
    CHECK(singular_max(row) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));

    CHECK(singular_max(BitMatrix(0, 0)) == 0.0);
}

TEST_CASE("counting eigenvalues under a threshold") {
    const RiordanGraph k4 = family(Family::complete, 4);
    CHECK(count_leq(k4, -1.0) == 3);
    CHECK(count_leq(k4, 3.0) == 4);
    CHECK(count_leq(k4, 2.999) == 3);
    CHECK(count_leq(family(Family::null_graph, 5), 0.0) == 5);
}

TEST_CASE("calibrated signs agree with exact inertia") {
    const RiordanGraph pg10 = family(Family::pascal, 10);
    const ExactSummary ex = exact_summary(pg10.adj);
    const GraphSpectra gs = graph_spectra(pg10);
    const Inertia in = calibrated_inertia(gs.adjacency.eigenvalues, ex.nullity);
    CHECK(in == Inertia{4, 1, 5});

    const RiordanGraph k4 = family(Family::complete, 4);
    CHECK(calibrated_inertia(graph_spectra(k4).adjacency.eigenvalues, 0) ==
          Inertia{1, 0, 3});

    CHECK(calibrated_inertia({1e-14, -1e-13, 2e-14}, 3) == Inertia{0, 3, 0});
    CHECK(calibrated_inertia({-2.0, 1e-14, 3.0}, 1) == Inertia{1, 1, 1});
    CHECK(calibrated_inertia({}, 0) == Inertia{0, 0, 0});
}

TEST_CASE("calibration failures are fatal") {
    CHECK_THROWS_AS(calibrated_inertia({0.9, 1.0}, 1), ConsistencyError);
    CHECK_THROWS_AS(calibrated_inertia({1e-12, 1.0}, 0), ConsistencyError);
    CHECK_THROWS_AS(calibrated_inertia({1.0}, 2), Error);
}

TEST_CASE("catalan twin eigenpairs hold exactly") {
    for (int n : {2, 3, 6, 12, 17, 33}) {
        const auto claims = eigvec_claims(family(Family::catalan, n));
        const auto& swap = claim_by_id(claims, "catalan.adjacency.swap-pair");
        REQUIRE(swap.applicable);
        CHECK(swap.pass);
        const auto& lap =
            claim_by_id(claims, "catalan.laplacian.adjacent-twin-degree");
        REQUIRE(lap.applicable);
        CHECK(lap.pass);
    }
}

TEST_CASE("pascal universal eigenpairs hold exactly") {
    for (int n : {2, 5, 6, 9, 12, 17, 33}) {
        const auto claims = eigvec_claims(family(Family::pascal, n));
        const auto& adj = claim_by_id(claims, "pascal.adjacency.universal-pair");
        REQUIRE(adj.applicable);
        CHECK(adj.pass);
        const auto& lap =
            claim_by_id(claims, "pascal.laplacian.order-eigenvalue");
        REQUIRE(lap.applicable);
        CHECK(lap.pass);
    }
}

TEST_CASE("pascal twin window eigenpairs hold exactly") {
    for (int n : {4, 5, 6, 8, 9, 10, 16, 18, 32, 34}) {
        const auto claims = eigvec_claims(family(Family::pascal, n));
        const auto& ker = claim_by_id(claims, "pascal.adjacency.twin-kernel");
        REQUIRE(ker.applicable);
        CHECK(ker.pass);
        const auto& lap = claim_by_id(claims, "pascal.laplacian.twin-degree");
        REQUIRE(lap.applicable);
        CHECK(lap.pass);
    }
    const auto claims = eigvec_claims(family(Family::pascal, 7));
    CHECK_FALSE(claim_by_id(claims, "pascal.adjacency.twin-kernel").applicable);
    CHECK_FALSE(claim_by_id(claims, "pascal.laplacian.twin-degree").applicable);
}

TEST_CASE("eigenpair claims skip off-family graphs") {
    for (const auto& claims : {eigvec_claims(family(Family::path, 5)),
                               eigvec_claims(family(Family::complete, 6))}) {
        REQUIRE(claims.size() == 6);
        for (const auto& c : claims) {
            CHECK_FALSE(c.applicable);
            CHECK_FALSE(c.pass);
        }
    }
}
