#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riograph/bit_matrix.hpp"
#include "riograph/gf2_series.hpp"

namespace riograph {

// entry(i,j) = [z^i] g f^j mod 2, 0-based.
using BinaryRiordanMatrix = BitMatrix;

BinaryRiordanMatrix binary_riordan(const Gf2Series& g, const Gf2Series& f,
                                   int rows, int cols);

// Labelled graph on vertices 1..n whose lower adjacency triangle holds the
// coefficients of zg, zgf, zgf^2, ...: for i > j >= 1,
// adj(i,j) = [z^{i-2}] g f^{j-1} mod 2.
struct RiordanGraph {
    int n = 0;
    Gf2Series g, f;
    std::string g_expr, f_expr;  // provenance; reproduces the instance
    BitMatrix adj;

    bool edge(int u, int v) const;  // vertices are 1-based
    int degree(int u) const;
    long long edge_count() const { return adj.count_ones() / 2; }
};

// Requires f(0) = 0, trunc(g) >= n-2, trunc(f) >= n-1.
RiordanGraph build_graph(const Gf2Series& g, const Gf2Series& f, int n,
                         std::string g_expr = "", std::string f_expr = "");
// Evaluates the expressions with generous truncation (n + 8).
RiordanGraph build_graph(const std::string& g_expr, const std::string& f_expr,
                         int n);

enum class Family { pascal, catalan, path, complete, complete_bipartite, null_graph };

Family family_from_name(const std::string& name);
std::string family_name(Family fam);
RiordanGraph family(Family fam, int n);
RiordanGraph family(const std::string& name, int n);

// Odd-labels-first relabelling of the adjacency matrix:
//   P A P^T = [ X  B ]
//             [ B^T Y ]
// with X the adjacency of <V_o> and Y the adjacency of <V_e>.
struct DecompositionBlocks {
    BitMatrix X;            // ceil(n/2) x ceil(n/2)
    BitMatrix Y;            // floor(n/2) x floor(n/2)
    BitMatrix B;            // ceil(n/2) x floor(n/2)
    std::vector<int> perm;  // perm[k] = original label in slot k (1-based)
};

// Requires [z^1]f = 1. Extracts the blocks and independently recomputes
// them from the odd/even coefficient extractions of g, gf/z, gf and g;
// any disagreement between the two routes is a ConsistencyError.
DecompositionBlocks decompose(const RiordanGraph& G);

struct Classification {
    bool appell = false;
    bool bell = false;
    bool checkerboard = false;
    bool derivative = false;
    bool proper = false;
    bool o_decomposable = false;
    bool e_decomposable = false;
    bool io_decomposable = false;
    bool ie_decomposable = false;

    std::vector<std::string> labels() const;
};

// Each label with two available characterizations (coefficient test vs
// block structure) is computed both ways; disagreement is a
// ConsistencyError.
Classification classify(const RiordanGraph& G);

// --- vertex-level operations ---

// degrees()[v-1] is the degree of vertex v.
std::vector<int> degrees(const RiordanGraph& G);

struct DegreeFormulaCheck {
    std::string formula;
    int vertex;
    int expected;
    int actual;
    bool pass;
};
// Closed-form degree identities; requires an io-decomposable Bell graph
// with n >= 2.
std::vector<DegreeFormulaCheck> degree_formula_checks(const RiordanGraph& G);

std::vector<int> universal_vertices(const RiordanGraph& G);

// The explicit (ceil(log2 n)+1)-partition of an io-decomposable Bell
// graph: part j is {2^{j-1}+1+i*2^j}, the last part is {1}. Each part is
// verified to be an independent set.
std::vector<std::vector<int>> partition_moj(const RiordanGraph& G);

// Exact clique number and chromatic number; exhaustive search, guarded by
// the size cap.
std::pair<int, int> clique_and_chromatic(const RiordanGraph& G, int cap = 64);

// Spanning subgraph keeping only edges between an odd and an even label.
BitMatrix bipartite_double(const RiordanGraph& G);

BitMatrix complement_adj(const BitMatrix& adj);

// nullopt when the graph is disconnected.
std::optional<int> diameter(const BitMatrix& adj);
std::optional<int> diameter(const RiordanGraph& G);

std::vector<int> neighborhood(const RiordanGraph& G, int v);

// --- exports ---
std::string export_text(const RiordanGraph& G);
std::string export_dot(const RiordanGraph& G);
std::string export_csv(const RiordanGraph& G);

}  // namespace riograph
