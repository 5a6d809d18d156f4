#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riograph/riordan.hpp"

namespace riograph {

enum class Relation { ge, le, eq };

std::string relation_symbol(Relation r);

// One checkable inequality: lhs RELATION rhs, holding iff the slack is at
// least -1e-8. slack is lhs-rhs for >=, rhs-lhs for <=, -|lhs-rhs| for ==.
// A report whose hypothesis is not met holds vacuously and carries the
// reason in note. advisory reports are surfaced as findings when violated,
// never as failures (their printed constants have no independent oracle).
struct BoundReport {
    std::string bound_id;
    bool hypothesis_met = true;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::ge;
    bool holds = true;
    double slack = 0.0;
    std::vector<std::pair<std::string, double>> inputs;
    bool advisory = false;
    std::string note;
};

BoundReport make_report(std::string id, bool hypothesis, double lhs,
                        double rhs, Relation rel,
                        std::vector<std::pair<std::string, double>> inputs = {},
                        bool advisory = false, std::string note = "");

// Partition W / V\W of an arbitrary graph (W given as 1-based labels):
// lower bounds on lambda_1, mu_1, q_1, the two-sided q_2/q_n bound, and
// the negative-tail criterion m > m1+m2+2*sqrt(m1*m2) => lambda_n < 0.
std::vector<BoundReport> quotient_bounds(const RiordanGraph& G,
                                         const std::vector<int>& subset);

// The odd/even partition specialization: m1 and m2 come from the
// generating-function identifications of the decomposition blocks and are
// cross-checked against direct block edge counts (mismatch is fatal).
// Emits the five partition reports, the two dominance reports (the lambda_1
// and q_1 right sides are at least 2m/n and 4m/n), and every
// classification-gated variant: Appell equalities, vanishing-odd-part,
// checkerboard, disconnected-split and Bell forms.
std::vector<BoundReport> riordan_bounds(const RiordanGraph& G);

// Closed-form right sides for the Pascal and Catalan graphs at orders 2^k
// and 2^k+1, 2 <= k <= 6. All advisory: transcribed verbatim, violations
// become findings.
std::vector<BoundReport> named_family_bounds(int k);

// io-decomposable Bell graphs: edge budget, radius window, radius/tail
// ratio, Laplacian floor, radius drop against the odd block, signless
// floor, the singular-value tail bound and the counting lower bound on
// the radius.
std::vector<BoundReport> io_bounds(const RiordanGraph& G);

// Laplacian-side results: the sigma(B) radius bound (the block ones count
// is computed both directly and by the generating-function sum; mismatch
// is fatal), its proper-graph corollary, the median eigenvalue bounds for
// o-/e-decomposable graphs, and the io-Bell max-degree and
// second-smallest bounds with the max-degree equality characterization.
std::vector<BoundReport> laplacian_bounds(const RiordanGraph& G);

// Appell Rayleigh quotient: lambda_1 >= 2*(h dot zgh)/(h dot h) with the
// mod-2 coefficients of g lifted to integers. h holds the coefficients of
// a polynomial of degree <= n-1, not all zero.
BoundReport rayleigh_bound(const RiordanGraph& G,
                           const std::vector<long long>& h);

// Clique/chromatic spectral bounds (exact omega and chi, so n is capped),
// plus the io-Bell identity omega = chi = ceil(log2 n)+1.
std::vector<BoundReport> chromatic_bounds(const RiordanGraph& G,
                                          int cap = 64);

// Everything applicable to one graph: riordan, io, laplacian, chromatic,
// the odd/even quotient reports, and the all-ones Rayleigh report on
// Appell graphs.
std::vector<BoundReport> all_bounds(const RiordanGraph& G);

}  // namespace riograph
