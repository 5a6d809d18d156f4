#pragma once

#include <string>
#include <vector>

#include "riograph/exact.hpp"
#include "riograph/riordan.hpp"

namespace riograph {

using Matrix = std::vector<std::vector<double>>;

struct EigenSystem {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
    double residual = 0.0;                     // final off-diagonal Frobenius norm
};

// Cyclic-by-row Jacobi. Sweeps until the off-diagonal Frobenius norm is at
// most 1e-12 times the Frobenius norm of the input, with a hard cap of 100
// sweeps (exceeding the cap is fatal). Eigenvectors come back unit-norm.
EigenSystem eigen_sym(Matrix m);

struct SpectrumReport {
    std::string kind;  // adjacency | laplacian | signless
    std::vector<double> eigenvalues;
    double residual_bound = 0.0;
    double trace_error = 0.0;
};

struct GraphSpectra {
    SpectrumReport adjacency;
    SpectrumReport laplacian;
    SpectrumReport signless;
    double lambda_1 = 0.0;
    double lambda_n = 0.0;
    double mu_1 = 0.0;
    double algebraic_connectivity = 0.0;  // second-smallest Laplacian value
    double q_1 = 0.0;
    double q_2 = 0.0;
    double q_n = 0.0;
};
GraphSpectra graph_spectra(const RiordanGraph& G);

Matrix adjacency_real(const BitMatrix& adj);
Matrix laplacian_real(const BitMatrix& adj);
Matrix signless_real(const BitMatrix& adj);

// Largest singular value, via the top eigenvalue of B B^T.
double singular_max(const BitMatrix& b);

// Number of adjacency eigenvalues <= threshold + 1e-9.
int count_leq(const RiordanGraph& G, double threshold);

// Floating sign counts with the zero band calibrated from the exact
// nullity: the nullity smallest magnitudes form the zero class and the
// band is half the next magnitude. An inseparable band is fatal.
Inertia calibrated_inertia(const std::vector<double>& eigenvalues,
                           int exact_nullity);

struct EigenpairClaim {
    std::string claim_id;
    bool applicable = false;
    bool pass = false;
    std::string detail;
};
// Integral eigenpair constructions for Pascal and Catalan graphs, checked
// in exact integer arithmetic; a claim passes only with residual exactly
// zero. Claims whose hypotheses the graph misses come back inapplicable.
std::vector<EigenpairClaim> eigvec_claims(const RiordanGraph& G);

}  // namespace riograph
