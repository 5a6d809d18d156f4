#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "riograph/riordan.hpp"

namespace riograph {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense big-integer matrix, row-major.
class ZMatrix {
public:
    ZMatrix() : rows_(0), cols_(0) {}
    ZMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols) {}

    static ZMatrix from_bits(const BitMatrix& m);
    static ZMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ZMatrix transposed() const;
    ZMatrix operator*(const ZMatrix& o) const;
    ZMatrix operator-(const ZMatrix& o) const;
    bool operator==(const ZMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

struct Inertia {
    int plus = 0;
    int zero = 0;
    int minus = 0;
    bool operator==(const Inertia&) const = default;
};

struct ExactSummary {
    std::vector<BigInt> charpoly;  // index k holds the coefficient of λ^k
    BigInt det;
    int rank = 0;
    int nullity = 0;
    Inertia inertia;
};

// det(λI - M) by the Faddeev-LeVerrier recurrence; every division is exact
// over the integers. M must be square (symmetry is required only for the
// inertia interpretation, not for the polynomial itself).
std::vector<BigInt> charpoly(const ZMatrix& m);

// Sign counts of a symmetric matrix, read off the characteristic
// polynomial: zero multiplicity = trailing zero coefficients, positive
// count = Descartes sign variations (exact, the spectrum is real).
Inertia inertia_from_charpoly(const std::vector<BigInt>& cp);
Inertia inertia(const ZMatrix& sym);

// Fraction-free (Bareiss) elimination.
int rank_int(const ZMatrix& m);
BigInt det_exact(const ZMatrix& m);

// Exact rational kernel basis, one vector per free column of the RREF.
std::vector<std::vector<Rational>> kernel_basis(const ZMatrix& m);

ExactSummary exact_summary(const ZMatrix& sym);
ExactSummary exact_summary(const BitMatrix& sym01);

struct SchurPair {
    BigInt det_graph;
    BigInt det_block;
    bool pass = false;
};
// det(G) = (-1)^(n/2) (det B)^2 for o- or e-decomposable graphs of even
// order (the determinant of a null-diagonal-block partition reduces to
// det(-B B^T)).
SchurPair schur_pair_check(const RiordanGraph& G);

struct NullityTransform {
    int eta_graph = 0;
    int eta_block = 0;       // floor(n/2) - rank(B)
    int eta_transformed = 0; // nullity of B^T M^{-1} B
    ZMatrix m_used;
};
// The congruence-style nullity identity for io-decomposable Bell graphs:
// eta(G) = eta(B^T M^{-1} B) with M assembled from rows of the odd block
// and of B^T (M is lower triangular with -1 diagonal, so the inverse stays
// integral). Disagreement is fatal.
NullityTransform nullity_transform(const RiordanGraph& G);

std::string bigint_str(const BigInt& v);

}  // namespace riograph
