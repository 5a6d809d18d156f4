#include "riograph/exact.hpp"

#include <algorithm>
#include <utility>

#include "riograph/errors.hpp"

namespace riograph {

namespace {

void divexact(BigInt& out, const BigInt& num, const BigInt& den) {
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

void swap_rows(ZMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(ZMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// out = a * b, skipping zero entries of a and avoiding multiplications for
// +-1 entries. a is typically a 0/1 adjacency matrix.
void mul_into(ZMatrix& out, const ZMatrix& a, const ZMatrix& b) {
    if (a.cols() != b.rows())
        throw Error("matrix product shape mismatch");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(i, j) = 0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int t = 0; t < a.cols(); ++t) {
            const BigInt& w = a.at(i, t);
            const int s = sgn(w);
            if (s == 0) continue;
            if (w == 1) {
                for (int j = 0; j < b.cols(); ++j) out.at(i, j) += b.at(t, j);
            } else if (w == -1) {
                for (int j = 0; j < b.cols(); ++j) out.at(i, j) -= b.at(t, j);
            } else {
                for (int j = 0; j < b.cols(); ++j) out.at(i, j) += w * b.at(t, j);
            }
        }
    }
}

struct SplitBlocks {
    ZMatrix odd;    // adjacency of the odd-labelled vertices
    ZMatrix even;   // adjacency of the even-labelled vertices
    ZMatrix cross;  // odd rows against even columns
    int n1 = 0;
    int n2 = 0;
};

SplitBlocks split_blocks(const BitMatrix& adj) {
    std::vector<int> odds, evens;
    for (int i = 0; i < adj.rows(); i += 2) odds.push_back(i);
    for (int i = 1; i < adj.rows(); i += 2) evens.push_back(i);
    SplitBlocks s;
    s.n1 = static_cast<int>(odds.size());
    s.n2 = static_cast<int>(evens.size());
    s.odd = ZMatrix::from_bits(adj.select(odds, odds));
    s.even = ZMatrix::from_bits(adj.select(evens, evens));
    s.cross = ZMatrix::from_bits(adj.select(odds, evens));
    return s;
}

}  // namespace

ZMatrix ZMatrix::from_bits(const BitMatrix& m) {
    ZMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) out.at(i, j) = 1;
    return out;
}

ZMatrix ZMatrix::identity(int n) {
    ZMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

ZMatrix ZMatrix::transposed() const {
    ZMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
    ZMatrix out(rows_, o.cols());
    mul_into(out, *this, o);
    return out;
}

ZMatrix ZMatrix::operator-(const ZMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix difference shape mismatch");
    ZMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
    return out;
}

std::vector<BigInt> charpoly(const ZMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("characteristic polynomial requires a square matrix");
    const int n = m.rows();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[n] = 1;
    if (n == 0) return c;
    ZMatrix work = ZMatrix::identity(n);
    ZMatrix prod(n, n);
    for (int k = 1; k <= n; ++k) {
        mul_into(prod, m, work);
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += prod.at(i, i);
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
            throw ConsistencyError(
                "trace recurrence produced a non-integer coefficient");
        c[n - k] = -tr / k;
        if (k < n) {
            std::swap(work, prod);
            for (int i = 0; i < n; ++i) work.at(i, i) += c[n - k];
        }
    }
    return c;
}

Inertia inertia_from_charpoly(const std::vector<BigInt>& cp) {
    if (cp.empty()) throw Error("empty polynomial");
    const int n = static_cast<int>(cp.size()) - 1;
    int zero = 0;
    while (zero <= n && sgn(cp[zero]) == 0) ++zero;
    if (zero > n) throw Error("inertia of the zero polynomial");
    Inertia res;
    res.zero = zero;
    int changes = 0;
    int last = 0;
    for (int k = n; k >= zero; --k) {
        const int s = sgn(cp[k]);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    res.plus = changes;
    res.minus = n - res.zero - res.plus;
    return res;
}

Inertia inertia(const ZMatrix& sym) {
    return exact_summary(sym).inertia;
}

int rank_int(const ZMatrix& m) {
    ZMatrix w = m;
    const int steps = std::min(w.rows(), w.cols());
    BigInt prev = 1;
    BigInt tmp;
    int rank = 0;
    for (int k = 0; k < steps; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < w.rows() && pi < 0; ++i)
            for (int j = k; j < w.cols(); ++j)
                if (sgn(w.at(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        swap_rows(w, k, pi);
        swap_cols(w, k, pj);
        for (int i = k + 1; i < w.rows(); ++i)
            for (int j = k + 1; j < w.cols(); ++j) {
                tmp = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                divexact(w.at(i, j), tmp, prev);
            }
        prev = w.at(k, k);
        ++rank;
    }
    return rank;
}

BigInt det_exact(const ZMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    ZMatrix w = m;
    BigInt prev = 1;
    BigInt tmp;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (sgn(w.at(i, k)) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            swap_rows(w, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                tmp = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                divexact(w.at(i, j), tmp, prev);
            }
        prev = w.at(k, k);
    }
    BigInt det = w.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

std::vector<std::vector<Rational>> kernel_basis(const ZMatrix& m) {
    const int r = m.rows(), c = m.cols();
    std::vector<std::vector<Rational>> a(
        static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(c)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a[i][j] = m.at(i, j);
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int p = -1;
        for (int i = row; i < r; ++i)
            if (sgn(a[i][col]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        const Rational piv = a[row][col];
        for (int j = col; j < c; ++j) a[row][j] /= piv;
        for (int i = 0; i < r; ++i) {
            if (i == row || sgn(a[i][col]) == 0) continue;
            const Rational factor = a[i][col];
            for (int j = col; j < c; ++j) a[i][j] -= factor * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(c), false);
    for (int col : pivot_cols) is_pivot[col] = true;
    std::vector<std::vector<Rational>> basis;
    for (int col = 0; col < c; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(c));
        v[col] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -a[i][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactSummary exact_summary(const ZMatrix& sym) {
    if (sym.rows() != sym.cols())
        throw Error("summary requires a square matrix");
    const int n = sym.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sym.at(i, j) != sym.at(j, i))
                throw HypothesisError("summary requires a symmetric matrix");
    ExactSummary s;
    s.charpoly = charpoly(sym);
    s.inertia = inertia_from_charpoly(s.charpoly);
    s.nullity = s.inertia.zero;
    s.rank = n - s.nullity;
    if (rank_int(sym) != s.rank)
        throw ConsistencyError(
            "elimination rank disagrees with the characteristic polynomial");
    s.det = (n % 2 == 0) ? s.charpoly[0] : BigInt(-s.charpoly[0]);
    return s;
}

ExactSummary exact_summary(const BitMatrix& sym01) {
    return exact_summary(ZMatrix::from_bits(sym01));
}

SchurPair schur_pair_check(const RiordanGraph& G) {
    if (G.n % 2 != 0)
        throw HypothesisError("determinant pairing needs even order");
    const Classification cls = classify(G);
    if (!cls.o_decomposable && !cls.e_decomposable)
        throw HypothesisError(
            "determinant pairing needs a null odd or even block");
    const SplitBlocks s = split_blocks(G.adj);
    SchurPair out;
    out.det_graph = det_exact(ZMatrix::from_bits(G.adj));
    out.det_block = det_exact(s.cross);
    // det [X B; B^T O] = det(-B B^T), so the square carries a sign of
    // (-1)^(n/2); likewise for the [O B; B^T Y] shape.
    BigInt rhs = out.det_block * out.det_block;
    if ((G.n / 2) % 2 != 0) rhs = -rhs;
    out.pass = (out.det_graph == rhs);
    return out;
}

NullityTransform nullity_transform(const RiordanGraph& G) {
    if (G.n < 2)
        throw HypothesisError("nullity transform needs at least two vertices");
    const Classification cls = classify(G);
    if (!cls.io_decomposable || !cls.bell)
        throw HypothesisError(
            "nullity transform needs an io-decomposable Bell input");
    const SplitBlocks s = split_blocks(G.adj);
    const int k = s.n1, n2 = s.n2;
    const ZMatrix bt = s.cross.transposed();
    ZMatrix m(k, k);
    if (k == n2) {
        m = s.odd - bt;
    } else {
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i + 1 < k; ++i)
                m.at(i, j) = s.odd.at(i, j) - bt.at(i, j);
            m.at(k - 1, j) = s.odd.at(k - 1, j) - bt.at(k - 2, j);
        }
    }
    for (int i = 0; i < k; ++i) {
        if (m.at(i, i) != -1)
            throw ConsistencyError("transform matrix diagonal is not -1");
        for (int j = i + 1; j < k; ++j)
            if (sgn(m.at(i, j)) != 0)
                throw ConsistencyError("transform matrix is not lower triangular");
    }
    // Solve m * w = cross by forward substitution; the -1 diagonal keeps
    // every entry integral.
    ZMatrix w(k, n2);
    for (int col = 0; col < n2; ++col)
        for (int i = 0; i < k; ++i) {
            BigInt acc = s.cross.at(i, col);
            for (int j = 0; j < i; ++j)
                if (sgn(m.at(i, j)) != 0) acc -= m.at(i, j) * w.at(j, col);
            w.at(i, col) = -acc;
        }
    if (!(m * w == s.cross))
        throw ConsistencyError("forward substitution residual is nonzero");
    const ZMatrix transformed = bt * w;
    NullityTransform out;
    out.m_used = m;
    out.eta_transformed = n2 - rank_int(transformed);
    out.eta_block = n2 - rank_int(s.cross);
    out.eta_graph = exact_summary(G.adj).nullity;
    if (out.eta_graph != out.eta_transformed)
        throw ConsistencyError(
            "transformed block nullity disagrees with the graph nullity");
    return out;
}

std::string bigint_str(const BigInt& v) {
    return v.get_str();
}

}  // namespace riograph
