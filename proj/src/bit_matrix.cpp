#include "riograph/bit_matrix.hpp"

#include <bit>

namespace riograph {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw HypothesisError("bit matrix dimensions must be >= 0");
    wpr_ = cols == 0 ? 0 : (cols - 1) / 64 + 1;
    words_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::select(const std::vector<int>& rs,
                            const std::vector<int>& cs) const {
    BitMatrix s(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (get(rs[i], cs[j]))
                s.set(static_cast<int>(i), static_cast<int>(j), true);
    return s;
}

BitMatrix BitMatrix::operator^(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw HypothesisError("bit matrix xor needs equal shapes");
    BitMatrix r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] ^= o.words_[w];
    return r;
}

bool BitMatrix::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

long long BitMatrix::count_ones() const {
    long long total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

std::uint64_t BitMatrix::row_bits64(int r) const {
    if (cols_ > 64)
        throw HypothesisError("row_bits64 needs at most 64 columns");
    if (r < 0 || r >= rows_) throw HypothesisError("row index out of range");
    return cols_ == 0 ? 0 : words_[static_cast<std::size_t>(r) * wpr_];
}

}  // namespace riograph
