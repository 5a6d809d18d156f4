#pragma once

#include <cstdint>
#include <vector>

#include "riograph/errors.hpp"

namespace riograph {

// Dense 0/1 matrix, 64 entries per word, row-major. Indices are 0-based;
// the graph layer adds the 1-based shift in exactly one place.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        check(r, c);
        return (words_[static_cast<std::size_t>(r) * wpr_ + c / 64] >>
                (c % 64)) &
               1;
    }
    void set(int r, int c, bool v) {
        check(r, c);
        auto& w = words_[static_cast<std::size_t>(r) * wpr_ + c / 64];
        const std::uint64_t m = std::uint64_t{1} << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }

    BitMatrix transposed() const;
    // Rows and columns picked by 0-based index lists, in the given order.
    BitMatrix select(const std::vector<int>& rs,
                     const std::vector<int>& cs) const;
    BitMatrix operator^(const BitMatrix& o) const;

    bool operator==(const BitMatrix& o) const = default;
    bool is_zero() const;
    long long count_ones() const;

    // Row as a single word; only valid while cols() <= 64.
    std::uint64_t row_bits64(int r) const;

private:
    int rows_, cols_, wpr_;
    std::vector<std::uint64_t> words_;

    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw HypothesisError("bit matrix index out of range");
    }
};

}  // namespace riograph
