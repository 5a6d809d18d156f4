#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riograph/errors.hpp"

namespace riograph {

// Truncated formal power series over GF(2).
//
// A series carries its truncation degree: coefficients 0..trunc() are known,
// nothing beyond is. Every operation propagates truncation conservatively
// (a product of series known to degrees s and t is known to degree
// min(s, t), and so on), so a result never claims coefficients it cannot
// actually back up. Reading past trunc() throws instead of returning 0.
//
// Coefficients are packed 64 per word, bit i of word i/64 holding [z^i].
class Gf2Series {
public:
    Gf2Series() : trunc_(0), words_(1, 0) {}
    explicit Gf2Series(int trunc);

    static Gf2Series zero(int trunc) { return Gf2Series(trunc); }
    static Gf2Series one(int trunc);
    static Gf2Series z(int trunc);
    // Catalan generating function C = 1 + z*C^2, solved degree by degree.
    static Gf2Series catalan(int trunc);
    static Gf2Series from_bits(const std::vector<int>& bits, int trunc);
    // Inverse of dump(): comma-separated bits, lowest degree first.
    static Gf2Series parse_bits(const std::string& text);

    int trunc() const { return trunc_; }
    bool coeff(int i) const;
    void set_coeff(int i, bool v);
    bool is_zero() const;

    Gf2Series operator+(const Gf2Series& o) const;
    Gf2Series operator-(const Gf2Series& o) const { return *this + o; }
    Gf2Series operator*(const Gf2Series& o) const;
    // *this * inverse(o); o must have constant term 1.
    Gf2Series operator/(const Gf2Series& o) const;

    Gf2Series inverse() const;
    Gf2Series pow(unsigned k) const;
    // Substitute inner into *this; inner must have constant term 0.
    Gf2Series compose(const Gf2Series& inner) const;

    // shifted_up(k): multiply by z^k (truncation grows by k).
    // shifted_down(k): divide by z^k; the k dropped coefficients must be 0.
    Gf2Series shifted_up(int k) const;
    Gf2Series shifted_down(int k) const;

    // even_part: [z^i] -> [z^{2i}] of the original, trunc floor(t/2).
    // odd_part:  [z^i] -> [z^{2i+1}] of the original, trunc floor((t-1)/2).
    Gf2Series even_part() const;
    Gf2Series odd_part() const;

    // Number of 1 coefficients among [z^0]..[z^k]. k < 0 gives 0 (the empty
    // sum); k > trunc() throws.
    int ones_count_prefix(int k) const;

    // Comma-separated bits, lowest degree first, exactly trunc()+1 entries.
    std::string dump() const;
    // Polynomial rendering like "1+z^2+z^5" ("0" if all coefficients are 0).
    std::string poly_expr() const;

    // True iff the two series agree on [z^0]..[z^{min trunc}].
    friend bool prefix_equal(const Gf2Series& a, const Gf2Series& b);
    // prefix_equal and the truncations coincide.
    friend bool identical(const Gf2Series& a, const Gf2Series& b);

private:
    int trunc_;
    std::vector<std::uint64_t> words_;

    void clear_top();
    static int words_for(int trunc) { return trunc / 64 + 1; }
};

bool prefix_equal(const Gf2Series& a, const Gf2Series& b);
bool identical(const Gf2Series& a, const Gf2Series& b);

}  // namespace riograph
