#include "riograph/gf2_series.hpp"

#include <bit>
#include <algorithm>

namespace riograph {

namespace {

// dst ^= src << shift, where both are bit arrays of nwords words. Bits
// shifted past the end of dst are discarded.
void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, int shift,
                 int nwords) {
    const int wshift = shift / 64;
    const int bshift = shift % 64;
    if (bshift == 0) {
        for (int w = nwords - 1; w >= wshift; --w) dst[w] ^= src[w - wshift];
        return;
    }
    for (int w = nwords - 1; w >= wshift; --w) {
        std::uint64_t v = src[w - wshift] << bshift;
        if (w - wshift - 1 >= 0) v |= src[w - wshift - 1] >> (64 - bshift);
        dst[w] ^= v;
    }
}

}  // namespace

Gf2Series::Gf2Series(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw HypothesisError("series truncation must be >= 0");
    words_.assign(words_for(trunc), 0);
}

Gf2Series Gf2Series::one(int trunc) {
    Gf2Series s(trunc);
    s.words_[0] = 1;
    return s;
}

Gf2Series Gf2Series::z(int trunc) {
    Gf2Series s(trunc);
    if (trunc >= 1) s.set_coeff(1, true);
    return s;
}

Gf2Series Gf2Series::catalan(int trunc) {
    // C = 1 + z*C^2 over GF(2). Squaring doubles every exponent, so
    // [z^n]C = [z^{n-1}]C^2 = C_{(n-1)/2} when n is odd and 0 when n is
    // even, n >= 1. Each coefficient only depends on earlier ones.
    Gf2Series c(trunc);
    c.set_coeff(0, true);
    for (int n = 1; n <= trunc; ++n)
        if (n % 2 == 1) c.set_coeff(n, c.coeff((n - 1) / 2));
    return c;
}

Gf2Series Gf2Series::from_bits(const std::vector<int>& bits, int trunc) {
    Gf2Series s(trunc);
    if (static_cast<int>(bits.size()) > trunc + 1)
        throw HypothesisError("more bits than the requested truncation holds");
    for (std::size_t i = 0; i < bits.size(); ++i)
        s.set_coeff(static_cast<int>(i), bits[i] != 0);
    return s;
}

Gf2Series Gf2Series::parse_bits(const std::string& text) {
    std::vector<int> bits;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(
            pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok == "0")
            bits.push_back(0);
        else if (tok == "1")
            bits.push_back(1);
        else
            throw ParseError("bit list entries must be 0 or 1", pos);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (bits.empty()) throw ParseError("empty bit list", 0);
    return from_bits(bits, static_cast<int>(bits.size()) - 1);
}

void Gf2Series::clear_top() {
    const int top_bits = trunc_ % 64 + 1;
    if (top_bits < 64) words_.back() &= (std::uint64_t{1} << top_bits) - 1;
}

bool Gf2Series::coeff(int i) const {
    if (i < 0 || i > trunc_)
        throw HypothesisError("coefficient index " + std::to_string(i) +
                              " outside truncation " + std::to_string(trunc_));
    return (words_[i / 64] >> (i % 64)) & 1;
}

void Gf2Series::set_coeff(int i, bool v) {
    if (i < 0 || i > trunc_)
        throw HypothesisError("coefficient index " + std::to_string(i) +
                              " outside truncation " + std::to_string(trunc_));
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

bool Gf2Series::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

Gf2Series Gf2Series::operator+(const Gf2Series& o) const {
    Gf2Series r(std::min(trunc_, o.trunc_));
    for (std::size_t w = 0; w < r.words_.size(); ++w)
        r.words_[w] = words_[w] ^ o.words_[w];
    r.clear_top();
    return r;
}

Gf2Series Gf2Series::operator*(const Gf2Series& o) const {
    Gf2Series r(std::min(trunc_, o.trunc_));
    const int nw = static_cast<int>(r.words_.size());
    for (int i = 0; i <= r.trunc_; ++i)
        if ((words_[i / 64] >> (i % 64)) & 1)
            xor_shifted(r.words_.data(), o.words_.data(), i, nw);
    r.clear_top();
    return r;
}

Gf2Series Gf2Series::inverse() const {
    if (!coeff(0)) throw HypothesisError("inverse needs constant term 1");
    // Long division: peel off the lowest set bit of the residual 1 - a*b
    // and cancel it with a shifted copy of a.
    Gf2Series b(trunc_);
    Gf2Series residual = one(trunc_);
    const int nw = static_cast<int>(words_.size());
    for (int k = 0; k <= trunc_; ++k) {
        if (!residual.coeff(k)) continue;
        b.set_coeff(k, true);
        xor_shifted(residual.words_.data(), words_.data(), k, nw);
        residual.clear_top();
    }
    return b;
}

Gf2Series Gf2Series::operator/(const Gf2Series& o) const {
    return *this * o.inverse();
}

Gf2Series Gf2Series::pow(unsigned k) const {
    Gf2Series r = one(trunc_);
    Gf2Series base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Gf2Series Gf2Series::compose(const Gf2Series& inner) const {
    if (inner.trunc_ >= 0 && inner.coeff(0))
        throw HypothesisError("composition needs inner constant term 0");
    const int t = std::min(trunc_, inner.trunc_);
    // Horner from the highest retained coefficient down.
    Gf2Series r(t);
    r.set_coeff(0, coeff(t));
    for (int i = t - 1; i >= 0; --i) {
        r = r * inner;
        if (coeff(i)) r.set_coeff(0, !r.coeff(0));
    }
    return r;
}

Gf2Series Gf2Series::shifted_up(int k) const {
    if (k < 0) throw HypothesisError("shift amount must be >= 0");
    Gf2Series r(trunc_ + k);
    xor_shifted(r.words_.data(), words_.data(), k,
                static_cast<int>(r.words_.size()));
    r.clear_top();
    return r;
}

Gf2Series Gf2Series::shifted_down(int k) const {
    if (k < 0) throw HypothesisError("shift amount must be >= 0");
    if (k > trunc_) throw HypothesisError("shift exceeds truncation");
    for (int i = 0; i < k; ++i)
        if (coeff(i))
            throw HypothesisError(
                "series is not divisible by z^" + std::to_string(k) +
                ": coefficient of z^" + std::to_string(i) + " is 1");
    Gf2Series r(trunc_ - k);
    for (int i = 0; i <= r.trunc_; ++i) r.set_coeff(i, coeff(i + k));
    return r;
}

Gf2Series Gf2Series::even_part() const {
    Gf2Series r(trunc_ / 2);
    for (int i = 0; i <= r.trunc_; ++i) r.set_coeff(i, coeff(2 * i));
    return r;
}

Gf2Series Gf2Series::odd_part() const {
    if (trunc_ < 1)
        throw HypothesisError("odd part needs truncation >= 1");
    Gf2Series r((trunc_ - 1) / 2);
    for (int i = 0; i <= r.trunc_; ++i) r.set_coeff(i, coeff(2 * i + 1));
    return r;
}

int Gf2Series::ones_count_prefix(int k) const {
    if (k < 0) return 0;
    if (k > trunc_)
        throw HypothesisError("prefix end " + std::to_string(k) +
                              " outside truncation " + std::to_string(trunc_));
    int total = 0;
    const int full = (k + 1) / 64;
    for (int w = 0; w < full; ++w) total += std::popcount(words_[w]);
    const int rest = (k + 1) % 64;
    if (rest)
        total += std::popcount(words_[full] & ((std::uint64_t{1} << rest) - 1));
    return total;
}

std::string Gf2Series::dump() const {
    std::string out;
    for (int i = 0; i <= trunc_; ++i) {
        if (i) out += ',';
        out += coeff(i) ? '1' : '0';
    }
    return out;
}

std::string Gf2Series::poly_expr() const {
    std::string out;
    for (int i = 0; i <= trunc_; ++i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'z';
        else
            out += "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

bool prefix_equal(const Gf2Series& a, const Gf2Series& b) {
    const int t = std::min(a.trunc_, b.trunc_);
    for (int w = 0; w <= t / 64; ++w) {
        std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (w == t / 64 && t % 64 + 1 < 64)
            diff &= (std::uint64_t{1} << (t % 64 + 1)) - 1;
        if (diff) return false;
    }
    return true;
}

bool identical(const Gf2Series& a, const Gf2Series& b) {
    return a.trunc_ == b.trunc_ && prefix_equal(a, b);
}

}  // namespace riograph
