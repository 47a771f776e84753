#pragma once

// Windowed Laurent series in an auxiliary variable z.

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtsym {

class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Laurent series in z with coefficients of type T, known exactly on the
/// window [lo, hi].
///
/// A side that is not truncated is genuinely zero beyond the window; a
/// truncated side dropped terms and is unknown there. extract()
/// outside the window always throws WindowError.
template <class T>
class ZSeries {
public:
    ZSeries(T zero, int lo, int hi, bool truncated_lo = false, bool truncated_hi = false)
        : zero_(std::move(zero)), lo_(lo), hi_(hi), trunc_lo_(truncated_lo), trunc_hi_(truncated_hi) {}

    static ZSeries monomial(T zero, const T& coeff, int exponent) {
        ZSeries s(std::move(zero), exponent, exponent);
        s.add(exponent, coeff);
        return s;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool truncated_lo() const { return trunc_lo_; }
    bool truncated_hi() const { return trunc_hi_; }
    bool truncated() const { return trunc_lo_ || trunc_hi_; }
    const T& zero() const { return zero_; }
    const std::map<int, T>& coefficients() const { return coeffs_; }

    /// Exact coefficient of z^k.
    const T& extract(int k) const {
        if (k < lo_ || k > hi_)
            throw WindowError("z^" + std::to_string(k) + " lies outside the retained window [" +
                              std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? zero_ : it->second;
    }

    /// Coefficient of z^k, or zero when k lies beyond a side that was never
    /// truncated. Throws WindowError when the answer is unknown.
    T coefficient(int k) const {
        if ((k < lo_ && !trunc_lo_) || (k > hi_ && !trunc_hi_)) return zero_;
        return extract(k);
    }

    /// Adds c z^k. Terms beyond hi are dropped and mark the series truncated.
    void add(int k, const T& c) {
        if (k > hi_) {
            trunc_hi_ = true;
            return;
        }
        if (k < lo_) {
            trunc_lo_ = true;
            return;
        }
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    /// Applies f to every coefficient; f must map zero to zero.
    template <class F>
    ZSeries map(F f) const {
        ZSeries r(f(zero_), lo_, hi_, trunc_lo_, trunc_hi_);
        for (const auto& [k, v] : coeffs_) r.add(k, f(v));
        return r;
    }

    ZSeries scaled(const T& c) const {
        ZSeries r(zero_, lo_, hi_, trunc_lo_, trunc_hi_);
        for (const auto& [k, v] : coeffs_) r.add(k, v * c);
        return r;
    }

    /// Window on which the product with `o` is exact.
    std::pair<int, int> product_window(const ZSeries& o) const {
        long lo = static_cast<long>(lo_) + o.lo_;
        long hi = static_cast<long>(hi_) + o.hi_;
        const long inf = LONG_MAX / 4;
        long sup_hi_a = trunc_hi_ ? inf : hi_, sup_hi_b = o.trunc_hi_ ? inf : o.hi_;
        long sup_lo_a = trunc_lo_ ? -inf : lo_, sup_lo_b = o.trunc_lo_ ? -inf : o.lo_;
        if (trunc_lo_) lo = std::max(lo, lo_ + sup_hi_b);
        if (o.trunc_lo_) lo = std::max(lo, o.lo_ + sup_hi_a);
        if (trunc_hi_) hi = std::min(hi, hi_ + sup_lo_b);
        if (o.trunc_hi_) hi = std::min(hi, o.hi_ + sup_lo_a);
        if (lo > hi) throw WindowError("product of series has no exact window");
        return {static_cast<int>(lo), static_cast<int>(hi)};
    }

    /// Exact coefficient of z^k in (*this) * o without forming the product.
    T product_coefficient(const ZSeries& o, int k) const {
        auto [lo, hi] = product_window(o);
        if (k < lo_ + o.lo_ && !trunc_lo_ && !o.trunc_lo_) return zero_;
        if (k > hi_ + o.hi_ && !trunc_hi_ && !o.trunc_hi_) return zero_;
        if (k < lo || k > hi)
            throw WindowError("z^" + std::to_string(k) + " lies outside the exact product window [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
        T acc = zero_;
        for (const auto& [i, a] : coeffs_) {
            auto it = o.coeffs_.find(k - i);
            if (it != o.coeffs_.end()) acc += a * it->second;
        }
        return acc;
    }

    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        auto [lo, hi] = a.product_window(b);
        bool tlo = a.trunc_lo_ || b.trunc_lo_ || lo > a.lo_ + b.lo_;
        bool thi = a.trunc_hi_ || b.trunc_hi_ || hi < a.hi_ + b.hi_;
        ZSeries r(a.zero_, lo, hi, tlo, thi);
        for (const auto& [i, x] : a.coeffs_)
            for (const auto& [j, y] : b.coeffs_) {
                if (i + j < lo || i + j > hi) continue;
                r.add(i + j, x * y);
            }
        return r;
    }

    friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
        int lo = std::max(a.trunc_lo_ ? a.lo_ : INT_MIN / 4, b.trunc_lo_ ? b.lo_ : INT_MIN / 4);
        int hi = std::min(a.trunc_hi_ ? a.hi_ : INT_MAX / 4, b.trunc_hi_ ? b.hi_ : INT_MAX / 4);
        lo = std::max(lo, std::min(a.lo_, b.lo_));
        hi = std::min(hi, std::max(a.hi_, b.hi_));
        ZSeries r(a.zero_, lo, hi, a.trunc_lo_ || b.trunc_lo_, a.trunc_hi_ || b.trunc_hi_);
        for (const auto& [k, v] : a.coeffs_)
            if (k >= lo && k <= hi) r.add(k, v);
        for (const auto& [k, v] : b.coeffs_)
            if (k >= lo && k <= hi) r.add(k, v);
        return r;
    }

    /// z -> 1/z.
    ZSeries reflected() const {
        ZSeries r(zero_, -hi_, -lo_, trunc_hi_, trunc_lo_);
        for (const auto& [k, v] : coeffs_) r.add(-k, v);
        return r;
    }

    /// Multiplicative inverse of a series 1 + O(z) on [0, hi].
    ZSeries inverse_unit() const {
        if (lo_ != 0 || trunc_lo_) throw WindowError("series inversion needs a window starting at z^0");
        if (!extract(0).is_one()) throw std::domain_error("series inversion needs constant term 1");
        ZSeries r(zero_, 0, hi_, false, trunc_hi_ || !coeffs_.empty());
        std::map<int, T> b;
        b.emplace(0, extract(0));
        for (int k = 1; k <= hi_; ++k) {
            T acc = zero_;
            for (int j = 1; j <= k; ++j) {
                auto ia = coeffs_.find(j);
                auto ib = b.find(k - j);
                if (ia != coeffs_.end() && ib != b.end()) acc += ia->second * ib->second;
            }
            if (!acc.is_zero()) b.emplace(k, -acc);
        }
        for (const auto& [k, v] : b) r.add(k, v);
        // A finite series with only the constant term inverts exactly.
        if (coeffs_.size() <= 1 && !trunc_hi_) r.trunc_hi_ = false;
        return r;
    }

private:
    T zero_;
    int lo_, hi_;
    bool trunc_lo_, trunc_hi_;
    std::map<int, T> coeffs_;
};

}  // namespace qtsym
