#pragma once

#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cybe {

// One-variable Laurent series truncated to an explicit exponent window.
// Coefficients at exponents < prec() are known exactly (zero below lo());
// exponents >= prec() are unknown.  A series that is zero on its window is
// stored with an empty coefficient vector and lo() == prec().
class LaurentSeries {
  public:
    LaurentSeries() : lo_(0), prec_(0) {}

    static LaurentSeries zero(long prec) { return LaurentSeries(prec, prec, {}); }
    static LaurentSeries constant(const Rat& c, long prec) { return monomial(c, 0, prec); }
    static LaurentSeries monomial(const Rat& c, long exp, long prec);
    static LaurentSeries from_coeffs(long lo, std::vector<Rat> coeffs, long prec);

    long lo() const { return lo_; }
    long prec() const { return prec_; }
    // one past the last stored coefficient; everything in [coeff_end, prec)
    // is a known zero
    long coeff_end() const { return lo_ + long(c_.size()); }
    bool is_zero() const { return c_.empty(); }
    bool known(long e) const { return e < prec_; }

    // Exact coefficient at exponent e; throws WindowTooNarrow when e >= prec().
    const Rat& coeff(long e) const;

    // lo() of a nonzero series; throws on the zero series.
    long order() const;

    LaurentSeries truncated(long new_prec) const;
    LaurentSeries shifted(long k) const;  // multiply by z^k
    LaurentSeries scaled(const Rat& c) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const { return scaled(Rat(-1)); }

    // True when the two agree on the intersection of their windows.
    friend bool agree_on_common_window(const LaurentSeries& a, const LaurentSeries& b);
    // Strict equality of windows and coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  private:
    LaurentSeries(long lo, long prec, std::vector<Rat> c)
        : lo_(lo), prec_(prec), c_(std::move(c)) {}
    void normalize();

    long lo_, prec_;
    std::vector<Rat> c_;
};

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_derive(const LaurentSeries& a);
Rat series_residue(const LaurentSeries& a);
// a(w(z)) for w in z*Q[[z]]^x; Laurent a is allowed (negative powers via division).
LaurentSeries series_compose(const LaurentSeries& a, const LaurentSeries& w);
// v with w(v(z)) = z = v(w(z)).
LaurentSeries comp_inverse(const LaurentSeries& w);
// unique u in z*Q[[z]]^x with u' = lambda(u); lambda must be a unit power series.
LaurentSeries solve_flow(const LaurentSeries& lambda);
// integer powers, negative allowed when a has an invertible leading coefficient.
LaurentSeries series_pow(const LaurentSeries& a, long n);

// Two-variable series with per-variable exponent windows.  The x window may
// be Laurent; missing map entries are zero inside the window, unknown outside.
// T needs: default ctor == zero, +=, -, scaled(Rat), is_zero().
template <class T>
struct Series2 {
    long xlo = 0, xprec = 0;
    long ylo = 0, yprec = 0;
    std::map<std::pair<long, long>, T> c;

    bool in_window(long p, long q) const {
        return p >= xlo && p < xprec && q >= ylo && q < yprec;
    }
    void add(long p, long q, const T& t) {
        if (t.is_zero()) return;
        auto it = c.find({p, q});
        if (it == c.end()) {
            c.emplace(std::make_pair(p, q), t);
        } else {
            it->second += t;
            if (it->second.is_zero()) c.erase(it);
        }
    }
    const T* find(long p, long q) const {
        auto it = c.find({p, q});
        return it == c.end() ? nullptr : &it->second;
    }
    bool is_zero_on_window() const { return c.empty(); }
    void prune() {
        for (auto it = c.begin(); it != c.end();) {
            if (it->second.is_zero() || !in_window(it->first.first, it->first.second))
                it = c.erase(it);
            else
                ++it;
        }
    }
};

template <class T>
Series2<T> series2_add(const Series2<T>& a, const Series2<T>& b, const Rat& bscale = Rat(1)) {
    Series2<T> r;
    r.xlo = std::min(a.xlo, b.xlo);
    r.xprec = std::min(a.xprec, b.xprec);
    r.ylo = std::min(a.ylo, b.ylo);
    r.yprec = std::min(a.yprec, b.yprec);
    for (const auto& [k, t] : a.c)
        if (r.in_window(k.first, k.second)) r.add(k.first, k.second, t);
    for (const auto& [k, t] : b.c)
        if (r.in_window(k.first, k.second)) r.add(k.first, k.second, t.scaled(bscale));
    return r;
}

// Multiply a payload series by a scalar series in x (vi = 0) or y (vi = 1).
template <class T>
Series2<T> series2_mul_scalar(const Series2<T>& a, const LaurentSeries& s, int vi) {
    Series2<T> r;
    long slo = s.is_zero() ? s.prec() : s.lo();
    if (vi == 0) {
        r.xlo = a.xlo + slo;
        r.xprec = std::min(a.xlo + s.prec(), slo + a.xprec);
        r.ylo = a.ylo;
        r.yprec = a.yprec;
    } else {
        r.ylo = a.ylo + slo;
        r.yprec = std::min(a.ylo + s.prec(), slo + a.yprec);
        r.xlo = a.xlo;
        r.xprec = a.xprec;
    }
    for (const auto& [k, t] : a.c) {
        for (long e = slo; e < std::min(s.prec(), s.coeff_end()); ++e) {
            const Rat& cs = s.coeff(e);
            if (is_zero(cs)) continue;
            long p = k.first + (vi == 0 ? e : 0);
            long q = k.second + (vi == 1 ? e : 0);
            if (r.in_window(p, q)) r.add(p, q, t.scaled(cs));
        }
    }
    return r;
}

// Substitute x <- wx(x), y <- wy(y) (both in z*Q[[z]]^x).  Requires xlo >= 0.
template <class T>
Series2<T> series2_compose(const Series2<T>& a, const LaurentSeries& wx, const LaurentSeries& wy) {
    if (a.xlo < 0) throw Error("series2_compose: Laurent x window unsupported here");
    Series2<T> r;
    r.xlo = a.xlo;
    r.xprec = a.xprec;
    r.ylo = a.ylo;
    r.yprec = a.yprec;
    for (const auto& [k, t] : a.c) {
        if (t.is_zero()) continue;
        if (k.first != 0) r.xprec = std::min(r.xprec, k.first - 1 + wx.prec());
        if (k.second != 0) r.yprec = std::min(r.yprec, k.second - 1 + wy.prec());
    }
    if (r.xprec < r.xlo) r.xprec = r.xlo;
    if (r.yprec < r.ylo) r.yprec = r.ylo;
    // cache powers of wx, wy
    std::map<long, LaurentSeries> px, py;
    auto powx = [&](long n) -> const LaurentSeries& {
        auto it = px.find(n);
        if (it == px.end()) it = px.emplace(n, series_pow(wx, n)).first;
        return it->second;
    };
    auto powy = [&](long n) -> const LaurentSeries& {
        auto it = py.find(n);
        if (it == py.end()) it = py.emplace(n, series_pow(wy, n)).first;
        return it->second;
    };
    for (const auto& [k, t] : a.c) {
        const LaurentSeries& sx = powx(k.first);
        const LaurentSeries& sy = powy(k.second);
        for (long p = sx.lo(); p < std::min(sx.prec(), r.xprec); ++p) {
            const Rat& cx = sx.coeff(p);
            if (is_zero(cx)) continue;
            for (long q = sy.lo(); q < std::min(sy.prec(), r.yprec); ++q) {
                const Rat& cy = sy.coeff(q);
                if (is_zero(cy)) continue;
                if (r.in_window(p, q)) r.add(p, q, t.scaled(cx * cy));
            }
        }
    }
    return r;
}

}  // namespace cybe
