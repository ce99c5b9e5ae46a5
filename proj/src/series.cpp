#include "series.hpp"

#include <algorithm>

namespace cybe {

void LaurentSeries::normalize() {
    size_t skip = 0;
    while (skip < c_.size() && cybe::is_zero(c_[skip])) ++skip;
    if (skip > 0) {
        c_.erase(c_.begin(), c_.begin() + long(skip));
        lo_ += long(skip);
    }
    while (!c_.empty() && cybe::is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) lo_ = prec_;
}

LaurentSeries LaurentSeries::monomial(const Rat& c, long exp, long prec) {
    if (exp >= prec || cybe::is_zero(c)) return zero(prec);
    return LaurentSeries(exp, prec, {c});
}

LaurentSeries LaurentSeries::from_coeffs(long lo, std::vector<Rat> coeffs, long prec) {
    if (lo + long(coeffs.size()) > prec)
        coeffs.resize(size_t(std::max<long>(0, prec - lo)));
    LaurentSeries s(lo, prec, std::move(coeffs));
    s.normalize();
    return s;
}

const Rat& LaurentSeries::coeff(long e) const {
    static const Rat kZero(0);
    if (e >= prec_)
        throw WindowTooNarrow("coefficient at exponent " + std::to_string(e) +
                              " requested, window ends at " + std::to_string(prec_));
    if (e < lo_ || e >= lo_ + long(c_.size())) return kZero;
    return c_[size_t(e - lo_)];
}

long LaurentSeries::order() const {
    if (c_.empty()) throw Error("order of zero series");
    return lo_;
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
    if (new_prec >= prec_) {
        LaurentSeries s = *this;
        return s;  // never extend prec
    }
    std::vector<Rat> c;
    for (long e = lo_; e < std::min(new_prec, lo_ + long(c_.size())); ++e)
        c.push_back(c_[size_t(e - lo_)]);
    return from_coeffs(lo_, std::move(c), new_prec);
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries s = *this;
    s.lo_ += k;
    s.prec_ += k;
    return s;
}

LaurentSeries LaurentSeries::scaled(const Rat& c) const {
    if (cybe::is_zero(c)) return zero(prec_);
    LaurentSeries s = *this;
    for (auto& x : s.c_) x *= c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    long prec = std::min(a.prec_, b.prec_);
    long lo = std::min(a.lo_, b.lo_);
    if (lo >= prec) return LaurentSeries::zero(prec);
    std::vector<Rat> c(size_t(prec - lo));
    for (long e = a.lo_; e < std::min(prec, a.lo_ + long(a.c_.size())); ++e)
        c[size_t(e - lo)] += a.c_[size_t(e - a.lo_)];
    for (long e = b.lo_; e < std::min(prec, b.lo_ + long(b.c_.size())); ++e)
        c[size_t(e - lo)] += b.c_[size_t(e - b.lo_)];
    return LaurentSeries::from_coeffs(lo, std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + b.scaled(Rat(-1));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    long prec = std::min(a.lo_ + b.prec_, b.lo_ + a.prec_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(prec);
    long lo = a.lo_ + b.lo_;
    std::vector<Rat> c(size_t(std::max<long>(0, prec - lo)));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (cybe::is_zero(a.c_[i])) continue;
        long ea = a.lo_ + long(i);
        for (size_t j = 0; j < b.c_.size(); ++j) {
            long e = ea + b.lo_ + long(j);
            if (e >= prec) break;
            if (!cybe::is_zero(b.c_[j])) c[size_t(e - lo)] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentSeries::from_coeffs(lo, std::move(c), prec);
}

bool agree_on_common_window(const LaurentSeries& a, const LaurentSeries& b) {
    long prec = std::min(a.prec(), b.prec());
    long lo = std::min(a.is_zero() ? prec : a.lo(), b.is_zero() ? prec : b.lo());
    for (long e = lo; e < prec; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.lo_ == b.lo_ && a.prec_ == b.prec_ && a.c_ == b.c_;
}

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) {
    if (b.is_zero()) throw DivisionByZeroSeries("division by a series that is 0 on its window");
    long ob = b.order();
    long rel_b = b.prec() - ob;
    if (a.is_zero()) return LaurentSeries::zero(a.prec() - ob);
    long oa = a.order();
    long rel = std::min(a.prec() - oa, rel_b);
    // classic power-series division on the unit parts
    std::vector<Rat> q(size_t(std::max<long>(0, rel)));
    Rat lead = b.coeff(ob);
    for (long n = 0; n < rel; ++n) {
        Rat s = a.coeff(oa + n);
        for (long k = 0; k < n; ++k) {
            const Rat& bk = b.coeff(ob + n - k);
            if (!is_zero(bk) && !is_zero(q[size_t(k)])) s -= q[size_t(k)] * bk;
        }
        q[size_t(n)] = s / lead;
    }
    return LaurentSeries::from_coeffs(oa - ob, std::move(q), oa - ob + rel);
}

LaurentSeries series_derive(const LaurentSeries& a) {
    if (a.is_zero()) return LaurentSeries::zero(a.prec() - 1);
    std::vector<Rat> c;
    for (long e = a.lo(); e < a.prec(); ++e) c.push_back(a.coeff(e) * Rat(e));
    return LaurentSeries::from_coeffs(a.lo() - 1, std::move(c), a.prec() - 1);
}

Rat series_residue(const LaurentSeries& a) {
    if (a.prec() <= -1)
        throw WindowTooNarrow("residue needs the coefficient at exponent -1; window ends at " +
                              std::to_string(a.prec()));
    return a.coeff(-1);
}

static void check_coordinate(const LaurentSeries& w) {
    if (w.is_zero() || w.order() != 1 || is_zero(w.coeff(1)))
        throw InvalidCoordinate("coordinate transformation must lie in z*Q[[z]]^x");
}

LaurentSeries series_pow(const LaurentSeries& a, long n) {
    if (n == 0) return LaurentSeries::constant(Rat(1), a.is_zero() ? a.prec() : a.prec() - a.order());
    if (n < 0) {
        LaurentSeries inv = series_div(
            LaurentSeries::constant(Rat(1), a.prec() - (a.is_zero() ? 0 : a.order())), a);
        return series_pow(inv, -n);
    }
    LaurentSeries r = a;
    for (long i = 1; i < n; ++i) r = r * a;
    return r;
}

LaurentSeries series_compose(const LaurentSeries& a, const LaurentSeries& w) {
    check_coordinate(w);
    if (a.is_zero()) return LaurentSeries::zero(a.prec());
    // The unknown tail of w enters the term a_e * w^e at exponent e-1+w.prec(),
    // so only exponents actually carrying a nonzero coefficient constrain the
    // window (e = 0 not at all).
    long target = a.prec();
    for (long e = a.lo(); e < a.prec(); ++e)
        if (e != 0 && !is_zero(a.coeff(e))) target = std::min(target, e - 1 + w.prec());
    LaurentSeries acc = LaurentSeries::zero(target);
    if (a.lo() <= 0 && a.prec() > 0 && !is_zero(a.coeff(0)))
        acc = acc + LaurentSeries::constant(a.coeff(0), target);
    if (a.prec() > 1) {
        LaurentSeries p = LaurentSeries::constant(Rat(1), target + 1);
        for (long e = 1; e < a.prec(); ++e) {
            p = p * w;
            if (e >= a.lo() && !is_zero(a.coeff(e))) acc = acc + p.scaled(a.coeff(e));
        }
    }
    if (a.lo() < 0) {
        LaurentSeries winv = series_div(LaurentSeries::constant(Rat(1), w.prec() - 1), w);
        // the accumulator loses one slot per 1/w factor; start wide enough
        LaurentSeries p = LaurentSeries::constant(Rat(1), target + 1 - a.lo());
        for (long e = -1; e >= a.lo(); --e) {
            p = p * winv;
            const Rat& c = a.coeff(e);
            if (!is_zero(c)) acc = acc + p.scaled(c);
        }
    }
    return acc;
}

LaurentSeries comp_inverse(const LaurentSeries& w) {
    check_coordinate(w);
    long prec = w.prec();
    long n = prec - 1;  // number of coefficients v_1..v_n
    if (n < 1) throw WindowTooNarrow("compositional inverse needs window beyond exponent 1");
    std::vector<Rat> v(size_t(n), Rat(0));
    v[0] = 1 / w.coeff(1);
    for (long m = 2; m <= n; ++m) {
        // deficit of w(v(z)) at z^m with v_m temporarily 0
        LaurentSeries vpart = LaurentSeries::from_coeffs(1, std::vector<Rat>(v.begin(), v.begin() + (m - 1)), m + 1);
        LaurentSeries comp = series_compose(w.truncated(m + 1), vpart);
        Rat deficit = comp.coeff(m);
        v[size_t(m - 1)] = -deficit / w.coeff(1);
    }
    return LaurentSeries::from_coeffs(1, std::move(v), prec);
}

LaurentSeries solve_flow(const LaurentSeries& lambda) {
    if (lambda.is_zero() || lambda.order() != 0 || lambda.lo() != 0)
        throw NotAUnit("solve_flow needs a unit power series");
    long p = lambda.prec();
    // u_{k+1} = c_k/(k+1) with c = lambda(u) recomputed order by order
    std::vector<Rat> u(size_t(p), Rat(0));
    u[0] = lambda.coeff(0);
    for (long k = 1; k < p; ++k) {
        LaurentSeries upart =
            LaurentSeries::from_coeffs(1, std::vector<Rat>(u.begin(), u.begin() + k), k + 1);
        LaurentSeries c = series_compose(lambda.truncated(k + 1), upart);
        u[size_t(k)] = c.coeff(k) / Rat(k + 1);
    }
    return LaurentSeries::from_coeffs(1, std::move(u), p + 1);
}

}  // namespace cybe
