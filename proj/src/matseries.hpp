#pragma once

#include <vector>

#include "linalg.hpp"
#include "series.hpp"

namespace cybe {

// Matrix-valued power series in z, coefficients for exponents 0..prec-1.
struct MatSeries {
    long prec = 0;
    std::vector<QMat> m;  // may be shorter than prec; missing = zero

    static MatSeries zero(int dim, long prec) {
        MatSeries s;
        s.prec = prec;
        s.m.assign(size_t(std::max<long>(prec, 0)), QMat(dim, dim));
        return s;
    }
    static MatSeries constant(const QMat& c, long prec) {
        MatSeries s = zero(c.rows(), prec);
        if (prec > 0) s.m[0] = c;
        return s;
    }
    int dim() const { return m.empty() ? 0 : m[0].rows(); }
    const QMat& at(long k) const {
        if (k >= prec) throw WindowTooNarrow("matrix series coefficient beyond window");
        return m[size_t(k)];
    }
    QMat& at_mut(long k) { return m[size_t(k)]; }
    MatSeries truncated(long p) const {
        MatSeries s = *this;
        if (p < s.prec) {
            s.prec = p;
            if (long(s.m.size()) > p) s.m.resize(size_t(std::max<long>(p, 0)), QMat(dim(), dim()));
        }
        return s;
    }
};

inline MatSeries operator+(const MatSeries& a, const MatSeries& b) {
    MatSeries r = MatSeries::zero(a.dim(), std::min(a.prec, b.prec));
    for (long k = 0; k < r.prec; ++k) r.m[size_t(k)] = a.at(k) + b.at(k);
    return r;
}

inline MatSeries operator*(const MatSeries& a, const MatSeries& b) {
    MatSeries r = MatSeries::zero(a.dim(), std::min(a.prec, b.prec));
    for (long i = 0; i < std::min<long>(a.prec, r.prec); ++i) {
        if (a.at(i).is_zero()) continue;
        for (long j = 0; i + j < r.prec && j < b.prec; ++j) {
            if (b.at(j).is_zero()) continue;
            r.m[size_t(i + j)] += a.at(i) * b.at(j);
        }
    }
    return r;
}

inline bool operator==(const MatSeries& a, const MatSeries& b) {
    if (a.prec != b.prec) return false;
    for (long k = 0; k < a.prec; ++k)
        if (!(a.at(k) == b.at(k))) return false;
    return true;
}

// phi(0) must be invertible.
inline MatSeries mat_series_inverse(const MatSeries& a) {
    auto inv0 = a.at(0).inverse();
    if (!inv0) throw Error("matrix series not invertible at z = 0");
    MatSeries r = MatSeries::zero(a.dim(), a.prec);
    r.m[0] = *inv0;
    for (long k = 1; k < a.prec; ++k) {
        QMat acc(a.dim(), a.dim());
        for (long j = 1; j <= k; ++j) acc += a.at(j) * r.at(k - j);
        r.m[size_t(k)] = (*inv0 * acc).scaled(Rat(-1));
    }
    return r;
}

// unique psi with psi' = M psi and psi(0) = P0, by coefficient recursion.
inline MatSeries solve_linear_ode(const MatSeries& M, const QMat& P0) {
    MatSeries psi = MatSeries::zero(P0.rows(), M.prec + 1);
    psi.m[0] = P0;
    for (long k = 0; k < M.prec; ++k) {
        QMat acc(P0.rows(), P0.cols());
        for (long m = 0; m <= k; ++m) acc += M.at(m) * psi.at(k - m);
        psi.m[size_t(k + 1)] = acc.scaled(Rat(1) / Rat(k + 1));
    }
    return psi;
}

inline MatSeries mat_series_derive(const MatSeries& a) {
    MatSeries r = MatSeries::zero(a.dim(), a.prec - 1);
    for (long k = 1; k < a.prec; ++k) r.m[size_t(k - 1)] = a.at(k).scaled(Rat(k));
    return r;
}

// phi(w(z)) for a coordinate transformation w.
inline MatSeries mat_series_compose(const MatSeries& a, const LaurentSeries& w) {
    long target = a.prec;
    for (long k = 1; k < a.prec; ++k)
        if (!a.at(k).is_zero()) target = std::min(target, k - 1 + w.prec());
    MatSeries r = MatSeries::zero(a.dim(), target);
    if (target > 0 && a.prec > 0) r.m[0] = a.at(0);
    LaurentSeries p = LaurentSeries::constant(Rat(1), target + 1);
    for (long k = 1; k < a.prec; ++k) {
        p = p * w;
        if (a.at(k).is_zero()) continue;
        for (long e = p.lo(); e < std::min(p.prec(), target); ++e) {
            const Rat& c = p.coeff(e);
            if (!is_zero(c)) r.m[size_t(e)] += a.at(k).scaled(c);
        }
    }
    return r;
}

}  // namespace cybe
