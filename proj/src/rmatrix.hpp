#pragma once

#include <array>
#include <optional>

#include "lie.hpp"

namespace cybe {

// Carrier for a series in (g (x) g)((x))[[y]] kept in standard form
//   r(x,y) = lambda(y) * gamma/(x-y) + r0(x,y),
// with 1/(x-y) always read as sum_k x^{-k-1} y^k.  lambda is a unit power
// series; r0 is a power series in (x,y) on an explicit box window.
struct RMatrix {
    LiePtr lie;
    LaurentSeries lambda;
    Series2<GTensor2> r0;

    bool normalized() const;
    void validate() const;  // lambda unit, windows sane
};

RMatrix yang(LiePtr L, long Nx, long Ny);
// scale by a unit power series mu(y)
RMatrix rescale(const RMatrix& r, const LaurentSeries& mu);

// Expansion of the carrier as a (g (x) g)-valued series on the box
// [-Kx, Nx) x [0, Ny); throws WindowTooNarrow when the carrier data cannot
// support the request.
Series2<GTensor2> expansion(const RMatrix& r, long Kx, long Nx, long Ny);
// Largest symmetric box the data supports (helper for order-driven callers).
long max_symmetric_order(const RMatrix& r);

// (lambda(x)-lambda(y))/(x-y) on the box (xp, yp); entry (i,j) is
// lambda_{i+j+1}.  A constant lambda gives an exact zero on any box.
Series2<GTensor2> divided_difference_tensor(const LaurentSeries& lambda, const GTensor2& payload,
                                            long xp, long yp);

// Standard-form detection: fit lambda(y) from the x^{-1} column by Casimir
// projection, subtract, and demand that the remainder is a power series.
std::optional<RMatrix> detect_standard_form(LiePtr L, const Series2<GTensor2>& view);

// bar(r)(x,y) = lambda(x) gamma/(x-y) - tau(r0(y,x)), re-expressed in
// standard form (same lambda, transformed r0).
RMatrix bar(const RMatrix& r);
// skew <=> bar(r) = r on the common window; throws WindowTooNarrow when the
// comparable window is empty.
bool is_skew(const RMatrix& r);

// ---- triple tensor assembly ----

struct Tensor3Sparse {
    std::map<int, Rat> v;  // flattened (i*d+j)*d+k
    bool is_zero() const { return v.empty(); }
};

// The certified region of an assembled triple series is not a box: the
// x-support of an expansion view at y-column q is -q-1, so truncating pole
// depth at Kx cuts knowledge in a column-dependent way.  The exact
// per-slot predicate below combines the constraints of the three bracket
// terms (derived from the mixed contraction rules and the mul window rule).
struct TripleSeries {
    int d = 0;
    long Kx = 0, Nx = 0, Ny = 0;     // window of the r view
    long KxB = 0, NxB = 0, NyB = 0;  // window of the second-factor view in term 3
    std::map<std::array<long, 3>, Tensor3Sparse> c;

    bool certified(long e1, long e2, long e3) const {
        // [r12, r13]
        if (!(e2 < Kx && e3 < Kx && e1 + e2 + 2 <= Nx && e1 + e3 + 2 <= Nx && e2 < Ny &&
              e3 < Ny))
            return false;
        // [r12, r23]
        if (!(e1 >= -Kx && e1 < Nx && e2 < Nx && e2 + e3 + 2 <= Ny && e3 < Kx && e3 < Ny))
            return false;
        // [r13, (bar) r23]
        if (!(e1 >= -Kx && e1 < Nx && e2 >= -KxB && e2 < NxB && e3 < Ny && e3 < NyB))
            return false;
        return true;
    }
    // largest N with the cube [0,N)^3 certified
    long certified_cube_order() const {
        long n = 0;
        while (certified(n, n, n)) ++n;
        return n;
    }
    bool zero_on_window() const { return c.empty(); }
};

struct Witness {
    std::array<long, 3> exponents{0, 0, 0};
    std::array<int, 3> tensor_index{0, 0, 0};
    Rat value;
};

// GCYB(r) = [r12,r13] + [r12,r23] + [r13, bar(r)23] assembled from expansion
// views on the box [-Kx,Nx) x [0,Ny); CYB uses [r13,r23] as the third term.
TripleSeries gcyb(const RMatrix& r, long Kx, long Nx, long Ny);
TripleSeries cyb(const RMatrix& r, long Kx, long Nx, long Ny);

std::optional<Witness> first_nonzero(const TripleSeries& t);
// true iff all certified negative-exponent coefficients vanish
bool negatives_vanish(const TripleSeries& t);

struct VerifyReport {
    bool ok = false;
    bool negatives_ok = false;
    long order = 0;       // cube [0, order)^3 fully certified
    long cube_order = 0;  // as derived from the windows actually used
    std::optional<Witness> witness;
};

// Certify the equation holds on the cube [0,N)^3 (plus every computable
// negative slot).  Window requirements are derived from N; WindowTooNarrow
// reports the per-variable deficit.
VerifyReport is_generalized_rmatrix(const RMatrix& r, long N);
VerifyReport is_rmatrix(const RMatrix& r, long N);

}  // namespace cybe
