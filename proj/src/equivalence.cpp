#include "equivalence.hpp"

#include <algorithm>

namespace cybe {

void validate_equivalence(const LieAlgebra& lie, const Equivalence& e) {
    if (e.mu.is_zero() || e.mu.order() != 0)
        throw InvalidEquivalence("rescaling must be a unit power series");
    if (e.w.is_zero() || e.w.order() != 1 || is_zero(e.w.coeff(1)))
        throw InvalidEquivalence("coordinate transformation must lie in z Q[[z]]^x");
    if (e.phi.prec < 1 || e.phi.dim() != lie.dim())
        throw InvalidEquivalence("gauge series missing or of wrong dimension");
    if (!is_automorphism_series(lie, e.phi, e.phi.prec))
        throw InvalidEquivalence("gauge series is not an automorphism modulo its window");
}

Equivalence identity_equivalence(int dim, long prec) {
    Equivalence e;
    e.mu = LaurentSeries::constant(Rat(1), prec);
    e.w = LaurentSeries::monomial(Rat(1), 1, prec);
    e.phi = MatSeries::constant(QMat::identity(dim), prec);
    return e;
}

Equivalence compose_equivalences(const Equivalence& e1, const Equivalence& e2) {
    Equivalence e;
    e.mu = e2.mu * series_compose(e1.mu, e2.w);
    e.w = series_compose(e1.w, e2.w);
    e.phi = e2.phi * mat_series_compose(e1.phi, e2.w);
    return e;
}

RMatrix apply_equivalence(const RMatrix& r, const Equivalence& e) {
    r.validate();
    validate_equivalence(*r.lie, e);
    const GTensor2& gamma = r.lie->casimir();

    // substituted regular part r0(w(x), w(y))
    Series2<GTensor2> reg = series2_compose(r.r0, e.w, e.w);

    // substituted Yang part: sum_k w(x)^{-k-1} (x) lambda(w(y)) w(y)^k gamma
    LaurentSeries lamw = series_compose(r.lambda, e.w);
    LaurentSeries winv =
        series_div(LaurentSeries::constant(Rat(1), e.w.prec() - 1), e.w);
    long ytarget = std::min(reg.yprec, lamw.prec());
    bool phi_trivial = [&] {
        if (!e.phi.at(0).is_identity()) return false;
        for (long m = 1; m < e.phi.prec; ++m)
            if (!e.phi.at(m).is_zero()) return false;
        return true;
    }();
    // Each extra pole column multiplies by 1/w once and costs one order of x
    // precision; a nontrivial gauge of window P certifies positives only up
    // to P - depth.  Balance depth against the surviving positive width.
    long kcap = 1;
    {
        LaurentSeries probe = winv;
        long chain = probe.prec();
        auto xwidth = [&](long k, long ch) {
            long v = std::min(reg.xprec, ch);
            if (!phi_trivial) v = std::min(v, e.phi.prec - k);
            return v;
        };
        long best = std::min<long>(1, xwidth(1, chain));
        for (long k = 2; k <= ytarget; ++k) {
            probe = probe * winv;
            chain = std::min(chain, probe.prec());
            long score = std::min<long>(k, xwidth(k, chain));
            if (score >= best) {
                best = score;
                kcap = k;
            }
            if (chain <= -k) break;
        }
        kcap = std::max<long>(kcap, 1);
    }
    Series2<GTensor2> yangpart;
    yangpart.ylo = 0;
    // pole depth k feeds y-order k: truncating the pole sum at kcap leaves
    // every column with q >= kcap incomplete
    yangpart.yprec = std::min(ytarget, kcap);
    yangpart.xlo = -kcap;
    yangpart.xprec = reg.xprec;
    {
        LaurentSeries xneg = winv;                                  // w(x)^{-k-1}
        LaurentSeries ycol = lamw;                                  // lambda(w) w^k
        for (long k = 0; k < kcap; ++k) {
            yangpart.xprec = std::min(yangpart.xprec, xneg.prec());
            yangpart.yprec = std::min(yangpart.yprec, ycol.prec());
            for (long p = xneg.lo(); p < std::min(xneg.prec(), xneg.coeff_end()); ++p) {
                const Rat& cx = xneg.coeff(p);
                if (is_zero(cx)) continue;
                for (long q = ycol.lo(); q < std::min(ycol.prec(), ycol.coeff_end()); ++q) {
                    const Rat& cy = ycol.coeff(q);
                    if (!is_zero(cy) && yangpart.in_window(p, q))
                        yangpart.add(p, q, gamma.scaled(cx * cy));
                }
            }
            if (k + 1 < kcap) {
                xneg = xneg * winv;
                ycol = ycol * e.w;
            }
        }
        yangpart.prune();
    }

    Series2<GTensor2> view = series2_add(yangpart, reg);
    // gauge (phi(x) (x) phi(y))
    if (!(e.phi.prec >= 1 && e.phi.at(0).is_identity() &&
          [&] {
              for (long m = 1; m < e.phi.prec; ++m)
                  if (!e.phi.at(m).is_zero()) return false;
              return true;
          }())) {
        Series2<GTensor2> gauged;
        gauged.xlo = view.xlo;
        gauged.ylo = view.ylo;
        gauged.xprec = std::min(view.xprec, view.xlo + e.phi.prec);
        gauged.yprec = std::min(view.yprec, view.ylo + e.phi.prec);
        for (const auto& [key, t] : view.c)
            for (long m = 0; m < e.phi.prec; ++m) {
                if (e.phi.at(m).is_zero()) continue;
                for (long n = 0; n < e.phi.prec; ++n) {
                    if (e.phi.at(n).is_zero()) continue;
                    long p = key.first + m, q = key.second + n;
                    if (gauged.in_window(p, q))
                        gauged.add(p, q, apply_pair(e.phi.at(m), e.phi.at(n), t));
                }
            }
        view = std::move(gauged);
    }
    // rescaling mu(y)
    view = series2_mul_scalar(view, e.mu, 1);

    auto det = detect_standard_form(r.lie, view);
    if (!det) throw InvalidEquivalence("transformed series failed standard-form detection");
    // two-route lambda check: mu(y) lambda(w(y)) / w'(y)
    LaurentSeries expect = series_div(e.mu * lamw, series_derive(e.w));
    if (!agree_on_common_window(det->lambda, expect))
        throw Error("internal: transformed lambda disagrees with the closed formula");
    return *det;
}

std::pair<RMatrix, Equivalence> normalize(const RMatrix& r) {
    r.validate();
    LaurentSeries u = solve_flow(r.lambda);
    Equivalence e = identity_equivalence(r.lie->dim(), 2 * r.lambda.prec() + 4);
    e.w = u;
    RMatrix rn = apply_equivalence(r, e);
    if (!rn.normalized()) throw Error("internal: normalization did not reach lambda = 1");
    return {std::move(rn), std::move(e)};
}

Series2<GTensor2> difference_expand(const GT2Series& s, long Nx, long Ny) {
    if (s.lo < -1) throw Error("difference form must have pole order 1");
    if (Nx + Ny > s.prec + 1)
        throw WindowTooNarrow("difference expansion box needs s beyond order " +
                              std::to_string(Nx + Ny - 2));
    Series2<GTensor2> e;
    e.xlo = -Ny;
    e.xprec = Nx;
    e.ylo = 0;
    e.yprec = Ny;
    const GTensor2* pole = s.find(-1);
    if (pole && !pole->is_zero())
        for (long k = 0; k < Ny; ++k) e.add(-k - 1, k, *pole);
    for (long m = std::max<long>(s.lo, 0); m < s.lo + long(s.c.size()); ++m) {
        const GTensor2& cm = s.c[size_t(m - s.lo)];
        if (cm.is_zero()) continue;
        // (x-y)^m = sum_j C(m,j) x^{m-j} (-y)^j
        Rat binom(1);
        for (long j = 0; j <= m; ++j) {
            if (j > 0) binom = binom * Rat(m - j + 1) / Rat(j);
            Rat c = (j % 2 == 0) ? binom : -binom;
            if (e.in_window(m - j, j)) e.add(m - j, j, cm.scaled(c));
        }
    }
    return e;
}

bool derivative_closure(const Subalgebra& w) {
    for (int k = 0; k + 1 < w.depth; ++k)
        for (int i = 0; i < w.lie->dim(); ++i)
            if (!membership(w, gs_derive(w.basis_element(k, i))).member) return false;
    return true;
}

DifferenceForm difference_normalize(const RMatrix& r, long N) {
    r.validate();
    if (!r.normalized()) throw Error("difference normalization expects a normalized carrier");
    long gate = std::min<long>(N, 4);
    auto ver = is_rmatrix(r, gate);
    if (!ver.ok) throw NotSkew("difference normalization needs cyb(r) = 0");

    // h(x,y): bracket image of r - r_Yang = r0
    int d = r.lie->dim();
    long hdprec = std::min(r.r0.xprec, r.r0.yprec);
    GSeries hd = GSeries::zero(d, hdprec);
    hd.lo = 0;
    hd.c.assign(size_t(std::max<long>(hdprec, 0)), GVec(size_t(d), Rat(0)));
    for (const auto& [key, t] : r.r0.c) {
        long m = key.first + key.second;
        if (m >= hdprec) continue;
        GVec br = bracket_contract(*r.lie, t);
        for (int i = 0; i < d; ++i) hd.c[size_t(m)][size_t(i)] += br[size_t(i)];
    }
    hd.normalize();

    MatSeries M = MatSeries::zero(d, hdprec);
    if (!hd.is_zero())
        for (long m = hd.lo; m < hd.lo + long(hd.c.size()); ++m)
            M.at_mut(m) = r.lie->ad_vec(hd.c[size_t(m - hd.lo)]);
    MatSeries psi = solve_linear_ode(M, QMat::identity(d));
    if (!is_automorphism_series(*r.lie, psi, psi.prec))
        throw Error("internal: ODE solution is not an automorphism series");
    MatSeries phi = mat_series_inverse(psi);

    Equivalence gauge = identity_equivalence(d, 2 * std::max(r.r0.xprec, r.r0.yprec) + 4);
    gauge.phi = phi;
    RMatrix twisted = apply_equivalence(r, gauge);
    if (!twisted.normalized()) throw Error("internal: gauge twist broke normalization");

    DifferenceForm out;
    out.phi = phi;
    out.twisted = twisted;
    out.s.lo = -1;
    out.s.prec = twisted.r0.xprec;
    out.s.c.assign(size_t(out.s.prec + 1), GTensor2(d));
    out.s.c[0] = r.lie->casimir();
    for (long m = 0; m < twisted.r0.xprec; ++m) {
        const GTensor2* t = twisted.r0.find(m, 0);
        if (t) out.s.c[size_t(m + 1)] = *t;
    }

    // re-verify r~(x,y) = s(x-y) coefficientwise
    long ny = std::min<long>({twisted.r0.yprec, (out.s.prec + 1) / 2, N});
    long nx = std::min<long>({twisted.r0.xprec, out.s.prec + 1 - ny, N});
    auto expanded = difference_expand(out.s, nx, ny);
    for (const auto& [key, t] : twisted.r0.c) {
        if (key.first < 0 || key.first >= nx || key.second < 0 || key.second >= ny) continue;
        const GTensor2* u = expanded.find(key.first, key.second);
        if (!u ? !t.is_zero() : !(*u - t).is_zero())
            throw Error("difference dependence failed at (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ")");
    }
    for (const auto& [key, t] : expanded.c) {
        if (key.first < 0 || key.first >= nx || key.second < 0 || key.second >= ny) continue;
        if (!twisted.r0.find(key.first, key.second) && !t.is_zero())
            throw Error("difference dependence failed at (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ")");
    }
    return out;
}

}  // namespace cybe
