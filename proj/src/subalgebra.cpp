#include "subalgebra.hpp"

#include <algorithm>

namespace cybe {

GSeries Subalgebra::basis_element(int k, int i) const {
    GVec b(size_t(lie->dim()), Rat(0));
    b[size_t(i)] = 1;
    return gs_add(GSeries::monomial(b, -k - 1, tail_prec), tails[size_t(k)][size_t(i)]);
}

void Subalgebra::validate() const {
    if (!lie) throw Error("subalgebra without Lie algebra");
    if (depth < 1) throw Error("subalgebra needs at least one tracked depth");
    if (long(tails.size()) != depth) throw Error("tail map level count mismatch");
    for (const auto& level : tails) {
        if (int(level.size()) != lie->dim()) throw Error("tail map direction count mismatch");
        for (const auto& t : level) {
            if (!t.is_zero() && t.lo < 0) throw Error("tails must be power series");
            if (t.prec < tail_prec) throw Error("tail known short of the declared window");
        }
    }
}

Subalgebra extract_subalgebra(const RMatrix& r, int depth, long tail_prec) {
    r.validate();
    RMatrix rn = r;
    if (!r.normalized()) {
        LaurentSeries inv = series_div(LaurentSeries::constant(Rat(1), r.lambda.prec()), r.lambda);
        rn = rescale(r, inv);
    }
    auto view = expansion(rn, depth, tail_prec, depth);
    int d = r.lie->dim();
    Subalgebra w;
    w.lie = r.lie;
    w.depth = depth;
    w.tail_prec = tail_prec;
    w.tails.assign(size_t(depth), std::vector<GSeries>(size_t(d), GSeries::zero(d, tail_prec)));
    for (int k = 0; k < depth; ++k) {
        for (int i = 0; i < d; ++i) {
            GSeries t = GSeries::zero(d, tail_prec);
            t.lo = 0;
            t.c.assign(size_t(tail_prec), GVec(size_t(d), Rat(0)));
            for (long p = 0; p < tail_prec; ++p) {
                const GTensor2* tp = view.find(p, k);
                if (tp) t.c[size_t(p)] = contract_second_killing(*r.lie, *tp, i);
            }
            t.normalize();
            w.tails[size_t(k)][size_t(i)] = std::move(t);
        }
    }
    return w;
}

RMatrix reconstruct_r(const Subalgebra& w) {
    w.validate();
    int d = w.lie->dim();
    RMatrix r;
    r.lie = w.lie;
    r.lambda = LaurentSeries::constant(Rat(1), w.depth);
    r.r0.xlo = 0;
    r.r0.ylo = 0;
    r.r0.xprec = w.tail_prec;
    r.r0.yprec = w.depth;
    for (int k = 0; k < w.depth; ++k)
        for (int i = 0; i < d; ++i) {
            const GSeries& t = w.tails[size_t(k)][size_t(i)];
            if (t.is_zero()) continue;
            GVec dual = w.lie->dual_basis_vector(i);
            for (long p = t.lo; p < t.lo + long(t.c.size()); ++p)
                r.r0.add(p, k, outer(t.c[size_t(p - t.lo)], dual));
        }
    return r;
}

MembershipResult membership(const Subalgebra& w, const GSeries& v) {
    GSeries res = v;
    if (!res.is_zero() && res.lo < -w.depth)
        throw WindowTooNarrow("membership test needs tracked depth " + std::to_string(-res.lo) +
                              ", have " + std::to_string(w.depth));
    if (!res.is_zero()) {
        for (long p = res.lo; p < 0; ++p) {
            GVec coeff = res.coeff(p);
            int k = int(-p - 1);
            for (int i = 0; i < w.lie->dim(); ++i)
                if (!is_zero(coeff[size_t(i)]))
                    res = gs_sub(res, gs_scale(w.basis_element(k, i), coeff[size_t(i)]));
        }
    }
    MembershipResult m;
    m.residual_window = res.prec;
    m.member = res.is_zero();
    return m;
}

ClosureReport closure_check(const Subalgebra& w, long N) {
    w.validate();
    ClosureReport rep;
    rep.order = N;
    int d = w.lie->dim();
    for (int k = 0; k < w.depth; ++k)
        for (int l = k; l < w.depth; ++l) {
            if (k + l + 2 > w.depth) {
                rep.pairs_unverified += d * d;
                continue;
            }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    GSeries br =
                        gs_bracket(*w.lie, w.basis_element(k, i), w.basis_element(l, j));
                    br.prec = std::min(br.prec, N);
                    br.normalize();
                    auto m = membership(w, br);
                    ++rep.pairs_checked;
                    rep.order = std::min(rep.order, m.residual_window);
                    if (!m.member && rep.closed) {
                        rep.closed = false;
                        rep.witness = "[r(" + std::to_string(k) + "," + std::to_string(i) +
                                      "), r(" + std::to_string(l) + "," + std::to_string(j) +
                                      ")] escapes the tail map";
                    }
                }
        }
    return rep;
}

bool generators_check(const Subalgebra& w, int K, long N, std::string* why) {
    w.validate();
    if (K > w.depth) throw WindowTooNarrow("generators check beyond tracked depth");
    int d = w.lie->dim();
    for (int m = 1; m < K; ++m) {
        // brackets of depth-1 with depth-m elements; their depth-(m+1)
        // principal parts must span, and each bracket must lie in W.
        QMat span(d * d, d);
        int row = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                GSeries br = gs_bracket(*w.lie, w.basis_element(0, i), w.basis_element(m - 1, j));
                br.prec = std::min(br.prec, N);
                br.normalize();
                if (!br.is_zero() && br.lo <= -m - 2)
                    throw Error("unexpected pole depth in generators check");
                if (m + 1 <= w.depth) {
                    auto mem = membership(w, br);
                    if (!mem.member) {
                        if (why)
                            *why = "bracket of (0," + std::to_string(i) + ") and (" +
                                   std::to_string(m - 1) + "," + std::to_string(j) +
                                   ") is not in W";
                        return false;
                    }
                }
                GVec lead = br.coeff(-m - 1);
                for (int t = 0; t < d; ++t) span.at(row, t) = lead[size_t(t)];
                ++row;
            }
        if (span.rank() != d) {
            if (why) *why = "depth " + std::to_string(m + 1) + " principal parts do not span";
            return false;
        }
    }
    return true;
}

OrthogonalityReport orthogonality_check(const RMatrix& r, int depth, long tail_prec) {
    Subalgebra w = extract_subalgebra(r, depth, tail_prec);
    Subalgebra wb = extract_subalgebra(bar(r), depth, tail_prec);
    OrthogonalityReport rep;
    rep.orthogonal = true;
    rep.self_orthogonal = true;
    int d = r.lie->dim();
    for (int k = 0; k < depth; ++k)
        for (int i = 0; i < d; ++i) {
            for (int l = 0; l < depth; ++l)
                for (int j = 0; j < d; ++j) {
                    if (!is_zero(residue_pairing(*r.lie, w.basis_element(k, i),
                                                 wb.basis_element(l, j))))
                        rep.orthogonal = false;
                    ++rep.pairs;
                }
            if (!gs_agree_on_common_window(w.tails[size_t(k)][size_t(i)],
                                           wb.tails[size_t(k)][size_t(i)]))
                rep.self_orthogonal = false;
        }
    return rep;
}

GSeries gs_compose(const GSeries& a, const LaurentSeries& w) {
    int d = a.d;
    if (a.is_zero()) return GSeries::zero(d, a.prec);
    std::vector<LaurentSeries> comp;
    long lo = 0, prec = a.prec;
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> coeffs;
        for (long e = a.lo; e < a.lo + long(a.c.size()); ++e)
            coeffs.push_back(a.c[size_t(e - a.lo)][size_t(i)]);
        LaurentSeries ci = LaurentSeries::from_coeffs(a.lo, std::move(coeffs), a.prec);
        LaurentSeries g = ci.is_zero() ? LaurentSeries::zero(a.prec) : series_compose(ci, w);
        prec = std::min(prec, g.prec());
        lo = std::min(lo, g.is_zero() ? g.prec() : g.lo());
        comp.push_back(std::move(g));
    }
    GSeries r = GSeries::zero(d, prec);
    r.lo = lo;
    r.c.assign(size_t(std::max<long>(prec - lo, 0)), GVec(size_t(d), Rat(0)));
    for (int i = 0; i < d; ++i)
        for (long e = lo; e < prec; ++e)
            if (comp[size_t(i)].known(e)) r.c[size_t(e - lo)][size_t(i)] = comp[size_t(i)].coeff(e);
    r.normalize();
    return r;
}

Subalgebra canonicalize_spanning(LiePtr lie, int depth, long tail_prec,
                                 const std::vector<std::vector<GSeries>>& elements) {
    int d = lie->dim();
    Subalgebra w;
    w.lie = lie;
    w.depth = depth;
    w.tail_prec = tail_prec;
    w.tails.assign(size_t(depth), std::vector<GSeries>(size_t(d), GSeries::zero(d, tail_prec)));
    std::vector<std::vector<GSeries>> canon(static_cast<size_t>(depth));
    for (int k = 0; k < depth; ++k) {
        // invert the leading-coefficient matrix at depth k+1
        QMat lead(d, d);
        for (int i = 0; i < d; ++i) {
            GVec v = elements[size_t(k)][size_t(i)].coeff(-k - 1);
            for (int t = 0; t < d; ++t) lead.at(t, i) = v[size_t(t)];
        }
        auto inv = lead.inverse();
        if (!inv) throw Error("spanning elements at depth " + std::to_string(k + 1) +
                              " have singular leading coefficients");
        for (int i = 0; i < d; ++i) {
            GSeries u = GSeries::zero(d, tail_prec);
            for (int j = 0; j < d; ++j) {
                const Rat& c = inv->at(j, i);
                if (!is_zero(c)) u = gs_add(u, gs_scale(elements[size_t(k)][size_t(j)], c));
            }
            // remove shallower principal parts using already-canonical elements
            for (int m = k - 1; m >= 0; --m) {
                GVec coeff = u.coeff(-m - 1);
                for (int j = 0; j < d; ++j)
                    if (!is_zero(coeff[size_t(j)]))
                        u = gs_sub(u, gs_scale(canon[size_t(m)][size_t(j)], coeff[size_t(j)]));
            }
            canon[size_t(k)].push_back(u);
            GVec b(size_t(d), Rat(0));
            b[size_t(i)] = 1;
            GSeries tail = gs_sub(u, GSeries::monomial(b, -k - 1, u.prec));
            tail.prec = std::min(tail.prec, tail_prec);
            tail.normalize();
            if (!tail.is_zero() && tail.lo < 0)
                throw Error("canonicalization left a negative tail");
            w.tails[size_t(k)][size_t(i)] = std::move(tail);
        }
    }
    w.validate();
    return w;
}

std::pair<Subalgebra, MatSeries> homogeneous_from_A(LiePtr lie, const MatSeries& a, int depth,
                                                    long tail_prec) {
    int d = lie->dim();
    if (!a.at(0).inverse()) throw Error("homogeneous builder needs A(0) invertible");
    if (a.prec < tail_prec + depth)
        throw WindowTooNarrow("homogeneous builder needs A to order " +
                              std::to_string(tail_prec + depth));
    std::vector<std::vector<GSeries>> elements(static_cast<size_t>(depth));
    for (int k = 0; k < depth; ++k)
        for (int i = 0; i < d; ++i) {
            GVec b(size_t(d), Rat(0));
            b[size_t(i)] = 1;
            GSeries e = mat_series_apply(a, GSeries::monomial(b, 0, a.prec));
            e.lo -= k + 1;
            e.prec -= k + 1;
            e.prec = std::min(e.prec, tail_prec);
            e.normalize();
            elements[size_t(k)].push_back(std::move(e));
        }
    Subalgebra w = canonicalize_spanning(lie, depth, tail_prec, elements);
    // Abar from kappa(A a1, Abar a2) = kappa(a1, a2): Abar = (K^-1 A^T K)^-1
    MatSeries conj = MatSeries::zero(d, a.prec);
    for (long m = 0; m < a.prec; ++m)
        conj.at_mut(m) = lie->dual_change() * a.at(m).transpose() * lie->killing();
    MatSeries abar = mat_series_inverse(conj);
    return {std::move(w), std::move(abar)};
}

RMatrix homogeneous_formula(LiePtr lie, const MatSeries& a, const MatSeries& abar, long Nx,
                            long Ny) {
    if (a.prec < Nx + Ny || abar.prec < Ny)
        throw WindowTooNarrow("homogeneous formula needs A to order " + std::to_string(Nx + Ny));
    const GTensor2& gamma = lie->casimir();
    Series2<GTensor2> view;
    view.xlo = -Ny;
    view.xprec = Nx;
    view.ylo = 0;
    view.yprec = Ny;
    for (long k = 0; k < Ny; ++k)
        for (long m = 0; -k - 1 + m < Nx && m < a.prec; ++m) {
            if (a.at(m).is_zero()) continue;
            for (long n = 0; k + n < Ny && n < abar.prec; ++n) {
                if (abar.at(n).is_zero()) continue;
                GTensor2 t = apply_pair(a.at(m), abar.at(n), gamma);
                view.add(-k - 1 + m, k + n, t);
            }
        }
    auto det = detect_standard_form(lie, view);
    if (!det) throw Error("homogeneous formula did not produce a standard form");
    return *det;
}

MatSeries skrypnyk_A(const LieAlgebra& so_n, const std::vector<Rat>& a, long prec) {
    // basis X_ij (i<j); the map is diagonal with eigenvalue alpha_i alpha_j
    int n = int(a.size());
    int d = so_n.dim();
    if (d != n * (n - 1) / 2) throw Error("parameter count does not match so(n)");
    // alpha_i = sum_k binom(1/2, k) (-a_i z)^k
    std::vector<LaurentSeries> alpha;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> c;
        Rat binom(1);  // binom(1/2, k)
        for (long k = 0; k < prec; ++k) {
            c.push_back(binom * [&] {
                Rat p(1);
                for (long t = 0; t < k; ++t) p *= -a[size_t(i)];
                return p;
            }());
            binom *= (rat_of(1, 2) - Rat(k)) / Rat(k + 1);
        }
        alpha.push_back(LaurentSeries::from_coeffs(0, std::move(c), prec));
    }
    MatSeries m = MatSeries::zero(d, prec);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
            LaurentSeries eig = alpha[size_t(i)] * alpha[size_t(j)];
            for (long k = 0; k < prec; ++k) m.at_mut(k).at(idx, idx) = eig.coeff(k);
        }
    return m;
}

Subalgebra transport_subalgebra(const Subalgebra& w, const MatSeries& phi,
                                const LaurentSeries& wcoord, int depth, long tail_prec) {
    if (depth > w.depth) throw WindowTooNarrow("transport beyond tracked depth");
    std::vector<std::vector<GSeries>> elements(static_cast<size_t>(depth));
    for (int k = 0; k < depth; ++k)
        for (int i = 0; i < w.lie->dim(); ++i) {
            GSeries img = mat_series_apply(phi, gs_compose(w.basis_element(k, i), wcoord));
            elements[size_t(k)].push_back(std::move(img));
        }
    return canonicalize_spanning(w.lie, depth, tail_prec, elements);
}

Series2<GTensor2> cobracket(const RMatrix& r, const GSeries& a, int depth, long tail_prec) {
    auto e = expansion(r, depth, tail_prec, depth);
    Series2<GTensor2> d1, d2;
    long alo = a.is_zero() ? a.prec : a.lo;
    // [a(x) (x) 1, E]
    d1.xlo = alo + e.xlo;
    d1.xprec = std::min(alo + e.xprec, e.xlo + a.prec);
    d1.ylo = e.ylo;
    d1.yprec = e.yprec;
    // [1 (x) a(y), E]
    d2.xlo = e.xlo;
    d2.xprec = e.xprec;
    d2.ylo = alo + e.ylo;
    d2.yprec = std::min(alo + e.yprec, e.ylo + a.prec);
    if (!a.is_zero()) {
        for (const auto& [key, t] : e.c)
            for (long p = a.lo; p < a.lo + long(a.c.size()); ++p) {
                const GVec& av = a.c[size_t(p - a.lo)];
                GTensor2 t1 = bracket_leg1(*r.lie, av, t);
                if (d1.in_window(key.first + p, key.second)) d1.add(key.first + p, key.second, t1);
                GTensor2 t2 = bracket_leg2(*r.lie, av, t);
                if (d2.in_window(key.first, key.second + p)) d2.add(key.first, key.second + p, t2);
            }
    }
    return series2_add(d1, d2);
}

namespace {

// subtract sum_{k,i} r_{k,i}(x) (x) S_{k,i}(y) from delta and test the result
// being zero; the S columns are read off the principal x-slots.
struct WWDecomposition {
    bool inside = true;
    std::vector<std::vector<GSeries>> columns;  // [k][i] -> S_{k,i}(y)
};

WWDecomposition ww_membership(const Subalgebra& w, const Series2<GTensor2>& delta) {
    int d = w.lie->dim();
    WWDecomposition dec;
    dec.columns.assign(size_t(w.depth), {});
    Series2<GTensor2> res = delta;
    res.xlo = std::max<long>(delta.xlo, -w.depth);  // reducible part of the window
    for (int k = 0; k < w.depth; ++k) {
        long p = -k - 1;
        for (int i = 0; i < d; ++i) {
            // S_{k,i}(y): first-leg coordinate i of the x^{-k-1} column
            GSeries s = GSeries::zero(d, delta.yprec);
            s.lo = delta.ylo;
            s.c.assign(size_t(std::max<long>(delta.yprec - delta.ylo, 0)),
                       GVec(size_t(d), Rat(0)));
            for (long q = delta.ylo; q < delta.yprec; ++q) {
                const GTensor2* t = delta.find(p, q);
                if (t) s.c[size_t(q - delta.ylo)] = first_leg_coordinate(*t, i);
            }
            s.normalize();
            dec.columns[size_t(k)].push_back(s);
            if (s.is_zero()) continue;
            const GSeries be = w.basis_element(k, i);
            for (long px = be.lo; px < be.lo + long(be.c.size()); ++px)
                for (long q = s.lo; q < s.lo + long(s.c.size()); ++q) {
                    if (px >= res.xprec || q >= res.yprec) continue;
                    if (px < res.xlo || q < res.ylo) continue;
                    res.add(px, q,
                            outer(be.c[size_t(px - be.lo)], s.c[size_t(q - s.lo)]).scaled(Rat(-1)));
                }
        }
    }
    res.prune();
    for (const auto& [key, t] : res.c)
        if (key.first >= res.xlo && !t.is_zero()) dec.inside = false;
    return dec;
}

// [v(x) (x) 1 + 1 (x) v(y), D] for a doubly Laurent D
Series2<GTensor2> diagonal_action(const LieAlgebra& L, const GSeries& v,
                                  const Series2<GTensor2>& D) {
    Series2<GTensor2> d1, d2;
    long vlo = v.is_zero() ? v.prec : v.lo;
    d1.xlo = vlo + D.xlo;
    d1.xprec = std::min(vlo + D.xprec, D.xlo + v.prec);
    d1.ylo = D.ylo;
    d1.yprec = D.yprec;
    d2.xlo = D.xlo;
    d2.xprec = D.xprec;
    d2.ylo = vlo + D.ylo;
    d2.yprec = std::min(vlo + D.yprec, D.ylo + v.prec);
    if (!v.is_zero()) {
        for (const auto& [key, t] : D.c)
            for (long p = v.lo; p < v.lo + long(v.c.size()); ++p) {
                const GVec& av = v.c[size_t(p - v.lo)];
                GTensor2 t1 = bracket_leg1(L, av, t);
                if (d1.in_window(key.first + p, key.second)) d1.add(key.first + p, key.second, t1);
                GTensor2 t2 = bracket_leg2(L, av, t);
                if (d2.in_window(key.first, key.second + p)) d2.add(key.first, key.second + p, t2);
            }
    }
    return series2_add(d1, d2);
}

bool series2_equal_on_common(const Series2<GTensor2>& a, const Series2<GTensor2>& b) {
    long xlo = std::max(a.xlo, b.xlo), xp = std::min(a.xprec, b.xprec);
    long ylo = std::max(a.ylo, b.ylo), yp = std::min(a.yprec, b.yprec);
    for (const auto& [key, t] : a.c) {
        if (key.first < xlo || key.first >= xp || key.second < ylo || key.second >= yp) continue;
        const GTensor2* u = b.find(key.first, key.second);
        if (!u ? !t.is_zero() : !(*u - t).is_zero()) return false;
    }
    for (const auto& [key, t] : b.c) {
        if (key.first < xlo || key.first >= xp || key.second < ylo || key.second >= yp) continue;
        if (!a.find(key.first, key.second) && !t.is_zero()) return false;
    }
    return true;
}

}  // namespace

CobracketReport cobracket_checks(const RMatrix& r, long N) {
    if (!r.normalized()) throw NotSkew("cobracket needs a normalized formal r-matrix");
    auto ver = is_rmatrix(r, std::min<long>(N, 3));
    if (!ver.ok) throw NotSkew("cobracket needs cyb(r) = 0; first obstruction found");
    if (!is_skew(r)) throw NotSkew("carrier is not skew-symmetric");

    int depth = int(N);
    long tail = N;
    Subalgebra w = extract_subalgebra(r, depth, tail);
    int d = r.lie->dim();
    CobracketReport rep;
    rep.order = N;
    rep.membership_ok = true;
    rep.cocycle_ok = true;
    rep.dual_bracket_ok = true;

    // (i) image lies in W (x) W, columnwise
    for (int k = 0; k <= std::min(1, depth - 1); ++k)
        for (int i = 0; i < d; ++i) {
            auto delta = cobracket(r, w.basis_element(k, i), depth, tail);
            auto dec = ww_membership(w, delta);
            if (!dec.inside) rep.membership_ok = false;
            for (int kk = 0; kk < w.depth && rep.membership_ok; ++kk)
                for (int ii = 0; ii < d; ++ii) {
                    const GSeries& col = dec.columns[size_t(kk)][size_t(ii)];
                    if (col.is_zero()) continue;
                    if (!col.c.empty() && col.lo < -w.depth) continue;  // beyond window
                    if (!membership(w, col).member) {
                        rep.membership_ok = false;
                        rep.detail = "column (" + std::to_string(kk) + "," + std::to_string(ii) +
                                     ") of delta(r(" + std::to_string(k) + "," +
                                     std::to_string(i) + ")) not in W";
                        break;
                    }
                }
        }

    // (ii) 1-cocycle identity on depth-0 pairs
    for (int i = 0; i < d && rep.cocycle_ok; ++i)
        for (int j = i + 1; j < d && rep.cocycle_ok; ++j) {
            GSeries wa = w.basis_element(0, i), wb = w.basis_element(0, j);
            GSeries br = gs_bracket(*r.lie, wa, wb);
            auto lhs = cobracket(r, br, depth, tail);
            auto da = cobracket(r, wa, depth, tail);
            auto db = cobracket(r, wb, depth, tail);
            auto rhs = series2_add(diagonal_action(*r.lie, wa, db),
                                   diagonal_action(*r.lie, wb, da), Rat(-1));
            if (!series2_equal_on_common(lhs, rhs)) {
                rep.cocycle_ok = false;
                rep.detail = "cocycle identity fails for pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
            }
        }

    // (iii) dual-bracket identity
    for (int m = 0; m <= std::min(1, depth - 1) && rep.dual_bracket_ok; ++m)
        for (int n = 0; n < d && rep.dual_bracket_ok; ++n) {
            auto delta = cobracket(r, w.basis_element(m, n), depth, tail);
            GVec bn(size_t(d), Rat(0));
            bn[size_t(n)] = 1;
            for (int k = 0; k + 1 < depth; ++k)
                for (int l = 0; l + 1 < depth; ++l) {
                    if (-k - 1 < delta.xlo || -l - 1 < delta.ylo) continue;
                    const GTensor2* t = delta.find(-k - 1, -l - 1);
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j) {
                            Rat lhs = t ? contract_both_killing(*r.lie, *t, i, j) : Rat(0);
                            Rat rhs(0);
                            if (k + l == m) {
                                GVec bi(size_t(d), Rat(0)), bj(size_t(d), Rat(0));
                                bi[size_t(i)] = 1;
                                bj[size_t(j)] = 1;
                                rhs = r.lie->killing_form(bn, r.lie->bracket(bi, bj));
                            }
                            if (lhs != rhs) {
                                rep.dual_bracket_ok = false;
                                rep.detail = "dual bracket mismatch at k=" + std::to_string(k) +
                                             " l=" + std::to_string(l);
                            }
                        }
                }
        }
    return rep;
}

}  // namespace cybe
