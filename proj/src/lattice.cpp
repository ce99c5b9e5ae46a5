#include "lattice.hpp"

#include <algorithm>
#include <set>

namespace cybe {

std::vector<long> MultiplierLattice::orders() const {
    std::vector<long> o;
    for (const auto& b : basis)
        if (!b.is_zero()) o.push_back(-b.order());
    std::sort(o.begin(), o.end());
    return o;
}

const LaurentSeries* MultiplierLattice::element_of_order(long k) const {
    for (const auto& b : basis)
        if (!b.is_zero() && -b.order() == k) return &b;
    return nullptr;
}

MultiplierLattice echelonize(std::vector<LaurentSeries> elements, long max_order) {
    std::map<long, LaurentSeries> by_order;  // pole order -> element
    auto insert = [&](LaurentSeries v) {
        while (!v.is_zero()) {
            long k = -v.order();
            if (k > max_order) throw Error("element deeper than the examined order bound");
            auto it = by_order.find(k);
            if (it == by_order.end()) {
                by_order.emplace(k, v.scaled(1 / v.coeff(v.order())));
                return;
            }
            v = v - it->second.scaled(v.coeff(v.order()));
        }
    };
    for (auto& e : elements) insert(std::move(e));
    // second pass: clear every occupied order from every element
    MultiplierLattice o;
    o.max_order = max_order;
    for (auto it = by_order.rbegin(); it != by_order.rend(); ++it) {
        LaurentSeries v = it->second;
        for (const auto& [k2, w] : by_order) {
            if (k2 >= it->first) continue;
            if (!v.known(-k2)) break;
            const Rat& c = v.coeff(-k2);
            if (!is_zero(c)) v = v - w.scaled(c);
        }
        o.basis.push_back(std::move(v));
    }
    std::reverse(o.basis.begin(), o.basis.end());
    return o;
}

MultiplierLattice lattice_from_generators(const std::vector<LaurentSeries>& gens, long max_order) {
    long prec = 0;
    for (const auto& g : gens) prec = std::max(prec, g.prec());
    // saturate: keep multiplying the current span by the generators until no
    // product contributes anything new within the order bound
    std::vector<LaurentSeries> elems;
    elems.push_back(LaurentSeries::constant(Rat(1), prec));
    for (const auto& g : gens)
        if (!g.is_zero() && -g.order() <= max_order) elems.push_back(g);
    for (bool grew = true; grew;) {
        grew = false;
        MultiplierLattice current = echelonize(elems, max_order);
        auto before = current.orders();
        for (const auto& e : current.basis)
            for (const auto& g : gens) {
                LaurentSeries p = e * g;
                if (p.is_zero() || -p.order() > max_order) continue;
                elems.push_back(p);
            }
        auto after = echelonize(elems, max_order).orders();
        grew = after != before;
    }
    return echelonize(std::move(elems), max_order);
}

LaurentSeries lattice_reduce(const MultiplierLattice& o, const LaurentSeries& v) {
    LaurentSeries r = v;
    while (!r.is_zero() && r.order() <= 0) {
        const LaurentSeries* e = o.element_of_order(-r.order());
        if (!e) return r;
        r = r - e->scaled(r.coeff(r.order()));
    }
    return r;
}

bool closure_certified(const MultiplierLattice& o, std::string* why) {
    for (size_t i = 0; i < o.basis.size(); ++i)
        for (size_t j = i; j < o.basis.size(); ++j) {
            LaurentSeries p = o.basis[i] * o.basis[j];
            if (!p.is_zero() && -p.order() > o.max_order) continue;  // beyond examined bound
            LaurentSeries rem = lattice_reduce(o, p);
            if (!rem.is_zero()) {
                if (why)
                    *why = "product of basis orders " + std::to_string(-o.basis[i].order()) +
                           " and " + std::to_string(-o.basis[j].order()) +
                           " escapes the lattice";
                return false;
            }
        }
    return true;
}

LatticeIndex lattice_index(const MultiplierLattice& o) {
    LatticeIndex idx;
    std::set<long> present;
    for (const auto& b : o.basis) {
        if (b.is_zero()) continue;
        if (-b.order() <= 0)
            ++idx.h0;
        else
            present.insert(-b.order());
    }
    for (long k = 1; k <= o.max_order; ++k)
        if (!present.count(k)) idx.gaps.push_back(k);
    idx.h1 = long(idx.gaps.size());
    // conclusive when the numerical semigroup generated by the found orders
    // has conductor inside the examined window and predicts exactly what the
    // solver found
    std::set<long> semi{0};
    for (long bound = 2 * o.max_order + 2; true;) {
        bool grew = false;
        for (long s : std::set<long>(semi))
            for (long g : present) {
                long t = s + g;
                if (t <= bound && !semi.count(t)) {
                    semi.insert(t);
                    grew = true;
                }
            }
        if (!grew) break;
    }
    long conductor = 0;
    for (long k = 1; k <= 2 * o.max_order + 1; ++k)
        if (!semi.count(k)) conductor = k + 1;
    bool matches = true;
    for (long k = 1; k <= o.max_order; ++k)
        if (semi.count(k) != present.count(k)) matches = false;
    idx.conclusive = !present.empty() && conductor <= o.max_order && matches;
    return idx;
}

LatticeIndex lattice_index(const Subalgebra& w) {
    w.validate();
    LatticeIndex idx;
    idx.h0 = 0;
    idx.h1 = 0;
    idx.conclusive = true;  // complementarity is carried by the presentation
    return idx;
}

MultiplierReport multipliers(const Subalgebra& w, long max_pole, long N) {
    w.validate();
    int d = w.lie->dim();
    long M = std::min(w.tail_prec, N);
    MultiplierReport out;
    out.lattice.max_order = max_pole;
    out.lattice.basis.push_back(LaurentSeries::constant(Rat(1), M));
    out.tail_certified = M;
    std::vector<long> found_orders;

    auto solve_order = [&](long k, bool power_series) -> std::optional<LaurentSeries> {
        // f = z^{-k} + sum_{j > -k} f_j z^j (for power_series: f = z^k + ...)
        long lead = power_series ? k : -k;
        long jmax = M - std::max<long>(k, 0);
        if (jmax <= lead) return std::nullopt;
        std::vector<long> cols;  // unknown exponents
        for (long j = lead + 1; j < jmax; ++j) cols.push_back(j);
        // product f * r_{m,i} has pole depth m+1+k, which must stay reducible
        int mmax = power_series ? w.depth : int(w.depth - k);
        if (mmax <= 0) return std::nullopt;
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        for (int m = 0; m < mmax; ++m)
            for (int i = 0; i < d; ++i) {
                const GSeries be = w.basis_element(m, i);
                // residual of (z^j * be) reduced against W, as a function of j
                // is linear; build per-unknown columns plus the monic part.
                auto reduced = [&](long j) {
                    GSeries v = be;
                    v.lo += j;
                    v.prec += j;
                    v.prec = std::min(v.prec, M);
                    v.normalize();
                    GSeries res = v;
                    if (!res.is_zero()) {
                        for (long p = res.lo; p < 0; ++p) {
                            GVec c = res.coeff(p);
                            int kk = int(-p - 1);
                            if (kk >= w.depth) continue;
                            for (int t = 0; t < d; ++t)
                                if (!is_zero(c[size_t(t)]))
                                    res = gs_sub(res,
                                                 gs_scale(w.basis_element(kk, t), c[size_t(t)]));
                        }
                    }
                    return res;
                };
                GSeries base = reduced(lead);
                long eprec = base.prec;
                std::vector<GSeries> per_col;
                for (long j : cols) {
                    per_col.push_back(reduced(j));
                    eprec = std::min(eprec, per_col.back().prec);
                }
                // the true multiplier's tail beyond jmax would enter the
                // residual at jmax - m - 1 through the leading coefficient;
                // equations past that point would overconstrain the truncation
                eprec = std::min(eprec, jmax - m - 1);
                for (long e = 0; e < eprec; ++e)
                    for (int t = 0; t < d; ++t) {
                        std::vector<Rat> row;
                        row.reserve(cols.size());
                        bool any = false;
                        for (const auto& rc : per_col) {
                            Rat v = rc.coeff(e)[size_t(t)];
                            if (!is_zero(v)) any = true;
                            row.push_back(v);
                        }
                        Rat b = -base.coeff(e)[size_t(t)];
                        if (!any && is_zero(b)) continue;
                        rows.push_back(std::move(row));
                        rhs.push_back(b);
                    }
            }
        // echelon constraints: zero coefficient at every already-found order
        for (long k2 : found_orders) {
            long j = -k2;
            auto it = std::find(cols.begin(), cols.end(), j);
            if (it == cols.end()) continue;
            std::vector<Rat> row(cols.size(), Rat(0));
            row[size_t(it - cols.begin())] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(Rat(0));
        }
        if (!power_series) {  // the constant 1 occupies order 0
            auto it = std::find(cols.begin(), cols.end(), 0L);
            if (it != cols.end()) {
                std::vector<Rat> row(cols.size(), Rat(0));
                row[size_t(it - cols.begin())] = 1;
                rows.push_back(std::move(row));
                rhs.push_back(Rat(0));
            }
        }
        QMat A(int(rows.size()), int(cols.size()));
        for (size_t rr = 0; rr < rows.size(); ++rr)
            for (size_t cc = 0; cc < cols.size(); ++cc) A.at(int(rr), int(cc)) = rows[rr][cc];
        auto sol = solve_linear(A, rhs);
        if (!sol) return std::nullopt;
        if (sol->underdetermined) {
            // the true lattice pins its multipliers uniquely; an
            // underdetermined system means the window cannot certify one
            ++out.underdetermined_orders;
            return std::nullopt;
        }
        std::vector<Rat> coeffs{Rat(1)};
        for (size_t cc = 0; cc < cols.size(); ++cc) coeffs.push_back(sol->x[cc]);
        out.tail_certified = std::min(out.tail_certified, jmax);
        return LaurentSeries::from_coeffs(lead, std::move(coeffs), jmax);
    };

    for (long k = 1; k <= max_pole; ++k) {
        auto f = solve_order(k, false);
        if (f) {
            found_orders.push_back(k);
            out.lattice.basis.push_back(*f);
        }
    }
    // h0 = 1 certificate: no nonconstant power-series multiplier on window
    out.no_nonconstant_power_series_multiplier = true;
    for (long k = 1; k <= std::min<long>(3, M - 1); ++k)
        if (solve_order(k, true)) out.no_nonconstant_power_series_multiplier = false;
    return out;
}

MultiplierLattice skew_O_construction(const LaurentSeries& u, long max_order) {
    if (u.is_zero() || u.order() != -1)
        throw InvalidGenerator("skew lattice construction needs a pole-order-1 generator");
    LaurentSeries du = series_derive(u);
    std::vector<LaurentSeries> elems;
    elems.push_back(LaurentSeries::constant(Rat(1), u.prec()));
    LaurentSeries upow = LaurentSeries::constant(Rat(1), u.prec());
    for (long j = 0; j + 2 <= max_order; ++j) {
        LaurentSeries e = du * upow;  // u' u^j, pole order j+2
        if (e.is_zero() || -e.order() > max_order) break;
        elems.push_back(e);
        upow = upow * u;
    }
    return echelonize(std::move(elems), max_order);
}

WeierstrassResult weierstrass_reduce(LaurentSeries f, LaurentSeries g,
                                     const MultiplierLattice& o) {
    if (f.is_zero() || f.order() != -2) throw Error("weierstrass reduction needs f of order 2");
    if (g.is_zero() || g.order() != -3) throw Error("weierstrass reduction needs g of order 3");
    for (const auto& b : o.basis)
        if (!b.is_zero() && -b.order() <= 0 && b.order() != 0)
            throw NotGenusOne("lattice meets the power series beyond constants");
    f = f.scaled(1 / f.coeff(-2));
    g = g.scaled(1 / g.coeff(-3));
    LaurentSeries f2 = f * f;
    LaurentSeries f3 = f2 * f;
    LaurentSeries g2s = g * g;
    LaurentSeries fg = f * g;
    LaurentSeries R = g2s - f3;
    if (!is_zero(R.coeff(-6))) throw Error("internal: monic parts did not cancel");
    Rat c5 = R.coeff(-5);
    R = R - fg.scaled(c5);
    Rat c4 = R.coeff(-4);
    R = R - f2.scaled(c4);
    Rat c3 = R.coeff(-3);
    R = R - g.scaled(c3);
    Rat c2 = R.coeff(-2);
    R = R - f.scaled(c2);
    if (!is_zero(R.coeff(-1)))
        throw NotGenusOne("residual has an order-1 component that nothing can absorb");
    Rat c0 = R.coeff(0);
    R = R - LaurentSeries::constant(c0, R.prec());
    if (!R.is_zero())
        throw NotGenusOne("g^2 - f^3 is not absorbed by the lattice relation on the window");
    long margin = R.prec() + 6;  // window length of the certified identity
    if (margin < 2 * 3 + 4)
        throw WindowTooNarrow("weierstrass relation certified on fewer than 10 orders");
    // complete the square and depress the cubic:
    // G = g - (c5 f + c3)/2, F = f + A2/3
    Rat a2 = c4 + c5 * c5 / 4;
    Rat a4 = c2 + c5 * c3 / 2;
    Rat a6 = c0 + c3 * c3 / 4;
    LaurentSeries G = g - (f.scaled(c5) + LaurentSeries::constant(c3, f.prec())).scaled(rat_of(1, 2));
    LaurentSeries F = f + LaurentSeries::constant(a2 / 3, f.prec());
    WeierstrassResult out;
    out.a = a4 - a2 * a2 / 3;
    out.b = a2 * a2 * a2 * 2 / 27 - a2 * a4 / 3 + a6;
    out.f = F;
    out.g = G;
    out.residual_window = margin;
    LaurentSeries check = G * G - F * F * F - F.scaled(out.a) -
                          LaurentSeries::constant(out.b, F.prec());
    if (!check.is_zero()) throw Error("internal: weierstrass completion failed");
    return out;
}

LaurentSeries wp_series(const Rat& g2, const Rat& g3, long N) {
    if (N < 2) throw Error("wp series needs window beyond order 2");
    // p = z^-2 + sum_{k>=1} c_k z^{2k}
    long kmax = (N - 1) / 2 + 1;
    std::vector<Rat> c(size_t(kmax) + 1, Rat(0));
    if (kmax >= 1) c[1] = g2 / 20;
    if (kmax >= 2) c[2] = g3 / 28;
    for (long k = 3; k <= kmax; ++k) {
        Rat s(0);
        for (long m = 1; m <= k - 2; ++m) s += c[size_t(m)] * c[size_t(k - 1 - m)];
        c[size_t(k)] = s * 3 / Rat((2 * k + 3) * (k - 2));
    }
    std::vector<Rat> coeffs(size_t(N + 2), Rat(0));
    coeffs[0] = 1;  // z^-2
    for (long k = 1; k <= kmax; ++k)
        if (2 * k + 2 < long(coeffs.size())) coeffs[size_t(2 * k + 2)] = c[size_t(k)];
    LaurentSeries p = LaurentSeries::from_coeffs(-2, std::move(coeffs), N);
    // assert the defining equation (p')^2 = 4p^3 - g2 p - g3 on the window
    LaurentSeries dp = series_derive(p);
    LaurentSeries resid = dp * dp - (p * p * p).scaled(Rat(4)) + p.scaled(g2) +
                          LaurentSeries::constant(g3, p.prec());
    if (!resid.is_zero()) throw Error("internal: wp series fails its differential equation");
    return p;
}

const char* cubic_kind_name(CubicKind k) {
    switch (k) {
        case CubicKind::Elliptic: return "Elliptic";
        case CubicKind::Nodal: return "Nodal";
        case CubicKind::Cuspidal: return "Cuspidal";
        case CubicKind::RationalSmooth: return "RationalSmooth";
        case CubicKind::Undetermined: return "Undetermined";
    }
    return "?";
}

CubicClass classify_lattice(const MultiplierLattice& o) {
    CubicClass out;
    out.window = o.max_order;
    LatticeIndex idx = lattice_index(o);
    if (idx.h0 != 1) {
        out.note = "h0 != 1 on the window";
        return out;
    }
    if (!idx.conclusive) {
        out.note = "order structure not settled on the window";
        return out;
    }
    if (o.element_of_order(1)) {
        out.kind = CubicKind::RationalSmooth;
        out.note = "order-1 element present; h1 = 0";
        return out;
    }
    if (idx.h1 == 1) {
        const LaurentSeries* f = o.element_of_order(2);
        const LaurentSeries* g = o.element_of_order(3);
        if (!f || !g) {
            out.note = "h1 = 1 but no order-2/order-3 presentation in the window";
            return out;
        }
        try {
            auto wr = weierstrass_reduce(*f, *g, o);
            out.a = wr.a;
            out.b = wr.b;
            out.window = wr.residual_window;
            Rat disc = wr.a * wr.a * wr.a * 4 + wr.b * wr.b * 27;
            if (is_zero(wr.a) && is_zero(wr.b))
                out.kind = CubicKind::Cuspidal;
            else if (is_zero(disc))
                out.kind = CubicKind::Nodal;
            else
                out.kind = CubicKind::Elliptic;
        } catch (const NotGenusOne& ex) {
            out.note = std::string("weierstrass reduction failed: ") + ex.what();
        } catch (const WindowTooNarrow& ex) {
            out.note = std::string("window too narrow: ") + ex.what();
        }
        return out;
    }
    out.note = "h1 = " + std::to_string(idx.h1) + " on the window";
    return out;
}

ClassifyReport classify_rmatrix(const RMatrix& r, long N, const ClassifyOptions& opt) {
    RMatrix rn = r;
    if (!r.normalized()) rn = normalize(r).first;
    ClassifyReport rep;
    auto ver = is_generalized_rmatrix(rn, N);
    rep.verified_order = ver.order;
    if (!ver.ok) {
        rep.branch = "input fails the generalized equation";
        return rep;
    }
    rep.skew = is_skew(rn);
    int depth = opt.depth;
    long tail = opt.tail;
    Subalgebra w = extract_subalgebra(rn, depth, tail);
    auto mult = multipliers(w, opt.max_pole, tail);
    rep.mult_index = lattice_index(mult.lattice);
    rep.mult_orders = mult.lattice.orders();
    if (rep.skew) {
        if (const LaurentSeries* u = mult.lattice.element_of_order(1)) {
            rep.branch = "skew; order-1 multiplier; classifying Q[u',u'u]";
            rep.cubic = classify_lattice(skew_O_construction(*u, opt.max_pole));
        } else if (rep.mult_index.h1 == 1 && rep.mult_index.conclusive) {
            rep.branch = "skew; Mult itself has h1 = 1";
            rep.cubic = classify_lattice(mult.lattice);
        } else {
            rep.branch = "skew; window insufficient to pick a genus-one presentation";
            rep.cubic.window = opt.max_pole;
        }
    } else {
        if (mult.lattice.element_of_order(1)) {
            rep.branch = "non-skew; order-1 multiplier";
            rep.cubic.kind = CubicKind::RationalSmooth;
            rep.cubic.window = opt.max_pole;
        } else {
            rep.branch = "non-skew; no order-1 multiplier on the window";
            rep.cubic.window = opt.max_pole;
        }
    }
    return rep;
}

}  // namespace cybe
