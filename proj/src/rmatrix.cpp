#include "rmatrix.hpp"

#include <algorithm>

namespace cybe {

bool RMatrix::normalized() const {
    if (lambda.is_zero() || lambda.order() != 0 || lambda.coeff(0) != Rat(1)) return false;
    for (long e = 1; e < lambda.prec(); ++e)
        if (!is_zero(lambda.coeff(e))) return false;
    return true;
}

void RMatrix::validate() const {
    if (!lie) throw Error("r-matrix carrier without Lie algebra");
    if (lambda.is_zero() || lambda.order() != 0)
        throw Error("standard form needs a unit power series lambda");
    if (r0.xlo < 0 || r0.ylo < 0) throw Error("r0 must be a power series");
}

RMatrix yang(LiePtr L, long Nx, long Ny) {
    RMatrix r;
    r.lie = std::move(L);
    r.lambda = LaurentSeries::constant(Rat(1), Ny);
    r.r0.xlo = 0;
    r.r0.xprec = Nx;
    r.r0.ylo = 0;
    r.r0.yprec = Ny;
    return r;
}

RMatrix rescale(const RMatrix& r, const LaurentSeries& mu) {
    if (mu.is_zero() || mu.order() != 0) throw NotAUnit("rescaling must be a unit power series");
    RMatrix s = r;
    s.lambda = r.lambda * mu;
    s.r0 = series2_mul_scalar(r.r0, mu, 1);
    return s;
}

static bool lambda_is_constant(const LaurentSeries& lambda) {
    for (long e = 1; e < lambda.prec(); ++e)
        if (!is_zero(lambda.coeff(e))) return false;
    return true;
}

Series2<GTensor2> expansion(const RMatrix& r, long Kx, long Nx, long Ny) {
    r.validate();
    if (r.lambda.prec() < Ny)
        throw WindowTooNarrow("lambda known to order " + std::to_string(r.lambda.prec()) +
                              ", expansion needs " + std::to_string(Ny));
    if (r.r0.xprec < Nx || r.r0.yprec < Ny)
        throw WindowTooNarrow("r0 known on (" + std::to_string(r.r0.xprec) + "," +
                              std::to_string(r.r0.yprec) + "), expansion needs (" +
                              std::to_string(Nx) + "," + std::to_string(Ny) + ")");
    Series2<GTensor2> v;
    v.xlo = -Kx;
    v.xprec = Nx;
    v.ylo = 0;
    v.yprec = Ny;
    const GTensor2& gamma = r.lie->casimir();
    for (long k = 0; k < std::min(Kx, Ny); ++k)
        for (long q = k; q < Ny; ++q) {
            const Rat& lam = r.lambda.coeff(q - k);
            if (!is_zero(lam)) v.add(-k - 1, q, gamma.scaled(lam));
        }
    for (const auto& [key, t] : r.r0.c)
        if (v.in_window(key.first, key.second)) v.add(key.first, key.second, t);
    return v;
}

long max_symmetric_order(const RMatrix& r) {
    return std::min(std::min(r.r0.xprec, r.r0.yprec), r.lambda.prec());
}

Series2<GTensor2> divided_difference_tensor(const LaurentSeries& lambda, const GTensor2& payload,
                                            long xp, long yp) {
    Series2<GTensor2> d;
    d.xlo = 0;
    d.ylo = 0;
    d.xprec = xp;
    d.yprec = yp;
    if (lambda_is_constant(lambda)) return d;  // exact zero on any box
    if (xp + yp > lambda.prec())
        throw WindowTooNarrow("divided difference on box (" + std::to_string(xp) + "," +
                              std::to_string(yp) + ") needs lambda beyond order " +
                              std::to_string(xp + yp - 1));
    for (long i = 0; i < xp; ++i)
        for (long j = 0; j < yp; ++j) {
            const Rat& lam = lambda.coeff(i + j + 1);
            if (!is_zero(lam)) d.add(i, j, payload.scaled(lam));
        }
    return d;
}

std::optional<RMatrix> detect_standard_form(LiePtr L, const Series2<GTensor2>& view) {
    int d = L->dim();
    const GTensor2& gamma = L->casimir();
    if (view.xlo > -1) return std::nullopt;  // no pole column in the window
    // lambda_q = <coeff(-1, q), gamma> / d under kappa (x) kappa
    std::vector<Rat> lam;
    for (long q = 0; q < view.yprec; ++q) {
        const GTensor2* t = view.find(-1, q);
        Rat v(0);
        if (t) {
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const Rat& c = t->at(a, b);
                    if (is_zero(c)) continue;
                    // pair with gamma via kappa (x) kappa: gamma's dual is itself
                    // in the sense (kappa (x) kappa)(gamma, b_a (x) b_b) = kappa_ab
                    v += c * L->killing().at(a, b);
                }
            v /= Rat(d);
        }
        lam.push_back(v);
    }
    LaurentSeries lambda = LaurentSeries::from_coeffs(0, std::move(lam), view.yprec);
    if (lambda.is_zero() || lambda.order() != 0) return std::nullopt;
    // subtract lambda(y) * Yang expansion, demand the rest is a power series
    Series2<GTensor2> rest = view;
    for (long k = 0; -k - 1 >= view.xlo; ++k)
        for (long q = k; q < view.yprec; ++q) {
            const Rat& c = lambda.coeff(q - k);
            if (!is_zero(c)) rest.add(-k - 1, q, gamma.scaled(-c));
        }
    for (const auto& [key, t] : rest.c)
        if (key.first < 0 && !t.is_zero()) return std::nullopt;
    RMatrix r;
    r.lie = std::move(L);
    r.lambda = lambda;
    r.r0.xlo = 0;
    r.r0.ylo = 0;
    r.r0.xprec = view.xprec;
    r.r0.yprec = view.yprec;
    for (const auto& [key, t] : rest.c)
        if (key.first >= 0) r.r0.add(key.first, key.second, t);
    return r;
}

RMatrix bar(const RMatrix& r) {
    r.validate();
    // r0 swapped and flipped: (p,q) entry is tau(r0_{q,p})
    Series2<GTensor2> swapped;
    swapped.xlo = r.r0.ylo;
    swapped.xprec = r.r0.yprec;
    swapped.ylo = r.r0.xlo;
    swapped.yprec = r.r0.xprec;
    for (const auto& [key, t] : r.r0.c) swapped.add(key.second, key.first, t.flip());
    long xp = swapped.xprec, yp = swapped.yprec;
    if (!lambda_is_constant(r.lambda)) {
        // divided-difference box limited by lambda's window
        while (xp > 0 && yp > 0 && xp + yp > r.lambda.prec()) {
            if (xp >= yp)
                --xp;
            else
                --yp;
        }
    }
    auto dd = divided_difference_tensor(r.lambda, r.lie->casimir(), xp, yp);
    RMatrix b;
    b.lie = r.lie;
    b.lambda = r.lambda;
    b.r0 = series2_add(dd, swapped, Rat(-1));
    return b;
}

bool is_skew(const RMatrix& r) {
    RMatrix rb = bar(r);
    long xp = std::min(r.r0.xprec, rb.r0.xprec);
    long yp = std::min(r.r0.yprec, rb.r0.yprec);
    if (xp <= 0 || yp <= 0)
        throw WindowTooNarrow("skew check has an empty comparable window");
    for (const auto& [key, t] : r.r0.c) {
        if (key.first >= xp || key.second >= yp) continue;
        const GTensor2* u = rb.r0.find(key.first, key.second);
        if (!u) {
            if (!t.is_zero()) return false;
        } else if (!(*u - t).is_zero()) {
            return false;
        }
    }
    for (const auto& [key, t] : rb.r0.c) {
        if (key.first >= xp || key.second >= yp) continue;
        if (!r.r0.find(key.first, key.second) && !t.is_zero()) return false;
    }
    // the comparable lambda windows agree by construction (same series)
    return true;
}

// ---- triple assembly ----

namespace {

struct NZEntry {
    long p, q;
    std::vector<std::tuple<int, int, Rat>> ent;
};

std::vector<NZEntry> nonzeros(const Series2<GTensor2>& v) {
    std::vector<NZEntry> out;
    for (const auto& [key, t] : v.c) {
        NZEntry e;
        e.p = key.first;
        e.q = key.second;
        for (int a = 0; a < t.d; ++a)
            for (int b = 0; b < t.d; ++b)
                if (!is_zero(t.at(a, b))) e.ent.emplace_back(a, b, t.at(a, b));
        if (!e.ent.empty()) out.push_back(std::move(e));
    }
    return out;
}

inline int flat(int d, int i, int j, int k) { return (i * d + j) * d + k; }

void add_entry(TripleSeries& acc, long e1, long e2, long e3, int idx, const Rat& val) {
    if (is_zero(val)) return;
    auto& slot = acc.c[{e1, e2, e3}];
    auto it = slot.v.find(idx);
    if (it == slot.v.end()) {
        slot.v.emplace(idx, val);
    } else {
        it->second += val;
        if (is_zero(it->second)) slot.v.erase(it);
    }
}

void prune(TripleSeries& acc) {
    for (auto it = acc.c.begin(); it != acc.c.end();) {
        bool drop = it->second.v.empty() ||
                    !acc.certified(it->first[0], it->first[1], it->first[2]);
        it = drop ? acc.c.erase(it) : std::next(it);
    }
}

enum class Placement { k12_13, k12_23, k13_23 };

// the three mixed-bracket contraction rules; S lives in the first placement
// slot pair, T in the second.
void accumulate(TripleSeries& acc, const LieAlgebra& L, Placement pl,
                const std::vector<NZEntry>& sv, const std::vector<NZEntry>& tv) {
    int d = L.dim();
    for (const auto& S : sv)
        for (const auto& T : tv) {
            long e1, e2, e3;
            switch (pl) {
                case Placement::k12_13:  // S(x1,x2), T(x1,x3): [S12, T13]
                    e1 = S.p + T.p;
                    e2 = S.q;
                    e3 = T.q;
                    break;
                case Placement::k12_23:  // S(x1,x2), T(x2,x3): [S12, T23]
                    e1 = S.p;
                    e2 = S.q + T.p;
                    e3 = T.q;
                    break;
                case Placement::k13_23:  // S(x1,x3), T(x2,x3): [S13, T23]
                    e1 = S.p;
                    e2 = T.p;
                    e3 = S.q + T.q;
                    break;
            }
            if (!acc.certified(e1, e2, e3)) continue;
            for (const auto& [a, b, cs] : S.ent)
                for (const auto& [c, dd, ct] : T.ent) {
                    Rat f = cs * ct;
                    switch (pl) {
                        case Placement::k12_13:  // [b_a,b_c] (x) b_b (x) b_dd
                            for (const auto& [k, sc] : L.bracket_basis(a, c))
                                add_entry(acc, e1, e2, e3, flat(d, k, b, dd), f * sc);
                            break;
                        case Placement::k12_23:  // b_a (x) [b_b,b_c] (x) b_dd
                            for (const auto& [k, sc] : L.bracket_basis(b, c))
                                add_entry(acc, e1, e2, e3, flat(d, a, k, dd), f * sc);
                            break;
                        case Placement::k13_23:  // b_a (x) b_c (x) [b_b,b_dd]
                            for (const auto& [k, sc] : L.bracket_basis(b, dd))
                                add_entry(acc, e1, e2, e3, flat(d, a, c, k), f * sc);
                            break;
                    }
                }
        }
}

TripleSeries assemble(const RMatrix& r, long Kx, long Nx, long Ny, bool generalized) {
    auto V = expansion(r, Kx, Nx, Ny);

    TripleSeries acc;
    acc.d = r.lie->dim();
    acc.Kx = Kx;
    acc.Nx = Nx;
    acc.Ny = Ny;
    std::vector<NZEntry> nzB;
    if (generalized) {
        RMatrix rb = bar(r);
        acc.KxB = Kx;
        acc.NxB = std::min(Nx, rb.r0.xprec);
        acc.NyB = std::min(Ny, rb.r0.yprec);
        nzB = nonzeros(expansion(rb, acc.KxB, acc.NxB, acc.NyB));
    } else {
        acc.KxB = Kx;
        acc.NxB = Nx;
        acc.NyB = Ny;
    }
    auto nzV = nonzeros(V);
    accumulate(acc, *r.lie, Placement::k12_13, nzV, nzV);
    accumulate(acc, *r.lie, Placement::k12_23, nzV, nzV);
    accumulate(acc, *r.lie, Placement::k13_23, nzV, generalized ? nzB : nzV);
    prune(acc);
    return acc;
}

}  // namespace

TripleSeries gcyb(const RMatrix& r, long Kx, long Nx, long Ny) {
    return assemble(r, Kx, Nx, Ny, true);
}

TripleSeries cyb(const RMatrix& r, long Kx, long Nx, long Ny) {
    return assemble(r, Kx, Nx, Ny, false);
}

std::optional<Witness> first_nonzero(const TripleSeries& t) {
    for (const auto& [key, slot] : t.c) {
        if (slot.v.empty()) continue;
        Witness w;
        w.exponents = key;
        int idx = slot.v.begin()->first;
        int d = t.d;
        w.tensor_index = {idx / (d * d), (idx / d) % d, idx % d};
        w.value = slot.v.begin()->second;
        return w;
    }
    return std::nullopt;
}

bool negatives_vanish(const TripleSeries& t) {
    for (const auto& [key, slot] : t.c)
        if ((key[0] < 0 || key[1] < 0 || key[2] < 0) && !slot.v.empty()) return false;
    return true;
}

static VerifyReport verify(const RMatrix& r, long N, bool generalized) {
    long avail = max_symmetric_order(r);
    long need = 2 * N;
    if (avail < need)
        throw WindowTooNarrow("verification to order " + std::to_string(N) + " needs carrier data to order " +
                              std::to_string(need) + ", have " + std::to_string(avail));
    TripleSeries t = generalized ? gcyb(r, N, need, need) : cyb(r, N, need, need);
    long certified = t.certified_cube_order();
    if (certified < N)
        throw WindowTooNarrow("certified cube order " + std::to_string(certified) +
                              " falls short of requested " + std::to_string(N));
    VerifyReport rep;
    rep.cube_order = certified;
    rep.negatives_ok = negatives_vanish(t);
    rep.witness = first_nonzero(t);
    rep.ok = !rep.witness.has_value();
    rep.order = N;
    return rep;
}

VerifyReport is_generalized_rmatrix(const RMatrix& r, long N) { return verify(r, N, true); }
VerifyReport is_rmatrix(const RMatrix& r, long N) { return verify(r, N, false); }

}  // namespace cybe
