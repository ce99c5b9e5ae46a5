#include "lie.hpp"

#include <algorithm>

namespace cybe {

namespace {

// expand a traceless diagonal in the H_k = E_kk - E_{k+1,k+1} basis:
// diag(d_1..d_n) = sum_k (d_1+...+d_k) H_k
std::vector<Rat> diag_in_h(const std::vector<Rat>& d) {
    std::vector<Rat> c(d.size() - 1);
    Rat run(0);
    for (size_t k = 0; k + 1 < d.size(); ++k) {
        run += d[k];
        c[k] = run;
    }
    return c;
}

}  // namespace

LiePtr LieAlgebra::sl(int n) {
    if (n < 2) throw Error("sl(n) needs n >= 2");
    // basis: E_ij (i<j) lex, then H_1..H_{n-1}, then E_ij (i>j) lex
    struct B {
        int i, j;  // j == i means H_i
    };
    std::vector<B> basis;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            basis.push_back({i, j});
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (int i = 0; i + 1 < n; ++i) {
        basis.push_back({i, i});
        labels.push_back("H" + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            basis.push_back({i, j});
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    int d = int(basis.size());
    auto mat_of = [&](int b) {
        QMat m(n, n);
        if (basis[size_t(b)].i == basis[size_t(b)].j) {
            int k = basis[size_t(b)].i;
            m.at(k, k) = 1;
            m.at(k + 1, k + 1) = -1;
        } else {
            m.at(basis[size_t(b)].i, basis[size_t(b)].j) = 1;
        }
        return m;
    };
    auto coords_of = [&](const QMat& m) {
        GVec v(size_t(d), Rat(0));
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) v[size_t(idx++)] = m.at(i, j);
        std::vector<Rat> diag(size_t(n), Rat(0));
        for (int i = 0; i < n; ++i) diag[size_t(i)] = m.at(i, i);
        auto h = diag_in_h(diag);
        for (int k = 0; k + 1 < n; ++k) v[size_t(idx++)] = h[size_t(k)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) v[size_t(idx++)] = m.at(i, j);
        return v;
    };
    std::vector<std::tuple<int, int, int, Rat>> sc;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            QMat ma = mat_of(a), mb = mat_of(b);
            QMat comm = ma * mb - mb * ma;
            GVec v = coords_of(comm);
            for (int k = 0; k < d; ++k)
                if (!is_zero(v[size_t(k)])) sc.emplace_back(a, b, k, v[size_t(k)]);
        }
    return from_structure_constants(d, sc, "sl" + std::to_string(n), labels);
}

LiePtr LieAlgebra::so(int n) {
    if (n < 3) throw Error("so(n) needs n >= 3");
    std::vector<std::pair<int, int>> basis;  // X_ij = E_ij - E_ji, i<j
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            basis.push_back({i, j});
            labels.push_back("X" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    int d = int(basis.size());
    auto mat_of = [&](int b) {
        QMat m(n, n);
        m.at(basis[size_t(b)].first, basis[size_t(b)].second) = 1;
        m.at(basis[size_t(b)].second, basis[size_t(b)].first) = -1;
        return m;
    };
    std::vector<std::tuple<int, int, int, Rat>> sc;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            QMat comm = mat_of(a) * mat_of(b) - mat_of(b) * mat_of(a);
            for (int k = 0; k < d; ++k) {
                const Rat& c = comm.at(basis[size_t(k)].first, basis[size_t(k)].second);
                if (!is_zero(c)) sc.emplace_back(a, b, k, c);
            }
        }
    return from_structure_constants(d, sc, "so" + std::to_string(n), labels);
}

LiePtr LieAlgebra::from_structure_constants(int dim,
                                            const std::vector<std::tuple<int, int, int, Rat>>& sc,
                                            std::string name, std::vector<std::string> labels) {
    auto L = std::shared_ptr<LieAlgebra>(new LieAlgebra());
    L->dim_ = dim;
    L->name_ = std::move(name);
    if (labels.empty())
        for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i + 1));
    L->labels_ = std::move(labels);
    L->table_.assign(size_t(dim) * dim, {});
    auto add = [&](int i, int j, int k, const Rat& c) {
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            throw Error("structure constant index out of range");
        for (auto& [kk, cc] : L->table_[size_t(i) * dim + j])
            if (kk == k) {
                if (cc != c) throw Error("conflicting structure constants");
                return;
            }
        if (!is_zero(c)) L->table_[size_t(i) * dim + j].push_back({k, c});
    };
    for (const auto& [i, j, k, c] : sc) {
        if (i == j && !is_zero(c)) throw Error("[b_i, b_i] must vanish");
        add(i, j, k, c);
        add(j, i, k, -c);
    }
    L->finalize();
    return L;
}

void LieAlgebra::finalize() {
    int d = dim_;
    ad_.clear();
    for (int i = 0; i < d; ++i) {
        QMat m(d, d);
        for (int j = 0; j < d; ++j)
            for (const auto& [k, c] : table_[size_t(i) * d + j]) m.at(k, j) = c;
        ad_.push_back(std::move(m));
    }
    // Jacobi identity, exactly
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                GVec ei(size_t(d), Rat(0)), ej(size_t(d), Rat(0)), ek(size_t(d), Rat(0));
                ei[size_t(i)] = 1;
                ej[size_t(j)] = 1;
                ek[size_t(k)] = 1;
                GVec s = bracket(bracket(ei, ej), ek);
                GVec t = bracket(bracket(ej, ek), ei);
                GVec u = bracket(bracket(ek, ei), ej);
                for (int m = 0; m < d; ++m)
                    if (!is_zero(s[size_t(m)] + t[size_t(m)] + u[size_t(m)]))
                        throw Error("Jacobi identity fails at basis triple (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
            }
    // Killing form kappa(a,b) = Tr(ad a . ad b)
    killing_ = QMat(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            QMat p = ad_[size_t(i)] * ad_[size_t(j)];
            Rat tr(0);
            for (int k = 0; k < d; ++k) tr += p.at(k, k);
            killing_.at(i, j) = tr;
            killing_.at(j, i) = tr;
        }
    auto inv = killing_.inverse();
    if (!inv) throw NotSimple("Killing form is degenerate");
    dual_change_ = *inv;
    // centroid: L with L[a,b] = [La,b] = [a,Lb] for all basis a,b
    {
        int ncols = d * d;
        std::vector<std::vector<Rat>> eqs;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                // component m of  L [b_i,b_j] - [L b_i, b_j]  and  L [b_i,b_j] - [b_i, L b_j]
                for (int variant = 0; variant < 2; ++variant)
                    for (int m = 0; m < d; ++m) {
                        std::vector<Rat> row(size_t(ncols), Rat(0));
                        for (const auto& [k, c] : table_[size_t(i) * d + j])
                            row[size_t(m * d + k)] += c;  // L_{m k} c
                        for (int p = 0; p < d; ++p) {
                            // [b_p, b_j] resp. [b_i, b_p]
                            const auto& t = variant == 0 ? table_[size_t(p) * d + j]
                                                         : table_[size_t(i) * d + p];
                            int src = variant == 0 ? i : j;
                            for (const auto& [k, c] : t)
                                if (k == m) row[size_t(p * d + src)] -= c;
                        }
                        eqs.push_back(std::move(row));
                    }
            }
        QMat A(int(eqs.size()), ncols);
        for (size_t r = 0; r < eqs.size(); ++r)
            for (int cidx = 0; cidx < ncols; ++cidx) A.at(int(r), cidx) = eqs[r][size_t(cidx)];
        central_ = int(A.nullspace().size()) == 1;
    }
}

LiePtr LieAlgebra::change_basis(const QMat& p) const {
    auto pinv = p.inverse();
    if (!pinv) throw Error("basis change must be invertible");
    int d = dim_;
    std::vector<std::tuple<int, int, int, Rat>> sc;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            GVec a(size_t(d), Rat(0)), b(size_t(d), Rat(0));
            for (int m = 0; m < d; ++m) {
                a[size_t(m)] = p.at(i, m);
                b[size_t(m)] = p.at(j, m);
            }
            GVec br = bracket(a, b);  // in old coordinates
            for (int k = 0; k < d; ++k) {
                Rat c(0);
                for (int m = 0; m < d; ++m) c += br[size_t(m)] * pinv->at(m, k);
                if (!is_zero(c)) sc.emplace_back(i, j, k, c);
            }
        }
    return from_structure_constants(d, sc, name_ + "'");
}

GVec LieAlgebra::bracket(const GVec& a, const GVec& b) const {
    GVec r(size_t(dim_), Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(a[size_t(i)])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (is_zero(b[size_t(j)])) continue;
            Rat f = a[size_t(i)] * b[size_t(j)];
            for (const auto& [k, c] : table_[size_t(i) * dim_ + j]) r[size_t(k)] += f * c;
        }
    }
    return r;
}

Rat LieAlgebra::killing_form(const GVec& a, const GVec& b) const {
    Rat r(0);
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(a[size_t(i)])) continue;
        for (int j = 0; j < dim_; ++j)
            if (!is_zero(b[size_t(j)])) r += a[size_t(i)] * killing_.at(i, j) * b[size_t(j)];
    }
    return r;
}

QMat LieAlgebra::ad_vec(const GVec& a) const {
    QMat m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        if (!is_zero(a[size_t(i)])) m += ad_[size_t(i)].scaled(a[size_t(i)]);
    return m;
}

GVec LieAlgebra::dual_basis_vector(int i) const {
    GVec v(size_t(dim_), Rat(0));
    for (int j = 0; j < dim_; ++j) v[size_t(j)] = dual_change_.at(i, j);
    return v;
}

const GTensor2& LieAlgebra::casimir() const {
    if (!casimir_ready_) {
        GTensor2 g(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) g.at(i, j) = dual_change_.at(i, j);
        // gamma = sum_i b_i (x) b^i; in coordinates the (a,b) entry is (kappa^{-1})_{ab}
        casimir_ = g;
        // verify invariance and mu(gamma) = id
        for (int i = 0; i < dim_; ++i) {
            GVec e(size_t(dim_), Rat(0));
            e[size_t(i)] = 1;
            GTensor2 comm = bracket_leg1(*this, e, casimir_) + bracket_leg2(*this, e, casimir_);
            if (!comm.is_zero()) throw Error("Casimir invariance check failed");
        }
        if (!mu_map(*this, casimir_).is_identity())
            throw Error("Casimir normalization check failed: mu(gamma) != id");
        casimir_ready_ = true;
    }
    return casimir_;
}

std::vector<std::tuple<int, int, int, Rat>> LieAlgebra::structure_constants() const {
    std::vector<std::tuple<int, int, int, Rat>> sc;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (const auto& [k, c] : table_[size_t(i) * dim_ + j]) sc.emplace_back(i, j, k, c);
    return sc;
}

GTensor2 bracket_leg1(const LieAlgebra& L, const GVec& a, const GTensor2& t) {
    int d = L.dim();
    GTensor2 r(d);
    for (int i = 0; i < d; ++i) {
        if (is_zero(a[size_t(i)])) continue;
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Rat& c = t.at(p, q);
                if (is_zero(c)) continue;
                Rat f = a[size_t(i)] * c;
                for (const auto& [k, sc] : L.bracket_basis(i, p)) r.at(k, q) += f * sc;
            }
    }
    return r;
}

GTensor2 bracket_leg2(const LieAlgebra& L, const GVec& a, const GTensor2& t) {
    int d = L.dim();
    GTensor2 r(d);
    for (int i = 0; i < d; ++i) {
        if (is_zero(a[size_t(i)])) continue;
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Rat& c = t.at(p, q);
                if (is_zero(c)) continue;
                Rat f = a[size_t(i)] * c;
                for (const auto& [k, sc] : L.bracket_basis(i, q)) r.at(p, k) += f * sc;
            }
    }
    return r;
}

GVec bracket_contract(const LieAlgebra& L, const GTensor2& t) {
    int d = L.dim();
    GVec r(size_t(d), Rat(0));
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            const Rat& c = t.at(p, q);
            if (is_zero(c)) continue;
            for (const auto& [k, sc] : L.bracket_basis(p, q)) r[size_t(k)] += c * sc;
        }
    return r;
}

QMat mu_map(const LieAlgebra& L, const GTensor2& t) {
    int d = L.dim();
    QMat r(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            const Rat& c = t.at(p, q);
            if (is_zero(c)) continue;
            r += (L.ad(p) * L.ad(q)).scaled(c);
        }
    return r;
}

GVec contract_second_killing(const LieAlgebra& L, const GTensor2& t, int i) {
    int d = L.dim();
    GVec r(size_t(d), Rat(0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rat& c = t.at(a, b);
            if (is_zero(c)) continue;
            const Rat& k = L.killing().at(b, i);
            if (!is_zero(k)) r[size_t(a)] += c * k;
        }
    return r;
}

Rat contract_both_killing(const LieAlgebra& L, const GTensor2& t, int i, int j) {
    int d = L.dim();
    Rat r(0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rat& c = t.at(a, b);
            if (is_zero(c)) continue;
            r += c * L.killing().at(a, i) * L.killing().at(b, j);
        }
    return r;
}

GVec second_leg_coordinate(const GTensor2& t, int b) {
    GVec r(size_t(t.d), Rat(0));
    for (int a = 0; a < t.d; ++a) r[size_t(a)] = t.at(a, b);
    return r;
}

GVec first_leg_coordinate(const GTensor2& t, int a) {
    GVec r(size_t(t.d), Rat(0));
    for (int b = 0; b < t.d; ++b) r[size_t(b)] = t.at(a, b);
    return r;
}

GTensor2 outer(const GVec& a, const GVec& b) {
    GTensor2 r(int(a.size()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!is_zero(b[j])) r.at(int(i), int(j)) = a[i] * b[j];
    }
    return r;
}

GTensor2 tensor_change_basis(const GTensor2& t, const QMat& pinv) {
    int d = t.d;
    GTensor2 r(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rat& c = t.at(a, b);
            if (is_zero(c)) continue;
            for (int i = 0; i < d; ++i) {
                const Rat& p1 = pinv.at(a, i);
                if (is_zero(p1)) continue;
                for (int j = 0; j < d; ++j) {
                    const Rat& p2 = pinv.at(b, j);
                    if (!is_zero(p2)) r.at(i, j) += c * p1 * p2;
                }
            }
        }
    return r;
}

GTensor2 apply_pair(const QMat& m1, const QMat& m2, const GTensor2& t) {
    int d = t.d;
    GTensor2 r(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rat& c = t.at(a, b);
            if (is_zero(c)) continue;
            for (int i = 0; i < d; ++i) {
                const Rat& x = m1.at(i, a);
                if (is_zero(x)) continue;
                for (int j = 0; j < d; ++j) {
                    const Rat& y = m2.at(j, b);
                    if (!is_zero(y)) r.at(i, j) += c * x * y;
                }
            }
        }
    return r;
}

// ---- GSeries ----

GSeries GSeries::monomial(const GVec& v, long exp, long prec) {
    GSeries s;
    s.d = int(v.size());
    s.lo = exp;
    s.prec = prec;
    s.c.push_back(v);
    s.normalize();
    return s;
}

bool GSeries::is_zero() const { return c.empty(); }

GVec GSeries::coeff(long e) const {
    if (e >= prec) throw WindowTooNarrow("g-valued coefficient beyond window");
    if (e < lo || e >= lo + long(c.size())) return GVec(size_t(d), Rat(0));
    return c[size_t(e - lo)];
}

void GSeries::normalize() {
    auto vz = [](const GVec& v) {
        for (const auto& x : v)
            if (!cybe::is_zero(x)) return false;
        return true;
    };
    while (!c.empty() && vz(c.front())) {
        c.erase(c.begin());
        ++lo;
    }
    while (!c.empty() && vz(c.back())) c.pop_back();
    if (c.empty()) lo = prec;
    if (long(c.size()) > prec - lo) c.resize(size_t(std::max<long>(prec - lo, 0)));
}

GSeries gs_add(const GSeries& a, const GSeries& b) {
    GSeries r;
    r.d = a.d ? a.d : b.d;
    r.prec = std::min(a.prec, b.prec);
    long lo = std::min(a.is_zero() ? r.prec : a.lo, b.is_zero() ? r.prec : b.lo);
    r.lo = lo;
    for (long e = lo; e < r.prec; ++e) {
        GVec v(size_t(r.d), Rat(0));
        if (!a.is_zero() && e >= a.lo && e < a.lo + long(a.c.size()))
            for (size_t i = 0; i < v.size(); ++i) v[i] += a.c[size_t(e - a.lo)][i];
        if (!b.is_zero() && e >= b.lo && e < b.lo + long(b.c.size()))
            for (size_t i = 0; i < v.size(); ++i) v[i] += b.c[size_t(e - b.lo)][i];
        r.c.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

GSeries gs_scale(const GSeries& a, const Rat& c) {
    GSeries r = a;
    if (is_zero(c)) return GSeries::zero(a.d, a.prec);
    for (auto& v : r.c)
        for (auto& x : v) x *= c;
    return r;
}

GSeries gs_sub(const GSeries& a, const GSeries& b) { return gs_add(a, gs_scale(b, Rat(-1))); }

GSeries gs_mul_scalar(const LaurentSeries& s, const GSeries& a) {
    long slo = s.is_zero() ? s.prec() : s.lo();
    long alo = a.is_zero() ? a.prec : a.lo;
    GSeries r;
    r.d = a.d;
    r.prec = std::min(slo + a.prec, alo + s.prec());
    r.lo = slo + alo;
    if (s.is_zero() || a.is_zero()) {
        r.lo = r.prec;
        return r;
    }
    r.c.assign(size_t(std::max<long>(r.prec - r.lo, 0)), GVec(size_t(a.d)));
    for (long e = s.lo(); e < std::min(s.prec(), s.coeff_end()); ++e) {
        const Rat& cs = s.coeff(e);
        if (is_zero(cs)) continue;
        for (long f = a.lo; f < a.lo + long(a.c.size()); ++f) {
            if (e + f >= r.prec) break;
            const GVec& av = a.c[size_t(f - a.lo)];
            GVec& rv = r.c[size_t(e + f - r.lo)];
            for (size_t i = 0; i < rv.size(); ++i)
                if (!is_zero(av[i])) rv[i] += cs * av[i];
        }
    }
    r.normalize();
    return r;
}

GSeries gs_bracket(const LieAlgebra& L, const GSeries& a, const GSeries& b) {
    long alo = a.is_zero() ? a.prec : a.lo;
    long blo = b.is_zero() ? b.prec : b.lo;
    GSeries r;
    r.d = L.dim();
    r.prec = std::min(alo + b.prec, blo + a.prec);
    r.lo = alo + blo;
    if (a.is_zero() || b.is_zero()) {
        r.lo = r.prec;
        return r;
    }
    r.c.assign(size_t(std::max<long>(r.prec - r.lo, 0)), GVec(size_t(r.d)));
    for (long e = a.lo; e < a.lo + long(a.c.size()); ++e)
        for (long f = b.lo; f < b.lo + long(b.c.size()); ++f) {
            if (e + f >= r.prec) break;
            GVec br = L.bracket(a.c[size_t(e - a.lo)], b.c[size_t(f - b.lo)]);
            GVec& rv = r.c[size_t(e + f - r.lo)];
            for (size_t i = 0; i < rv.size(); ++i) rv[i] += br[i];
        }
    r.normalize();
    return r;
}

GSeries gs_derive(const GSeries& a) {
    GSeries r;
    r.d = a.d;
    r.prec = a.prec - 1;
    if (a.is_zero()) {
        r.lo = r.prec;
        return r;
    }
    r.lo = a.lo - 1;
    for (long e = a.lo; e < a.lo + long(a.c.size()); ++e) {
        GVec v = a.c[size_t(e - a.lo)];
        for (auto& x : v) x *= Rat(e);
        r.c.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

LaurentSeries gs_killing(const LieAlgebra& L, const GSeries& a, const GSeries& b) {
    long alo = a.is_zero() ? a.prec : a.lo;
    long blo = b.is_zero() ? b.prec : b.lo;
    long prec = std::min(alo + b.prec, blo + a.prec);
    long lo = alo + blo;
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(prec);
    std::vector<Rat> c(size_t(std::max<long>(prec - lo, 0)), Rat(0));
    for (long e = a.lo; e < a.lo + long(a.c.size()); ++e)
        for (long f = b.lo; f < b.lo + long(b.c.size()); ++f) {
            if (e + f >= prec) break;
            c[size_t(e + f - lo)] += L.killing_form(a.c[size_t(e - a.lo)], b.c[size_t(f - b.lo)]);
        }
    return LaurentSeries::from_coeffs(lo, std::move(c), prec);
}

Rat residue_pairing(const LieAlgebra& L, const GSeries& a, const GSeries& b) {
    return series_residue(gs_killing(L, a, b));
}

GSeries mat_series_apply(const MatSeries& phi, const GSeries& a) {
    GSeries r;
    r.d = a.d;
    long alo = a.is_zero() ? a.prec : a.lo;
    r.prec = std::min(a.prec, alo + phi.prec);
    r.lo = alo;
    if (a.is_zero()) {
        r.lo = r.prec;
        return r;
    }
    r.c.assign(size_t(std::max<long>(r.prec - r.lo, 0)), GVec(size_t(a.d)));
    for (long m = 0; m < phi.prec; ++m) {
        if (phi.at(m).is_zero()) continue;
        for (long e = a.lo; e < a.lo + long(a.c.size()); ++e) {
            if (m + e >= r.prec) break;
            GVec w = phi.at(m).apply(a.c[size_t(e - a.lo)]);
            GVec& rv = r.c[size_t(m + e - r.lo)];
            for (size_t i = 0; i < rv.size(); ++i) rv[i] += w[i];
        }
    }
    r.normalize();
    return r;
}

bool gs_agree_on_common_window(const GSeries& a, const GSeries& b) {
    long prec = std::min(a.prec, b.prec);
    long lo = std::min(a.is_zero() ? prec : a.lo, b.is_zero() ? prec : b.lo);
    for (long e = lo; e < prec; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

bool is_automorphism_series(const LieAlgebra& L, const MatSeries& phi, long N) {
    if (phi.prec < 1) throw WindowTooNarrow("automorphism check needs phi(0)");
    if (!phi.at(0).inverse()) return false;
    long order = std::min(N, phi.prec);
    int d = L.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            GVec ei(size_t(d), Rat(0)), ej(size_t(d), Rat(0));
            ei[size_t(i)] = 1;
            ej[size_t(j)] = 1;
            GVec bij = L.bracket(ei, ej);
            for (long m = 0; m < order; ++m) {
                // z^m coefficient of phi([b_i,b_j]) - [phi b_i, phi b_j]
                GVec lhs = phi.at(m).apply(bij);
                GVec rhs(size_t(d), Rat(0));
                for (long p = 0; p <= m; ++p) {
                    GVec u = phi.at(p).apply(ei);
                    GVec w = phi.at(m - p).apply(ej);
                    GVec br = L.bracket(u, w);
                    for (size_t t = 0; t < rhs.size(); ++t) rhs[t] += br[t];
                }
                for (size_t t = 0; t < lhs.size(); ++t)
                    if (lhs[t] != rhs[t]) return false;
            }
        }
    return true;
}

MatSeries mat_exp_series(const QMat& a, long jpow, long prec) {
    MatSeries r = MatSeries::zero(a.rows(), prec);
    QMat pow = QMat::identity(a.rows());
    Rat f(1);
    if (prec > 0) r.m[0] = pow;
    for (long m = 1; jpow * m < prec; ++m) {
        pow = pow * a;
        f /= Rat(m);
        if (pow.is_zero()) break;
        r.m[size_t(jpow * m)] = pow.scaled(f);
    }
    return r;
}

}  // namespace cybe
