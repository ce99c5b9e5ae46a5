#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "matseries.hpp"

namespace cybe {

using GVec = std::vector<Rat>;  // coordinates in the algebra basis

struct GTensor2 {
    int d = 0;
    std::vector<Rat> v;

    GTensor2() = default;
    explicit GTensor2(int dim) : d(dim), v(size_t(dim) * dim) {}

    Rat& at(int i, int j) { return v[size_t(i) * d + j]; }
    const Rat& at(int i, int j) const { return v[size_t(i) * d + j]; }
    bool is_zero() const {
        for (const auto& x : v)
            if (!cybe::is_zero(x)) return false;
        return true;
    }
    GTensor2& operator+=(const GTensor2& o) {
        if (d == 0) *this = GTensor2(o.d);
        for (size_t k = 0; k < v.size(); ++k) v[k] += o.v[k];
        return *this;
    }
    GTensor2 scaled(const Rat& c) const {
        GTensor2 r(d);
        for (size_t k = 0; k < v.size(); ++k) r.v[k] = v[k] * c;
        return r;
    }
    GTensor2 flip() const {  // tau(a (x) b) = b (x) a
        GTensor2 r(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    friend GTensor2 operator+(GTensor2 a, const GTensor2& b) { return a += b; }
    friend GTensor2 operator-(const GTensor2& a, const GTensor2& b) {
        return a + b.scaled(Rat(-1));
    }
    friend bool operator==(const GTensor2& a, const GTensor2& b) {
        return a.d == b.d && a.v == b.v;
    }
};

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

// Finite-dimensional Lie algebra over Q given by exact structure constants.
// Construction verifies antisymmetry, the Jacobi identity and nondegeneracy
// of the Killing form; the centroid is solved for to decide centrality.
class LieAlgebra {
  public:
    static LiePtr sl(int n);
    static LiePtr so(int n);
    static LiePtr from_structure_constants(int dim,
                                           const std::vector<std::tuple<int, int, int, Rat>>& sc,
                                           std::string name = "custom",
                                           std::vector<std::string> labels = {});
    // rebuild in the basis b'_i = sum_j P_ij b_j (P invertible); for tests.
    LiePtr change_basis(const QMat& p) const;

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool central() const { return central_; }

    const std::vector<std::pair<int, Rat>>& bracket_basis(int i, int j) const {
        return table_[size_t(i) * dim_ + j];
    }
    GVec bracket(const GVec& a, const GVec& b) const;
    const QMat& killing() const { return killing_; }
    const QMat& dual_change() const { return dual_change_; }
    Rat killing_form(const GVec& a, const GVec& b) const;
    const QMat& ad(int i) const { return ad_[size_t(i)]; }
    QMat ad_vec(const GVec& a) const;
    GVec dual_basis_vector(int i) const;  // b^i with kappa(b_j, b^i) = delta_j^i

    const GTensor2& casimir() const;
    std::vector<std::tuple<int, int, int, Rat>> structure_constants() const;

  private:
    LieAlgebra() = default;
    void finalize();

    int dim_ = 0;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<int, Rat>>> table_;
    std::vector<QMat> ad_;
    QMat killing_, dual_change_;
    bool central_ = false;
    mutable GTensor2 casimir_;
    mutable bool casimir_ready_ = false;
};

// ---- tensor / series helpers over a Lie algebra ----

// [a (x) 1, t] and [1 (x) a, t]
GTensor2 bracket_leg1(const LieAlgebra& L, const GVec& a, const GTensor2& t);
GTensor2 bracket_leg2(const LieAlgebra& L, const GVec& a, const GTensor2& t);
// image of t under a1 (x) a2 -> [a1, a2]
GVec bracket_contract(const LieAlgebra& L, const GTensor2& t);
// image of t under a1 (x) a2 -> ad(a1) ad(a2)
QMat mu_map(const LieAlgebra& L, const GTensor2& t);
// (id (x) kappa(b_i, .)) t
GVec contract_second_killing(const LieAlgebra& L, const GTensor2& t, int i);
// (kappa(., b_i) (x) kappa(., b_j)) t
Rat contract_both_killing(const LieAlgebra& L, const GTensor2& t, int i, int j);
// second-leg plain coordinate: t = sum_b u_b (x) b_b -> u_b
GVec second_leg_coordinate(const GTensor2& t, int b);
GVec first_leg_coordinate(const GTensor2& t, int a);
GTensor2 outer(const GVec& a, const GVec& b);
// T'_{ij} = sum_{ab} T_ab Pinv_ai Pinv_bj   (basis change transport)
GTensor2 tensor_change_basis(const GTensor2& t, const QMat& pinv);
GTensor2 apply_pair(const QMat& m1, const QMat& m2, const GTensor2& t);

// g-valued Laurent series with a uniform window.
struct GSeries {
    long lo = 0, prec = 0;
    std::vector<GVec> c;  // exponents lo .. lo+size-1
    int d = 0;

    static GSeries zero(int dim, long prec) {
        GSeries s;
        s.d = dim;
        s.lo = prec;
        s.prec = prec;
        return s;
    }
    static GSeries monomial(const GVec& v, long exp, long prec);
    bool is_zero() const;
    GVec coeff(long e) const;  // throws WindowTooNarrow beyond prec
    void normalize();
};

GSeries gs_add(const GSeries& a, const GSeries& b);
GSeries gs_scale(const GSeries& a, const Rat& c);
GSeries gs_sub(const GSeries& a, const GSeries& b);
GSeries gs_mul_scalar(const LaurentSeries& s, const GSeries& a);
GSeries gs_bracket(const LieAlgebra& L, const GSeries& a, const GSeries& b);
GSeries gs_derive(const GSeries& a);
LaurentSeries gs_killing(const LieAlgebra& L, const GSeries& a, const GSeries& b);
// kappa_0(s,t) = res_0 kappa(s,t) dz
Rat residue_pairing(const LieAlgebra& L, const GSeries& a, const GSeries& b);
GSeries mat_series_apply(const MatSeries& phi, const GSeries& a);
bool gs_agree_on_common_window(const GSeries& a, const GSeries& b);

// phi(0) invertible and phi([a,b]) = [phi a, phi b] mod z^N on all basis pairs.
bool is_automorphism_series(const LieAlgebra& L, const MatSeries& phi, long N);

// exp(z^jpow * A) truncated to the window; exact when A is nilpotent.
MatSeries mat_exp_series(const QMat& a, long jpow, long prec);

}  // namespace cybe
