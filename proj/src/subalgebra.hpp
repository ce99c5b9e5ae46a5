#pragma once

#include "rmatrix.hpp"

namespace cybe {

// Complementary subalgebra W with g((z)) = g[[z]] (+) W, presented through
// its tail map: the basis element of pole depth k+1 in direction i is
//   r_{k,i}(z) = b_i z^{-k-1} + tails[k][i](z),   tails[k][i] in g[[z]].
// Complementarity is baked into the presentation; closure is a property
// that closure_check certifies on a window.
struct Subalgebra {
    LiePtr lie;
    int depth = 0;        // tracked pole orders k = 0..depth-1
    long tail_prec = 0;   // tails known on [0, tail_prec)
    std::vector<std::vector<GSeries>> tails;  // [k][i]

    GSeries basis_element(int k, int i) const;
    void validate() const;
};

// tails read off the expansion columns of r (second leg contracted against
// the dual basis).  Non-normalized input is first divided by lambda(y).
Subalgebra extract_subalgebra(const RMatrix& r, int depth, long tail_prec);
RMatrix reconstruct_r(const Subalgebra& w);

struct MembershipResult {
    bool member = false;
    long residual_window = 0;  // residual was checked on [0, residual_window)
};
// v must have pole depth < tracked depth; deeper poles raise WindowTooNarrow.
MembershipResult membership(const Subalgebra& w, const GSeries& v);

struct ClosureReport {
    bool closed = true;
    long order = 0;           // memberships certified to this order
    int pairs_checked = 0;
    int pairs_unverified = 0;  // combined pole depth beyond the tracked window
    std::string witness;       // first failing pair, if any
};
ClosureReport closure_check(const Subalgebra& w, long N);

// iterated brackets of the depth-one elements span every tracked depth
// (and stay inside W), mirroring the generation-by-lowest-depth induction.
bool generators_check(const Subalgebra& w, int K, long N, std::string* why = nullptr);

struct OrthogonalityReport {
    bool orthogonal = false;       // kappa_0(W, bar W) = 0 pairwise
    bool self_orthogonal = false;  // tails of W and bar W coincide (<=> skew)
    int pairs = 0;
};
OrthogonalityReport orthogonality_check(const RMatrix& r, int depth, long tail_prec);

// per-coordinate composition a(w(z))
GSeries gs_compose(const GSeries& a, const LaurentSeries& w);

// canonical tail-map presentation of the span of elements[k][i], each of
// pole depth exactly k+1 with jointly invertible leading coefficients.
Subalgebra canonicalize_spanning(LiePtr lie, int depth, long tail_prec,
                                 const std::vector<std::vector<GSeries>>& elements);

// W = span{ z^{-k-1} A(z) b_i }; Abar is the kappa-adjoint inverse of A.
std::pair<Subalgebra, MatSeries> homogeneous_from_A(LiePtr lie, const MatSeries& a, int depth,
                                                    long tail_prec);
// r(x,y) = (A(x) (x) Abar(y)) gamma / (x-y), in standard form.
RMatrix homogeneous_formula(LiePtr lie, const MatSeries& a, const MatSeries& abar, long Nx,
                            long Ny);
// the so(n) map a |-> (1-Az)^{1/2} a (1-Az)^{1/2}, diagonal on the X_ij basis
// with eigenvalue alpha_i(z) alpha_j(z), alpha_i = (1 - a_i z)^{1/2}.
MatSeries skrypnyk_A(const LieAlgebra& so_n, const std::vector<Rat>& a, long prec);

// image of W under a(z) -> phi(z) a(w(z)), re-presented as a tail map.
Subalgebra transport_subalgebra(const Subalgebra& w, const MatSeries& phi,
                                const LaurentSeries& wcoord, int depth, long tail_prec);

// delta(a)(x,y) = [a(x) (x) 1 + 1 (x) a(y), r(x,y)]; doubly Laurent.
Series2<GTensor2> cobracket(const RMatrix& r, const GSeries& a, int depth, long tail_prec);

struct CobracketReport {
    bool membership_ok = false;
    bool cocycle_ok = false;
    bool dual_bracket_ok = false;
    long order = 0;
    std::string detail;
};
// all three Lie-bialgebra checks for basis elements of depth 0 and 1;
// requires cyb(r) = 0 to order N (NotSkew otherwise).
CobracketReport cobracket_checks(const RMatrix& r, long N);

}  // namespace cybe
