#pragma once

#include "subalgebra.hpp"

namespace cybe {

// (mu, w, phi): rescaling, coordinate transformation, gauge transformation.
struct Equivalence {
    LaurentSeries mu;   // unit power series
    LaurentSeries w;    // in z Q[[z]]^x
    MatSeries phi;      // automorphism-valued series
};

void validate_equivalence(const LieAlgebra& lie, const Equivalence& e);
Equivalence identity_equivalence(int dim, long prec);
// apply e1 first, then e2
Equivalence compose_equivalences(const Equivalence& e1, const Equivalence& e2);

// r~(x,y) = mu(y) (phi(x) (x) phi(y)) r(w(x), w(y)), returned in standard form.
RMatrix apply_equivalence(const RMatrix& r, const Equivalence& e);

// coordinate equivalence (1, u, id) with u' = lambda(u); the result is
// normalized (lambda = 1).
std::pair<RMatrix, Equivalence> normalize(const RMatrix& r);

// one-variable (g (x) g)-valued Laurent series
struct GT2Series {
    long lo = 0, prec = 0;
    std::vector<GTensor2> c;

    const GTensor2* find(long e) const {
        if (e < lo || e >= lo + long(c.size())) return nullptr;
        return &c[size_t(e - lo)];
    }
};

struct DifferenceForm {
    GT2Series s;    // pole order exactly 1, window [-1, N)
    MatSeries phi;  // gauge with (phi(x) (x) phi(y)) r(x,y) = s(x-y)
    RMatrix twisted;  // the gauged carrier, for downstream checks
};

// Difference normalization: h is the bracket image of r - r_Yang, psi solves
// psi' = ad(h(z,z)) psi with psi(0) = id, and phi = psi^{-1}; the identity
// r~(x,y) = s(x-y) is re-verified coefficientwise before returning.
DifferenceForm difference_normalize(const RMatrix& r, long N);

// expand s(x-y) on the box [-Ky, Nx) x [0, Ny)
Series2<GTensor2> difference_expand(const GT2Series& s, long Nx, long Ny);

// every tracked basis element's derivative stays in W
bool derivative_closure(const Subalgebra& w);

}  // namespace cybe
