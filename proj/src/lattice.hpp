#pragma once

#include "equivalence.hpp"

namespace cybe {

// Unital subalgebra O of Q((z)) presented by an echelonized basis with
// pairwise distinct pole orders (order 0 is the constant 1).
struct MultiplierLattice {
    std::vector<LaurentSeries> basis;
    long max_order = 0;  // pole orders examined up to this bound

    std::vector<long> orders() const;
    const LaurentSeries* element_of_order(long k) const;
};

// echelon normal form: monic, zero coefficients at orders already occupied
MultiplierLattice echelonize(std::vector<LaurentSeries> elements, long max_order);
// span of all products of the generators with pole order <= max_order
MultiplierLattice lattice_from_generators(const std::vector<LaurentSeries>& gens, long max_order);

// reduce v against the echelon basis; returns the remainder
LaurentSeries lattice_reduce(const MultiplierLattice& o, const LaurentSeries& v);
bool closure_certified(const MultiplierLattice& o, std::string* why = nullptr);

struct LatticeIndex {
    long h0 = 0, h1 = 0;
    bool conclusive = false;
    std::vector<long> gaps;
};
LatticeIndex lattice_index(const MultiplierLattice& o);
// for a tail-map subalgebra the index is (0,0) by construction
LatticeIndex lattice_index(const Subalgebra& w);

struct MultiplierReport {
    MultiplierLattice lattice;
    bool no_nonconstant_power_series_multiplier = false;  // h0 = 1 certificate
    long tail_certified = 0;
    int underdetermined_orders = 0;  // orders skipped for lack of window
};
// Mult(W) = { f : f W <= W }, found by per-pole-order linear solves.
MultiplierReport multipliers(const Subalgebra& w, long max_pole, long N);

// O = Q + u' Q[u] = Q[u', u'u] for a pole-order-1 generator u
MultiplierLattice skew_O_construction(const LaurentSeries& u, long max_order);

struct WeierstrassResult {
    Rat a, b;
    LaurentSeries f, g;  // transformed: g^2 = f^3 + a f + b exactly on window
    long residual_window = 0;
};
WeierstrassResult weierstrass_reduce(LaurentSeries f, LaurentSeries g,
                                     const MultiplierLattice& o);

// Laurent tail of the Weierstrass p-function from its differential equation
// (test oracle): p = z^-2 + g2 z^2/20 + g3 z^4/28 + ...
LaurentSeries wp_series(const Rat& g2, const Rat& g3, long N);

enum class CubicKind { Elliptic, Nodal, Cuspidal, RationalSmooth, Undetermined };
const char* cubic_kind_name(CubicKind k);

struct CubicClass {
    CubicKind kind = CubicKind::Undetermined;
    std::optional<Rat> a, b;
    long window = 0;
    std::string note;
};
CubicClass classify_lattice(const MultiplierLattice& o);

struct ClassifyOptions {
    long max_pole = 6;
    int depth = 8;
    long tail = 14;
};

struct ClassifyReport {
    CubicClass cubic;
    bool skew = false;
    long verified_order = 0;
    LatticeIndex mult_index;
    std::vector<long> mult_orders;
    std::string branch;
};
// extract -> multipliers -> trichotomy; Undetermined is a first-class output.
ClassifyReport classify_rmatrix(const RMatrix& r, long N, const ClassifyOptions& opt = {});

}  // namespace cybe
