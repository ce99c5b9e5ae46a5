// Regenerates the JSON fixtures under fixtures/.  Run from the repo root:
//   ./build/gen_fixtures fixtures

#include <filesystem>
#include <fstream>
#include <iostream>

#include "io.hpp"

using namespace cybe;

namespace {

void write_doc(const std::filesystem::path& dir, const std::string& name, const std::string& kind,
               Json body) {
    Document d;
    d.kind = kind;
    d.body = std::move(body);
    std::ofstream f(dir / name);
    f << emit_document(d);
    std::cout << "wrote " << (dir / name).string() << "\n";
}

Json builtin_lie(const std::string& family, int n) {
    Json j;
    Json b;
    b["family"] = family;
    b["n"] = n;
    j["builtin"] = b;
    return j;
}

RMatrix trig_carrier(LiePtr L, const GTensor2& t, long Nx, long Ny) {
    long P = Nx + Ny + 4;
    std::vector<Rat> em1;
    Rat f(1);
    em1.push_back(Rat(0));
    for (long k = 1; k < P; ++k) {
        f /= Rat(k);
        em1.push_back(f);
    }
    LaurentSeries expm1 = LaurentSeries::from_coeffs(0, std::move(em1), P);
    LaurentSeries inv = series_div(LaurentSeries::constant(Rat(1), P), expm1);
    GT2Series s;
    s.lo = -1;
    s.prec = inv.prec();
    s.c.assign(size_t(s.prec + 1), GTensor2(L->dim()));
    const GTensor2& gamma = L->casimir();
    for (long e = -1; e < inv.prec(); ++e) s.c[size_t(e + 1)] = gamma.scaled(inv.coeff(e));
    s.c[1] += t;
    auto view = difference_expand(s, Nx, Ny);
    RMatrix r;
    r.lie = L;
    r.lambda = LaurentSeries::constant(Rat(1), Ny);
    r.r0.xlo = r.r0.ylo = 0;
    r.r0.xprec = Nx;
    r.r0.yprec = Ny;
    for (const auto& [key, v] : view.c)
        if (key.first >= 0) r.r0.add(key.first, key.second, v);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);

    write_doc(dir, "sl2.json", "lie_algebra", builtin_lie("sl", 2));
    write_doc(dir, "sl3.json", "lie_algebra", builtin_lie("sl", 3));
    write_doc(dir, "so3.json", "lie_algebra", builtin_lie("so", 3));

    auto sl2 = LieAlgebra::sl(2);
    auto sl3 = LieAlgebra::sl(3);

    write_doc(dir, "yang_sl2.json", "rmatrix", rmatrix_to_json(yang(sl2, 40, 40)));
    write_doc(dir, "yang_sl3.json", "rmatrix", rmatrix_to_json(yang(sl3, 40, 40)));

    auto one_plus_y = LaurentSeries::from_coeffs(0, {Rat(1), Rat(1)}, 40);
    write_doc(dir, "rescaled_yang_sl2.json", "rmatrix",
              rmatrix_to_json(rescale(yang(sl2, 40, 40), one_plus_y)));

    // gauge twist by exp(z ad e)
    {
        auto phi0 = mat_exp_series(sl2->ad(0), 1, 90);
        auto gauge = identity_equivalence(3, 90);
        gauge.phi = phi0;
        auto r = apply_equivalence(yang(sl2, 40, 40), gauge);
        write_doc(dir, "twisted_yang_sl2.json", "rmatrix", rmatrix_to_json(r));
        Equivalence small = identity_equivalence(3, 24);
        small.phi = mat_exp_series(sl2->ad(0), 1, 24);
        write_doc(dir, "equiv_gauge_e_sl2.json", "equivalence", equivalence_to_json(small));
    }

    // trigonometric fixture: s(z) = gamma/(e^z - 1) + t with the frozen
    // constant t = f (x) e / 4 + h (x) h / 16
    {
        const auto& gamma = sl2->casimir();
        GTensor2 skewdir(3);
        skewdir.at(0, 2) = 1;
        skewdir.at(2, 0) = -1;
        GTensor2 t = gamma.scaled(rat_of(1, 2)) + skewdir.scaled(rat_of(-1, 8));
        write_doc(dir, "trig_sl2.json", "rmatrix",
                  rmatrix_to_json(trig_carrier(sl2, t, 18, 12)));
    }

    // skrypnyk series on so(3) with (a1, a2, a3) = (1, 2, 3)
    {
        auto so3 = LieAlgebra::so(3);
        auto A = skrypnyk_A(*so3, {Rat(1), Rat(2), Rat(3)}, 30);
        auto [w, abar] = homogeneous_from_A(so3, A, 8, 18);
        write_doc(dir, "skrypnyk_so3.json", "rmatrix", rmatrix_to_json(reconstruct_r(w)));
    }

    // yang's subalgebra as a tail map
    {
        Subalgebra w;
        w.lie = sl2;
        w.depth = 8;
        w.tail_prec = 14;
        w.tails.assign(8, std::vector<GSeries>(3, GSeries::zero(3, 14)));
        write_doc(dir, "yang_w_sl2.json", "subalgebra", subalgebra_to_json(w));
    }

    // lattices
    {
        auto p4 = wp_series(Rat(4), Rat(0), 18);
        auto g4 = series_derive(p4).scaled(rat_of(1, 2));
        write_doc(dir, "wp_lattice_g2_4.json", "lattice",
                  lattice_to_json(lattice_from_generators({p4, g4}, 6)));
        auto p3 = wp_series(Rat(0), Rat(4), 18);
        auto g3 = series_derive(p3).scaled(rat_of(1, 2));
        write_doc(dir, "wp_lattice_g3_4.json", "lattice",
                  lattice_to_json(lattice_from_generators({p3, g3}, 6)));
        write_doc(dir, "z23_lattice.json", "lattice",
                  lattice_to_json(lattice_from_generators(
                      {LaurentSeries::monomial(Rat(1), -2, 18),
                       LaurentSeries::monomial(Rat(1), -3, 18)},
                      6)));
    }
    return 0;
}
