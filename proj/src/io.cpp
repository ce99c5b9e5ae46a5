#include "io.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace cybe {

namespace {

[[noreturn]] void fail_input(const std::string& msg) { throw Error(msg); }

void expect_fields(const Json& j, const std::set<std::string>& required,
                   const std::set<std::string>& optional, const std::string& where) {
    if (!j.is_object()) fail_input(where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            fail_input("unknown field '" + key + "' in " + where);
    }
    for (const auto& key : required)
        if (!j.contains(key)) fail_input("missing field '" + key + "' in " + where);
}

long get_long(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail_input(where + " must be an integer");
    return j.get<long>();
}

Rat get_rat(const Json& j, const std::string& where) {
    if (!j.is_string()) fail_input(where + " must be a rational string");
    return rat_parse(j.get<std::string>());
}

GTensor2 tensor_from_json(const Json& j, int d, const std::string& where) {
    if (!j.is_array()) fail_input(where + " must be an array of [i, j, value]");
    GTensor2 t(d);
    for (const auto& ent : j) {
        if (!ent.is_array() || ent.size() != 3) fail_input(where + " entries are [i, j, value]");
        long a = get_long(ent[0], where), b = get_long(ent[1], where);
        if (a < 0 || a >= d || b < 0 || b >= d) fail_input(where + " index out of range");
        t.at(int(a), int(b)) = get_rat(ent[2], where);
    }
    return t;
}

Json tensor_to_json(const GTensor2& t) {
    Json out = Json::array();
    for (int i = 0; i < t.d; ++i)
        for (int j = 0; j < t.d; ++j)
            if (!is_zero(t.at(i, j))) out.push_back(Json::array({i, j, rat_str(t.at(i, j))}));
    return out;
}

}  // namespace

Json series_to_json(const LaurentSeries& s) {
    Json j;
    j["lo"] = s.is_zero() ? s.prec() : s.lo();
    j["prec"] = s.prec();
    Json coeffs = Json::array();
    if (!s.is_zero())
        for (long e = s.lo(); e < s.coeff_end(); ++e) coeffs.push_back(rat_str(s.coeff(e)));
    j["coeffs"] = coeffs;
    return j;
}

LaurentSeries series_from_json(const Json& j) {
    expect_fields(j, {"lo", "prec", "coeffs"}, {}, "series");
    long lo = get_long(j["lo"], "series.lo");
    long prec = get_long(j["prec"], "series.prec");
    if (!j["coeffs"].is_array()) fail_input("series.coeffs must be an array");
    std::vector<Rat> c;
    for (const auto& x : j["coeffs"]) c.push_back(get_rat(x, "series coefficient"));
    if (lo + long(c.size()) > prec) fail_input("series has more coefficients than its window");
    return LaurentSeries::from_coeffs(lo, std::move(c), prec);
}

Json lie_to_json(const LieAlgebra& lie) {
    Json j;
    j["dim"] = lie.dim();
    j["name"] = lie.name();
    Json sc = Json::array();
    for (const auto& [a, b, k, c] : lie.structure_constants())
        sc.push_back(Json::array({a, b, k, rat_str(c)}));
    j["structure_constants"] = sc;
    Json labels = Json::array();
    for (const auto& l : lie.labels()) labels.push_back(l);
    j["basis_labels"] = labels;
    return j;
}

LiePtr lie_from_json(const Json& j) {
    if (j.contains("builtin")) {
        expect_fields(j, {"builtin"}, {}, "lie_algebra");
        expect_fields(j["builtin"], {"family", "n"}, {}, "lie_algebra.builtin");
        std::string fam = j["builtin"]["family"].get<std::string>();
        long n = get_long(j["builtin"]["n"], "builtin.n");
        if (fam == "sl") return LieAlgebra::sl(int(n));
        if (fam == "so") return LieAlgebra::so(int(n));
        fail_input("unknown builtin family '" + fam + "'");
    }
    expect_fields(j, {"dim", "structure_constants"}, {"name", "basis_labels"}, "lie_algebra");
    int d = int(get_long(j["dim"], "lie.dim"));
    std::vector<std::tuple<int, int, int, Rat>> sc;
    for (const auto& ent : j["structure_constants"]) {
        if (!ent.is_array() || ent.size() != 4)
            fail_input("structure constant entries are [i, j, k, value]");
        sc.emplace_back(int(get_long(ent[0], "sc.i")), int(get_long(ent[1], "sc.j")),
                        int(get_long(ent[2], "sc.k")), get_rat(ent[3], "sc.value"));
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "custom";
    std::vector<std::string> labels;
    if (j.contains("basis_labels"))
        for (const auto& l : j["basis_labels"]) labels.push_back(l.get<std::string>());
    return LieAlgebra::from_structure_constants(d, sc, name, labels);
}

Json rmatrix_to_json(const RMatrix& r) {
    Json j;
    j["lie"] = lie_to_json(*r.lie);
    j["lambda"] = series_to_json(r.lambda);
    Json r0;
    r0["xprec"] = r.r0.xprec;
    r0["yprec"] = r.r0.yprec;
    Json terms = Json::array();
    for (const auto& [key, t] : r.r0.c)
        terms.push_back(Json::array({key.first, key.second, tensor_to_json(t)}));
    r0["terms"] = terms;
    j["r0"] = r0;
    return j;
}

RMatrix rmatrix_from_json(const Json& j) {
    expect_fields(j, {"lie", "lambda", "r0"}, {}, "rmatrix");
    RMatrix r;
    r.lie = lie_from_json(j["lie"]);
    r.lambda = series_from_json(j["lambda"]);
    expect_fields(j["r0"], {"xprec", "yprec", "terms"}, {}, "rmatrix.r0");
    r.r0.xlo = 0;
    r.r0.ylo = 0;
    r.r0.xprec = get_long(j["r0"]["xprec"], "r0.xprec");
    r.r0.yprec = get_long(j["r0"]["yprec"], "r0.yprec");
    for (const auto& ent : j["r0"]["terms"]) {
        if (!ent.is_array() || ent.size() != 3) fail_input("r0 terms are [p, q, tensor]");
        long p = get_long(ent[0], "r0.p"), q = get_long(ent[1], "r0.q");
        if (p < 0 || q < 0) fail_input("r0 must be a power series");
        if (p >= r.r0.xprec || q >= r.r0.yprec) fail_input("r0 term outside its window");
        r.r0.add(p, q, tensor_from_json(ent[2], r.lie->dim(), "r0 tensor"));
    }
    r.validate();
    return r;
}

Json subalgebra_to_json(const Subalgebra& w) {
    Json j;
    j["lie"] = lie_to_json(*w.lie);
    j["depth"] = w.depth;
    j["tail_prec"] = w.tail_prec;
    Json tails = Json::array();
    for (int k = 0; k < w.depth; ++k)
        for (int i = 0; i < w.lie->dim(); ++i) {
            const GSeries& t = w.tails[size_t(k)][size_t(i)];
            if (t.is_zero()) continue;
            Json entries = Json::array();
            for (long e = t.lo; e < t.lo + long(t.c.size()); ++e)
                for (int s = 0; s < w.lie->dim(); ++s)
                    if (!is_zero(t.c[size_t(e - t.lo)][size_t(s)]))
                        entries.push_back(
                            Json::array({e, s, rat_str(t.c[size_t(e - t.lo)][size_t(s)])}));
            tails.push_back(Json::array({k, i, entries}));
        }
    j["tails"] = tails;
    return j;
}

Subalgebra subalgebra_from_json(const Json& j) {
    expect_fields(j, {"lie", "depth", "tail_prec", "tails"}, {}, "subalgebra");
    Subalgebra w;
    w.lie = lie_from_json(j["lie"]);
    int d = w.lie->dim();
    w.depth = int(get_long(j["depth"], "subalgebra.depth"));
    w.tail_prec = get_long(j["tail_prec"], "subalgebra.tail_prec");
    if (w.depth < 1) fail_input("subalgebra.depth must be positive");
    w.tails.assign(size_t(w.depth),
                   std::vector<GSeries>(size_t(d), GSeries::zero(d, w.tail_prec)));
    for (const auto& ent : j["tails"]) {
        if (!ent.is_array() || ent.size() != 3) fail_input("tails entries are [k, i, entries]");
        long k = get_long(ent[0], "tail.k");
        long i = get_long(ent[1], "tail.i");
        if (k < 0 || k >= w.depth || i < 0 || i >= d) fail_input("tail index out of range");
        GSeries t = GSeries::zero(d, w.tail_prec);
        t.lo = 0;
        t.c.assign(size_t(std::max<long>(w.tail_prec, 0)), GVec(size_t(d), Rat(0)));
        for (const auto& e3 : ent[2]) {
            if (!e3.is_array() || e3.size() != 3) fail_input("tail entries are [e, s, value]");
            long e = get_long(e3[0], "tail.e");
            long s = get_long(e3[1], "tail.s");
            if (e < 0 || e >= w.tail_prec || s < 0 || s >= d)
                fail_input("tail entry out of range");
            t.c[size_t(e)][size_t(s)] = get_rat(e3[2], "tail value");
        }
        t.normalize();
        w.tails[size_t(k)][size_t(i)] = std::move(t);
    }
    w.validate();
    return w;
}

Json lattice_to_json(const MultiplierLattice& o) {
    Json j;
    j["max_order"] = o.max_order;
    Json basis = Json::array();
    for (const auto& b : o.basis) basis.push_back(series_to_json(b));
    j["basis"] = basis;
    return j;
}

MultiplierLattice lattice_from_json(const Json& j) {
    expect_fields(j, {"max_order", "basis"}, {}, "lattice");
    std::vector<LaurentSeries> basis;
    for (const auto& b : j["basis"]) basis.push_back(series_from_json(b));
    MultiplierLattice o = echelonize(std::move(basis), get_long(j["max_order"], "max_order"));
    return o;
}

Json equivalence_to_json(const Equivalence& e) {
    Json j;
    j["mu"] = series_to_json(e.mu);
    j["w"] = series_to_json(e.w);
    Json phi;
    phi["prec"] = e.phi.prec;
    phi["dim"] = e.phi.dim();
    Json terms = Json::array();
    for (long m = 0; m < e.phi.prec; ++m) {
        const QMat& q = e.phi.at(m);
        for (int a = 0; a < q.rows(); ++a)
            for (int b = 0; b < q.cols(); ++b)
                if (!is_zero(q.at(a, b)))
                    terms.push_back(Json::array({m, a, b, rat_str(q.at(a, b))}));
    }
    phi["terms"] = terms;
    j["phi"] = phi;
    return j;
}

Equivalence equivalence_from_json(const Json& j, const LieAlgebra& lie) {
    expect_fields(j, {"mu", "w", "phi"}, {}, "equivalence");
    Equivalence e;
    e.mu = series_from_json(j["mu"]);
    e.w = series_from_json(j["w"]);
    expect_fields(j["phi"], {"prec", "dim", "terms"}, {}, "equivalence.phi");
    long prec = get_long(j["phi"]["prec"], "phi.prec");
    int d = int(get_long(j["phi"]["dim"], "phi.dim"));
    if (d != lie.dim()) fail_input("gauge dimension does not match the Lie algebra");
    e.phi = MatSeries::zero(d, prec);
    for (const auto& ent : j["phi"]["terms"]) {
        if (!ent.is_array() || ent.size() != 4) fail_input("phi terms are [m, i, j, value]");
        long m = get_long(ent[0], "phi.m");
        long a = get_long(ent[1], "phi.i"), b = get_long(ent[2], "phi.j");
        if (m < 0 || m >= prec || a < 0 || a >= d || b < 0 || b >= d)
            fail_input("phi term out of range");
        e.phi.at_mut(m).at(int(a), int(b)) = get_rat(ent[3], "phi value");
    }
    validate_equivalence(lie, e);
    return e;
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        size_t byte = ex.byte;
        int line = 1, col = 1;
        for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(ex.what(), line, col);
    }
    expect_fields(j, {"schema_version", "kind", "body"}, {}, "document");
    if (!j["schema_version"].is_string() || j["schema_version"] != kSchemaVersion)
        throw SchemaVersionMismatch("expected schema_version \"" + std::string(kSchemaVersion) +
                                    "\"");
    Document d;
    d.kind = j["kind"].get<std::string>();
    d.body = j["body"];
    static const std::set<std::string> kinds{"lie_algebra", "rmatrix", "subalgebra",
                                             "lattice",     "equivalence", "report"};
    if (!kinds.count(d.kind)) fail_input("unknown document kind '" + d.kind + "'");
    // validate the payload now so malformed documents fail at parse time
    if (d.kind == "lie_algebra") lie_from_json(d.body);
    if (d.kind == "rmatrix") rmatrix_from_json(d.body);
    if (d.kind == "subalgebra") subalgebra_from_json(d.body);
    if (d.kind == "lattice") lattice_from_json(d.body);
    return d;
}

std::string emit_document(const Document& doc) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = doc.kind;
    j["body"] = doc.body;
    return j.dump(2) + "\n";
}

// ---- command dispatch ----

namespace {

Document make_report(const std::string& command, const std::string& verdict, int exit_code,
                     Json fields) {
    Document d;
    d.kind = "report";
    Json b;
    b["command"] = command;
    b["verdict"] = verdict;
    b["exit_code"] = exit_code;
    for (auto& [k, v] : fields.items()) b[k] = v;
    d.body = std::move(b);
    return d;
}

Json witness_to_json(const Witness& w) {
    Json j;
    j["exponents"] = Json::array({w.exponents[0], w.exponents[1], w.exponents[2]});
    j["tensor_index"] = Json::array({w.tensor_index[0], w.tensor_index[1], w.tensor_index[2]});
    j["value"] = rat_str(w.value);
    return j;
}

long option_long(const Json& options, const std::string& key, long fallback) {
    if (options.contains(key)) return get_long(options[key], "option " + key);
    return fallback;
}

long default_order() {
    if (const char* env = std::getenv("CYBE_DEFAULT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 6;
}

const Document& input_of_kind(const std::vector<Document>& inputs, const std::string& kind,
                              const std::string& command) {
    for (const auto& d : inputs)
        if (d.kind == kind) return d;
    fail_input(command + " needs a " + kind + " input document");
}

CommandResult dispatch(const std::string& command, const Json& options,
                       const std::vector<Document>& inputs) {
    if (command == "verify") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        std::string eq = options.contains("equation") ? options["equation"].get<std::string>()
                                                      : "gcybe";
        long order = option_long(options, "order", default_order());
        VerifyReport rep = eq == "cybe" ? is_rmatrix(r, order) : is_generalized_rmatrix(r, order);
        Json f;
        f["equation"] = eq;
        f["order"] = rep.order;
        f["certified_cube_order"] = rep.cube_order;
        f["negatives_vanish"] = rep.negatives_ok;
        if (rep.witness) f["witness"] = witness_to_json(*rep.witness);
        return {rep.ok ? 0 : 1, make_report(command, rep.ok ? "verified" : "fails", rep.ok ? 0 : 1,
                                            std::move(f))};
    }
    if (command == "skew-check") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        RMatrix rb = bar(r);
        long xp = std::min(r.r0.xprec, rb.r0.xprec);
        long yp = std::min(r.r0.yprec, rb.r0.yprec);
        bool skew = is_skew(r);
        Json f;
        f["skew"] = skew;
        f["window"] = Json::array({xp, yp});
        if (!skew) {
            // witness: first slot where r0 and bar(r0) differ
            for (long p = 0; p < xp && !f.contains("witness"); ++p)
                for (long q = 0; q < yp && !f.contains("witness"); ++q) {
                    const GTensor2* a = r.r0.find(p, q);
                    const GTensor2* b = rb.r0.find(p, q);
                    GTensor2 da = a ? *a : GTensor2(r.lie->dim());
                    GTensor2 db = b ? *b : GTensor2(r.lie->dim());
                    GTensor2 diff = da - db;
                    if (diff.is_zero()) continue;
                    for (int i = 0; i < diff.d && !f.contains("witness"); ++i)
                        for (int j = 0; j < diff.d; ++j)
                            if (!is_zero(diff.at(i, j))) {
                                Json w;
                                w["exponents"] = Json::array({p, q});
                                w["tensor_index"] = Json::array({i, j});
                                w["value"] = rat_str(diff.at(i, j));
                                f["witness"] = w;
                                break;
                            }
                }
        }
        return {skew ? 0 : 1,
                make_report(command, skew ? "skew" : "not-skew", skew ? 0 : 1, std::move(f))};
    }
    if (command == "extract") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        long depth = option_long(options, "depth", 8);
        long tail = option_long(options, "tail-prec", 14);
        Subalgebra w = extract_subalgebra(r, int(depth), tail);
        Document d;
        d.kind = "subalgebra";
        d.body = subalgebra_to_json(w);
        return {0, d};
    }
    if (command == "reconstruct") {
        Subalgebra w = subalgebra_from_json(input_of_kind(inputs, "subalgebra", command).body);
        Document d;
        d.kind = "rmatrix";
        d.body = rmatrix_to_json(reconstruct_r(w));
        return {0, d};
    }
    if (command == "normalize") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        auto [rn, e] = normalize(r);
        Json f;
        f["rmatrix"] = rmatrix_to_json(rn);
        f["equivalence"] = equivalence_to_json(e);
        return {0, make_report(command, "normalized", 0, std::move(f))};
    }
    if (command == "equiv-apply") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        Equivalence e =
            equivalence_from_json(input_of_kind(inputs, "equivalence", command).body, *r.lie);
        Document d;
        d.kind = "rmatrix";
        d.body = rmatrix_to_json(apply_equivalence(r, e));
        return {0, d};
    }
    if (command == "diff-normalize") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        long order = option_long(options, "order", default_order());
        DifferenceForm df = difference_normalize(r, order);
        Json f;
        Json s;
        s["lo"] = df.s.lo;
        s["prec"] = df.s.prec;
        Json terms = Json::array();
        for (long e = df.s.lo; e < df.s.lo + long(df.s.c.size()); ++e) {
            const GTensor2& t = df.s.c[size_t(e - df.s.lo)];
            if (!t.is_zero()) terms.push_back(Json::array({e, tensor_to_json(t)}));
        }
        s["terms"] = terms;
        f["s"] = s;
        Equivalence ge;
        ge.mu = LaurentSeries::constant(Rat(1), df.phi.prec);
        ge.w = LaurentSeries::monomial(Rat(1), 1, df.phi.prec);
        ge.phi = df.phi;
        f["gauge"] = equivalence_to_json(ge);
        f["twisted"] = rmatrix_to_json(df.twisted);
        return {0, make_report(command, "difference-form", 0, std::move(f))};
    }
    if (command == "cobracket-check") {
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        long order = option_long(options, "order", 4);
        CobracketReport rep = cobracket_checks(r, order);
        bool ok = rep.membership_ok && rep.cocycle_ok && rep.dual_bracket_ok;
        Json f;
        f["membership"] = rep.membership_ok;
        f["cocycle"] = rep.cocycle_ok;
        f["dual_bracket"] = rep.dual_bracket_ok;
        f["order"] = rep.order;
        if (!rep.detail.empty()) f["detail"] = rep.detail;
        return {ok ? 0 : 1,
                make_report(command, ok ? "bialgebra" : "fails", ok ? 0 : 1, std::move(f))};
    }
    if (command == "multipliers") {
        long max_pole = option_long(options, "max-pole", 6);
        long order = option_long(options, "order", 14);
        Subalgebra w = [&] {
            for (const auto& d : inputs)
                if (d.kind == "subalgebra") return subalgebra_from_json(d.body);
            RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
            return extract_subalgebra(r, int(option_long(options, "depth", 8)),
                                      option_long(options, "tail-prec", 14));
        }();
        MultiplierReport rep = multipliers(w, max_pole, order);
        std::string why;
        bool closed = closure_certified(rep.lattice, &why);
        LatticeIndex idx = lattice_index(rep.lattice);
        Json f;
        f["orders"] = rep.lattice.orders();
        f["lattice"] = lattice_to_json(rep.lattice);
        f["closure_certified"] = closed;
        f["h0_certificate"] = rep.no_nonconstant_power_series_multiplier;
        f["tail_certified"] = rep.tail_certified;
        f["underdetermined_orders"] = rep.underdetermined_orders;
        f["h0"] = idx.h0;
        f["h1"] = idx.h1;
        f["conclusive"] = idx.conclusive;
        if (!closed) f["why"] = why;
        return {closed ? 0 : 1,
                make_report(command, closed ? "lattice" : "closure-fails", closed ? 0 : 1,
                            std::move(f))};
    }
    if (command == "classify") {
        long order = option_long(options, "order", 3);
        ClassifyOptions copt;
        copt.max_pole = option_long(options, "max-pole", copt.max_pole);
        copt.depth = int(option_long(options, "depth", copt.depth));
        copt.tail = option_long(options, "tail-prec", copt.tail);
        const Document* latdoc = nullptr;
        for (const auto& d : inputs)
            if (d.kind == "lattice") latdoc = &d;
        if (latdoc) {
            CubicClass c = classify_lattice(lattice_from_json(latdoc->body));
            Json f;
            f["kind"] = cubic_kind_name(c.kind);
            if (c.a) f["a"] = rat_str(*c.a);
            if (c.b) f["b"] = rat_str(*c.b);
            f["certified_window"] = c.window;
            if (!c.note.empty()) f["note"] = c.note;
            bool det = c.kind != CubicKind::Undetermined;
            return {det ? 0 : 2,
                    make_report(command, cubic_kind_name(c.kind), det ? 0 : 2, std::move(f))};
        }
        RMatrix r = rmatrix_from_json(input_of_kind(inputs, "rmatrix", command).body);
        ClassifyReport rep = classify_rmatrix(r, order, copt);
        Json f;
        f["kind"] = cubic_kind_name(rep.cubic.kind);
        if (rep.cubic.a) f["a"] = rat_str(*rep.cubic.a);
        if (rep.cubic.b) f["b"] = rat_str(*rep.cubic.b);
        f["skew"] = rep.skew;
        f["branch"] = rep.branch;
        f["verified_order"] = rep.verified_order;
        f["multiplier_orders"] = rep.mult_orders;
        f["certified_window"] = rep.cubic.window;
        if (!rep.cubic.note.empty()) f["note"] = rep.cubic.note;
        bool det = rep.cubic.kind != CubicKind::Undetermined;
        return {det ? 0 : 2,
                make_report(command, cubic_kind_name(rep.cubic.kind), det ? 0 : 2, std::move(f))};
    }
    if (command == "lattice-index") {
        for (const auto& d : inputs) {
            if (d.kind == "lattice") {
                LatticeIndex idx = lattice_index(lattice_from_json(d.body));
                Json f;
                f["h0"] = idx.h0;
                f["h1"] = idx.h1;
                f["conclusive"] = idx.conclusive;
                f["gaps"] = idx.gaps;
                return {idx.conclusive ? 0 : 2,
                        make_report(command, "index", idx.conclusive ? 0 : 2, std::move(f))};
            }
            if (d.kind == "subalgebra") {
                LatticeIndex idx = lattice_index(subalgebra_from_json(d.body));
                Json f;
                f["h0"] = idx.h0;
                f["h1"] = idx.h1;
                f["conclusive"] = idx.conclusive;
                return {0, make_report(command, "index", 0, std::move(f))};
            }
        }
        fail_input("lattice-index needs a lattice or subalgebra input");
    }
    fail_input("unknown command '" + command + "'");
}

}  // namespace

CommandResult run_command(const std::string& command, const Json& options,
                          const std::vector<Document>& inputs) {
    try {
        return dispatch(command, options.is_null() ? Json::object() : options, inputs);
    } catch (const WindowTooNarrow& ex) {
        Json f;
        f["error"] = ex.what();
        return {2, make_report(command, "window-too-narrow", 2, std::move(f))};
    } catch (const NotGenusOne& ex) {
        Json f;
        f["error"] = ex.what();
        return {2, make_report(command, "undetermined", 2, std::move(f))};
    } catch (const NotSkew& ex) {
        Json f;
        f["error"] = ex.what();
        return {1, make_report(command, "not-skew", 1, std::move(f))};
    } catch (const Error& ex) {
        Json f;
        f["error"] = ex.what();
        return {3, make_report(command, "input-error", 3, std::move(f))};
    }
}

}  // namespace cybe
