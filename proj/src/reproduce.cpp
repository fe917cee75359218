#include "bialg/reproduce.hpp"

#include "bialg/affine.hpp"
#include "bialg/functors.hpp"
#include "bialg/io.hpp"
#include "bialg/ybe.hpp"

#include <json.hpp>

#include <functional>

namespace bialg::repro {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

const std::vector<std::string>& example_ids() {
    static const std::vector<std::string> ids{"ex-2.2", "ex-2.13", "ex-3.13", "ex-4.2",
                                              "ex-4.5", "ex-4.9",  "ex-4.27", "ex-5.13"};
    return ids;
}

const std::vector<std::string>& cube_faces() {
    static const std::vector<std::string> faces{"top", "bottom", "left", "right", "back", "front"};
    return faces;
}

namespace {

class Corpus {
public:
    Corpus(fs::path root, Reproduction& out) : root_(std::move(root)), out_(out) {}

    io::AlgebraFile algebra(const std::string& rel) { return io::load_algebra(touch(rel)); }
    RMatrix tensor(const std::string& rel) { return io::load_tensor(touch(rel)).r; }
    Matrix map(const std::string& rel) { return io::load_map(touch(rel)).m; }
    Json json(const std::string& rel) {
        fs::path p = touch(rel);
        try {
            return Json::parse(io::read_file(p));
        } catch (const Json::parse_error& e) {
            throw ParseError(p.string() + ": malformed JSON: " + e.what());
        }
    }

private:
    fs::path touch(const std::string& rel) {
        fs::path p = root_ / rel;
        if (!fs::exists(p)) throw Error("corpus file missing: " + p.string());
        for (const auto& in : out_.inputs)
            if (in.path == "corpus/" + rel) return p;
        out_.inputs.push_back(io::record_input(p, "corpus/" + rel));
        return p;
    }

    fs::path root_;
    Reproduction& out_;
};

Check same_cube(const std::string& id, const Tensor3& got, const Tensor3& want, const std::vector<std::string>& names) {
    if (got.d1() != want.d1() || got.d2() != want.d2() || got.d3() != want.d3())
        return Check::boolean(id, false, "shape differs from golden");
    return compare_cubes(id, got, want, names);
}

Check same_matrix(const std::string& id, const Matrix& got, const Matrix& want) {
    if (got.rows() != want.rows() || got.cols() != want.cols())
        return Check::boolean(id, false, "shape differs from golden");
    return Check::from_matrix(id, got - want);
}

// every product, and every coproduct when the golden has them
void golden_structure(Report& rep, const std::string& prefix, const FinAlgebra& alg, const CoalgStruct* co,
                      const io::AlgebraFile& want) {
    if (alg.kind != want.algebra.kind || alg.dim != want.algebra.dim) {
        rep.add(Check::boolean(prefix + "/kind-and-dim", false, std::string(kind_name(alg.kind)) + " of dim " +
                                                                    std::to_string(alg.dim)));
        return;
    }
    for (const auto& name : product_names(alg.kind))
        rep.add(same_cube(prefix + "/" + name, alg.product(name), want.algebra.product(name), want.algebra.basis_names));
    if (want.coalgebra) {
        if (!co) {
            rep.add(Check::boolean(prefix + "/coproducts", false, "no coproducts computed"));
            return;
        }
        for (const auto& name : coproduct_names(want.coalgebra->kind))
            rep.add(same_cube(prefix + "/" + name, co->coproduct(name), want.coalgebra->coproduct(name),
                              want.algebra.basis_names));
    }
}

void golden_bialgebra(Report& rep, const std::string& prefix, const BialgStruct& b, const io::AlgebraFile& want) {
    golden_structure(rep, prefix, b.algebra, &b.coalgebra, want);
}

Check ybe_zero(const std::string& id, YbeKind k, const FinAlgebra& alg, const RMatrix& r) {
    return Check::from_tensor(id, ybe_residual(k, alg, r));
}

Check symmetric(const std::string& id, const RMatrix& r) { return Check::from_matrix(id, (r - flip(r)).coeffs()); }
Check skew(const std::string& id, const RMatrix& r) { return Check::from_matrix(id, (r + flip(r)).coeffs()); }

void transfer(Report& rep, const std::string& prefix, const TransferReport& t) {
    rep.absorb(t, prefix);
    if (!t.hypothesis_ok) rep.add(Check::boolean(prefix + "/hypothesis", false, t.subject));
}

// ex-2.2 ------------------------------------------------------------------

Report ex_2_2(Corpus& c) {
    Report rep;
    rep.subject = "dendriform algebras from a Rota-Baxter operator, from x^2 = 0, and the 2-dimensional example";
    io::AlgebraFile D = c.algebra("ex-D-alg-iii.json");
    golden_structure(rep, "iii/golden", D.algebra, nullptr, c.algebra("expected/ex-2.2/D-alg-iii.json"));
    rep.absorb(check_axioms(D.algebra), "iii");

    // matrix units E11, E12, E21, E22 and x = E12
    FinAlgebra M = c.algebra("assoc-M2.json").algebra;
    require_verified(M, {Kind::associative}, "ex-2.2");
    const std::size_t n = M.dim;
    const Vec x = unit_vec(n, 1);
    const Matrix R = right_mult(M.mul(), x);  // R(a) = a x
    rep.add(Check::from_tensor("i/rota-baxter(R(a)=ax)", rota_baxter_residual(M, R)));
    FinAlgebra rb = dendriform_from_rota_baxter(M, R);
    rep.absorb(check_axioms(rb), "i");

    auto from_square_zero = [&](bool printed) {
        FinAlgebra d = FinAlgebra::zero(Kind::dendriform, n, M.basis_names);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec axb = multiply(M.mul(), unit_vec(n, i), multiply(M.mul(), x, unit_vec(n, j)));
                Vec abx = multiply(M.mul(), unit_vec(n, i), multiply(M.mul(), unit_vec(n, j), x));
                for (std::size_t k = 0; k < n; ++k) {
                    d.prec()(i, j, k) = printed ? axb[k] : abx[k];
                    d.succ()(i, j, k) = printed ? abx[k] : axb[k];
                }
            }
        return d;
    };
    FinAlgebra sq = from_square_zero(false);
    rep.absorb(check_axioms(sq), "ii");
    rep.add(same_cube("ii/prec=rota-baxter-prec", sq.prec(), rb.prec(), M.basis_names));
    rep.add(same_cube("ii/succ=rota-baxter-succ", sq.succ(), rb.succ(), M.basis_names));
    Report printed = check_axioms(from_square_zero(true));
    std::size_t bad = 0;
    for (const auto& ch : printed.checks) bad += ch.nonzero;
    rep.notes.push_back("ii: a<b = a(bx), a>b = a(xb); the reverse assignment violates the axioms at " +
                        std::to_string(bad) + " coefficients on M2");
    return rep;
}

// ex-2.13 -----------------------------------------------------------------

Report ex_2_13(Corpus& c) {
    Report rep;
    rep.subject = "pre-Lie, Lie and associative algebras induced from D and B";
    FinAlgebra D = c.algebra("ex-D-alg-iii.json").algebra;
    FinAlgebra B = c.algebra("qperm-B.json").algebra;
    FinAlgebra A = dendriform_to_prelie(D);
    golden_structure(rep, "prelie", A, nullptr, c.algebra("expected/ex-2.13/prelie.json"));
    FinAlgebra L = tensor_lie(A, B);
    golden_structure(rep, "lie", L, nullptr, c.algebra("expected/ex-2.13/lie.json"));
    FinAlgebra M = tensor_assoc(D, B);
    golden_structure(rep, "assoc", M, nullptr, c.algebra("expected/ex-2.13/assoc.json"));
    rep.absorb(check_axioms(A), "prelie/axioms");
    rep.absorb(check_axioms(L), "lie/axioms");
    rep.absorb(check_axioms(M), "assoc/axioms");
    rep.absorb(check_square(D, B), "square");
    return rep;
}

// ex-3.13 -----------------------------------------------------------------

Report ex_3_13(Corpus& c) {
    Report rep;
    rep.subject = "triangular pre-Lie bialgebra from r = e1⊗e1 and the induced Lie bialgebra";
    const std::string g = "expected/ex-3.13/";
    FinAlgebra A = c.algebra("prelie-A.json").algebra;
    QuadraticPerm qp = c.algebra("qperm-B.json").quadratic_perm();
    RMatrix r = c.tensor("r-e1e1.json");

    rep.add(symmetric("r/symmetric", r));
    rep.add(ybe_zero("r/plybe", YbeKind::plybe, A, r));
    BialgStruct pb = coboundary_bialgebra(A, r);
    golden_bialgebra(rep, "prelie-bialgebra", pb, c.algebra(g + "prelie-bialgebra.json"));
    rep.absorb(check_bialgebra(pb), "prelie-bialgebra/axioms");

    BialgStruct lb = induce_lie_bialgebra(pb, qp);
    golden_bialgebra(rep, "lie-bialgebra", lb, c.algebra(g + "lie-bialgebra.json"));
    rep.absorb(check_bialgebra(lb), "lie-bialgebra/axioms");

    RMatrix rh = lift_r(r, qp);
    rep.add(same_matrix("r_hat/golden", rh.coeffs(), c.tensor(g + "r-hat.json").coeffs()));
    rep.add(skew("r_hat/skew", rh));
    rep.add(ybe_zero("r_hat/cybe", YbeKind::cybe, lb.algebra, rh));
    transfer(rep, "triangular", transfer_induced_lie_coboundary(A, r, qp));

    const Matrix rs = sharp(r), ks = sharp(kappa(qp)), rhs = sharp(rh);
    rep.add(same_matrix("r_sharp/golden", rs, c.map(g + "r-sharp.json")));
    rep.add(same_matrix("kappa_sharp/golden", ks, c.map(g + "kappa-sharp.json")));
    rep.add(same_matrix("r_hat_sharp/golden", rhs, c.map(g + "r-hat-sharp.json")));
    rep.add(same_matrix("r_hat_sharp=r_sharp⊗kappa_sharp", rhs, kron(rs, ks)));
    rep.absorb(check_ooperator({A, coregular_bimodule(A), rs}), "ooperator/r_sharp");
    rep.absorb(check_ooperator({lb.algebra, coregular_bimodule(lb.algebra), rhs}), "ooperator/r_hat_sharp");
    return rep;
}

// Laurent model -------------------------------------------------------------

[[noreturn]] void bad_golden(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void expect_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) bad_golden(where, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : keys) ok = ok || k == a;
        if (!ok) bad_golden(where, "unknown key \"" + k + "\"");
    }
    for (const char* a : keys)
        if (!j.contains(a)) bad_golden(where, std::string("missing key \"") + a + "\"");
}

affine::GIdx gidx(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() || !j[1].is_number_integer() ||
        !j[2].is_number_integer() || (j[2] != 1 && j[2] != 2))
        bad_golden(where, "expected [i1, i2, s] with s in {1, 2}");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<int>()};
}

Scalar gcoeff(const Json& j, const std::string& where) {
    if (!j.is_string()) bad_golden(where, "expected a rational string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
        bad_golden(where, e.what());
    }
}

const Json& entries_of(const Json& doc, const std::string& kind, const std::string& where) {
    if (!doc.is_object() || doc.value("format", 0) != io::kFormat || doc.value("kind", "") != kind)
        bad_golden(where, "expected format 1, kind \"" + kind + "\"");
    const Json& e = doc.at("entries");
    if (!e.is_array()) bad_golden(where, "entries: expected a list");
    return e;
}

void laurent_checks(Report& rep, const affine::Window& w, std::initializer_list<const char*> ids) {
    Report model = affine::check_laurent_model(w);
    for (const char* id : ids)
        if (const Check* ch = model.find(id)) rep.add(*ch);
}

Report ex_4_2(Corpus& c) {
    Report rep;
    const affine::Window w{2};
    rep.subject = "graded perm algebra on Laurent vector fields, window N=2";
    const std::string file = "expected/ex-4.2/products.json";
    Json doc = c.json(file);
    const Json& e = entries_of(doc, "laurent-products", file);
    Check ch;
    ch.id = "products/golden";
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string at = file + ": entries[" + std::to_string(i) + "]";
        expect_keys(e[i], at, {"left", "right", "result"});
        auto a = gidx(e[i]["left"], at), b = gidx(e[i]["right"], at), want = gidx(e[i]["result"], at);
        auto got = affine::perm_product(a, b);
        ch.observe(got == want ? 0 : 1, {}, a.name() + "·" + b.name() + " = " + got.name());
    }
    rep.add(ch);
    Check grading;
    grading.id = "products/graded";
    for (const auto& a : w.all())
        for (const auto& b : w.all()) {
            auto p = affine::perm_product(a, b);
            grading.observe(p.degree() - a.degree() - b.degree(), {}, a.name() + "·" + b.name());
        }
    rep.add(grading);
    laurent_checks(rep, w, {"perm-identities"});
    return rep;
}

Report ex_4_5(Corpus& c) {
    Report rep;
    const affine::Window w{2};
    rep.subject = "completed perm coalgebra on Laurent vector fields, window N=2";
    const std::string file = "expected/ex-4.5/nu.json";
    Json doc = c.json(file);
    const Json& e = entries_of(doc, "laurent-coproduct", file);
    Check ch;
    ch.id = "nu/golden";
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string at = file + ": entries[" + std::to_string(i) + "]";
        expect_keys(e[i], at, {"input", "left", "right", "coeff"});
        auto b = gidx(e[i]["input"], at), l = gidx(e[i]["left"], at), r = gidx(e[i]["right"], at);
        Scalar want = gcoeff(e[i]["coeff"], at);
        ch.observe(Scalar(affine::nu_coefficient(b, l, r)) - want, {},
                   "nu(" + b.name() + ") at " + l.name() + "⊗" + r.name());
    }
    rep.add(ch);
    laurent_checks(rep, w, {"coperm-assoc", "coperm-leftcomm"});
    return rep;
}

Report ex_4_9(Corpus& c) {
    Report rep;
    const affine::Window w{2};
    rep.subject = "quadratic graded perm algebra on Laurent vector fields, window N=2";
    const std::string file = "expected/ex-4.9/form.json";
    Json doc = c.json(file);
    const Json& e = entries_of(doc, "laurent-form", file);
    Check form;
    form.id = "form/golden";
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string at = file + ": entries[" + std::to_string(i) + "]";
        expect_keys(e[i], at, {"left", "right", "value"});
        auto a = gidx(e[i]["left"], at), b = gidx(e[i]["right"], at);
        form.observe(Scalar(affine::graded_form(a, b)) - gcoeff(e[i]["value"], at), {}, a.name() + "," + b.name());
    }
    rep.add(form);
    const Json& dual = doc.at("dual");
    if (!dual.is_array()) bad_golden(file, "dual: expected a list");
    Check db;
    db.id = "dual-basis/golden";
    for (std::size_t i = 0; i < dual.size(); ++i) {
        const std::string at = file + ": dual[" + std::to_string(i) + "]";
        expect_keys(dual[i], at, {"basis", "dual", "coeff"});
        auto b = gidx(dual[i]["basis"], at), f = gidx(dual[i]["dual"], at);
        Scalar coeff = gcoeff(dual[i]["coeff"], at);
        // the dual element is coeff·f; its pairing with b must be 1 and f the unique partner
        bool ok = affine::form_partner(b) == f && coeff * affine::graded_form(f, b) == 1;
        db.observe(ok ? 0 : 1, {}, b.name() + " <-> " + format_scalar(coeff) + "·" + f.name());
    }
    rep.add(db);
    laurent_checks(rep, w, {"form-antisym", "form-graded", "form-invariance", "nu-pairing"});
    rep.notes.push_back("form shift m = " + std::to_string(affine::kFormShift) +
                        ": the form vanishes unless the degrees sum to 2");
    rep.notes.push_back("nu-pairing: the coproduct induced by the form is the completed perm coalgebra nu");
    return rep;
}

// ex-4.27 -----------------------------------------------------------------

Report ex_4_27(Corpus& c, const BialgCheckOptions& opt) {
    Report rep;
    rep.subject = "triangular dendriform D-bialgebra from r = e1⊗e1 and the induced ASI bialgebra";
    const std::string g = "expected/ex-4.27/";
    FinAlgebra D = c.algebra("ex-D-alg-iii.json").algebra;
    QuadraticPerm qp = c.algebra("qperm-B.json").quadratic_perm();
    const std::vector<std::pair<std::string, std::string>> sols{
        {"alpha=1", "r-e1e1.json"}, {"beta=1,gamma=1", "r-beta1-gamma1.json"}, {"beta=0,gamma=1", "r-e2e2.json"}};
    for (const auto& [label, file] : sols) {
        RMatrix s = c.tensor(file);
        rep.add(symmetric("dybe/" + label + "/symmetric", s));
        rep.add(ybe_zero("dybe/" + label, YbeKind::dybe, D, s));
    }
    // every symmetric r with entries in [-2, 2] solves the DYBE iff it lies in one of the two families
    Check fam;
    fam.id = "dybe/families-on-grid";
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int d = -2; d <= 2; ++d) {
                RMatrix s(2, 2);
                s(0, 0) = a;
                s(0, 1) = s(1, 0) = b;
                s(1, 1) = d;
                const bool solves = ybe_residual(YbeKind::dybe, D, s).is_zero();
                const bool listed = (b == 0 && d == 0) || a == 0;
                fam.observe(solves == listed ? 0 : 1, {a, b, d},
                            "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")");
            }
    rep.add(fam);

    RMatrix r = c.tensor("r-e1e1.json");
    BialgStruct db = coboundary_bialgebra(D, r);
    golden_bialgebra(rep, "D-bialgebra", db, c.algebra(g + "D-bialgebra.json"));
    rep.absorb(check_bialgebra(db, opt), "D-bialgebra/axioms");

    BialgStruct ab = induce_asi_bialgebra(db, qp);
    golden_bialgebra(rep, "asi-bialgebra", ab, c.algebra(g + "asi-bialgebra.json"));
    rep.absorb(check_bialgebra(ab), "asi-bialgebra/axioms");

    RMatrix rh = lift_r(r, qp);
    rep.add(same_matrix("r_hat/golden", rh.coeffs(), c.tensor(g + "r-hat.json").coeffs()));
    transfer(rep, "aybe", transfer_dybe_to_aybe(D, r, qp));
    transfer(rep, "triangular", transfer_induced_asi_coboundary(D, r, qp));
    rep.add(same_matrix("r_hat_sharp=r_sharp⊗kappa_sharp", sharp(rh), kron(sharp(r), sharp(kappa(qp)))));
    return rep;
}

// ex-5.13 -----------------------------------------------------------------

Report diagram_faces_impl(const FinAlgebra& D, const QuadraticPerm& qp, const RMatrix& r, const BialgCheckOptions& opt,
                          const std::function<void(Report&, const BialgStruct&)>& top_goldens) {
    Report rep;
    rep.subject = "three-dimensional diagram";
    const FinAlgebra A = dendriform_to_prelie(D);
    const FinAlgebra M = tensor_assoc(D, qp.algebra);
    const FinAlgebra L = tensor_lie(A, qp.algebra);
    const RMatrix rh = lift_r(r, qp);
    const Matrix rs = sharp(r), rhs = sharp(rh);
    const Check tensor_sharp = same_matrix("r_hat_sharp=r_sharp⊗kappa_sharp", rhs, kron(rs, sharp(kappa(qp))));

    BialgStruct db = coboundary_bialgebra(D, r);
    rep.add(Check::boolean("hypothesis/D-bialgebra", check_bialgebra(db, opt).pass()));

    // top: D-bialgebra → ASI → Lie equals D-bialgebra → pre-Lie → Lie
    rep.absorb(check_bialgebra_square(db, qp), "top");
    if (top_goldens) top_goldens(rep, db);

    // bottom: the O-operators r♯ and r̂♯ on all four corners
    rep.absorb(check_ooperator({D, coregular_bimodule(D), rs}), "bottom/dendriform");
    rep.absorb(check_ooperator({A, coregular_bimodule(A), rs}), "bottom/prelie");
    rep.absorb(check_ooperator({M, coregular_bimodule(M), rhs}), "bottom/assoc");
    rep.absorb(check_ooperator({L, coregular_bimodule(L), rhs}), "bottom/lie");
    rep.add(same_cube("bottom/commutator(assoc)=lie", commutator_lie(M).mul(), L.mul(), L.basis_names));

    // left: dendriform level to pre-Lie level
    transfer(rep, "left/bialgebra", transfer_dendriform_to_prelie_coboundary(D, r));
    transfer(rep, "left/ybe", transfer_dybe_to_plybe(D, r));
    transfer(rep, "left/ooperator", transfer_dendriform_ooperator(D, rs));

    // right: associative level to Lie level on D⊗B
    transfer(rep, "right/bialgebra", transfer_asi_to_lie_coboundary(M, rh));
    transfer(rep, "right/ybe", transfer_aybe_to_cybe(M, rh));
    transfer(rep, "right/ooperator", transfer_assoc_ooperator(M, rhs));

    // back: D to D⊗B, associative side
    transfer(rep, "back/bialgebra", transfer_induced_asi_coboundary(D, r, qp));
    transfer(rep, "back/ybe", transfer_dybe_to_aybe(D, r, qp));
    Check bs = tensor_sharp;
    bs.id = "back/ooperator/" + bs.id;
    rep.add(bs);

    // front: pre-Lie to Lie on D⊗B
    transfer(rep, "front/bialgebra", transfer_induced_lie_coboundary(A, r, qp));
    transfer(rep, "front/ybe", transfer_symmetric_plybe_to_cybe(A, r, qp));
    Check fr = tensor_sharp;
    fr.id = "front/ooperator/" + fr.id;
    rep.add(fr);
    return rep;
}

Report ex_5_13(Corpus& c, const BialgCheckOptions& opt) {
    FinAlgebra D = c.algebra("ex-D-alg-iii.json").algebra;
    QuadraticPerm qp = c.algebra("qperm-B.json").quadratic_perm();
    RMatrix r = c.tensor("r-e1e1.json");
    io::AlgebraFile lie = c.algebra("expected/ex-3.13/lie-bialgebra.json");
    io::AlgebraFile prelie = c.algebra("expected/ex-3.13/prelie-bialgebra.json");
    Report rep = diagram_faces_impl(D, qp, r, opt, [&](Report& out, const BialgStruct& db) {
        golden_bialgebra(out, "top/asi-to-lie=ex-3.13", asi_to_lie_bialgebra(induce_asi_bialgebra(db, qp)), lie);
        golden_bialgebra(out, "top/dendriform-to-prelie=ex-3.13", dendriform_to_prelie_bialgebra(db), prelie);
    });
    rep.subject = "three-dimensional diagram on D, B and r = e1⊗e1";
    return rep;
}

}  // namespace

Report diagram_faces(const FinAlgebra& D, const QuadraticPerm& qp, const RMatrix& r, const BialgCheckOptions& opt) {
    return diagram_faces_impl(D, qp, r, opt, {});
}

Reproduction reproduce(const std::string& id, const fs::path& corpus, const BialgCheckOptions& opt) {
    Reproduction out;
    Corpus c(corpus, out);
    if (id == "ex-2.2") out.report = ex_2_2(c);
    else if (id == "ex-2.13") out.report = ex_2_13(c);
    else if (id == "ex-3.13") out.report = ex_3_13(c);
    else if (id == "ex-4.2") out.report = ex_4_2(c);
    else if (id == "ex-4.5") out.report = ex_4_5(c);
    else if (id == "ex-4.9") out.report = ex_4_9(c);
    else if (id == "ex-4.27") out.report = ex_4_27(c, opt);
    else if (id == "ex-5.13") out.report = ex_5_13(c, opt);
    else {
        std::string known;
        for (const auto& k : example_ids()) known += " " + k;
        throw Error("unknown example id \"" + id + "\"; known:" + known);
    }
    return out;
}

}  // namespace bialg::repro
