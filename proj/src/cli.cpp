#include "bialg/cli.hpp"

#include "bialg/affine.hpp"
#include "bialg/emit.hpp"
#include "bialg/functors.hpp"
#include "bialg/io.hpp"
#include "bialg/reproduce.hpp"
#include "bialg/ybe.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace bialg::cli {

namespace {

// Per-invocation state shared by the subcommand handlers.
struct Session {
    std::vector<std::string> command;
    std::vector<io::InputRecord> inputs;
    BialgCheckOptions opt;
    std::string corpus = BIALG_CORPUS_DIR;

    std::string take(const std::string& path) {
        inputs.push_back(io::record_input(path, path));
        return path;
    }
    io::AlgebraFile algebra(const std::string& path) { return io::load_algebra(take(path)); }
    RMatrix tensor(const std::string& path) { return io::load_tensor(take(path)).r; }
    QuadraticPerm qperm(const std::string& path) {
        io::AlgebraFile f = algebra(path);
        if (f.algebra.kind != Kind::perm || !f.form) throw ParseError(path + ": expected a perm algebra with a form");
        return make_quadratic_perm(f.algebra, *f.form);
    }
    io::Run run(Report rep) { return {command, std::move(rep), {}, inputs, {}}; }
};

FinAlgebra need_kind(const io::AlgebraFile& f, Kind k, const std::string& path) {
    if (f.algebra.kind != k)
        throw KindError(path + ": expected a " + std::string(kind_name(k)) + " algebra, got " +
                        std::string(kind_name(f.algebra.kind)));
    return f.algebra;
}

BialgStruct need_bialgebra(const io::AlgebraFile& f, Kind k, const std::string& path) {
    need_kind(f, k, path);
    if (!f.coalgebra) throw ParseError(path + ": expected coproducts");
    return f.bialgebra();
}

std::string file_kind(const std::string& path) {
    auto j = nlohmann::ordered_json::parse(io::read_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("kind") || !j["kind"].is_string()) return {};
    return j["kind"].get<std::string>();
}

io::Run cmd_check(Session& s, const std::string& path) {
    const std::string kind = file_kind(path);
    if (kind == "ooperator") {
        io::OOperatorFile f = io::load_ooperator(s.take(path));
        return s.run(check_ooperator(f.spec));
    }
    if (kind == "tensor" || kind == "map") throw Error(path + ": check takes an algebra or O-operator file");
    io::AlgebraFile f = s.algebra(path);
    Report rep;
    if (f.coalgebra) {
        rep = check_bialgebra(f.bialgebra(), s.opt);
        rep.subject = std::string(kind_name(f.algebra.kind)) + " bialgebra axioms";
        if (f.algebra.kind == Kind::dendriform)
            rep.notes.push_back("D-bi4 reading " + std::string(dbi4_name(s.opt.dbi4)) + ", D-bi6 reading " +
                                std::string(dbi6_name(s.opt.dbi6)));
    } else if (f.form) {
        if (f.algebra.kind != Kind::perm) throw KindError(path + ": a form is only meaningful on a perm algebra");
        rep = check_quadratic_perm(f.algebra, *f.form);
        rep.subject = "quadratic perm algebra";
    } else {
        rep = check_axioms(f.algebra);
        rep.subject = std::string(kind_name(f.algebra.kind)) + " algebra axioms";
    }
    return s.run(std::move(rep));
}

io::Run cmd_ybe(Session& s, const std::string& eq, const std::string& alg_path, const std::string& r_path) {
    const YbeKind yk = parse_ybe(eq);
    FinAlgebra alg = need_kind(s.algebra(alg_path), ybe_algebra_kind(yk), alg_path);
    RMatrix r = s.tensor(r_path);
    if (r.dim_left() != alg.dim) throw ShapeError(r_path + ": tensor dimension does not match the algebra");
    Report rep;
    rep.subject = std::string(ybe_name(yk)) + " residual";
    const auto ax = std::vector<std::vector<std::string>>(3, alg.basis_names);
    rep.add(Check::from_tensor(std::string(ybe_name(yk)), ybe_residual(yk, alg, r), &ax));
    const bool sym = (r - flip(r)).is_zero(), sk = (r + flip(r)).is_zero();
    rep.notes.push_back(std::string("r is ") + (sym ? "symmetric" : sk ? "skew-symmetric" : "neither symmetric nor skew"));
    return s.run(std::move(rep));
}

io::Run cmd_invariance(Session& s, const std::string& kind, const std::string& alg_path, const std::string& r_path) {
    const Kind k = parse_kind(kind);
    if (k != Kind::lie && k != Kind::prelie && k != Kind::associative)
        throw KindError("invariance is defined for lie, prelie and associative");
    FinAlgebra alg = need_kind(s.algebra(alg_path), k, alg_path);
    RMatrix r = s.tensor(r_path);
    if (r.dim_left() != alg.dim) throw ShapeError(r_path + ": tensor dimension does not match the algebra");
    Report rep;
    rep.subject = std::string(kind_name(k)) + " invariance";
    const std::size_t n = alg.dim;
    std::vector<Scalar> vals;
    for (const Tensor2& t : invariance_residual(alg, r)) vals.insert(vals.end(), t.coeffs().data().begin(), t.coeffs().data().end());
    const std::vector<std::vector<std::string>> ax(3, alg.basis_names);
    rep.add(Check::from_array("invariance", {n, n, n}, std::move(vals), &ax));
    return s.run(std::move(rep));
}

struct InduceArgs {
    std::string construction, dendriform, algebra, perm, bialgebra, qperm, out;
};

io::Run cmd_induce(Session& s, const InduceArgs& a) {
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw CLI::RequiredError(std::string("--") + flag + " (for --construction " + a.construction + ")");
        return v;
    };
    io::AlgebraFile result;
    Report rep;
    if (a.construction == "prelie" || a.construction == "assoc") {
        FinAlgebra D = need_kind(s.algebra(need(a.dendriform, "dendriform")), Kind::dendriform, a.dendriform);
        result.algebra = a.construction == "prelie" ? dendriform_to_prelie(D) : dendriform_to_assoc(D);
    } else if (a.construction == "commutator") {
        result.algebra = commutator_lie(s.algebra(need(a.algebra, "algebra")).algebra);
    } else if (a.construction == "tensor-lie") {
        FinAlgebra A = need_kind(s.algebra(need(a.algebra, "algebra")), Kind::prelie, a.algebra);
        FinAlgebra B = need_kind(s.algebra(need(a.perm, "perm")), Kind::perm, a.perm);
        result.algebra = tensor_lie(A, B);
    } else if (a.construction == "tensor-assoc") {
        FinAlgebra D = need_kind(s.algebra(need(a.dendriform, "dendriform")), Kind::dendriform, a.dendriform);
        FinAlgebra B = need_kind(s.algebra(need(a.perm, "perm")), Kind::perm, a.perm);
        result.algebra = tensor_assoc(D, B);
    } else if (a.construction == "lie-bialgebra" || a.construction == "asi-bialgebra") {
        const bool lie = a.construction == "lie-bialgebra";
        const std::string bpath = need(a.bialgebra, "bialgebra");
        BialgStruct b = need_bialgebra(s.algebra(bpath), lie ? Kind::prelie : Kind::dendriform, bpath);
        if (!check_bialgebra(b, s.opt).pass()) throw KindError(bpath + ": input fails its bialgebra axioms");
        QuadraticPerm qp = s.qperm(need(a.qperm, "qperm"));
        BialgStruct out = lie ? induce_lie_bialgebra(b, qp) : induce_asi_bialgebra(b, qp);
        result.algebra = out.algebra;
        result.coalgebra = out.coalgebra;
    } else {
        throw CLI::ValidationError("--construction", "unknown construction " + a.construction);
    }
    if (result.coalgebra) rep = check_bialgebra(result.bialgebra(), s.opt);
    else rep = check_axioms(result.algebra);
    rep.subject = "induced " + std::string(kind_name(result.algebra.kind)) +
                  (result.coalgebra ? " bialgebra" : " algebra") + " (" + a.construction + ")";
    io::Run run = s.run(std::move(rep));
    run.artifacts.push_back({"result", io::dump(result)});
    if (!a.out.empty()) {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw Error("cannot write " + a.out);
        f << io::dump(result);
    }
    return run;
}

io::Run cmd_lift(Session& s, const std::string& r_path, const std::string& qp_path, const std::string& alg_path) {
    RMatrix r = s.tensor(r_path);
    QuadraticPerm qp = s.qperm(qp_path);
    RMatrix rh = lift_r(r, qp);
    Report rep;
    rep.subject = "r_hat from r and the quadratic perm algebra";
    rep.add(Check::from_matrix("r_hat_sharp=r_sharp⊗kappa_sharp", sharp(rh) - kron(sharp(r), sharp(kappa(qp)))));
    if (!alg_path.empty()) {
        io::AlgebraFile f = s.algebra(alg_path);
        TransferReport t;
        if (f.algebra.kind == Kind::prelie) t = transfer_symmetric_plybe_to_cybe(f.algebra, r, qp);
        else if (f.algebra.kind == Kind::dendriform) t = transfer_dybe_to_aybe(f.algebra, r, qp);
        else throw KindError(alg_path + ": lift transfers need a prelie or dendriform algebra");
        rep.absorb(t, "transfer");
        if (!t.hypothesis_ok) rep.add(Check::boolean("transfer/hypothesis", false, t.subject));
    }
    io::Run run = s.run(std::move(rep));
    run.artifacts.push_back({"r_hat", io::dump(io::TensorFile{rh})});
    return run;
}

io::Run cmd_square(Session& s, const std::string& d_path, const std::string& qp_path, bool bialgebra,
                   const std::string& r_path) {
    io::AlgebraFile df = s.algebra(d_path);
    FinAlgebra D = need_kind(df, Kind::dendriform, d_path);
    QuadraticPerm qp = s.qperm(qp_path);
    if (!bialgebra) {
        if (!r_path.empty()) throw CLI::ValidationError("--r", "needs --bialgebra");
        return s.run(check_square(D, qp.algebra));
    }
    if (!r_path.empty()) {
        RMatrix r = s.tensor(r_path);
        Report rep = repro::diagram_faces(D, qp, r, s.opt);
        return s.run(std::move(rep));
    }
    BialgStruct db = need_bialgebra(df, Kind::dendriform, d_path);
    Report rep;
    rep.subject = "bialgebra square";
    rep.absorb(check_bialgebra(db, s.opt), "hypothesis");
    rep.absorb(check_bialgebra_square(db, qp), "top");
    return s.run(std::move(rep));
}

io::Run cmd_affine(Session& s, const std::string& d_path, int N, const std::string& which) {
    io::AlgebraFile f = s.algebra(d_path);
    need_kind(f, Kind::dendriform, d_path);
    const affine::Window w{N};
    Report rep;
    if (which == "assoc") rep = affine::check_affine_associativity(f.algebra, w);
    else if (which == "coalg") {
        if (!f.coalgebra) throw ParseError(d_path + ": --check coalg needs coproducts");
        rep = affine::check_affine_coassociativity(*f.coalgebra, w);
    } else {
        rep = affine::check_completed_asi(need_bialgebra(f, Kind::dendriform, d_path), w);
    }
    return s.run(std::move(rep));
}

io::Run cmd_reproduce(Session& s, const std::string& id) {
    repro::Reproduction r = repro::reproduce(id, s.corpus, s.opt);
    io::Run run{s.command, std::move(r.report), {}, std::move(r.inputs), std::move(r.artifacts)};
    return run;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Exact verification of finite-dimensional algebras, bialgebras and Yang-Baxter solutions", "bialg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", io::kToolVersion);

    Session s;
    s.command.push_back("bialg");
    for (std::size_t i = 1; i < args.size(); ++i) s.command.push_back(args[i]);

    std::string format = "text", dbi4 = std::string(dbi4_name(kDefaultDBi4)), dbi6 = std::string(dbi6_name(kDefaultDBi6));
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--corpus", s.corpus, "corpus directory for reproduce")->capture_default_str();
    app.add_option("--dbi4", dbi4, "D-bi4 reading")->check(CLI::IsMember({"printed", "derived"}))->capture_default_str();
    app.add_option("--dbi6", dbi6, "D-bi6 reading")
        ->check(CLI::IsMember({"literal", "theta_d1", "actions_d1"}))
        ->capture_default_str();

    std::function<io::Run()> action;

    std::string file;
    auto* check = app.add_subcommand("check", "axioms of an algebra, coalgebra, bialgebra, quadratic perm algebra or O-operator");
    check->add_option("file", file, "structure file")->required()->check(CLI::ExistingFile);
    check->callback([&] { action = [&] { return cmd_check(s, file); }; });

    std::string eq, alg, rfile;
    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter residual");
    ybe->add_option("--eq", eq, "equation")->required()->check(CLI::IsMember({"cybe", "aybe", "plybe", "dybe"}));
    ybe->add_option("--algebra", alg)->required()->check(CLI::ExistingFile);
    ybe->add_option("--r", rfile)->required()->check(CLI::ExistingFile);
    ybe->callback([&] { action = [&] { return cmd_ybe(s, eq, alg, rfile); }; });

    std::string kind;
    auto* inv = app.add_subcommand("invariance", "invariance of a 2-tensor");
    inv->add_option("--kind", kind)->required()->check(CLI::IsMember({"lie", "prelie", "associative"}));
    inv->add_option("--algebra", alg)->required()->check(CLI::ExistingFile);
    inv->add_option("--r", rfile)->required()->check(CLI::ExistingFile);
    inv->callback([&] { action = [&] { return cmd_invariance(s, kind, alg, rfile); }; });

    InduceArgs ia;
    auto* induce = app.add_subcommand("induce", "induced structures");
    induce->add_option("--construction", ia.construction)
        ->required()
        ->check(CLI::IsMember({"prelie", "assoc", "commutator", "tensor-lie", "tensor-assoc", "lie-bialgebra", "asi-bialgebra"}));
    induce->add_option("--dendriform", ia.dendriform)->check(CLI::ExistingFile);
    induce->add_option("--algebra", ia.algebra)->check(CLI::ExistingFile);
    induce->add_option("--perm", ia.perm)->check(CLI::ExistingFile);
    induce->add_option("--bialgebra", ia.bialgebra)->check(CLI::ExistingFile);
    induce->add_option("--qperm", ia.qperm)->check(CLI::ExistingFile);
    induce->add_option("--out", ia.out, "also write the result here");
    induce->callback([&] { action = [&] { return cmd_induce(s, ia); }; });

    std::string qperm;
    auto* lift = app.add_subcommand("lift", "r_hat = Σ (x_i⊗e_j)⊗(y_i⊗f_j)");
    lift->add_option("--r", rfile)->required()->check(CLI::ExistingFile);
    lift->add_option("--qperm", qperm)->required()->check(CLI::ExistingFile);
    lift->add_option("--algebra", alg, "prelie or dendriform algebra of r, to run the transfer")->check(CLI::ExistingFile);
    lift->callback([&] { action = [&] { return cmd_lift(s, rfile, qperm, alg); }; });

    std::string spec;
    auto* oop = app.add_subcommand("ooperator", "O-operator identity");
    oop->add_option("--spec", spec)->required()->check(CLI::ExistingFile);
    oop->callback([&] {
        action = [&] {
            io::OOperatorFile f = io::load_ooperator(s.take(spec));
            return s.run(check_ooperator(f.spec));
        };
    });

    std::string dend;
    bool bia = false;
    auto* square = app.add_subcommand("square", "commutative square of induced structures");
    square->add_option("--dendriform", dend)->required()->check(CLI::ExistingFile);
    square->add_option("--qperm", qperm)->required()->check(CLI::ExistingFile);
    square->add_flag("--bialgebra", bia, "at the bialgebra level");
    square->add_option("--r", rfile, "symmetric DYBE solution: check all six faces")->check(CLI::ExistingFile);
    square->callback([&] { action = [&] { return cmd_square(s, dend, qperm, bia, rfile); }; });

    int window = 2;
    std::string which;
    auto* aff = app.add_subcommand("affine", "affinization by the Laurent perm algebra on a window");
    aff->add_option("--dendriform", dend)->required()->check(CLI::ExistingFile);
    aff->add_option("--window", window, "N: exponents |i| <= N")->required();
    aff->add_option("--check", which)->required()->check(CLI::IsMember({"assoc", "coalg", "asi"}));
    aff->callback([&] { action = [&] { return cmd_affine(s, dend, window, which); }; });

    std::string id;
    auto* rep = app.add_subcommand("reproduce", "rebuild a worked example and diff it against the corpus");
    rep->add_option("id", id, "example id")->required()->check(CLI::IsMember(repro::example_ids()));
    rep->callback([&] { action = [&] { return cmd_reproduce(s, id); }; });

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
        s.opt.dbi4 = parse_dbi4(dbi4);
        s.opt.dbi6 = parse_dbi6(dbi6);
        io::Run run = action();
        out << (format == "json" ? io::emit_json(run) : io::emit_text(run, color));
        return run.pass() ? kPass : kFail;
    } catch (const CLI::CallForVersion&) {
        out << io::kToolVersion << "\n";
        return kPass;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::Success&) {
        return kPass;
    } catch (const CLI::Error& e) {
        err << "bialg: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const affine::WindowError& e) {
        err << "bialg: window error: " << e.what() << "\n";
        return kUsage;
    } catch (const AxiomError& e) {
        err << "bialg: verification failed: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        err << "bialg: error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace bialg::cli
