#include "bialg/ybe.hpp"

#include "bialg/linalg.hpp"

#include <array>

namespace bialg {

std::string_view ybe_name(YbeKind k) {
    switch (k) {
        case YbeKind::cybe: return "cybe";
        case YbeKind::plybe: return "plybe";
        case YbeKind::aybe: return "aybe";
        case YbeKind::dybe: return "dybe";
    }
    return "?";
}

YbeKind parse_ybe(std::string_view s) {
    for (YbeKind k : {YbeKind::cybe, YbeKind::plybe, YbeKind::aybe, YbeKind::dybe})
        if (ybe_name(k) == s) return k;
    throw KindError("unknown Yang-Baxter equation \"" + std::string(s) + "\"");
}

Kind ybe_algebra_kind(YbeKind k) {
    switch (k) {
        case YbeKind::cybe: return Kind::lie;
        case YbeKind::plybe: return Kind::prelie;
        case YbeKind::aybe: return Kind::associative;
        case YbeKind::dybe: return Kind::dendriform;
    }
    throw KindError("unknown Yang-Baxter equation");
}

namespace {

// Summand of a YBE for r = Σ x_i⊗y_i, with i ↦ (p,q) and j ↦ (s,t) running
// over the nonzero coefficients. The product of two of p,q,s,t sits in
// `slot`; the remaining two slots take `rest` in order.
enum Leg { P, Q, S, T };
struct Term {
    int sign;
    const char* product;
    Leg a, b;
    int slot;
    Leg rest0, rest1;
};

// CYBE: [r12,r13] + [r13,r23] + [r12,r23]
const Term kCybe[] = {
    {1, "mul", P, S, 0, Q, T},
    {1, "mul", Q, T, 2, P, S},
    {1, "mul", Q, S, 1, P, T},
};

// PLYBE, one row per displayed summand
const Term kPlybe[] = {
    {1, "mul", P, S, 0, T, Q},   // r13⋄r12 = (x_i⋄x_j)⊗y_j⊗y_i
    {1, "mul", P, T, 1, S, Q},   // r23⋄r12 = x_j⊗(x_i⋄y_j)⊗y_i
    {1, "mul", Q, S, 0, P, T},   // r21⋄r13 = (y_i⋄x_j)⊗x_i⊗y_j
    {1, "mul", Q, T, 2, S, P},   // r23⋄r13 = x_j⊗x_i⊗(y_i⋄y_j)
    {-1, "mul", P, S, 1, T, Q},  // r23⋄r21 = y_j⊗(x_i⋄x_j)⊗y_i
    {-1, "mul", Q, S, 1, P, T},  // r12⋄r23 = x_i⊗(y_i⋄x_j)⊗y_j
    {-1, "mul", P, T, 0, S, Q},  // r13⋄r21 = (x_i⋄y_j)⊗x_j⊗y_i
    {-1, "mul", Q, T, 2, P, S},  // r13⋄r23 = x_i⊗x_j⊗(y_i⋄y_j)
};

// AYBE: r12∗r13 + r13∗r23 − r23∗r12
const Term kAybe[] = {
    {1, "mul", P, S, 0, Q, T},
    {1, "mul", Q, T, 2, P, S},
    {-1, "mul", P, T, 1, S, Q},
};

// DYBE: r12≺r13 + r12≻r13 − r13≺r23 − r23≻r12
const Term kDybe[] = {
    {1, "prec", P, S, 0, Q, T},
    {1, "succ", P, S, 0, Q, T},
    {-1, "prec", Q, T, 2, P, S},
    {-1, "succ", P, T, 1, S, Q},
};

template <std::size_t N>
void accumulate(Tensor3& out, const FinAlgebra& alg, const RMatrix& r, const Term (&terms)[N]) {
    const std::size_t n = alg.dim;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar& rij = r(p, q);
            if (is_zero(rij)) continue;
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    const Scalar& rst = r(s, t);
                    if (is_zero(rst)) continue;
                    const std::array<std::size_t, 4> leg{p, q, s, t};
                    Scalar w = rij * rst;
                    for (const Term& term : terms) {
                        const Tensor3& c = alg.product(term.product);
                        std::size_t u = leg[term.rest0], v = leg[term.rest1];
                        for (std::size_t k = 0; k < n; ++k) {
                            const Scalar& ck = c(leg[term.a], leg[term.b], k);
                            if (is_zero(ck)) continue;
                            Scalar val = term.sign > 0 ? Scalar(w * ck) : Scalar(-w * ck);
                            switch (term.slot) {
                                case 0: out(k, u, v) += val; break;
                                case 1: out(u, k, v) += val; break;
                                default: out(u, v, k) += val; break;
                            }
                        }
                    }
                }
        }
}

void require_square(const RMatrix& r, std::size_t n, const char* who) {
    if (r.dim_left() != n || r.dim_right() != n)
        throw ShapeError(std::string(who) + ": r has shape " + std::to_string(r.dim_left()) + "x" +
                         std::to_string(r.dim_right()) + ", algebra has dimension " + std::to_string(n));
}

std::vector<std::vector<std::string>> axes(const FinAlgebra& a, std::size_t k) {
    return std::vector<std::vector<std::string>>(k, a.basis_names);
}

}  // namespace

Tensor3 ybe_residual(YbeKind kind, const FinAlgebra& alg, const RMatrix& r) {
    if (alg.kind != ybe_algebra_kind(kind))
        throw KindError(std::string(ybe_name(kind)) + " needs a " + std::string(kind_name(ybe_algebra_kind(kind))) +
                        " algebra, got " + std::string(kind_name(alg.kind)));
    require_square(r, alg.dim, "ybe_residual");
    Tensor3 out = Tensor3::cube(alg.dim);
    switch (kind) {
        case YbeKind::cybe: accumulate(out, alg, r, kCybe); break;
        case YbeKind::plybe: accumulate(out, alg, r, kPlybe); break;
        case YbeKind::aybe: accumulate(out, alg, r, kAybe); break;
        case YbeKind::dybe: accumulate(out, alg, r, kDybe); break;
    }
    return out;
}

namespace {

YbeKind ybe_for(Kind k) {
    switch (k) {
        case Kind::lie: return YbeKind::cybe;
        case Kind::prelie: return YbeKind::plybe;
        case Kind::associative: return YbeKind::aybe;
        case Kind::dendriform: return YbeKind::dybe;
        case Kind::perm: break;
    }
    throw KindError("no Yang-Baxter equation for perm algebras");
}

// the operator of the invariance predicate / coboundary formula applied to r
Tensor2 coboundary_at(const FinAlgebra& alg, const RMatrix& r, std::size_t a) {
    const Tensor3& M = alg.mul();
    switch (alg.kind) {
        case Kind::lie: {
            Matrix ad = left_mult(M, a);
            return apply_left(ad, r) + apply_right(ad, r);
        }
        case Kind::prelie: return apply_left(left_mult(M, a), r) + apply_right(left_mult(M, a) - right_mult(M, a), r);
        case Kind::associative: return apply_right(left_mult(M, a), r) - apply_left(right_mult(M, a), r);
        default: break;
    }
    throw KindError("invariance is defined for lie, prelie and associative algebras, got " +
                    std::string(kind_name(alg.kind)));
}

}  // namespace

std::vector<Tensor2> invariance_residual(const FinAlgebra& alg, const RMatrix& s) {
    require_square(s, alg.dim, "invariance_residual");
    std::vector<Tensor2> out;
    for (std::size_t a = 0; a < alg.dim; ++a) out.push_back(coboundary_at(alg, s, a));
    return out;
}

bool is_invariant(const FinAlgebra& alg, const RMatrix& s) {
    for (const auto& t : invariance_residual(alg, s))
        if (!t.is_zero()) return false;
    return true;
}

namespace {

Check invariance_check(const std::string& id, const FinAlgebra& alg, const RMatrix& s) {
    const std::size_t n = alg.dim;
    std::vector<Scalar> vals;
    for (const auto& t : invariance_residual(alg, s))
        vals.insert(vals.end(), t.coeffs().data().begin(), t.coeffs().data().end());
    auto ax = axes(alg, 3);
    return Check::from_array(id, {n, n, n}, std::move(vals), &ax);
}

void store(Tensor3& t, std::size_t i, const Tensor2& x) {
    for (std::size_t p = 0; p < x.dim_left(); ++p)
        for (std::size_t q = 0; q < x.dim_right(); ++q) t(i, p, q) = x(p, q);
}

}  // namespace

CoalgStruct coboundary_coproduct(const FinAlgebra& alg, const RMatrix& r) {
    require_square(r, alg.dim, "coboundary_coproduct");
    const std::size_t n = alg.dim;
    CoalgStruct c = CoalgStruct::zero(matching_cokind(alg.kind), n);
    if (alg.kind == Kind::perm) throw KindError("no coboundary coproduct for perm algebras");
    if (alg.kind != Kind::dendriform) {
        for (std::size_t a = 0; a < n; ++a) store(c.delta(), a, coboundary_at(alg, r, a));
        return c;
    }
    const Tensor3 &P = alg.prec(), &S = alg.succ();
    RMatrix rs = -flip(r);
    for (std::size_t d = 0; d < n; ++d) {
        store(c.theta_prec(), d,
              apply_left(right_mult(P, d) + right_mult(S, d), r) - apply_right(left_mult(S, d), r));
        store(c.theta_succ(), d,
              apply_left(right_mult(P, d), rs) - apply_right(left_mult(P, d) + left_mult(S, d), rs));
    }
    return c;
}

BialgStruct coboundary_bialgebra(const FinAlgebra& alg, const RMatrix& r) {
    return BialgStruct{alg, coboundary_coproduct(alg, r)};
}

RMatrix lift_r(const RMatrix& r, const QuadraticPerm& qp) { return bullet(r, kappa(qp)); }

Factorizability factorizable_map(Kind kind, const RMatrix& r) {
    Factorizability f;
    switch (kind) {
        case Kind::prelie: f.I = sharp(r) - sharp(flip(r)); break;
        case Kind::lie:
        case Kind::associative: f.I = sharp(r) + sharp(flip(r)); break;
        default: throw KindError("factorizability is defined for lie, prelie and associative kinds");
    }
    f.det = determinant(f.I);
    f.rank = rank(f.I);
    f.invertible = !is_zero(f.det);
    return f;
}

Report factorizable_check(Kind kind, const RMatrix& r) {
    Factorizability f = factorizable_map(kind, r);
    Report rep;
    rep.subject = "factorizability (" + std::string(kind_name(kind)) + ")";
    rep.add(Check::boolean("I-invertible", f.invertible,
                           "det = " + format_scalar(f.det) + ", rank " + std::to_string(f.rank)));
    rep.notes.push_back(std::string("I = r# ") + (kind == Kind::prelie ? "-" : "+") + " tau(r)#");
    rep.notes.push_back("det = " + format_scalar(f.det));
    rep.notes.push_back("rank = " + std::to_string(f.rank));
    return rep;
}

Bimodule coregular_bimodule(const FinAlgebra& alg) {
    const std::size_t n = alg.dim;
    Bimodule bm;
    bm.kind = alg.kind;
    bm.algebra_dim = n;
    bm.space_dim = n;
    auto T = [](const Matrix& m) { return m.transpose(); };
    for (std::size_t i = 0; i < n; ++i) {
        switch (alg.kind) {
            case Kind::lie: bm.actions["rho"].push_back(-T(left_mult(alg.mul(), i))); break;
            case Kind::prelie: {
                Matrix l = T(left_mult(alg.mul(), i)), r = T(right_mult(alg.mul(), i));
                bm.actions["l"].push_back(r - l);
                bm.actions["r"].push_back(r);
                break;
            }
            case Kind::associative:
                bm.actions["l"].push_back(T(right_mult(alg.mul(), i)));
                bm.actions["r"].push_back(T(left_mult(alg.mul(), i)));
                break;
            case Kind::dendriform: {
                Matrix lp = T(left_mult(alg.prec(), i)), rp = T(right_mult(alg.prec(), i));
                Matrix ls = T(left_mult(alg.succ(), i)), rs = T(right_mult(alg.succ(), i));
                // the four maps fill (l_succ, r_succ, l_prec, r_prec); in the
                // (l_prec, r_prec, l_succ, r_succ) slots this is not a bimodule
                bm.actions["l_succ"].push_back(rs + rp);
                bm.actions["r_succ"].push_back(-lp);
                bm.actions["l_prec"].push_back(-rs);
                bm.actions["r_prec"].push_back(lp + ls);
                break;
            }
            case Kind::perm: throw KindError("no coregular bimodule for perm algebras here");
        }
    }
    return bm;
}

ResidualReport check_ooperator(const OOperatorSpec& spec) {
    const FinAlgebra& alg = spec.algebra;
    const Bimodule& bm = spec.bimodule;
    const std::size_t n = alg.dim, V = bm.space_dim;
    if (bm.kind != alg.kind) throw KindError("bimodule kind does not match the algebra");
    if (bm.algebra_dim != n) throw ShapeError("bimodule is over an algebra of another dimension");
    if (spec.P.rows() != n || spec.P.cols() != V) throw ShapeError("P must map the module space into the algebra");
    for (const auto& name : action_names(alg.kind)) {
        auto it = bm.actions.find(name);
        if (it == bm.actions.end() || it->second.size() != n) throw ShapeError("bimodule is missing action " + name);
    }

    ResidualReport rep;
    rep.subject = std::string(kind_name(alg.kind)) + " O-operator";
    std::vector<std::vector<std::string>> ax;
    {
        std::vector<std::string> vn;
        for (std::size_t i = 0; i < V; ++i) vn.push_back("v" + std::to_string(i + 1));
        ax = {vn, vn, alg.basis_names};
    }
    std::vector<Vec> Pv;
    for (std::size_t v = 0; v < V; ++v) Pv.push_back(spec.P.column(v));

    auto identity = [&](const std::string& id, const Tensor3& c, const char* lname, const char* rname, int rsign) {
        std::vector<Scalar> vals;
        vals.reserve(V * V * n);
        for (std::size_t v1 = 0; v1 < V; ++v1)
            for (std::size_t v2 = 0; v2 < V; ++v2) {
                Vec lhs = multiply(c, Pv[v1], Pv[v2]);
                Vec inner = bm.act(lname, Pv[v1]).column(v2);
                Vec second = bm.act(rname, Pv[v2]).column(v1);
                inner = rsign > 0 ? inner + second : inner - second;
                Vec res = lhs - spec.P.apply(inner);
                vals.insert(vals.end(), res.begin(), res.end());
            }
        rep.add(Check::from_array(id, {V, V, n}, std::move(vals), &ax));
    };

    switch (alg.kind) {
        case Kind::lie: identity("oop-lie", alg.mul(), "rho", "rho", -1); break;
        case Kind::prelie: identity("oop-prelie", alg.mul(), "l", "r", 1); break;
        case Kind::associative: identity("oop-assoc", alg.mul(), "l", "r", 1); break;
        case Kind::dendriform:
            identity("oop-prec", alg.prec(), "l_prec", "r_prec", 1);
            identity("oop-succ", alg.succ(), "l_succ", "r_succ", 1);
            break;
        case Kind::perm: throw KindError("no O-operator notion for perm algebras here");
    }
    return rep;
}

Report ooperator_equivalence(const FinAlgebra& alg, const RMatrix& r) {
    YbeKind yk = ybe_for(alg.kind);
    Report rep;
    rep.subject = std::string(ybe_name(yk)) + " vs O-operator";
    auto ax = axes(alg, 3);
    rep.add(Check::from_tensor(std::string(ybe_name(yk)), ybe_residual(yk, alg, r), &ax));
    rep.absorb(check_ooperator({alg, coregular_bimodule(alg), sharp(r)}), "sharp");
    return rep;
}

namespace {

Check ybe_check(const std::string& id, YbeKind k, const FinAlgebra& alg, const RMatrix& r) {
    auto ax = axes(alg, 3);
    return Check::from_tensor(id, ybe_residual(k, alg, r), &ax);
}

Check symmetric_check(const std::string& id, const FinAlgebra& alg, const RMatrix& r) {
    auto ax = axes(alg, 2);
    return Check::from_matrix(id, (r - flip(r)).coeffs(), &ax);
}

Check skew_check(const std::string& id, const FinAlgebra& alg, const RMatrix& r) {
    auto ax = axes(alg, 2);
    return Check::from_matrix(id, (r + flip(r)).coeffs(), &ax);
}

bool qp_ok(const QuadraticPerm& qp) { return check_quadratic_perm(qp.algebra, qp.form).pass(); }

// Evaluates the hypothesis checks; returns whether they all hold.
bool hypothesis(TransferReport& rep, std::vector<Check> hyps) {
    bool ok = true;
    for (auto& c : hyps) {
        ok = ok && c.zero;
        c.id = "hypothesis/" + c.id;
        rep.add(std::move(c));
    }
    rep.hypothesis_ok = ok;
    return ok;
}

// ν as defined by its pairing makes the induced coproduct the coboundary of −r̂
std::string sign_note(const std::string& what, const Tensor3& induced, const Tensor3& of_minus) {
    return what + (induced == of_minus ? " equals" : " differs from") + " the coboundary coproduct of -r_hat";
}

TransferReport start(const std::string& subject) {
    TransferReport rep;
    rep.subject = subject;
    return rep;
}

}  // namespace

TransferReport transfer_plybe_to_cybe(const FinAlgebra& A, const RMatrix& r, const QuadraticPerm& qp) {
    require_verified(A, {Kind::prelie}, "transfer_plybe_to_cybe");
    TransferReport rep = start("PLYBE solution to CYBE solution on A⊗B");
    if (!hypothesis(rep, {Check::boolean("quadratic-perm", qp_ok(qp)), ybe_check("plybe", YbeKind::plybe, A, r),
                          invariance_check("invariance(r-tau r)", A, r - flip(r))}))
        return rep;
    FinAlgebra L = tensor_lie(A, qp.algebra);
    RMatrix rh = lift_r(r, qp);
    rep.add(ybe_check("cybe(r_hat)", YbeKind::cybe, L, rh));
    rep.add(invariance_check("invariance(r_hat+tau r_hat)", L, rh + flip(rh)));
    return rep;
}

TransferReport transfer_symmetric_plybe_to_cybe(const FinAlgebra& A, const RMatrix& r, const QuadraticPerm& qp) {
    require_verified(A, {Kind::prelie}, "transfer_symmetric_plybe_to_cybe");
    TransferReport rep = start("symmetric PLYBE solution to skew CYBE solution");
    if (!hypothesis(rep, {Check::boolean("quadratic-perm", qp_ok(qp)), symmetric_check("symmetric", A, r),
                          ybe_check("plybe", YbeKind::plybe, A, r)}))
        return rep;
    FinAlgebra L = tensor_lie(A, qp.algebra);
    RMatrix rh = lift_r(r, qp);
    rep.add(skew_check("skew(r_hat)", L, rh));
    rep.add(ybe_check("cybe(r_hat)", YbeKind::cybe, L, rh));
    return rep;
}

TransferReport transfer_induced_lie_coboundary(const FinAlgebra& A, const RMatrix& r, const QuadraticPerm& qp) {
    require_verified(A, {Kind::prelie}, "transfer_induced_lie_coboundary");
    TransferReport rep = start("induced Lie bialgebra is coboundary for r_hat");
    BialgStruct pb = coboundary_bialgebra(A, r);
    if (!hypothesis(rep, {Check::boolean("quadratic-perm", qp_ok(qp)),
                          Check::boolean("prelie-bialgebra", check_bialgebra(pb).pass()),
                          invariance_check("invariance(r-tau r)", A, r - flip(r))}))
        return rep;
    BialgStruct lb = induce_lie_bialgebra(pb, qp);
    RMatrix rh = lift_r(r, qp);
    CoalgStruct dr = coboundary_coproduct(lb.algebra, rh);
    rep.add(compare_cubes("delta=delta_r_hat", lb.coalgebra.delta(), dr.delta(), lb.algebra.basis_names));
    rep.notes.push_back(sign_note("delta", lb.coalgebra.delta(), coboundary_coproduct(lb.algebra, -rh).delta()));

    // the three consequences, each only when its premise holds on A
    const bool plybe = ybe_residual(YbeKind::plybe, A, r).is_zero();
    if (plybe) {
        rep.add(ybe_check("quasi-triangular/cybe(r_hat)", YbeKind::cybe, lb.algebra, rh));
        rep.add(invariance_check("quasi-triangular/invariance(r_hat+tau r_hat)", lb.algebra, rh + flip(rh)));
        if ((r - flip(r)).is_zero()) rep.add(skew_check("triangular/skew(r_hat)", lb.algebra, rh));
        if (factorizable_map(Kind::prelie, r).invertible)
            rep.add(Check::boolean("factorizable/I(r_hat)", factorizable_map(Kind::lie, rh).invertible));
    }
    return rep;
}

TransferReport transfer_dybe_to_aybe(const FinAlgebra& D, const RMatrix& r, const QuadraticPerm& qp) {
    require_verified(D, {Kind::dendriform}, "transfer_dybe_to_aybe");
    TransferReport rep = start("symmetric DYBE solution to skew AYBE solution on D⊗B");
    if (!hypothesis(rep, {Check::boolean("quadratic-perm", qp_ok(qp)), symmetric_check("symmetric", D, r),
                          ybe_check("dybe", YbeKind::dybe, D, r)}))
        return rep;
    FinAlgebra M = tensor_assoc(D, qp.algebra);
    RMatrix rh = lift_r(r, qp);
    rep.add(skew_check("skew(r_hat)", M, rh));
    rep.add(ybe_check("aybe(r_hat)", YbeKind::aybe, M, rh));
    return rep;
}

TransferReport transfer_induced_asi_coboundary(const FinAlgebra& D, const RMatrix& r, const QuadraticPerm& qp) {
    require_verified(D, {Kind::dendriform}, "transfer_induced_asi_coboundary");
    TransferReport rep = start("induced ASI bialgebra is coboundary for r_hat");
    BialgStruct db = coboundary_bialgebra(D, r);
    if (!hypothesis(rep, {Check::boolean("quadratic-perm", qp_ok(qp)), symmetric_check("symmetric", D, r),
                          Check::boolean("dendriform-bialgebra", check_bialgebra(db).pass())}))
        return rep;
    BialgStruct ab = induce_asi_bialgebra(db, qp);
    RMatrix rh = lift_r(r, qp);
    CoalgStruct dr = coboundary_coproduct(ab.algebra, rh);
    rep.add(compare_cubes("Delta=Delta_r_hat", ab.coalgebra.delta(), dr.delta(), ab.algebra.basis_names));
    rep.notes.push_back(sign_note("Delta", ab.coalgebra.delta(), coboundary_coproduct(ab.algebra, -rh).delta()));
    if (ybe_residual(YbeKind::dybe, D, r).is_zero()) {
        rep.add(skew_check("triangular/skew(r_hat)", ab.algebra, rh));
        rep.add(ybe_check("triangular/aybe(r_hat)", YbeKind::aybe, ab.algebra, rh));
    }
    return rep;
}

TransferReport transfer_aybe_to_cybe(const FinAlgebra& A, const RMatrix& r) {
    require_verified(A, {Kind::associative}, "transfer_aybe_to_cybe");
    TransferReport rep = start("AYBE solution to CYBE solution in the commutator algebra");
    if (!hypothesis(rep, {ybe_check("aybe", YbeKind::aybe, A, r),
                          invariance_check("invariance(r+tau r)", A, r + flip(r))}))
        return rep;
    FinAlgebra L = commutator_lie(A);
    rep.add(ybe_check("cybe", YbeKind::cybe, L, r));
    rep.add(invariance_check("ad-invariance(r+tau r)", L, r + flip(r)));
    return rep;
}

TransferReport transfer_asi_to_lie_coboundary(const FinAlgebra& A, const RMatrix& r) {
    require_verified(A, {Kind::associative}, "transfer_asi_to_lie_coboundary");
    TransferReport rep = start("Lie bialgebra induced from a coboundary ASI bialgebra");
    BialgStruct ab = coboundary_bialgebra(A, r);
    if (!hypothesis(rep, {Check::boolean("asi-bialgebra", check_bialgebra(ab).pass()),
                          invariance_check("invariance(r+tau r)", A, r + flip(r))}))
        return rep;
    BialgStruct lb = asi_to_lie_bialgebra(ab);
    CoalgStruct dr = coboundary_coproduct(lb.algebra, r);
    rep.add(compare_cubes("delta=delta_r", lb.coalgebra.delta(), dr.delta(), A.basis_names));
    if (ybe_residual(YbeKind::aybe, A, r).is_zero()) {
        rep.add(ybe_check("quasi-triangular/cybe", YbeKind::cybe, lb.algebra, r));
        if (factorizable_map(Kind::associative, r).invertible)
            rep.add(Check::boolean("factorizable/I", factorizable_map(Kind::lie, r).invertible));
    }
    return rep;
}

TransferReport transfer_dybe_to_plybe(const FinAlgebra& D, const RMatrix& r) {
    require_verified(D, {Kind::dendriform}, "transfer_dybe_to_plybe");
    TransferReport rep = start("symmetric DYBE solution to PLYBE solution");
    if (!hypothesis(rep, {symmetric_check("symmetric", D, r), ybe_check("dybe", YbeKind::dybe, D, r)})) return rep;
    rep.add(ybe_check("plybe", YbeKind::plybe, dendriform_to_prelie(D), r));
    return rep;
}

TransferReport transfer_dendriform_to_prelie_coboundary(const FinAlgebra& D, const RMatrix& r) {
    require_verified(D, {Kind::dendriform}, "transfer_dendriform_to_prelie_coboundary");
    TransferReport rep = start("pre-Lie bialgebra induced from a triangular D-bialgebra");
    BialgStruct db = coboundary_bialgebra(D, r);
    if (!hypothesis(rep, {symmetric_check("symmetric", D, r), ybe_check("dybe", YbeKind::dybe, D, r),
                          Check::boolean("dendriform-bialgebra", check_bialgebra(db).pass())}))
        return rep;
    BialgStruct pb = dendriform_to_prelie_bialgebra(db);
    CoalgStruct tr = coboundary_coproduct(pb.algebra, r);
    rep.add(compare_cubes("vartheta=vartheta_r", pb.coalgebra.delta(), tr.delta(), D.basis_names));
    return rep;
}

TransferReport transfer_assoc_ooperator(const FinAlgebra& A, const LinMap& P) {
    require_verified(A, {Kind::associative}, "transfer_assoc_ooperator");
    TransferReport rep = start("associative O-operator to Lie O-operator");
    if (!hypothesis(rep, {Check::boolean("oop-assoc", check_ooperator({A, coregular_bimodule(A), P}).pass())}))
        return rep;
    FinAlgebra L = commutator_lie(A);
    rep.absorb(check_ooperator({L, coregular_bimodule(L), P}), "lie");
    return rep;
}

TransferReport transfer_dendriform_ooperator(const FinAlgebra& D, const LinMap& P) {
    require_verified(D, {Kind::dendriform}, "transfer_dendriform_ooperator");
    TransferReport rep = start("dendriform O-operator to pre-Lie O-operator");
    if (!hypothesis(rep, {Check::boolean("oop-dendriform", check_ooperator({D, coregular_bimodule(D), P}).pass())}))
        return rep;
    FinAlgebra A = dendriform_to_prelie(D);
    rep.absorb(check_ooperator({A, coregular_bimodule(A), P}), "prelie");
    return rep;
}

TransferReport transfer_ooperator_equivalence(const FinAlgebra& alg, const RMatrix& r) {
    require_verified(alg, {Kind::lie, Kind::prelie, Kind::associative, Kind::dendriform},
                     "transfer_ooperator_equivalence");
    const bool wants_symmetric = alg.kind == Kind::prelie || alg.kind == Kind::dendriform;
    TransferReport rep = start("YBE solution iff r# is an O-operator");
    if (!hypothesis(rep, {wants_symmetric ? symmetric_check("symmetric", alg, r) : skew_check("skew", alg, r)}))
        return rep;
    Report eq = ooperator_equivalence(alg, r);
    bool ybe_zero = eq.checks.front().zero;
    bool oop_zero = true;
    for (std::size_t i = 1; i < eq.checks.size(); ++i) oop_zero = oop_zero && eq.checks[i].zero;
    rep.add(Check::boolean("equivalence", ybe_zero == oop_zero,
                           std::string("ybe ") + (ybe_zero ? "zero" : "nonzero") + ", O-operator " +
                               (oop_zero ? "zero" : "nonzero")));
    rep.notes.push_back(std::string("ybe residual ") + (ybe_zero ? "zero" : "nonzero"));
    return rep;
}

}  // namespace bialg
