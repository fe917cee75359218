#include "bialg/bialgebra.hpp"

#include "bialg/linalg.hpp"

namespace bialg {

std::string_view cokind_name(CoKind k) {
    switch (k) {
        case CoKind::dendriform: return "dendriform";
        case CoKind::prelie: return "prelie";
        case CoKind::lie: return "lie";
        case CoKind::perm: return "perm";
        case CoKind::coassociative: return "coassociative";
    }
    return "?";
}

CoKind parse_cokind(std::string_view s) {
    for (CoKind k : {CoKind::dendriform, CoKind::prelie, CoKind::lie, CoKind::perm, CoKind::coassociative})
        if (cokind_name(k) == s) return k;
    throw KindError("unknown coalgebra kind \"" + std::string(s) + "\"");
}

std::vector<std::string> coproduct_names(CoKind k) {
    if (k == CoKind::dendriform) return {"theta_prec", "theta_succ"};
    return {"delta"};
}

CoKind matching_cokind(Kind k) {
    switch (k) {
        case Kind::dendriform: return CoKind::dendriform;
        case Kind::prelie: return CoKind::prelie;
        case Kind::lie: return CoKind::lie;
        case Kind::associative: return CoKind::coassociative;
        case Kind::perm: return CoKind::perm;
    }
    throw KindError("no matching coalgebra kind");
}

CoalgStruct CoalgStruct::zero(CoKind kind, std::size_t dim) {
    CoalgStruct c;
    c.kind = kind;
    c.dim = dim;
    for (const auto& n : coproduct_names(kind)) c.coproducts[n] = Tensor3::cube(dim);
    return c;
}

const Tensor3& CoalgStruct::coproduct(const std::string& name) const {
    auto it = coproducts.find(name);
    if (it == coproducts.end()) throw KindError("coalgebra has no coproduct \"" + name + "\"");
    return it->second;
}

Tensor3& CoalgStruct::coproduct(const std::string& name) {
    auto it = coproducts.find(name);
    if (it == coproducts.end()) throw KindError("coalgebra has no coproduct \"" + name + "\"");
    return it->second;
}

Tensor2 apply_coproduct(const Tensor3& t, std::size_t i) {
    Tensor2 r(t.d2(), t.d3());
    for (std::size_t j = 0; j < t.d2(); ++j)
        for (std::size_t k = 0; k < t.d3(); ++k) r(j, k) = t(i, j, k);
    return r;
}

Tensor2 apply_coproduct(const Tensor3& t, const Vec& x) {
    Tensor2 r(t.d2(), t.d3());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) r += x[i] * apply_coproduct(t, i);
    return r;
}

Tensor2 apply_left(const Matrix& X, const Tensor2& t) { return Tensor2(X * t.coeffs()); }
Tensor2 apply_right(const Matrix& Y, const Tensor2& t) { return Tensor2(t.coeffs() * Y.transpose()); }
Tensor2 apply_pair(const Matrix& X, const Matrix& Y, const Tensor2& t) {
    return Tensor2(X * t.coeffs() * Y.transpose());
}

Tensor3 flip_outputs(const Tensor3& t) {
    Tensor3 r(t.d1(), t.d3(), t.d2());
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            for (std::size_t k = 0; k < t.d3(); ++k) r(i, k, j) = t(i, j, k);
    return r;
}

namespace {

using Array = std::vector<Scalar>;

// (θ⊗id)φ as an array (in, a, b, c)
Array co_left(const Tensor3& theta, const Tensor3& phi, std::size_t n) {
    Array r(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& p = phi(i, j, c);
                if (is_zero(p)) continue;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (!is_zero(theta(j, a, b))) r[((i * n + a) * n + b) * n + c] += p * theta(j, a, b);
            }
    return r;
}

// (id⊗θ)φ
Array co_right(const Tensor3& theta, const Tensor3& phi, std::size_t n) {
    Array r(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& p = phi(i, a, k);
                if (is_zero(p)) continue;
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (!is_zero(theta(k, b, c))) r[((i * n + a) * n + b) * n + c] += p * theta(k, b, c);
            }
    return r;
}

// (τ⊗id) on the outputs
Array swap12(const Array& x, std::size_t n) {
    Array r(x.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) r[((i * n + a) * n + b) * n + c] = x[((i * n + b) * n + a) * n + c];
    return r;
}

Array lin(std::initializer_list<std::pair<int, const Array*>> terms) {
    Array r(terms.begin()->second->size());
    for (auto [s, a] : terms)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (is_zero((*a)[i])) continue;
            if (s > 0) r[i] += (*a)[i];
            else r[i] -= (*a)[i];
        }
    return r;
}

std::vector<std::vector<std::string>> index_axes(std::size_t n, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return std::vector<std::vector<std::string>>(count, names);
}

}  // namespace

ResidualReport check_coalgebra(const CoalgStruct& c) {
    const std::size_t n = c.dim;
    for (const auto& name : coproduct_names(c.kind)) {
        const Tensor3& t = c.coproduct(name);
        if (t.d1() != n || t.d2() != n || t.d3() != n) throw ShapeError("coproduct " + name + " has wrong shape");
    }
    ResidualReport rep;
    rep.subject = std::string(cokind_name(c.kind)) + " coalgebra";
    auto ax = index_axes(n, 4);
    auto add = [&](const std::string& id, Array a) { rep.add(Check::from_array(id, {n, n, n, n}, std::move(a), &ax)); };
    switch (c.kind) {
        case CoKind::dendriform: {
            const auto &P = c.theta_prec(), &S = c.theta_succ();
            Array pp_l = co_left(P, P, n), pp_r = co_right(P, P, n), sp_r = co_right(S, P, n);
            add("codend-1", lin({{1, &pp_l}, {-1, &pp_r}, {-1, &sp_r}}));
            Array sp_l = co_left(S, P, n), ps_r = co_right(P, S, n);
            add("codend-2", lin({{1, &sp_l}, {-1, &ps_r}}));
            Array ss_r = co_right(S, S, n), ps_l = co_left(P, S, n), ss_l = co_left(S, S, n);
            add("codend-3", lin({{1, &ss_r}, {-1, &ps_l}, {-1, &ss_l}}));
            break;
        }
        case CoKind::prelie: {
            const auto& T = c.delta();
            Array r = co_right(T, T, n), l = co_left(T, T, n);
            Array rs = swap12(r, n), ls = swap12(l, n);
            add("coprelie", lin({{1, &r}, {-1, &rs}, {-1, &l}, {1, &ls}}));
            break;
        }
        case CoKind::lie: {
            const auto& T = c.delta();
            auto ax3 = index_axes(n, 3);
            rep.add(Check::from_tensor("colie-antisym", T + flip_outputs(T), &ax3));
            Array r = co_right(T, T, n), l = co_left(T, T, n);
            Array rs = swap12(r, n);
            add("colie-cojacobi", lin({{1, &r}, {-1, &rs}, {-1, &l}}));
            break;
        }
        case CoKind::perm: {
            const auto& T = c.delta();
            Array r = co_right(T, T, n), l = co_left(T, T, n);
            Array rs = swap12(r, n);
            add("coperm-assoc", lin({{1, &l}, {-1, &r}}));
            add("coperm-comm", lin({{1, &r}, {-1, &rs}}));
            break;
        }
        case CoKind::coassociative: {
            const auto& T = c.delta();
            Array r = co_right(T, T, n), l = co_left(T, T, n);
            add("coassoc", lin({{1, &l}, {-1, &r}}));
            break;
        }
    }
    return rep;
}

std::string_view dbi4_name(DBi4Reading r) { return r == DBi4Reading::printed ? "printed" : "derived"; }

std::string_view dbi6_name(DBi6Reading r) {
    switch (r) {
        case DBi6Reading::literal: return "literal";
        case DBi6Reading::theta_d1: return "theta_d1";
        case DBi6Reading::actions_d1: return "actions_d1";
    }
    return "?";
}

DBi4Reading parse_dbi4(std::string_view s) {
    for (auto r : {DBi4Reading::printed, DBi4Reading::derived})
        if (dbi4_name(r) == s) return r;
    throw ParseError("unknown D-bi4 reading \"" + std::string(s) + "\"");
}

DBi6Reading parse_dbi6(std::string_view s) {
    for (auto r : {DBi6Reading::literal, DBi6Reading::theta_d1, DBi6Reading::actions_d1})
        if (dbi6_name(r) == s) return r;
    throw ParseError("unknown D-bi6 reading \"" + std::string(s) + "\"");
}

namespace {

template <class F>
Check pair_check(const std::string& id, std::size_t n, F&& eq) {
    Array vals;
    vals.reserve(n * n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Tensor2 t = eq(a, b);
            vals.insert(vals.end(), t.coeffs().data().begin(), t.coeffs().data().end());
        }
    auto ax = index_axes(n, 4);
    return Check::from_array(id, {n, n, n, n}, std::move(vals), &ax);
}

void check_pairing(const BialgStruct& b) {
    if (b.algebra.dim != b.coalgebra.dim) throw ShapeError("algebra and coalgebra dimensions differ");
    if (matching_cokind(b.algebra.kind) != b.coalgebra.kind || b.algebra.kind == Kind::perm)
        throw KindError("algebra kind " + std::string(kind_name(b.algebra.kind)) + " does not pair with coalgebra kind " +
                        std::string(cokind_name(b.coalgebra.kind)));
}

}  // namespace

ResidualReport check_bialgebra(const BialgStruct& b, const BialgCheckOptions& opt) {
    check_pairing(b);
    const std::size_t n = b.algebra.dim;
    const FinAlgebra& A = b.algebra;
    ResidualReport rep;
    rep.subject = std::string(kind_name(A.kind)) + " bialgebra";
    if (opt.include_parts) {
        rep.absorb(check_axioms(A), "algebra");
        rep.absorb(check_coalgebra(b.coalgebra), "coalgebra");
    }
    auto e = [&](std::size_t i) { return unit_vec(n, i); };

    switch (A.kind) {
        case Kind::prelie: {
            const Tensor3& T = b.coalgebra.delta();
            const Tensor3& M = A.mul();
            auto th = [&](const Vec& x) { return apply_coproduct(T, x); };
            auto S = [&](const Vec& x) { Tensor2 t = th(x); return t - flip(t); };
            auto l = [&](std::size_t i) { return left_mult(M, i); };
            auto r = [&](std::size_t i) { return right_mult(M, i); };
            rep.add(pair_check("prelie-bia-1", n, [&](auto a1, auto a2) {
                return S(multiply_basis(M, a1, a2)) - apply_left(l(a1), S(e(a2))) - apply_right(l(a1), S(e(a2))) -
                       apply_right(r(a2), th(e(a1))) + apply_left(r(a2), flip(th(e(a1))));
            }));
            rep.add(pair_check("prelie-bia-2", n, [&](auto a1, auto a2) {
                return th(multiply_basis(M, a1, a2) - multiply_basis(M, a2, a1)) - apply_right(r(a2) - l(a2), th(e(a1))) -
                       apply_right(l(a1) - r(a1), th(e(a2))) - apply_left(l(a1), th(e(a2))) +
                       apply_left(l(a2), th(e(a1)));
            }));
            break;
        }
        case Kind::lie: {
            const Tensor3& T = b.coalgebra.delta();
            const Tensor3& M = A.mul();
            auto dl = [&](std::size_t i) { return apply_coproduct(T, i); };
            auto ad_both = [&](std::size_t g, const Tensor2& t) {
                Matrix ad = left_mult(M, g);
                return apply_left(ad, t) + apply_right(ad, t);
            };
            rep.add(pair_check("lie-bia", n, [&](auto g1, auto g2) {
                return apply_coproduct(T, multiply_basis(M, g1, g2)) - ad_both(g1, dl(g2)) + ad_both(g2, dl(g1));
            }));
            break;
        }
        case Kind::associative: {
            const Tensor3& T = b.coalgebra.delta();
            const Tensor3& M = A.mul();
            auto D = [&](std::size_t i) { return apply_coproduct(T, i); };
            auto l = [&](std::size_t i) { return left_mult(M, i); };
            auto r = [&](std::size_t i) { return right_mult(M, i); };
            rep.add(pair_check("asi-1", n, [&](auto a1, auto a2) {
                return apply_coproduct(T, multiply_basis(M, a1, a2)) - apply_left(r(a2), D(a1)) - apply_right(l(a1), D(a2));
            }));
            rep.add(pair_check("asi-2", n, [&](auto a1, auto a2) {
                Tensor2 lhs = apply_left(l(a1), D(a2)) - apply_right(r(a1), D(a2));
                Tensor2 inner = apply_right(r(a2), D(a1)) - apply_left(l(a2), D(a1));
                return lhs - flip(inner);
            }));
            break;
        }
        case Kind::dendriform: {
            const Tensor3 &TP = b.coalgebra.theta_prec(), &TS = b.coalgebra.theta_succ();
            const Tensor3 &P = A.prec(), &S = A.succ();
            auto tp = [&](const Vec& x) { return apply_coproduct(TP, x); };
            auto ts = [&](const Vec& x) { return apply_coproduct(TS, x); };
            auto lp = [&](std::size_t i) { return left_mult(P, i); };
            auto ls = [&](std::size_t i) { return left_mult(S, i); };
            auto rp = [&](std::size_t i) { return right_mult(P, i); };
            auto rs = [&](std::size_t i) { return right_mult(S, i); };
            auto pr = [&](std::size_t i, std::size_t j) { return multiply_basis(P, i, j); };
            auto su = [&](std::size_t i, std::size_t j) { return multiply_basis(S, i, j); };

            rep.add(pair_check("D-bi1", n, [&](auto d1, auto d2) {
                return tp(pr(d1, d2) + su(d1, d2)) - apply_right(ls(d1), tp(e(d2))) - apply_left(rp(d2) + rs(d2), tp(e(d1)));
            }));
            rep.add(pair_check("D-bi2", n, [&](auto d1, auto d2) {
                return ts(pr(d1, d2) + su(d1, d2)) - apply_right(lp(d1) + ls(d1), ts(e(d2))) - apply_left(rp(d2), ts(e(d1)));
            }));
            rep.add(pair_check("D-bi3", n, [&](auto d1, auto d2) {
                return tp(pr(d1, d2)) + ts(pr(d1, d2)) - apply_right(lp(d1), ts(e(d2))) -
                       apply_left(rp(d2), tp(e(d1)) + ts(e(d1)));
            }));
            const bool printed4 = opt.dbi4 == DBi4Reading::printed;
            rep.add(pair_check("D-bi4", n, [&](auto d1, auto d2) {
                Matrix l = printed4 ? lp(d1) : ls(d1), r = printed4 ? rp(d2) : rs(d2);
                return tp(su(d1, d2)) + ts(su(d1, d2)) - apply_right(l, tp(e(d2)) + ts(e(d2))) -
                       apply_left(r, tp(e(d1)));
            }));
            rep.add(pair_check("D-bi5", n, [&](auto d1, auto d2) {
                Tensor2 lhs = apply_left(lp(d1) + ls(d1), tp(e(d2))) - apply_right(rp(d1), tp(e(d2)));
                Tensor2 inner = apply_left(ls(d2), ts(e(d1))) - apply_right(rp(d2) + rs(d2), ts(e(d1)));
                return lhs + flip(inner);
            }));
            const DBi6Reading reading = opt.dbi6;
            rep.add(pair_check("D-bi6", n, [&](auto d1, auto d2) {
                Tensor2 lhs = apply_left(ls(d2), tp(e(d1)) + ts(e(d1))) - apply_right(rp(d2), tp(e(d1)) + ts(e(d1)));
                std::size_t x = reading == DBi6Reading::actions_d1 ? d1 : d2;
                std::size_t y = reading == DBi6Reading::theta_d1 ? d1 : d2;
                Tensor2 inner = apply_right(rs(x), ts(e(y))) - apply_left(lp(x), tp(e(y)));
                return lhs - flip(inner);
            }));
            rep.notes.push_back("D-bi4 reading: " + std::string(dbi4_name(opt.dbi4)));
            rep.notes.push_back("D-bi6 reading: " + std::string(dbi6_name(reading)));
            break;
        }
        case Kind::perm: throw KindError("no bialgebra notion for perm algebras here");
    }
    return rep;
}

void require_verified(const BialgStruct& b, const char* who) {
    auto rep = check_bialgebra(b);
    if (!rep.pass()) {
        for (const auto& c : rep.checks)
            if (!c.zero)
                throw AxiomError(std::string(who) + ": input bialgebra fails " + c.id +
                            (c.first_violation ? " at " + c.first_violation->where : std::string()));
    }
}

Report check_quadratic_perm(const FinAlgebra& B, const BilinForm& w) {
    if (B.kind != Kind::perm) throw KindError("quadratic perm algebra needs a perm algebra");
    const std::size_t n = B.dim;
    if (w.m.rows() != n || w.m.cols() != n) throw ShapeError("form has wrong shape");
    Report rep;
    rep.subject = "quadratic perm algebra";
    rep.absorb(check_axioms(B), "algebra");
    std::vector<std::vector<std::string>> ax2(2, B.basis_names), ax3(3, B.basis_names);
    rep.add(Check::from_matrix("form-antisym", w.m + w.m.transpose(), &ax2));
    Tensor3 inv(n, n, n);
    const auto& M = B.mul();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Vec ab = multiply_basis(M, a, b);
                Vec rhs = multiply_basis(M, b, c) - multiply_basis(M, c, b);
                inv(a, b, c) = w(ab, unit_vec(n, c)) - w(unit_vec(n, a), rhs);
            }
    rep.add(Check::from_tensor("form-invariance", inv, &ax3));
    auto ker = kernel_vector(w.m);
    if (ker) {
        std::string s = "kernel vector (";
        for (std::size_t i = 0; i < ker->size(); ++i) s += (i ? "," : "") + format_scalar((*ker)[i]);
        rep.add(Check::boolean("form-nondegenerate", false, s + ")"));
    } else {
        rep.add(Check::boolean("form-nondegenerate", true));
    }
    return rep;
}

QuadraticPerm make_quadratic_perm(const FinAlgebra& B, const BilinForm& w) {
    Report rep = check_quadratic_perm(B, w);
    for (const auto& c : rep.checks)
        if (!c.zero) throw Error("not a quadratic perm algebra: " + c.id + " fails at " + c.first_violation->where);
    return QuadraticPerm{B, w};
}

CoalgStruct perm_coalgebra_from_quadratic(const QuadraticPerm& qp) {
    const std::size_t n = qp.algebra.dim;
    const Matrix& W = qp.form.m;
    Matrix F = dual_basis(qp.form);
    Matrix Ft = F.transpose();
    const auto& M = qp.algebra.mul();
    CoalgStruct c = CoalgStruct::zero(CoKind::perm, n);
    // pairing: Σ_pq N_i(p,q) Ω(p,s) Ω(q,t) = −ω(e_i, e_s e_t), i.e. Ωᵀ N_i Ω = −G_i,
    // so N_i = −Fᵀ G_i F with F = Ω⁻¹
    for (std::size_t i = 0; i < n; ++i) {
        Matrix G(n, n);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                Scalar acc = 0;
                for (std::size_t m = 0; m < n; ++m)
                    if (!is_zero(M(s, t, m))) acc += M(s, t, m) * W(i, m);
                G(s, t) = acc;
            }
        Matrix N = -(Ft * G * F);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) c.delta()(i, p, q) = N(p, q);
    }
    return c;
}

RMatrix kappa(const QuadraticPerm& qp) {
    // κ(s,t) = Σ_j δ_sj F(t,j)
    return RMatrix(dual_basis(qp.form).transpose());
}

Report check_dual_basis_identities(const QuadraticPerm& qp) {
    const std::size_t n = qp.algebra.dim;
    Report rep;
    rep.subject = "dual basis identities";
    Matrix F = dual_basis(qp.form);
    rep.add(Check::from_matrix("dual-pairing", qp.form.m * F - Matrix::identity(n)));
    CoalgStruct nu = perm_coalgebra_from_quadratic(qp);
    const auto& M = qp.algebra.mul();
    Tensor3 id1(n, n, n), id2(n, n, n), pairing(n, n, n), neg_left(n, n, n), neg_right(n, n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Tensor2 rhs1(n, n), rhs2(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec fj = F.column(j);
            rhs1 += tensor_product_elem(unit_vec(n, j), multiply(M, fj, unit_vec(n, b)));
            rhs2 += tensor_product_elem(multiply_basis(M, j, b), fj);
        }
        Tensor2 nb = apply_coproduct(nu.delta(), b);
        Tensor2 d1 = nb - rhs1, d2 = flip(nb) + rhs2;
        Tensor2 n1 = nb + rhs1, n2 = flip(nb) - rhs2;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                id1(b, p, q) = d1(p, q);
                id2(b, p, q) = d2(p, q);
                neg_left(b, p, q) = n1(p, q);
                neg_right(b, p, q) = n2(p, q);
            }
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                Scalar lhs = 0;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        if (!is_zero(nb(p, q))) lhs += nb(p, q) * qp.form.m(p, s) * qp.form.m(q, t);
                pairing(b, s, t) = lhs + qp.form(unit_vec(n, b), multiply_basis(M, s, t));
            }
    }
    rep.add(Check::from_tensor("nu-left-dual", id1));
    rep.add(Check::from_tensor("nu-right-dual", id2));
    // with ν fixed by its pairing both identities hold with the opposite sign
    rep.notes.push_back(neg_left.is_zero() && neg_right.is_zero() ? "both identities hold with the sign reversed"
                                                                  : "sign-reversed identities fail too");
    rep.add(Check::from_tensor("nu-pairing", pairing));
    rep.absorb(check_coalgebra(nu), "nu");
    return rep;
}

namespace {

void require_qp(const QuadraticPerm& qp, const char* who) {
    Report r = check_quadratic_perm(qp.algebra, qp.form);
    if (!r.pass()) throw Error(std::string(who) + ": quadratic perm algebra fails validation");
}

// coproduct tensor on A⊗B from a per-basis-pair Tensor2
template <class F>
Tensor3 tensor_coproduct(std::size_t n, std::size_t m, F&& f) {
    const std::size_t N = n * m;
    Tensor3 t = Tensor3::cube(N);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Tensor2 x = f(a, b);
            for (std::size_t p = 0; p < N; ++p)
                for (std::size_t q = 0; q < N; ++q) t(a * m + b, p, q) = x(p, q);
        }
    return t;
}

}  // namespace

BialgStruct induce_lie_bialgebra(const BialgStruct& pb, const QuadraticPerm& qp) {
    if (pb.algebra.kind != Kind::prelie) throw KindError("induce_lie_bialgebra needs a pre-Lie bialgebra");
    require_verified(pb, "induce_lie_bialgebra");
    require_qp(qp, "induce_lie_bialgebra");
    CoalgStruct nu = perm_coalgebra_from_quadratic(qp);
    const std::size_t n = pb.algebra.dim, m = qp.algebra.dim;
    BialgStruct out;
    out.algebra = tensor_lie(pb.algebra, qp.algebra);
    out.coalgebra = CoalgStruct::zero(CoKind::lie, n * m);
    out.coalgebra.delta() = tensor_coproduct(n, m, [&](auto a, auto b) {
        Tensor2 x = bullet(apply_coproduct(pb.coalgebra.delta(), a), apply_coproduct(nu.delta(), b));
        return x - flip(x);
    });
    return out;
}

BialgStruct induce_asi_bialgebra(const BialgStruct& db, const QuadraticPerm& qp) {
    if (db.algebra.kind != Kind::dendriform) throw KindError("induce_asi_bialgebra needs a dendriform D-bialgebra");
    require_verified(db, "induce_asi_bialgebra");
    require_qp(qp, "induce_asi_bialgebra");
    CoalgStruct nu = perm_coalgebra_from_quadratic(qp);
    const std::size_t n = db.algebra.dim, m = qp.algebra.dim;
    BialgStruct out;
    out.algebra = tensor_assoc(db.algebra, qp.algebra);
    out.coalgebra = CoalgStruct::zero(CoKind::coassociative, n * m);
    out.coalgebra.delta() = tensor_coproduct(n, m, [&](auto d, auto b) {
        Tensor2 nb = apply_coproduct(nu.delta(), b);
        return bullet(apply_coproduct(db.coalgebra.theta_succ(), d), nb) +
               bullet(apply_coproduct(db.coalgebra.theta_prec(), d), flip(nb));
    });
    return out;
}

BialgStruct asi_to_lie_bialgebra(const BialgStruct& ab) {
    if (ab.algebra.kind != Kind::associative) throw KindError("asi_to_lie_bialgebra needs an ASI bialgebra");
    require_verified(ab, "asi_to_lie_bialgebra");
    BialgStruct out;
    out.algebra = commutator_lie(ab.algebra);
    out.coalgebra = CoalgStruct::zero(CoKind::lie, ab.algebra.dim);
    out.coalgebra.delta() = ab.coalgebra.delta() - flip_outputs(ab.coalgebra.delta());
    return out;
}

BialgStruct dendriform_to_prelie_bialgebra(const BialgStruct& db) {
    if (db.algebra.kind != Kind::dendriform)
        throw KindError("dendriform_to_prelie_bialgebra needs a dendriform D-bialgebra");
    require_verified(db, "dendriform_to_prelie_bialgebra");
    BialgStruct out;
    out.algebra = dendriform_to_prelie(db.algebra);
    out.coalgebra = CoalgStruct::zero(CoKind::prelie, db.algebra.dim);
    out.coalgebra.delta() = db.coalgebra.theta_succ() - flip_outputs(db.coalgebra.theta_prec());
    return out;
}

Report check_bialgebra_square(const BialgStruct& db, const QuadraticPerm& qp) {
    Report rep;
    rep.subject = "bialgebra square";
    BialgStruct a = asi_to_lie_bialgebra(induce_asi_bialgebra(db, qp));
    BialgStruct b = induce_lie_bialgebra(dendriform_to_prelie_bialgebra(db), qp);
    rep.add(compare_cubes("square/bracket", a.algebra.mul(), b.algebra.mul(), a.algebra.basis_names));
    rep.add(compare_cubes("square/cobracket", a.coalgebra.delta(), b.coalgebra.delta(), a.algebra.basis_names));
    return rep;
}

}  // namespace bialg
