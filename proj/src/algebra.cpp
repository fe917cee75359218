#include "bialg/algebra.hpp"

#include <algorithm>

namespace bialg {

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::dendriform: return "dendriform";
        case Kind::prelie: return "prelie";
        case Kind::perm: return "perm";
        case Kind::associative: return "associative";
        case Kind::lie: return "lie";
    }
    return "?";
}

Kind parse_kind(std::string_view s) {
    for (Kind k : {Kind::dendriform, Kind::prelie, Kind::perm, Kind::associative, Kind::lie})
        if (kind_name(k) == s) return k;
    throw KindError("unknown algebra kind \"" + std::string(s) + "\"");
}

std::vector<std::string> product_names(Kind kind) {
    if (kind == Kind::dendriform) return {"prec", "succ"};
    return {"mul"};
}

std::vector<std::string> FinAlgebra::default_names(std::size_t dim, const std::string& stem) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back(stem + std::to_string(i + 1));
    return names;
}

FinAlgebra FinAlgebra::zero(Kind kind, std::size_t dim, std::vector<std::string> names) {
    FinAlgebra a;
    a.kind = kind;
    a.dim = dim;
    a.basis_names = names.empty() ? default_names(dim) : std::move(names);
    if (a.basis_names.size() != dim) throw ShapeError("basis name count differs from dim");
    for (const auto& p : product_names(kind)) a.products[p] = Tensor3::cube(dim);
    return a;
}

const Tensor3& FinAlgebra::product(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end()) throw KindError("algebra has no product \"" + name + "\"");
    return it->second;
}

Tensor3& FinAlgebra::product(const std::string& name) {
    auto it = products.find(name);
    if (it == products.end()) throw KindError("algebra has no product \"" + name + "\"");
    return it->second;
}

Vec multiply_basis(const Tensor3& c, std::size_t i, std::size_t j) {
    Vec r(c.d3());
    for (std::size_t k = 0; k < c.d3(); ++k) r[k] = c(i, j, k);
    return r;
}

Vec multiply(const Tensor3& c, const Vec& u, const Vec& v) {
    Vec r(c.d3());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (is_zero(u[i])) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (is_zero(v[j])) continue;
            Scalar s = u[i] * v[j];
            for (std::size_t k = 0; k < c.d3(); ++k)
                if (!is_zero(c(i, j, k))) r[k] += s * c(i, j, k);
        }
    }
    return r;
}

Matrix left_mult(const Tensor3& c, std::size_t i) {
    Matrix m(c.d3(), c.d2());
    for (std::size_t j = 0; j < c.d2(); ++j)
        for (std::size_t k = 0; k < c.d3(); ++k) m(k, j) = c(i, j, k);
    return m;
}

Matrix right_mult(const Tensor3& c, std::size_t i) {
    Matrix m(c.d3(), c.d1());
    for (std::size_t j = 0; j < c.d1(); ++j)
        for (std::size_t k = 0; k < c.d3(); ++k) m(k, j) = c(j, i, k);
    return m;
}

Matrix left_mult(const Tensor3& c, const Vec& a) {
    Matrix m(c.d3(), c.d2());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) m += a[i] * left_mult(c, i);
    return m;
}

Matrix right_mult(const Tensor3& c, const Vec& a) {
    Matrix m(c.d3(), c.d1());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) m += a[i] * right_mult(c, i);
    return m;
}

std::vector<std::string> action_names(Kind kind) {
    switch (kind) {
        case Kind::dendriform: return {"l_prec", "r_prec", "l_succ", "r_succ"};
        case Kind::prelie:
        case Kind::associative: return {"l", "r"};
        case Kind::lie: return {"rho"};
        case Kind::perm: break;
    }
    throw KindError("no bimodule notion for kind perm");
}

const Matrix& Bimodule::act(const std::string& name, std::size_t i) const {
    auto it = actions.find(name);
    if (it == actions.end()) throw KindError("bimodule has no action \"" + name + "\"");
    return it->second.at(i);
}

Matrix Bimodule::act(const std::string& name, const Vec& a) const {
    Matrix m(space_dim, space_dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) m += a[i] * act(name, i);
    return m;
}

namespace {

using Array = std::vector<Scalar>;

// (b_i P b_j) Q b_k as an n^4 array indexed (i,j,k,out)
Array assoc_left(const Tensor3& P, const Tensor3& Q, std::size_t n) {
    Array r(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const Scalar& p = P(i, j, m);
                if (is_zero(p)) continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t o = 0; o < n; ++o)
                        if (!is_zero(Q(m, k, o))) r[((i * n + j) * n + k) * n + o] += p * Q(m, k, o);
            }
    return r;
}

// b_i P (b_j Q b_k)
Array assoc_right(const Tensor3& P, const Tensor3& Q, std::size_t n) {
    Array r(n * n * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = 0; m < n; ++m) {
                const Scalar& q = Q(j, k, m);
                if (is_zero(q)) continue;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t o = 0; o < n; ++o)
                        if (!is_zero(P(i, m, o))) r[((i * n + j) * n + k) * n + o] += q * P(i, m, o);
            }
    return r;
}

// permute the three input slots: result(i0,i1,i2) = a(i_{p0}, i_{p1}, i_{p2})
Array permute_inputs(const Array& a, std::size_t n, std::array<int, 3> p) {
    Array r(a.size());
    std::size_t idx[3];
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = 0; idx[1] < n; ++idx[1])
            for (idx[2] = 0; idx[2] < n; ++idx[2])
                for (std::size_t o = 0; o < n; ++o)
                    r[((idx[0] * n + idx[1]) * n + idx[2]) * n + o] =
                        a[((idx[p[0]] * n + idx[p[1]]) * n + idx[p[2]]) * n + o];
    return r;
}

Array combine(std::initializer_list<std::pair<int, const Array*>> terms) {
    Array r(terms.begin()->second->size());
    for (auto [sign, arr] : terms)
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!is_zero((*arr)[i])) {
                if (sign > 0) r[i] += (*arr)[i];
                else r[i] -= (*arr)[i];
            }
    return r;
}

std::vector<std::vector<std::string>> axes(const std::vector<std::string>& names, std::size_t count) {
    return std::vector<std::vector<std::string>>(count, names);
}

}  // namespace

ResidualReport check_axioms(const FinAlgebra& alg) {
    const std::size_t n = alg.dim;
    for (const auto& p : product_names(alg.kind)) {
        const Tensor3& t = alg.product(p);
        if (t.d1() != n || t.d2() != n || t.d3() != n) throw ShapeError("structure cube " + p + " has wrong shape");
    }
    if (alg.products.size() != product_names(alg.kind).size())
        throw KindError("unexpected product set for kind " + std::string(kind_name(alg.kind)));

    ResidualReport rep;
    rep.subject = std::string(kind_name(alg.kind)) + " axioms";
    auto names4 = axes(alg.basis_names, 4);
    const std::vector<std::size_t> shape4{n, n, n, n};
    auto add = [&](const std::string& id, Array a) { rep.add(Check::from_array(id, shape4, std::move(a), &names4)); };

    switch (alg.kind) {
        case Kind::dendriform: {
            const auto &L = alg.prec(), &R = alg.succ();
            Array pp_l = assoc_left(L, L, n), pp_r = assoc_right(L, L, n), ps_r = assoc_right(L, R, n);
            add("dend-1", combine({{1, &pp_l}, {-1, &pp_r}, {-1, &ps_r}}));
            Array sp_l = assoc_left(R, L, n), sp_r = assoc_right(R, L, n);
            add("dend-2", combine({{1, &sp_l}, {-1, &sp_r}}));
            Array ss_r = assoc_right(R, R, n), ps_l = assoc_left(L, R, n), ss_l = assoc_left(R, R, n);
            add("dend-3", combine({{1, &ss_r}, {-1, &ps_l}, {-1, &ss_l}}));
            break;
        }
        case Kind::prelie: {
            const auto& M = alg.mul();
            Array r = assoc_right(M, M, n), l = assoc_left(M, M, n);
            Array assoc = combine({{1, &r}, {-1, &l}});
            Array swapped = permute_inputs(assoc, n, {1, 0, 2});
            add("prelie", combine({{1, &assoc}, {-1, &swapped}}));
            break;
        }
        case Kind::perm: {
            const auto& M = alg.mul();
            Array r = assoc_right(M, M, n), l = assoc_left(M, M, n);
            add("perm-assoc", combine({{1, &r}, {-1, &l}}));
            Array ls = permute_inputs(l, n, {1, 0, 2});
            add("perm-left-comm", combine({{1, &l}, {-1, &ls}}));
            break;
        }
        case Kind::associative: {
            const auto& M = alg.mul();
            Array r = assoc_right(M, M, n), l = assoc_left(M, M, n);
            add("assoc", combine({{1, &l}, {-1, &r}}));
            break;
        }
        case Kind::lie: {
            const auto& M = alg.mul();
            Tensor3 anti(n, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) anti(i, j, k) = M(i, j, k) + M(j, i, k);
            auto names3 = axes(alg.basis_names, 3);
            rep.add(Check::from_tensor("lie-antisym", anti, &names3));
            Array r = assoc_right(M, M, n);
            Array r2 = permute_inputs(r, n, {1, 2, 0}), r3 = permute_inputs(r, n, {2, 0, 1});
            add("lie-jacobi", combine({{1, &r}, {1, &r2}, {1, &r3}}));
            break;
        }
    }
    return rep;
}

bool is_verified(const FinAlgebra& alg) { return check_axioms(alg).pass(); }

void require_verified(const FinAlgebra& alg, std::initializer_list<Kind> kinds, const char* who) {
    if (std::find(kinds.begin(), kinds.end(), alg.kind) == kinds.end())
        throw KindError(std::string(who) + ": unsupported algebra kind " + std::string(kind_name(alg.kind)));
    auto rep = check_axioms(alg);
    if (!rep.pass()) {
        std::string where;
        for (const auto& c : rep.checks)
            if (!c.zero) {
                where = c.id + " at " + c.first_violation->where;
                break;
            }
        throw AxiomError(std::string(who) + ": input algebra fails its axioms (" + where + ")");
    }
}

Bimodule regular_bimodule(const FinAlgebra& alg) {
    Bimodule bm;
    bm.kind = alg.kind;
    bm.algebra_dim = alg.dim;
    bm.space_dim = alg.dim;
    auto fill = [&](const std::string& name, const Tensor3& c, bool left) {
        auto& v = bm.actions[name];
        for (std::size_t i = 0; i < alg.dim; ++i) v.push_back(left ? left_mult(c, i) : right_mult(c, i));
    };
    switch (alg.kind) {
        case Kind::dendriform:
            fill("l_prec", alg.prec(), true);
            fill("r_prec", alg.prec(), false);
            fill("l_succ", alg.succ(), true);
            fill("r_succ", alg.succ(), false);
            break;
        case Kind::prelie:
        case Kind::associative:
            fill("l", alg.mul(), true);
            fill("r", alg.mul(), false);
            break;
        case Kind::lie: fill("rho", alg.mul(), true); break;
        case Kind::perm: throw KindError("no bimodule notion for kind perm");
    }
    return bm;
}

namespace {

// Residual of a bimodule identity E(d1, d2) over basis pairs; each value is a
// space_dim² matrix. Shape (n, n, V, V).
template <class F>
Check bimodule_check(const std::string& id, const std::vector<std::string>& names, std::size_t V, F&& eq) {
    const std::size_t n = names.size();
    std::vector<Scalar> vals;
    vals.reserve(n * n * V * V);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix m = eq(a, b);
            vals.insert(vals.end(), m.data().begin(), m.data().end());
        }
    std::vector<std::vector<std::string>> ax{names, names, {}, {}};
    return Check::from_array(id, {n, n, V, V}, std::move(vals), &ax);
}

}  // namespace

ResidualReport check_bimodule(const FinAlgebra& alg, const Bimodule& bm) {
    if (alg.kind != bm.kind) throw KindError("bimodule kind differs from algebra kind");
    if (bm.algebra_dim != alg.dim) throw ShapeError("bimodule indexed by a different algebra dimension");
    for (const auto& name : action_names(alg.kind)) {
        auto it = bm.actions.find(name);
        if (it == bm.actions.end() || it->second.size() != alg.dim) throw ShapeError("missing action " + name);
        for (const auto& m : it->second)
            if (m.rows() != bm.space_dim || m.cols() != bm.space_dim) throw ShapeError("action " + name + " has wrong shape");
    }
    const std::size_t V = bm.space_dim;
    ResidualReport rep;
    rep.subject = std::string(kind_name(alg.kind)) + " bimodule";

    switch (alg.kind) {
        case Kind::dendriform: {
            auto A = [&](const char* name, std::size_t i) -> const Matrix& { return bm.act(name, i); };
            auto Av = [&](const char* name, const Vec& v) { return bm.act(name, v); };
            auto prec = [&](std::size_t i, std::size_t j) { return multiply_basis(alg.prec(), i, j); };
            auto succ = [&](std::size_t i, std::size_t j) { return multiply_basis(alg.succ(), i, j); };
            // one check per displayed relation, in display order
            rep.add(bimodule_check("dbm-1", alg.basis_names, V, [&](auto a, auto b) {
                return Av("l_prec", prec(a, b)) - A("l_prec", a) * A("l_prec", b) - A("l_prec", a) * A("l_succ", b);
            }));
            rep.add(bimodule_check("dbm-2", alg.basis_names, V, [&](auto a, auto b) {
                return Av("l_prec", succ(a, b)) - A("l_succ", a) * A("l_prec", b);
            }));
            rep.add(bimodule_check("dbm-3", alg.basis_names, V, [&](auto a, auto b) {
                return A("r_prec", a) * A("l_prec", b) - A("l_prec", b) * A("r_prec", a) - A("l_prec", b) * A("r_succ", a);
            }));
            rep.add(bimodule_check("dbm-4", alg.basis_names, V, [&](auto a, auto b) {
                return A("r_prec", a) * A("l_succ", b) - A("l_succ", b) * A("r_prec", a);
            }));
            rep.add(bimodule_check("dbm-5", alg.basis_names, V, [&](auto a, auto b) {
                return A("r_prec", a) * A("r_prec", b) - Av("r_prec", prec(b, a) + succ(b, a));
            }));
            rep.add(bimodule_check("dbm-6", alg.basis_names, V, [&](auto a, auto b) {
                return A("r_prec", a) * A("r_succ", b) - Av("r_succ", prec(b, a));
            }));
            rep.add(bimodule_check("dbm-7", alg.basis_names, V, [&](auto a, auto b) {
                return A("r_succ", a) * A("l_prec", b) + A("r_succ", a) * A("l_succ", b) - A("l_succ", b) * A("r_succ", a);
            }));
            rep.add(bimodule_check("dbm-8", alg.basis_names, V, [&](auto a, auto b) {
                return Av("l_succ", prec(a, b) + succ(a, b)) - A("l_succ", a) * A("l_succ", b);
            }));
            rep.add(bimodule_check("dbm-9", alg.basis_names, V, [&](auto a, auto b) {
                return A("r_succ", a) * A("r_prec", b) + A("r_succ", a) * A("r_succ", b) - Av("r_succ", succ(b, a));
            }));
            rep.notes.push_back("second relation read as l_prec(d1 succ d2) = l_succ(d1) l_prec(d2)");
            rep.notes.push_back("nine relations checked separately, none grouped");
            break;
        }
        case Kind::prelie: {
            auto l = [&](std::size_t i) -> const Matrix& { return bm.act("l", i); };
            auto r = [&](std::size_t i) -> const Matrix& { return bm.act("r", i); };
            auto m = [&](std::size_t i, std::size_t j) { return multiply_basis(alg.mul(), i, j); };
            rep.add(bimodule_check("pbm-1", alg.basis_names, V, [&](auto a, auto b) {
                return l(a) * l(b) - bm.act("l", m(a, b)) - l(b) * l(a) + bm.act("l", m(b, a));
            }));
            rep.add(bimodule_check("pbm-2", alg.basis_names, V, [&](auto a, auto b) {
                return l(a) * r(b) - r(b) * l(a) - bm.act("r", m(a, b)) + r(b) * r(a);
            }));
            break;
        }
        case Kind::associative: {
            auto l = [&](std::size_t i) -> const Matrix& { return bm.act("l", i); };
            auto r = [&](std::size_t i) -> const Matrix& { return bm.act("r", i); };
            auto m = [&](std::size_t i, std::size_t j) { return multiply_basis(alg.mul(), i, j); };
            rep.add(bimodule_check("abm-left", alg.basis_names, V, [&](auto a, auto b) { return bm.act("l", m(a, b)) - l(a) * l(b); }));
            rep.add(bimodule_check("abm-right", alg.basis_names, V, [&](auto a, auto b) { return bm.act("r", m(a, b)) - r(b) * r(a); }));
            rep.add(bimodule_check("abm-mixed", alg.basis_names, V, [&](auto a, auto b) { return l(a) * r(b) - r(b) * l(a); }));
            break;
        }
        case Kind::lie: {
            auto rho = [&](std::size_t i) -> const Matrix& { return bm.act("rho", i); };
            rep.add(bimodule_check("lie-module", alg.basis_names, V, [&](auto a, auto b) {
                return bm.act("rho", multiply_basis(alg.mul(), a, b)) - rho(a) * rho(b) + rho(b) * rho(a);
            }));
            break;
        }
        case Kind::perm: throw KindError("no bimodule notion for kind perm");
    }
    return rep;
}

Tensor3 rota_baxter_residual(const FinAlgebra& assoc, const LinMap& R) {
    const std::size_t n = assoc.dim;
    Tensor3 res(n, n, n);
    const auto& M = assoc.mul();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec Ra = R.column(a), Rb = R.column(b);
            Vec lhs = multiply(M, Ra, Rb);
            Vec inner = multiply(M, Ra, unit_vec(n, b)) + multiply(M, unit_vec(n, a), Rb);
            Vec d = lhs - R.apply(inner);
            for (std::size_t k = 0; k < n; ++k) res(a, b, k) = d[k];
        }
    return res;
}

FinAlgebra dendriform_from_rota_baxter(const FinAlgebra& assoc, const LinMap& R) {
    require_verified(assoc, {Kind::associative}, "dendriform_from_rota_baxter");
    const std::size_t n = assoc.dim;
    if (R.rows() != n || R.cols() != n) throw ShapeError("Rota-Baxter operator has wrong shape");
    Tensor3 res = rota_baxter_residual(assoc, R);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(res(a, b, k)))
                    throw Error("not a Rota-Baxter operator: identity fails on (" + assoc.basis_names[a] + "," +
                                assoc.basis_names[b] + ")");
    FinAlgebra d = FinAlgebra::zero(Kind::dendriform, n, assoc.basis_names);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec p = multiply(assoc.mul(), unit_vec(n, a), R.column(b));
            Vec s = multiply(assoc.mul(), R.column(a), unit_vec(n, b));
            for (std::size_t k = 0; k < n; ++k) {
                d.prec()(a, b, k) = p[k];
                d.succ()(a, b, k) = s[k];
            }
        }
    return d;
}

}  // namespace bialg
