#include "oracle.hpp"

#include <array>
#include <stdexcept>

namespace bialg::oracle {

namespace {

using V = std::vector<Scalar>;

// local product straight off the cube, not the library's multiply()
V mul(const Tensor3& c, const V& u, const V& v) {
    const std::size_t n = c.d3();
    V out(n);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (sgn(v[j]) == 0) continue;
            for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * c(i, j, k);
        }
    }
    return out;
}

V e(std::size_t n, std::size_t i) {
    V v(n);
    v[i] = 1;
    return v;
}

V add(V a, const V& b, int sign = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
    return a;
}

bool zero(const V& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

template <class F>
bool all_triples(std::size_t n, F f) {
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (!f(e(n, a), e(n, b), e(n, c))) return false;
    return true;
}

// row src of a coproduct tensor += s · (u ⊗ v)
void put2(Tensor3& t, std::size_t src, const V& u, const V& v, const Scalar& s) {
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < v.size(); ++k) t(src, j, k) += s * u[j] * v[k];
}

}  // namespace

Tensor3 slot_product(const Tensor3& op, const RMatrix& r, int a, int b, const RMatrix& s, int c, int d) {
    const std::size_t n = r.dim_left();
    int hit = 0;
    for (int x : {a, b})
        for (int y : {c, d})
            if (x == y) hit = x;
    if (hit == 0 || a == b || c == d) throw std::logic_error("slot_product: legs must collide in one slot");
    Tensor3 out = Tensor3::cube(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(r(i, j)) == 0) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (sgn(s(k, l)) == 0) continue;
                    std::array<int, 4> slot{-1, -1, -1, -1};  // 1-based; -1 free
                    int lf = -1, rf = -1;
                    auto place = [&](int where, std::size_t idx, bool left) {
                        if (where == hit) (left ? lf : rf) = static_cast<int>(idx);
                        else slot[where] = static_cast<int>(idx);
                    };
                    place(a, i, true);
                    place(b, j, true);
                    place(c, k, false);
                    place(d, l, false);
                    const Scalar coef = r(i, j) * s(k, l);
                    for (std::size_t m = 0; m < n; ++m) {
                        const Scalar p = op(lf, rf, m);
                        if (sgn(p) == 0) continue;
                        slot[hit] = static_cast<int>(m);
                        out(slot[1], slot[2], slot[3]) += coef * p;
                    }
                }
        }
    return out;
}

Tensor3 cybe(const FinAlgebra& g, const RMatrix& r) {
    const Tensor3& br = g.mul();
    return slot_product(br, r, 1, 2, r, 1, 3) + slot_product(br, r, 1, 3, r, 2, 3) +
           slot_product(br, r, 1, 2, r, 2, 3);
}

Tensor3 plybe(const FinAlgebra& A, const RMatrix& r) {
    const Tensor3& m = A.mul();
    Tensor3 pos = slot_product(m, r, 1, 3, r, 1, 2) + slot_product(m, r, 2, 3, r, 1, 2) +
                  slot_product(m, r, 2, 1, r, 1, 3) + slot_product(m, r, 2, 3, r, 1, 3);
    Tensor3 neg = slot_product(m, r, 2, 3, r, 2, 1) + slot_product(m, r, 1, 2, r, 2, 3) +
                  slot_product(m, r, 1, 3, r, 2, 1) + slot_product(m, r, 1, 3, r, 2, 3);
    return pos - neg;
}

Tensor3 aybe(const FinAlgebra& A, const RMatrix& r) {
    const Tensor3& m = A.mul();
    return slot_product(m, r, 1, 2, r, 1, 3) + slot_product(m, r, 1, 3, r, 2, 3) -
           slot_product(m, r, 2, 3, r, 1, 2);
}

Tensor3 dybe(const FinAlgebra& D, const RMatrix& r) {
    const Tensor3 &P = D.prec(), &S = D.succ();
    return slot_product(P, r, 1, 2, r, 1, 3) + slot_product(S, r, 1, 2, r, 1, 3) -
           slot_product(P, r, 1, 3, r, 2, 3) - slot_product(S, r, 2, 3, r, 1, 2);
}

bool is_dendriform(const FinAlgebra& D) {
    const Tensor3 &P = D.prec(), &S = D.succ();
    return all_triples(D.dim, [&](const V& x, const V& y, const V& z) {
        V yz = add(mul(P, y, z), mul(S, y, z));
        V xy = add(mul(P, x, y), mul(S, x, y));
        return zero(add(mul(P, mul(P, x, y), z), mul(P, x, yz), -1)) &&
               zero(add(mul(P, mul(S, x, y), z), mul(S, x, mul(P, y, z)), -1)) &&
               zero(add(mul(S, x, mul(S, y, z)), mul(S, xy, z), -1));
    });
}

bool is_prelie(const FinAlgebra& A) {
    const Tensor3& m = A.mul();
    return all_triples(A.dim, [&](const V& x, const V& y, const V& z) {
        V lhs = add(mul(m, x, mul(m, y, z)), mul(m, mul(m, x, y), z), -1);
        V rhs = add(mul(m, y, mul(m, x, z)), mul(m, mul(m, y, x), z), -1);
        return zero(add(lhs, rhs, -1));
    });
}

bool is_associative(const FinAlgebra& A) {
    const Tensor3& m = A.mul();
    return all_triples(A.dim, [&](const V& x, const V& y, const V& z) {
        return zero(add(mul(m, mul(m, x, y), z), mul(m, x, mul(m, y, z)), -1));
    });
}

bool is_lie(const FinAlgebra& g) {
    const Tensor3& m = g.mul();
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            if (!zero(add(mul(m, e(g.dim, i), e(g.dim, j)), mul(m, e(g.dim, j), e(g.dim, i))))) return false;
    return all_triples(g.dim, [&](const V& x, const V& y, const V& z) {
        return zero(add(add(mul(m, x, mul(m, y, z)), mul(m, y, mul(m, z, x))), mul(m, z, mul(m, x, y))));
    });
}

bool is_perm(const FinAlgebra& B) {
    const Tensor3& m = B.mul();
    return all_triples(B.dim, [&](const V& x, const V& y, const V& z) {
        V a = mul(m, x, mul(m, y, z)), b = mul(m, mul(m, x, y), z), c = mul(m, mul(m, y, x), z);
        return zero(add(a, b, -1)) && zero(add(b, c, -1));
    });
}

Tensor3 delta_lie(const FinAlgebra& g, const RMatrix& r) {
    const std::size_t n = g.dim;
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(r(i, j)) == 0) continue;
                put2(t, a, e(n, i), mul(g.mul(), e(n, a), e(n, j)), r(i, j));
                put2(t, a, mul(g.mul(), e(n, a), e(n, i)), e(n, j), r(i, j));
            }
    return t;
}

Tensor3 delta_assoc(const FinAlgebra& A, const RMatrix& r) {
    const std::size_t n = A.dim;
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(r(i, j)) == 0) continue;
                put2(t, a, e(n, i), mul(A.mul(), e(n, a), e(n, j)), r(i, j));
                put2(t, a, mul(A.mul(), e(n, i), e(n, a)), e(n, j), -r(i, j));
            }
    return t;
}

Tensor3 vartheta(const FinAlgebra& A, const RMatrix& r) {
    const std::size_t n = A.dim;
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(r(i, j)) == 0) continue;
                put2(t, a, mul(A.mul(), e(n, a), e(n, i)), e(n, j), r(i, j));
                V lr = add(mul(A.mul(), e(n, a), e(n, j)), mul(A.mul(), e(n, j), e(n, a)), -1);
                put2(t, a, e(n, i), lr, r(i, j));
            }
    return t;
}

Tensor3 theta_prec(const FinAlgebra& D, const RMatrix& r) {
    const std::size_t n = D.dim;
    const Tensor3 &P = D.prec(), &S = D.succ();
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(r(i, j)) == 0) continue;
                put2(t, d, add(mul(P, e(n, i), e(n, d)), mul(S, e(n, i), e(n, d))), e(n, j), r(i, j));
                put2(t, d, e(n, i), mul(S, e(n, d), e(n, j)), -r(i, j));
            }
    return t;
}

Tensor3 theta_succ(const FinAlgebra& D, const RMatrix& r) {
    const std::size_t n = D.dim;
    const Tensor3 &P = D.prec(), &S = D.succ();
    Tensor3 t = Tensor3::cube(n);
    // r≻ = −τ(r) = Σ −y_i⊗x_i
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(r(i, j)) == 0) continue;
                const Scalar c = -r(i, j);
                put2(t, d, mul(P, e(n, j), e(n, d)), e(n, i), c);
                put2(t, d, e(n, j), add(mul(P, e(n, d), e(n, i)), mul(S, e(n, d), e(n, i))), -c);
            }
    return t;
}

bool is_lie_bialgebra(const FinAlgebra& g, const Tensor3& delta) {
    const std::size_t n = g.dim;
    const Tensor3& br = g.mul();
    auto dl = [&](const V& x) {  // δ(x) as an n×n array
        Tensor3 t(1, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) t(0, j, k) += x[i] * delta(i, j, k);
        return t;
    };
    // co-antisymmetry
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(delta(i, j, k) + delta(i, k, j)) != 0) return false;
    // (id⊗δ)δ − (τ⊗id)(id⊗δ)δ = (δ⊗id)δ
    for (std::size_t x = 0; x < n; ++x) {
        Tensor3 lhs = Tensor3::cube(n), rhs = Tensor3::cube(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = delta(x, a, b);
                if (sgn(c) == 0) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        lhs(a, p, q) += c * delta(b, p, q);
                        lhs(p, a, q) -= c * delta(b, p, q);
                        rhs(p, q, b) += c * delta(a, p, q);
                    }
            }
        if (!(lhs == rhs)) return false;
    }
    // δ[x,y] = (ad_x⊗1 + 1⊗ad_x)δy − (ad_y⊗1 + 1⊗ad_y)δx
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Tensor3 lhs = dl(mul(br, e(n, x), e(n, y)));
            Tensor3 rhs(1, n, n);
            auto acted = [&](std::size_t u, std::size_t w, int sign) {
                Tensor3 t = dl(e(n, w));
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        if (sgn(t(0, a, b)) == 0) continue;
                        V ua = mul(br, e(n, u), e(n, a)), ub = mul(br, e(n, u), e(n, b));
                        for (std::size_t k = 0; k < n; ++k) {
                            rhs(0, k, b) += sign * t(0, a, b) * ua[k];
                            rhs(0, a, k) += sign * t(0, a, b) * ub[k];
                        }
                    }
            };
            acted(x, y, 1);
            acted(y, x, -1);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Tensor3 nu(const QuadraticPerm& qp) {
    // ω(ν(a), b⊗c) = Σ_jk N_a(j,k) Ω(j,b) Ω(k,c) = (ΩᵀN_aΩ)(b,c), so
    // N_a = Ω⁻ᵀ M_a Ω⁻¹ with M_a(b,c) = −ω(a, bc). Ω⁻¹ by Gauss-Jordan here.
    const std::size_t n = qp.algebra.dim;
    const Matrix& W = qp.form.m;
    std::vector<V> aug(n, V(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = W(i, j);
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(aug[piv][col]) == 0) ++piv;
        if (piv == n) throw std::runtime_error("oracle::nu: degenerate form");
        std::swap(aug[piv], aug[col]);
        const Scalar inv = 1 / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(aug[r][col]) == 0) continue;
            const Scalar f = aug[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[col][k];
        }
    }
    auto Winv = [&](std::size_t i, std::size_t j) -> const Scalar& { return aug[i][n + j]; };
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                V bc = mul(qp.algebra.mul(), e(n, b), e(n, c));
                Scalar m;
                for (std::size_t k = 0; k < n; ++k) m -= W(a, k) * bc[k];
                if (sgn(m) == 0) continue;
                // N(j,k) += Winv(b,j) m Winv(c,k)   (Ω⁻ᵀ)(j,b) = Winv(b,j)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) t(a, j, k) += Winv(b, j) * m * Winv(c, k);
            }
    return t;
}

}  // namespace bialg::oracle
