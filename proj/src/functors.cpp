#include "bialg/functors.hpp"

namespace bialg {

std::vector<std::string> tensor_basis_names(const FinAlgebra& a, const FinAlgebra& b) {
    std::vector<std::string> names;
    for (const auto& x : a.basis_names)
        for (const auto& y : b.basis_names) names.push_back(x + "⊗" + y);
    return names;
}

FinAlgebra dendriform_to_prelie(const FinAlgebra& D) {
    require_verified(D, {Kind::dendriform}, "dendriform_to_prelie");
    const std::size_t n = D.dim;
    FinAlgebra A = FinAlgebra::zero(Kind::prelie, n, D.basis_names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) A.mul()(i, j, k) = D.succ()(i, j, k) - D.prec()(j, i, k);
    return A;
}

FinAlgebra dendriform_to_assoc(const FinAlgebra& D) {
    require_verified(D, {Kind::dendriform}, "dendriform_to_assoc");
    FinAlgebra A = FinAlgebra::zero(Kind::associative, D.dim, D.basis_names);
    A.mul() = D.prec() + D.succ();
    return A;
}

FinAlgebra commutator_lie(const FinAlgebra& A) {
    require_verified(A, {Kind::prelie, Kind::associative}, "commutator_lie");
    const std::size_t n = A.dim;
    FinAlgebra g = FinAlgebra::zero(Kind::lie, n, A.basis_names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g.mul()(i, j, k) = A.mul()(i, j, k) - A.mul()(j, i, k);
    return g;
}

namespace {

// out(a₁⊗b₁, a₂⊗b₂, a₃⊗b₃) = coeff(a₁,b₁,a₂,b₂,a₃,b₃)
template <class F>
Tensor3 tensor_cube(std::size_t n, std::size_t m, F&& coeff) {
    Tensor3 out = Tensor3::cube(n * m);
    for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t b1 = 0; b1 < m; ++b1)
            for (std::size_t a2 = 0; a2 < n; ++a2)
                for (std::size_t b2 = 0; b2 < m; ++b2)
                    for (std::size_t a3 = 0; a3 < n; ++a3)
                        for (std::size_t b3 = 0; b3 < m; ++b3) {
                            Scalar c = coeff(a1, b1, a2, b2, a3, b3);
                            if (!is_zero(c)) out(a1 * m + b1, a2 * m + b2, a3 * m + b3) = c;
                        }
    return out;
}

}  // namespace

FinAlgebra tensor_lie(const FinAlgebra& A, const FinAlgebra& B) {
    require_verified(A, {Kind::prelie}, "tensor_lie");
    require_verified(B, {Kind::perm}, "tensor_lie");
    const auto &P = A.mul(), &Q = B.mul();
    FinAlgebra g = FinAlgebra::zero(Kind::lie, A.dim * B.dim, tensor_basis_names(A, B));
    g.mul() = tensor_cube(A.dim, B.dim, [&](auto a1, auto b1, auto a2, auto b2, auto a3, auto b3) -> Scalar {
        return P(a1, a2, a3) * Q(b1, b2, b3) - P(a2, a1, a3) * Q(b2, b1, b3);
    });
    return g;
}

FinAlgebra tensor_assoc(const FinAlgebra& D, const FinAlgebra& B) {
    require_verified(D, {Kind::dendriform}, "tensor_assoc");
    require_verified(B, {Kind::perm}, "tensor_assoc");
    const auto &L = D.prec(), &R = D.succ(), &Q = B.mul();
    FinAlgebra a = FinAlgebra::zero(Kind::associative, D.dim * B.dim, tensor_basis_names(D, B));
    a.mul() = tensor_cube(D.dim, B.dim, [&](auto d1, auto b1, auto d2, auto b2, auto d3, auto b3) -> Scalar {
        return R(d1, d2, d3) * Q(b1, b2, b3) + L(d1, d2, d3) * Q(b2, b1, b3);
    });
    return a;
}

Check compare_cubes(const std::string& id, const Tensor3& lhs, const Tensor3& rhs,
                    const std::vector<std::string>& names) {
    if (!(lhs.d1() == rhs.d1() && lhs.d2() == rhs.d2() && lhs.d3() == rhs.d3()))
        return Check::boolean(id, false, "shape mismatch");
    std::vector<std::vector<std::string>> ax(3, names);
    return Check::from_tensor(id, lhs - rhs, names.size() == lhs.d1() ? &ax : nullptr);
}

Report check_square(const FinAlgebra& D, const FinAlgebra& B) {
    Report rep;
    rep.subject = "dendriform/perm square";
    FinAlgebra route_a = commutator_lie(tensor_assoc(D, B));
    FinAlgebra route_b = tensor_lie(dendriform_to_prelie(D), B);
    rep.add(compare_cubes("square/bracket", route_a.mul(), route_b.mul(), route_a.basis_names));
    return rep;
}

}  // namespace bialg
