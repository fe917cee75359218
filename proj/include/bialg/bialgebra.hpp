#pragma once

#include "bialg/algebra.hpp"
#include "bialg/functors.hpp"

namespace bialg {

enum class CoKind { dendriform, prelie, lie, perm, coassociative };

std::string_view cokind_name(CoKind k);
CoKind parse_cokind(std::string_view s);
std::vector<std::string> coproduct_names(CoKind k);

// Coproduct tensors are indexed (in, left, right): t(i,j,k) is the
// coefficient of b_j⊗b_k in θ(b_i).
struct CoalgStruct {
    CoKind kind = CoKind::coassociative;
    std::size_t dim = 0;
    std::map<std::string, Tensor3> coproducts;

    static CoalgStruct zero(CoKind kind, std::size_t dim);
    const Tensor3& coproduct(const std::string& name) const;
    Tensor3& coproduct(const std::string& name);
    const Tensor3& delta() const { return coproduct("delta"); }
    const Tensor3& theta_prec() const { return coproduct("theta_prec"); }
    const Tensor3& theta_succ() const { return coproduct("theta_succ"); }
    Tensor3& delta() { return coproduct("delta"); }
    Tensor3& theta_prec() { return coproduct("theta_prec"); }
    Tensor3& theta_succ() { return coproduct("theta_succ"); }

    bool operator==(const CoalgStruct&) const = default;
};

CoKind matching_cokind(Kind k);

struct BialgStruct {
    FinAlgebra algebra;
    CoalgStruct coalgebra;

    bool operator==(const BialgStruct&) const = default;
};

struct QuadraticPerm {
    FinAlgebra algebra;
    BilinForm form;
};

// θ(x) for a general element, and for a basis vector
Tensor2 apply_coproduct(const Tensor3& t, const Vec& x);
Tensor2 apply_coproduct(const Tensor3& t, std::size_t i);
// (X⊗Y)(t)
Tensor2 apply_pair(const Matrix& X, const Matrix& Y, const Tensor2& t);
Tensor2 apply_left(const Matrix& X, const Tensor2& t);
Tensor2 apply_right(const Matrix& Y, const Tensor2& t);
// coproduct tensor with the two output slots exchanged: (τθ)
Tensor3 flip_outputs(const Tensor3& t);

ResidualReport check_coalgebra(const CoalgStruct& c);

// Readings of two D-bialgebra conditions. For D-bi4, `printed` uses the
// ≺-actions as typeset and `derived` the ≻-actions obtained by expanding the
// first ASI condition on D⊗B. For D-bi6 the right-hand side is
// τ((id⊗r≻(x))θ≻(y) − (l≺(x)⊗id)θ≺(y)) with (x, y) = (d₂, d₂) for `literal`,
// (d₂, d₁) for `theta_d1` and (d₁, d₂) for `actions_d1`.
enum class DBi4Reading { printed, derived };
enum class DBi6Reading { literal, theta_d1, actions_d1 };
std::string_view dbi4_name(DBi4Reading r);
std::string_view dbi6_name(DBi6Reading r);
DBi4Reading parse_dbi4(std::string_view s);
DBi6Reading parse_dbi6(std::string_view s);
inline constexpr DBi4Reading kDefaultDBi4 = DBi4Reading::derived;
inline constexpr DBi6Reading kDefaultDBi6 = DBi6Reading::actions_d1;

struct BialgCheckOptions {
    DBi4Reading dbi4 = kDefaultDBi4;
    DBi6Reading dbi6 = kDefaultDBi6;
    bool include_parts = true;  // also run algebra and coalgebra axiom checks
};

ResidualReport check_bialgebra(const BialgStruct& b, const BialgCheckOptions& opt = {});

// Validation of (B, ω): antisymmetry, invariance ω(b₁b₂,b₃) = ω(b₁, b₂b₃ − b₃b₂),
// nondegeneracy (with a kernel witness on failure).
Report check_quadratic_perm(const FinAlgebra& B, const BilinForm& w);
QuadraticPerm make_quadratic_perm(const FinAlgebra& B, const BilinForm& w);

// ν_ω, from ω(ν(b₁), b₂⊗b₃) = −ω(b₁, b₂b₃) with the product form on B⊗B
CoalgStruct perm_coalgebra_from_quadratic(const QuadraticPerm& qp);
// κ = Σⱼ eⱼ⊗fⱼ
RMatrix kappa(const QuadraticPerm& qp);
// ω(eᵢ,fⱼ) = δᵢⱼ, ν(b) = Σⱼ eⱼ⊗(fⱼb), τν(b) = −Σⱼ (eⱼb)⊗fⱼ, and the
// defining pairing of ν, all by enumeration
Report check_dual_basis_identities(const QuadraticPerm& qp);

BialgStruct induce_lie_bialgebra(const BialgStruct& pb, const QuadraticPerm& qp);
BialgStruct induce_asi_bialgebra(const BialgStruct& db, const QuadraticPerm& qp);
BialgStruct asi_to_lie_bialgebra(const BialgStruct& ab);
BialgStruct dendriform_to_prelie_bialgebra(const BialgStruct& db);

Report check_bialgebra_square(const BialgStruct& db, const QuadraticPerm& qp);

void require_verified(const BialgStruct& b, const char* who);

}  // namespace bialg
