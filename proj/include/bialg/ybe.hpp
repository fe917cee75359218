#pragma once

#include "bialg/bialgebra.hpp"

namespace bialg {

enum class YbeKind { cybe, plybe, aybe, dybe };

std::string_view ybe_name(YbeKind k);
YbeKind parse_ybe(std::string_view s);
Kind ybe_algebra_kind(YbeKind k);

// Residual in V⊗V⊗V, each summand expanded from r = Σ x_i⊗y_i.
Tensor3 ybe_residual(YbeKind kind, const FinAlgebra& alg, const RMatrix& r);

// One Tensor2 per basis element a:
//   lie        (id⊗ad(a) + ad(a)⊗id)(s)
//   prelie     (l(a)⊗id + id⊗(l−r)(a))(s)
//   associative (id⊗l(a) − r(a)⊗id)(s)
std::vector<Tensor2> invariance_residual(const FinAlgebra& alg, const RMatrix& s);
bool is_invariant(const FinAlgebra& alg, const RMatrix& s);

// δ_r, ϑ_r, Δ_r, or (θ≺,r, θ≻,r) with r≺ = r, r≻ = −τ(r)
CoalgStruct coboundary_coproduct(const FinAlgebra& alg, const RMatrix& r);
BialgStruct coboundary_bialgebra(const FinAlgebra& alg, const RMatrix& r);

// r̂ = Σ (x_i⊗e_j)⊗(y_i⊗f_j)
RMatrix lift_r(const RMatrix& r, const QuadraticPerm& qp);

// I = r♯ ± τ(r)♯; minus for pre-Lie, plus for Lie and associative
struct Factorizability {
    LinMap I;
    Scalar det;
    std::size_t rank = 0;
    bool invertible = false;
};
Factorizability factorizable_map(Kind kind, const RMatrix& r);
Report factorizable_check(Kind kind, const RMatrix& r);

// lie: (g*, −ad*); prelie: (A*, r*−l*, r*); associative: (A*, r*, l*);
// dendriform: l≻ = r≻*+r≺*, r≻ = −l≺*, l≺ = −r≻*, r≺ = l≺*+l≻*
Bimodule coregular_bimodule(const FinAlgebra& alg);

struct OOperatorSpec {
    FinAlgebra algebra;
    Bimodule bimodule;
    LinMap P;  // V → algebra
};

ResidualReport check_ooperator(const OOperatorSpec& spec);

// YBE residual of r and O-operator residual of r♯ against the coregular
// bimodule, side by side.
Report ooperator_equivalence(const FinAlgebra& alg, const RMatrix& r);

// Theorem-as-test transfers. Each first checks the hypothesis; when it
// fails the report has hypothesis_ok = false and no conclusion checks.
struct TransferReport : Report {
    bool hypothesis_ok = true;
    bool pass() const { return hypothesis_ok && Report::pass(); }
    std::string status() const { return !hypothesis_ok ? "hypothesis_failed" : (Report::pass() ? "pass" : "fail"); }
};

TransferReport transfer_plybe_to_cybe(const FinAlgebra& A, const RMatrix& r, const QuadraticPerm& qp);
TransferReport transfer_symmetric_plybe_to_cybe(const FinAlgebra& A, const RMatrix& r, const QuadraticPerm& qp);
TransferReport transfer_induced_lie_coboundary(const FinAlgebra& A, const RMatrix& r, const QuadraticPerm& qp);
TransferReport transfer_dybe_to_aybe(const FinAlgebra& D, const RMatrix& r, const QuadraticPerm& qp);
TransferReport transfer_induced_asi_coboundary(const FinAlgebra& D, const RMatrix& r, const QuadraticPerm& qp);
TransferReport transfer_aybe_to_cybe(const FinAlgebra& A, const RMatrix& r);
TransferReport transfer_asi_to_lie_coboundary(const FinAlgebra& A, const RMatrix& r);
TransferReport transfer_dybe_to_plybe(const FinAlgebra& D, const RMatrix& r);
TransferReport transfer_dendriform_to_prelie_coboundary(const FinAlgebra& D, const RMatrix& r);
TransferReport transfer_assoc_ooperator(const FinAlgebra& A, const LinMap& P);
TransferReport transfer_dendriform_ooperator(const FinAlgebra& D, const LinMap& P);
// r symmetric (prelie, dendriform) or skew (lie, associative) assumed;
// conclusion: YBE residual zero ⇔ O-operator residual zero
TransferReport transfer_ooperator_equivalence(const FinAlgebra& alg, const RMatrix& r);

}  // namespace bialg
