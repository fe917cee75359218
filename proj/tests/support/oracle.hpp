#pragma once

// Reference computations written directly from the defining formulas, with
// no shared code paths beyond basis-vector multiplication. Tests compare the
// library against these.

#include "bialg/bialgebra.hpp"

namespace bialg::oracle {

// r_ab ∘ s_cd in A⊗A⊗A for 1-based legs: r's x in slot a, y in slot b; s's x
// in slot c, y in slot d. Exactly one slot collides and takes op(left, right).
Tensor3 slot_product(const Tensor3& op, const RMatrix& r, int a, int b, const RMatrix& s, int c, int d);

Tensor3 cybe(const FinAlgebra& g, const RMatrix& r);
Tensor3 plybe(const FinAlgebra& A, const RMatrix& r);
Tensor3 aybe(const FinAlgebra& A, const RMatrix& r);
Tensor3 dybe(const FinAlgebra& D, const RMatrix& r);

// axioms as sums of products of basis vectors, one flat list of residuals each
bool is_dendriform(const FinAlgebra& D);
bool is_prelie(const FinAlgebra& A);
bool is_associative(const FinAlgebra& A);
bool is_lie(const FinAlgebra& g);
bool is_perm(const FinAlgebra& B);

// coboundary coproducts, coefficient of b_j⊗b_k in θ(b_i)
Tensor3 delta_lie(const FinAlgebra& g, const RMatrix& r);     // (id⊗ad + ad⊗id)(r)
Tensor3 delta_assoc(const FinAlgebra& A, const RMatrix& r);   // (id⊗L − R⊗id)(r)
Tensor3 vartheta(const FinAlgebra& A, const RMatrix& r);      // (L⊗id + id⊗(L−R))(r)
// θ≺,r = ((R≺+R≻)(d)⊗id − id⊗L≻(d))(r), θ≻,r = (R≺(d)⊗id − id⊗(L≺+L≻)(d))(−τr)
Tensor3 theta_prec(const FinAlgebra& D, const RMatrix& r);
Tensor3 theta_succ(const FinAlgebra& D, const RMatrix& r);

// Lie bialgebra compatibility δ[x,y] = (ad_x⊗1 + 1⊗ad_x)δy − (ad_y⊗1 + 1⊗ad_y)δx
// and cocycle conditions for ASI: both as zero tests
bool is_lie_bialgebra(const FinAlgebra& g, const Tensor3& delta);

// ν from ω(ν(a), b⊗c) = −ω(a, bc), solved by brute force over all coefficients
Tensor3 nu(const QuadraticPerm& qp);

}  // namespace bialg::oracle
