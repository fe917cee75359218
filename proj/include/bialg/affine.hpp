#pragma once

// Affinization of dendriform (co/bi)algebras by the two-variable Laurent perm
// algebra B spanned by x1^i1 x2^i2 ∂s. Completed tensors are never stored;
// every coproduct is a coefficient oracle and sums over intermediate basis
// elements are finite by exponent bookkeeping.

#include "bialg/bialgebra.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

namespace bialg::affine {

class WindowError : public Error {
public:
    using Error::Error;
};

// x1^i1 x2^i2 ∂s, s ∈ {1, 2}
struct GIdx {
    std::int64_t i1 = 0;
    std::int64_t i2 = 0;
    int s = 1;

    auto operator<=>(const GIdx&) const = default;
    // homogeneous degree: deg of the coefficient monomial plus one
    std::int64_t degree() const { return i1 + i2 + 1; }
    std::string name() const;  // "x1^2x2^-1d2", "d1", ...
};

inline GIdx d1() { return {0, 0, 1}; }
inline GIdx d2() { return {0, 0, 2}; }

// (x^i ∂s)(x^j ∂t) = x^{i+j+ε_s} ∂t, ε_1 = (1,0), ε_2 = (0,1)
GIdx perm_product(const GIdx& a, const GIdx& b);

// coefficient of e⊗f in ν(b):
//   ν(x^m ∂s) = Σ_i x^i ∂1 ⊗ x^{m−i+ε_2} ∂s − x^i ∂2 ⊗ x^{m−i+ε_1} ∂s
int nu_coefficient(const GIdx& b, const GIdx& e, const GIdx& f);

// ϖ(x^i ∂2, x^j ∂1) = −ϖ(x^j ∂1, x^i ∂2) = δ_{i+j,0}; zero on equal ∂
int graded_form(const GIdx& a, const GIdx& b);
// the m with ϖ(B_i, B_j) = 0 unless i + j + m = 0
inline constexpr std::int64_t kFormShift = -2;

// the e with ϖ(e, b) ≠ 0, and that value
GIdx form_partner(const GIdx& b);
int form_partner_value(const GIdx& b);

// {|i1| ≤ N, |i2| ≤ N, s ∈ {1,2}}. A composition of depth k is only checked
// from sources in the box of radius N − k.
struct Window {
    int N = 2;

    int safe(int depth) const;  // throws WindowError when N − depth < 0
    bool contains(const GIdx& b) const;
    std::vector<GIdx> box(int radius) const;
    std::vector<GIdx> all() const { return box(N); }
};

// basis element d_k ⊗ b of D⊗B
struct AIdx {
    std::size_t d = 0;
    GIdx b;

    auto operator<=>(const AIdx&) const = default;
};

using AElem = std::map<AIdx, Scalar>;

std::string aname(const FinAlgebra& D, const AIdx& x);

// (d1⊗b1)∗(d2⊗b2) = (d1≻d2)⊗(b1b2) + (d1≺d2)⊗(b2b1)
AElem affine_product(const FinAlgebra& D, const AIdx& x, const AIdx& y);

// coefficient of t1⊗t2 in Δ(src) = θ≻(d)•ν(b) + θ≺(d)•τ̂ν(b)
Scalar delta_coefficient(const CoalgStruct& c, const AIdx& src, const AIdx& t1, const AIdx& t2);

// B-parts y with ν(b) having a nonzero e⊗f term, given the other leg
std::vector<GIdx> nu_left_legs(const GIdx& b, const GIdx& f);   // all e with ν(b)[e,f] ≠ 0
std::vector<GIdx> nu_right_legs(const GIdx& b, const GIdx& e);  // all f with ν(b)[e,f] ≠ 0
// all y with y·a = t, resp. a·y = t
std::vector<GIdx> left_factors(const GIdx& t, const GIdx& a);
std::vector<GIdx> right_factors(const GIdx& t, const GIdx& a);

// Perm identities, grading, antisymmetry and invariance of ϖ, the defining
// pairing of ν and the completed perm-coalgebra identities, on the window.
Report check_laurent_model(const Window& w);

// Associativity of D⊗B on all triples from the safe box (depth 2), plus the
// three dendriform axioms read off at single coefficients.
Report check_affine_associativity(const FinAlgebra& D, const Window& w);

// Completed coassociativity of Δ on D⊗B, sources in the safe box (depth 2),
// targets in the window; plus the coalgebra axioms read off at single
// ∂-patterns.
Report check_affine_coassociativity(const CoalgStruct& c, const Window& w);

// Both compatibility conditions of a completed ASI bialgebra, sources in the
// safe box (depth 2), targets in the window; plus the D-bi equations read off
// at single ∂-patterns.
Report check_completed_asi(const BialgStruct& db, const Window& w);

// Where a violated finite-level identity shows up in D⊗B: the coefficient of
// target ∂-pattern `target` in the residual of `identity` evaluated on
// sources with ∂-pattern `sources` (exponents at the origin unless noted)
// equals `sign` times the finite residual of `equation`.
struct Localization {
    std::string equation;  // "dend-1", "codend-2", "D-bi5", ...
    std::string identity;  // "assoc", "coassoc", "CASI1", "CASI2"
    std::vector<GIdx> sources;
    std::vector<GIdx> target;
    int sign = 1;
};

const std::vector<Localization>& localization_table();
// the equation whose term list the site's coefficient reproduces exactly
std::optional<std::string> localizes(const Localization& site);

}  // namespace bialg::affine
