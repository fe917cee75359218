#pragma once

#include "bialg/algebra.hpp"

namespace bialg {

// Index into D⊗B (or A⊗B), algebra factor on the left.
struct TensorBasisIndex {
    std::size_t left;
    std::size_t right;

    std::size_t flat(std::size_t dim_right) const { return left * dim_right + right; }
    static TensorBasisIndex unflat(std::size_t flat, std::size_t dim_right) {
        return {flat / dim_right, flat % dim_right};
    }
};

std::vector<std::string> tensor_basis_names(const FinAlgebra& a, const FinAlgebra& b);

// d₁⋄d₂ = d₁≻d₂ − d₂≺d₁
FinAlgebra dendriform_to_prelie(const FinAlgebra& D);
// d₁∗d₂ = d₁≺d₂ + d₁≻d₂
FinAlgebra dendriform_to_assoc(const FinAlgebra& D);
// accepts prelie or associative
FinAlgebra commutator_lie(const FinAlgebra& A);
// [a₁⊗b₁, a₂⊗b₂] = (a₁⋄a₂)⊗(b₁b₂) − (a₂⋄a₁)⊗(b₂b₁)
FinAlgebra tensor_lie(const FinAlgebra& A, const FinAlgebra& B);
// (d₁⊗b₁)∗(d₂⊗b₂) = (d₁≻d₂)⊗(b₁b₂) + (d₁≺d₂)⊗(b₂b₁)
FinAlgebra tensor_assoc(const FinAlgebra& D, const FinAlgebra& B);

// First differing coefficient between two structure cubes, as a check.
Check compare_cubes(const std::string& id, const Tensor3& lhs, const Tensor3& rhs,
                    const std::vector<std::string>& names);

Report check_square(const FinAlgebra& D, const FinAlgebra& B);

}  // namespace bialg
