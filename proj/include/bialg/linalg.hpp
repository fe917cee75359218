#pragma once

#include "bialg/tensor.hpp"

#include <optional>

namespace bialg {

class DegenerateError : public Error {
public:
    DegenerateError(const std::string& what, Vec witness) : Error(what), witness_(std::move(witness)) {}
    const Vec& witness() const { return witness_; }

private:
    Vec witness_;
};

// Fraction-free (Bareiss) elimination on the integer matrix obtained by
// clearing denominators; pivots are the first nonzero entry in the column.
Scalar determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
// Throws DegenerateError carrying a kernel vector when a is singular.
Matrix inverse(const Matrix& a);
// Some nonzero v with a·v = 0, or nullopt when a has full column rank.
std::optional<Vec> kernel_vector(const Matrix& a);

// F with ω(e_i, f_j) = δ_ij, column j holding f_j. Since ω(e_i, f_j) = (ΩF)_ij
// this is F = Ω⁻¹.
LinMap dual_basis(const BilinForm& w);

}  // namespace bialg
