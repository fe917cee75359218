#pragma once

// Fixed example data and seeded random generators shared by the test binaries.

#include "bialg/bialgebra.hpp"
#include "bialg/ybe.hpp"

#include <random>

namespace bialg::samples {

using Rng = std::mt19937_64;

// e1≻e1 = e1, e2≺e1 = e2
FinAlgebra dend_D();
// e1⋄e1 = e1, e1⋄e2 = −e2
FinAlgebra prelie_A();
// x2x1 = x1, x2x2 = x2
FinAlgebra perm_B();
// ω(x1,x2) = 1
QuadraticPerm qp_B();

// 2x2 upper triangular matrices on E11, E12, E22
FinAlgebra upper_triangular();
// k[t]/(t^m) on 1, t, ..., t^{m-1}
FinAlgebra truncated_poly(std::size_t m);

// Transport of structure: new basis vector i is column i of G.
FinAlgebra change_basis(const FinAlgebra& a, const Matrix& G);
RMatrix change_basis(const RMatrix& r, const Matrix& G);

Matrix random_invertible(std::size_t n, Rng& rng);

// Verified random algebras, each a transported copy of a known family.
FinAlgebra random_dendriform(Rng& rng);
FinAlgebra random_prelie(Rng& rng);
FinAlgebra random_associative(Rng& rng);
FinAlgebra random_lie(Rng& rng);
FinAlgebra random_perm2(Rng& rng);
// dims 2 or 4
QuadraticPerm random_quadratic_perm(Rng& rng, std::size_t dim = 2);

enum class Symmetry { symmetric, skew, any };

// r with coefficients in [-range, range] and the given symmetry, solving the
// Yang-Baxter equation matching alg.kind; exhaustive over the grid.
std::vector<RMatrix> grid_solutions(const FinAlgebra& alg, Symmetry sym, int range);
// all r on the grid with the given symmetry, solutions or not
std::vector<RMatrix> grid(std::size_t n, Symmetry sym, int range);

}  // namespace bialg::samples
