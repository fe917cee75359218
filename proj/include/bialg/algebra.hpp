#pragma once

#include "bialg/report.hpp"
#include "bialg/tensor.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bialg {

enum class Kind { dendriform, prelie, perm, associative, lie };

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view s);

// Structure cubes are indexed (left, right, out): c(i,j,k) is the
// coefficient of b_k in b_i·b_j.
struct FinAlgebra {
    Kind kind = Kind::associative;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::map<std::string, Tensor3> products;

    static FinAlgebra zero(Kind kind, std::size_t dim, std::vector<std::string> names = {});
    static std::vector<std::string> default_names(std::size_t dim, const std::string& stem = "e");

    const Tensor3& product(const std::string& name) const;
    Tensor3& product(const std::string& name);
    const Tensor3& mul() const { return product("mul"); }
    const Tensor3& prec() const { return product("prec"); }
    const Tensor3& succ() const { return product("succ"); }
    Tensor3& mul() { return product("mul"); }
    Tensor3& prec() { return product("prec"); }
    Tensor3& succ() { return product("succ"); }

    bool operator==(const FinAlgebra&) const = default;
};

std::vector<std::string> product_names(Kind kind);

Vec multiply(const Tensor3& c, const Vec& u, const Vec& v);
Vec multiply_basis(const Tensor3& c, std::size_t i, std::size_t j);
// matrices of d ↦ a·d and d ↦ d·a
Matrix left_mult(const Tensor3& c, const Vec& a);
Matrix right_mult(const Tensor3& c, const Vec& a);
Matrix left_mult(const Tensor3& c, std::size_t i);
Matrix right_mult(const Tensor3& c, std::size_t i);

// Action matrices indexed by algebra basis. dendriform: l_prec, r_prec,
// l_succ, r_succ; prelie and associative: l, r; lie: rho.
struct Bimodule {
    Kind kind = Kind::associative;
    std::size_t algebra_dim = 0;
    std::size_t space_dim = 0;
    std::map<std::string, std::vector<Matrix>> actions;

    // action of a general algebra element
    Matrix act(const std::string& name, const Vec& a) const;
    const Matrix& act(const std::string& name, std::size_t i) const;
};

std::vector<std::string> action_names(Kind kind);

ResidualReport check_axioms(const FinAlgebra& alg);
bool is_verified(const FinAlgebra& alg);

Bimodule regular_bimodule(const FinAlgebra& alg);
ResidualReport check_bimodule(const FinAlgebra& alg, const Bimodule& bm);

// a≺b = a∗R(b), a≻b = R(a)∗b for a weight-0 Rota-Baxter operator R.
FinAlgebra dendriform_from_rota_baxter(const FinAlgebra& assoc, const LinMap& R);
// R(a)R(b) − R(R(a)b + aR(b)) over basis pairs, shape (n, n, n)
Tensor3 rota_baxter_residual(const FinAlgebra& assoc, const LinMap& R);

// Throws KindError unless alg.kind is one of the listed kinds and passes.
void require_verified(const FinAlgebra& alg, std::initializer_list<Kind> kinds, const char* who);

}  // namespace bialg
