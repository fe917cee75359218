#include "bialg/linalg.hpp"
#include "bialg/report.hpp"
#include "bialg/tensor.hpp"

#include <catch_amalgamated.hpp>

using namespace bialg;

TEST_CASE("parse_scalar accepts canonical rationals", "[scalar]") {
    CHECK(parse_scalar("0") == 0);
    CHECK(parse_scalar("7") == 7);
    CHECK(parse_scalar("-3/4") == Scalar(-3, 4));
    CHECK(parse_scalar("123456789012345678901234567890") ==
          Scalar(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("parse_scalar rejects non-canonical spellings", "[scalar]") {
    for (const char* bad : {"2/4", "1/0", "-0", "01", "+1", "1/-2", "1.5", "", "/2", "3/", " 1", "1e3", "0/1", "5/1"})
        CHECK_THROWS_AS(parse_scalar(bad), ParseError);
}

TEST_CASE("format_scalar round-trips", "[scalar]") {
    CHECK(format_scalar(Scalar(6) / 4) == "3/2");
    CHECK(format_scalar(Scalar(-8) / 4) == "-2");
    CHECK(format_scalar(Scalar(0)) == "0");
    for (const char* s : {"5", "-1/3", "22/7", "0"}) CHECK(format_scalar(parse_scalar(s)) == s);
}

TEST_CASE("arithmetic stays reduced", "[scalar]") {
    Scalar a(1, 6), b(1, 3);
    Scalar s = a + b;
    CHECK(s.get_num() == 1);
    CHECK(s.get_den() == 2);
    Scalar z = b - 2 * a;
    CHECK(is_zero(z));
    CHECK(z.get_den() == 1);
}

TEST_CASE("kron is row-major", "[tensor]") {
    Matrix a(2, 2), b(2, 2);
    a(0, 1) = 2;
    a(1, 0) = 3;
    b(0, 0) = 5;
    b(1, 1) = 7;
    Matrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0 * 2 + 0, 1 * 2 + 0) == 10);
    CHECK(k(0 * 2 + 1, 1 * 2 + 1) == 14);
    CHECK(k(1 * 2 + 0, 0 * 2 + 0) == 15);
    CHECK(k(1 * 2 + 1, 0 * 2 + 1) == 21);
    CHECK(k(0, 0) == 0);
}

TEST_CASE("sharp is the transpose and flip swaps legs", "[tensor]") {
    RMatrix r(2, 2);
    r(0, 1) = 1;
    r(1, 1) = Scalar(1, 2);
    LinMap s = sharp(r);
    // r♯(ξ1) = Σ_j r(0,j) e_j = e2
    CHECK(s.column(0) == Vec{0, 1});
    CHECK(s.column(1) == Vec{0, Scalar(1, 2)});
    RMatrix t = flip(r);
    CHECK(t(1, 0) == 1);
    CHECK(t(0, 1) == 0);
    CHECK(flip(t) == r);
}

TEST_CASE("bullet pairs A legs with B legs", "[tensor]") {
    Tensor2 a = tensor_product_elem(unit_vec(2, 0), unit_vec(2, 1));  // e1⊗e2
    Tensor2 b = tensor_product_elem(unit_vec(3, 2), unit_vec(3, 0));  // x3⊗x1
    Tensor2 p = bullet(a, b);
    REQUIRE(p.dim_left() == 6);
    // (e1⊗x3)⊗(e2⊗x1)
    CHECK(p(0 * 3 + 2, 1 * 3 + 0) == 1);
    std::size_t nonzero = 0;
    for (const auto& x : p.coeffs().data()) nonzero += !is_zero(x);
    CHECK(nonzero == 1);
}

TEST_CASE("determinant and inverse on rational matrices", "[linalg]") {
    Matrix a(3, 3);
    a(0, 0) = Scalar(1, 2);
    a(0, 1) = 1;
    a(1, 1) = Scalar(-2, 3);
    a(1, 2) = 4;
    a(2, 0) = 3;
    a(2, 2) = 1;
    // cofactor expansion along the first row
    Scalar det = Scalar(1, 2) * (Scalar(-2, 3) * 1 - 4 * 0) - 1 * (0 * 1 - 4 * 3);
    CHECK(determinant(a) == det);
    CHECK(a * inverse(a) == Matrix::identity(3));
    CHECK(rank(a) == 3);
}

TEST_CASE("singular matrices carry a kernel witness", "[linalg]") {
    Matrix a(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        a(0, j) = j + 1;
        a(1, j) = 2 * (j + 1);
        a(2, j) = Scalar(j, 3);
    }
    CHECK(determinant(a) == 0);
    CHECK(rank(a) == 2);
    try {
        inverse(a);
        FAIL("inverse of a singular matrix");
    } catch (const DegenerateError& e) {
        CHECK_FALSE(is_zero(e.witness()));
        CHECK(is_zero(a.apply(e.witness())));
    }
    CHECK_FALSE(kernel_vector(Matrix::identity(2)).has_value());
}

TEST_CASE("dual basis satisfies omega(e_i, f_j) = delta_ij", "[linalg]") {
    Matrix w(2, 2);
    w(0, 1) = 1;
    w(1, 0) = -1;
    LinMap F = dual_basis(BilinForm{w});
    // f1 = x2, f2 = −x1
    CHECK(F.column(0) == Vec{0, 1});
    CHECK(F.column(1) == Vec{-1, 0});
    BilinForm form{w};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(form(unit_vec(2, i), F.column(j)) == (i == j ? 1 : 0));
}

TEST_CASE("residual checks count nonzeros and keep the first", "[report]") {
    Tensor3 t = Tensor3::cube(2);
    t(1, 0, 1) = Scalar(-1, 2);
    t(1, 1, 0) = 3;
    std::vector<std::vector<std::string>> ax(3, {"e1", "e2"});
    Check c = Check::from_tensor("t", t, &ax);
    CHECK_FALSE(c.zero);
    CHECK(c.evaluated == 8);
    CHECK(c.nonzero == 2);
    REQUIRE(c.first_violation);
    CHECK(c.first_violation->indices == std::vector<std::int64_t>{1, 0, 1});
    CHECK(c.first_violation->value == Scalar(-1, 2));
    CHECK(Check::from_tensor("z", Tensor3::cube(2)).zero);

    Report rep;
    rep.add(Check::boolean("ok", true));
    CHECK(rep.pass());
    Report outer;
    outer.absorb(rep, "face");
    REQUIRE(outer.find("face/ok"));
    outer.add(c);
    CHECK_FALSE(outer.pass());
}
