#include "bialg/functors.hpp"
#include "bialg/linalg.hpp"
#include "oracle.hpp"
#include "samples.hpp"

#include <catch_amalgamated.hpp>

using namespace bialg;

namespace {

std::size_t nonzeros(const Tensor3& t) {
    std::size_t n = 0;
    for (const auto& x : t.data()) n += !is_zero(x);
    return n;
}

FinAlgebra m2() {
    // E11, E12, E21, E22
    FinAlgebra a = FinAlgebra::zero(Kind::associative, 4, {"E11", "E12", "E21", "E22"});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t l = 0; l < 2; ++l) a.mul()(2 * i + j, 2 * j + l, 2 * i + l) = 1;
    return a;
}

}  // namespace

TEST_CASE("fixed examples pass their axioms", "[algebra]") {
    CHECK(check_axioms(samples::dend_D()).pass());
    CHECK(check_axioms(samples::prelie_A()).pass());
    CHECK(check_axioms(samples::perm_B()).pass());
    CHECK(check_axioms(samples::upper_triangular()).pass());
    CHECK(check_axioms(m2()).pass());
    CHECK(oracle::is_dendriform(samples::dend_D()));
    CHECK(oracle::is_perm(samples::perm_B()));
}

TEST_CASE("axiom checker agrees with the oracle on random and broken algebras", "[algebra]") {
    samples::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        FinAlgebra d = samples::random_dendriform(rng);
        CHECK(check_axioms(d).pass() == oracle::is_dendriform(d));
        // knock one structure constant and compare verdicts again
        FinAlgebra bad = d;
        std::size_t i = trial % d.dim, j = (trial / 2) % d.dim, k = (trial / 3) % d.dim;
        bad.products[trial % 2 ? "prec" : "succ"](i, j, k) += 1;
        CHECK(check_axioms(bad).pass() == oracle::is_dendriform(bad));

        FinAlgebra p = samples::random_prelie(rng);
        CHECK(check_axioms(p).pass());
        CHECK(oracle::is_prelie(p));
        p.mul()(0, 0, 0) += 1;
        CHECK(check_axioms(p).pass() == oracle::is_prelie(p));

        FinAlgebra l = samples::random_lie(rng);
        CHECK(check_axioms(l).pass());
        CHECK(oracle::is_lie(l));
    }
}

TEST_CASE("broken Jacobi is caught at the right coefficient", "[algebra]") {
    FinAlgebra g = FinAlgebra::zero(Kind::lie, 3);
    // [e1,e2] = e3, [e1,e3] = e1
    g.mul()(0, 1, 2) = 1;
    g.mul()(1, 0, 2) = -1;
    g.mul()(0, 2, 0) = 1;
    g.mul()(2, 0, 0) = -1;
    CHECK_FALSE(oracle::is_lie(g));
    Report rep = check_axioms(g);
    CHECK_FALSE(rep.pass());
    const Check* jac = rep.find("lie-jacobi");
    REQUIRE(jac);
    REQUIRE(jac->first_violation);
    // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = [e2,−e1] = [e1,e2] = e3
    CHECK(jac->first_violation->indices == std::vector<std::int64_t>{0, 1, 2, 2});
    CHECK(jac->first_violation->value == 1);
}

TEST_CASE("Rota-Baxter operator R(a) = a x gives a dendriform algebra", "[algebra]") {
    FinAlgebra a = m2();
    const Vec x = unit_vec(4, 1);  // E12, x² = 0
    LinMap R = right_mult(a.mul(), x);
    CHECK(rota_baxter_residual(a, R).is_zero());
    FinAlgebra d = dendriform_from_rota_baxter(a, R);
    CHECK(check_axioms(d).pass());
    CHECK(oracle::is_dendriform(d));
    // a≺b = a(bx), a≻b = a(xb): same structure
    FinAlgebra swapped = FinAlgebra::zero(Kind::dendriform, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Vec bx = multiply(a.mul(), unit_vec(4, j), x), xb = multiply(a.mul(), x, unit_vec(4, j));
            Vec p = multiply(a.mul(), unit_vec(4, i), bx), s = multiply(a.mul(), unit_vec(4, i), xb);
            for (std::size_t k = 0; k < 4; ++k) {
                swapped.prec()(i, j, k) = p[k];
                swapped.succ()(i, j, k) = s[k];
            }
        }
    CHECK(swapped.products == d.products);
    // the assignment with ≺ and ≻ exchanged breaks the axioms
    FinAlgebra literal = swapped;
    std::swap(literal.prec(), literal.succ());
    CHECK_FALSE(oracle::is_dendriform(literal));
    CHECK_FALSE(check_axioms(literal).pass());
}

TEST_CASE("non-Rota-Baxter operator is detected", "[algebra]") {
    FinAlgebra a = m2();
    LinMap R = Matrix::identity(4);
    CHECK_FALSE(rota_baxter_residual(a, R).is_zero());
}

TEST_CASE("functors on the two-dimensional example", "[functors]") {
    FinAlgebra D = samples::dend_D(), B = samples::perm_B();
    FinAlgebra A = dendriform_to_prelie(D);
    CHECK(A.products == samples::prelie_A().products);

    // e1x1 = 0, e1x2 = 1, e2x1 = 2, e2x2 = 3
    FinAlgebra L = tensor_lie(A, B);
    CHECK(check_axioms(L).pass());
    CHECK(oracle::is_lie(L));
    Tensor3 want = Tensor3::cube(4);
    auto bracket = [&](std::size_t i, std::size_t j, std::size_t k, int c) {
        want(i, j, k) = c;
        want(j, i, k) = -c;
    };
    bracket(0, 1, 0, -1);
    bracket(1, 2, 2, -1);
    bracket(1, 3, 3, -1);
    CHECK(L.mul() == want);
    CHECK(nonzeros(L.mul()) == 6);

    FinAlgebra M = tensor_assoc(D, B);
    CHECK(oracle::is_associative(M));
    Tensor3 want_m = Tensor3::cube(4);
    want_m(1, 0, 0) = 1;
    want_m(1, 1, 1) = 1;
    want_m(2, 1, 2) = 1;
    want_m(3, 1, 3) = 1;
    CHECK(M.mul() == want_m);

    CHECK(commutator_lie(M).mul() == L.mul());
    CHECK(check_square(D, B).pass());
}

TEST_CASE("square commutes for random dendriform and perm algebras", "[functors]") {
    samples::Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        FinAlgebra D = samples::random_dendriform(rng), B = samples::random_perm2(rng);
        Report rep = check_square(D, B);
        CHECK(rep.pass());
        CHECK(oracle::is_lie(tensor_lie(dendriform_to_prelie(D), B)));
        CHECK(oracle::is_associative(tensor_assoc(D, B)));
    }
}

TEST_CASE("constructors reject the wrong kind or unverified input", "[functors]") {
    CHECK_THROWS_AS(dendriform_to_prelie(samples::prelie_A()), KindError);
    CHECK_THROWS_AS(tensor_lie(samples::prelie_A(), samples::prelie_A()), KindError);
    FinAlgebra broken = samples::dend_D();
    broken.prec()(0, 0, 0) = 1;
    CHECK_FALSE(oracle::is_dendriform(broken));
    CHECK_THROWS_AS(dendriform_to_assoc(broken), AxiomError);
}

TEST_CASE("regular bimodules pass their checks", "[algebra]") {
    samples::Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        FinAlgebra d = samples::random_dendriform(rng);
        CHECK(check_bimodule(d, regular_bimodule(d)).pass());
        FinAlgebra p = samples::random_prelie(rng);
        CHECK(check_bimodule(p, regular_bimodule(p)).pass());
        FinAlgebra l = samples::random_lie(rng);
        CHECK(check_bimodule(l, regular_bimodule(l)).pass());
    }
    FinAlgebra a = samples::upper_triangular();
    Bimodule bm = regular_bimodule(a);
    bm.actions["l"][0](0, 0) += 1;
    CHECK_FALSE(check_bimodule(a, bm).pass());
}

TEST_CASE("kind names round-trip", "[algebra]") {
    for (Kind k : {Kind::dendriform, Kind::prelie, Kind::perm, Kind::associative, Kind::lie})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS(parse_kind("jordan"));
}
