#include <doctest.h>

#include "helpers.hpp"

using namespace a1deg;
using namespace a1deg::testing;

TEST_CASE("mora normal form handles local units") {
    RingPtr R = qq_ring({"x"});
    // x^2 - x^3 = x^2 (1 - x) generates the same local ideal as x^2
    CHECK(mora_normal_form(qp(R, "x^2"), {qp(R, "x^2-x^3")}).is_zero());
    CHECK(mora_normal_form(qp(R, "x"), {qp(R, "x^2")}) == qp(R, "x"));

    RingPtr R2 = qq_ring({"x1", "x2"});
    CHECK(mora_normal_form(qp(R2, "x1+x1*x2"), {qp(R2, "x1")}).is_zero());
}

TEST_CASE("standard basis and staircase") {
    RingPtr R = qq_ring({"x1", "x2"});
    LocalAlgebra A = LocalAlgebra::compute({qp(R, "2*x1"), qp(R, "3*x2^2")});
    CHECK(A.dimension() == 2);
    REQUIRE(A.staircase().size() == 2);
    CHECK(A.staircase()[0] == Monomial({0, 0}));
    CHECK(A.staircase()[1] == Monomial({0, 1}));

    LocalAlgebra simple = LocalAlgebra::compute({qp(R, "x1"), qp(R, "x2")});
    CHECK(simple.dimension() == 1);

    CHECK_THROWS_AS(LocalAlgebra::compute({qp(R, "x1^2"), qp(R, "x1*x2")}), Error);
    CHECK_THROWS_AS(LocalAlgebra::compute({Polynomial::zero(R), Polynomial::zero(R)}), Error);
    CHECK_THROWS_AS(LocalAlgebra::compute({qp(R, "x1+1"), qp(R, "x2")}), Error);
}

TEST_CASE("canonical normal form is linear and idempotent") {
    RingPtr R = qq_ring({"x1", "x2"});
    // the D4 gradient needs a genuine s-polynomial reduction
    LocalAlgebra A = LocalAlgebra::compute({qp(R, "2*x1*x2"), qp(R, "x1^2+3*x2^2")});
    CHECK(A.dimension() == 4);
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        Polynomial h1 = rng.poly(R), h2 = rng.poly(R);
        FieldElement alpha = rng.element(R->field);
        Polynomial lhs = A.normal_form(h1.scaled(alpha) + h2);
        Polynomial rhs = A.normal_form(h1).scaled(alpha) + A.normal_form(h2);
        CHECK(lhs == rhs);
        CHECK(A.normal_form(A.normal_form(h1)) == A.normal_form(h1));
    }
    // standard basis elements reduce to zero, staircase monomials to themselves
    for (const auto& g : A.standard_basis()) CHECK(A.normal_form(g).is_zero());
    for (const auto& m : A.staircase()) {
        Polynomial mono = Polynomial::term(R, m, FieldElement::one(R->field));
        CHECK(A.normal_form(mono) == mono);
    }
}

TEST_CASE("multiplication matrices") {
    RingPtr R = qq_ring({"x1", "x2"});
    LocalAlgebra A = LocalAlgebra::compute({qp(R, "2*x1"), qp(R, "3*x2^2")});
    auto id = A.multiplication_matrix(qp(R, "1"));
    CHECK(id[0][0].is_one());
    CHECK(id[1][1].is_one());
    CHECK(id[0][1].is_zero());
    CHECK(id[1][0].is_zero());

    // multiplication by x2 shifts 1 -> x2 -> 0
    auto mx = A.multiplication_matrix(qp(R, "x2"));
    CHECK(mx[0][0].is_zero());
    CHECK(mx[1][0].is_one());
    CHECK(mx[0][1].is_zero());
    CHECK(mx[1][1].is_zero());

    auto z = A.multiplication_matrix(qp(R, "x1+7*x2^2"));
    for (const auto& row : z)
        for (const auto& e : row) CHECK(e.is_zero());
}

TEST_CASE("multiplication matrices commute") {
    RingPtr R = qq_ring({"x1", "x2"});
    LocalAlgebra A = LocalAlgebra::compute({qp(R, "3*x1^2+x2^3"), qp(R, "3*x1*x2^2")});
    auto mul = [&](const std::vector<std::vector<FieldElement>>& M,
                   const std::vector<std::vector<FieldElement>>& N) {
        const size_t n = M.size();
        std::vector<std::vector<FieldElement>> P(
            n, std::vector<FieldElement>(n, FieldElement::zero(R->field)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) P[i][j] = P[i][j] + M[i][k] * N[k][j];
        return P;
    };
    Rng rng(32);
    for (int t = 0; t < 6; ++t) {
        auto M = A.multiplication_matrix(rng.poly(R));
        auto N = A.multiplication_matrix(rng.poly(R));
        CHECK(mul(M, N) == mul(N, M));
    }
}

TEST_CASE("table corpus dimensions match the expected ranks") {
    RingPtr R = qq_ring({"x1", "x2"});
    for (const AdeEntry& e : ade_corpus()) {
        INFO(e.name);
        LocalAlgebra A = LocalAlgebra::compute(gradient(qp(R, e.equation)));
        CHECK(A.dimension() == e.rank);
    }
}

TEST_CASE("determinacy orders") {
    RingPtr R = qq_ring({"x1", "x2"});
    LocalAlgebra a2 = LocalAlgebra::compute({qp(R, "2*x1"), qp(R, "3*x2^2")});
    CHECK(determinacy_order(a2) == 2);
    // exhaustive oracle at degrees 1 and 2
    CHECK_FALSE(a2.normal_form(qp(R, "x2")).is_zero());
    for (const char* m : {"x1^2", "x1*x2", "x2^2"}) CHECK(a2.normal_form(qp(R, m)).is_zero());

    LocalAlgebra simple = LocalAlgebra::compute({qp(R, "x1"), qp(R, "x2")});
    CHECK(determinacy_order(simple) == 1);

    LocalAlgebra a3 = LocalAlgebra::compute({qp(R, "2*x1"), qp(R, "4*x2^3")});
    CHECK(determinacy_order(a3) == 3);
    for (const char* m : {"x1^3", "x1^2*x2", "x1*x2^2", "x2^3"})
        CHECK(a3.normal_form(qp(R, m)).is_zero());
    CHECK_FALSE(a3.normal_form(qp(R, "x2^2")).is_zero());
}

TEST_CASE("staircase and socle are stable under high-order perturbations") {
    RingPtr R = qq_ring({"x1", "x2"});
    Rng rng(33);
    for (const char* eq : {"x1^2+x2^3", "x2*(x1^2+x2^2)", "x1*(x1^2+x2^3)"}) {
        std::vector<Polynomial> f = gradient(qp(R, eq));
        LocalAlgebra A = LocalAlgebra::compute(f);
        int b = determinacy_order(A);
        Polynomial e_nf = A.normal_form(matrix_det(linear_splitting(f)));
        for (int t = 0; t < 4; ++t) {
            std::vector<Polynomial> g = f;
            size_t which = static_cast<size_t>(rng.small(0, 1));
            unsigned d1 = static_cast<unsigned>(rng.small(0, b + 1));
            Monomial m({d1, static_cast<unsigned>(b + 1) - d1});
            g[which] =
                g[which] + Polynomial::term(R, m, fe(R->field, rng.nonzero(-3, 3)));
            LocalAlgebra B = LocalAlgebra::compute(g);
            CHECK(B.dimension() == A.dimension());
            CHECK(B.staircase() == A.staircase());
            CHECK(B.normal_form(matrix_det(linear_splitting(g))) == e_nf);
        }
    }
}
