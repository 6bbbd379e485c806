#include <doctest.h>

#include "helpers.hpp"

using namespace a1deg;
using namespace a1deg::testing;

namespace {

SymmetricForm gram2(const FieldContext& ctx, long a, long b, long c, long d) {
    return SymmetricForm::from_gram(
        ctx, {{fe(ctx, a), fe(ctx, b)}, {fe(ctx, c), fe(ctx, d)}});
}

}  // namespace

TEST_CASE("diagonalization") {
    const FieldContext qq = FieldContext::rationals();
    SymmetricForm h = SymmetricForm::hyperbolic(qq, 1);
    auto d = diagonalize(h);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == fe(qq, 2));
    CHECK(d[1] == FieldElement::rational(qq, -1, 2));
    // <2> + <-1/2> represents zero: 2*1^2 - (1/2)*2^2 = 0, found by brute force
    bool isotropic = false;
    for (long a = -3; a <= 3 && !isotropic; ++a)
        for (long b = -3; b <= 3 && !isotropic; ++b) {
            if (a == 0 && b == 0) continue;
            isotropic = (d[0] * fe(qq, a * a) + d[1] * fe(qq, b * b)).is_zero();
        }
    CHECK(isotropic);
    CHECK(reduce_square_class(h.det()).representative() == Rat(-1));

    SymmetricForm diag = SymmetricForm::diagonal_ints(qq, {3, -5, 7});
    CHECK(diagonalize(diag) ==
          std::vector<FieldElement>{fe(qq, 3), fe(qq, -5), fe(qq, 7)});

    SymmetricForm sixth = gram2(qq, 0, 1, 1, 0);
    CHECK(gw_equals(sixth, h));
    CHECK_THROWS_AS(diagonalize(gram2(qq, 1, 1, 1, 1)), Error);  // degenerate
    const FieldContext f2 = FieldContext::prime_field(2);
    CHECK_THROWS_AS(diagonalize(SymmetricForm::diagonal_ints(f2, {1})), Error);
}

TEST_CASE("invariants over classifier fields") {
    const FieldContext q5 = FieldContext::padic(5);
    GWClass h = invariants(SymmetricForm::hyperbolic(q5, 1));
    CHECK(h.rank == 2);
    CHECK(h.disc->representative() == Rat(1));  // -1 is a 5-adic square
    REQUIRE(h.hasse.size() == 1);
    CHECK(h.hasse[0].second == 1);

    GWClass q12 = invariants(SymmetricForm::diagonal_ints(q5, {1, 2}));
    CHECK(q12.disc->representative() == Rat(2));

    const FieldContext rr = FieldContext::reals();
    GWClass sig = invariants(SymmetricForm::diagonal_ints(rr, {1, -1, -1, 1}));
    CHECK(sig.signature == 0);
    CHECK(invariants(SymmetricForm::diagonal_ints(rr, {1, 1, 1})).signature == 3);
}

TEST_CASE("equality decisions") {
    const FieldContext q5 = FieldContext::padic(5);
    const FieldContext q11 = FieldContext::padic(11);
    SymmetricForm h5 = SymmetricForm::hyperbolic(q5, 1);
    SymmetricForm split5 = SymmetricForm::diagonal_ints(q5, {1, 2});
    CHECK_FALSE(gw_equals(h5, split5));
    CHECK(gw_difference(h5, split5)->find("disc") == 0);

    // -1 * 2 = -2 = 9 = 3^2 mod 11, so the discriminants agree 11-adically
    CHECK(legendre_symbol(-2, 11) == 1);
    SymmetricForm h11 = SymmetricForm::hyperbolic(q11, 1);
    SymmetricForm split11 = SymmetricForm::diagonal_ints(q11, {1, 2});
    CHECK(gw_equals(h11, split11));

    CHECK(gw_equals(h5, h5));
    CHECK_THROWS_AS(gw_equals(h5, h11), Error);

    const FieldContext qq = FieldContext::rationals();
    // <1,1> vs <3,3>: same rank, disc and signature; the Hasse symbols
    // separate them (3 is not a sum of two rational squares)
    SymmetricForm a = SymmetricForm::diagonal_ints(qq, {1, 1});
    SymmetricForm b = SymmetricForm::diagonal_ints(qq, {3, 3});
    CHECK(hilbert_symbol(Rat(3), Rat(3), Place::prime(2)) == -1);
    CHECK_FALSE(gw_equals(a, b));
    CHECK(gw_difference(a, b)->find("hasse@2") == 0);
    // <2,2> on the other hand is isometric to <1,1>, since x^2+y^2 represents 2
    CHECK(gw_equals(a, SymmetricForm::diagonal_ints(qq, {2, 2})));

    const FieldContext f2ctx = FieldContext::prime_field(2);
    CHECK(gw_equals(SymmetricForm::diagonal_ints(f2ctx, {1, 1}),
                    SymmetricForm::hyperbolic(f2ctx, 1)));
}

TEST_CASE("stable equality") {
    const FieldContext qq = FieldContext::rationals();
    SymmetricForm q = SymmetricForm::diagonal_ints(qq, {3, 5});
    CHECK(stable_equals(q, q.direct_sum(SymmetricForm::hyperbolic(qq, 1))));
    CHECK(stable_equals(SymmetricForm::diagonal_ints(qq, {1}),
                        SymmetricForm::diagonal_ints(qq, {1})
                            .direct_sum(SymmetricForm::hyperbolic(qq, 2))));
    const FieldContext rr = FieldContext::reals();
    CHECK_FALSE(stable_equals(SymmetricForm::diagonal_ints(rr, {1}),
                              SymmetricForm::diagonal_ints(rr, {-1})));
    CHECK_THROWS_AS(stable_equals(SymmetricForm::diagonal_ints(qq, {1}),
                                  SymmetricForm::hyperbolic(qq, 1)),
                    Error);
}

TEST_CASE("presentations") {
    const FieldContext qq = FieldContext::rationals();
    RingPtr R = qq_ring({"x1", "x2"});
    Presentation e6 = present(milnor_number(qp(R, "x1^3+x2^4")));
    CHECK(e6.h_multiplicity == 3);
    CHECK(e6.residual.empty());
    CHECK(presentation_string(e6) == "3*H");

    Presentation single = present(SymmetricForm::diagonal_ints(qq, {7}));
    CHECK(single.h_multiplicity == 0);
    REQUIRE(single.residual.size() == 1);
    CHECK(presentation_string(single) == "<7>");

    Presentation d5 = present(milnor_number(qp(R, "x2*(x1^2+x2^3)")));
    CHECK(d5.h_multiplicity == 2);
    REQUIRE(d5.residual.size() == 1);
    CHECK(d5.residual[0].representative() == Rat(-2));

    // presentations of the whole corpus rebuild to equal classes
    for (const AdeEntry& e : ade_corpus()) {
        SymmetricForm mu = milnor_number(qp(R, e.equation));
        CHECK(gw_equals(form_of_presentation(qq, present(mu)), mu));
    }
}

TEST_CASE("presentation round trip and direct sum invariants") {
    const FieldContext qq = FieldContext::rationals();
    Rng rng(51);
    for (int t = 0; t < 30; ++t) {
        std::vector<FieldElement> d1, d2;
        for (int i = 0; i < 3; ++i) d1.push_back(rng.nonzero_element(qq, -10, 10));
        for (int i = 0; i < 2; ++i) d2.push_back(rng.nonzero_element(qq, -10, 10));
        SymmetricForm q1 = SymmetricForm::diagonal(qq, d1);
        SymmetricForm q2 = SymmetricForm::diagonal(qq, d2);
        SymmetricForm sum = q1.direct_sum(q2);

        CHECK(gw_equals(form_of_presentation(qq, present(q1)), q1));
        CHECK(gw_equals(form_of_presentation(qq, present(sum)), sum));

        GWClass c1 = invariants(q1), c2 = invariants(q2), cs = invariants(sum);
        CHECK(cs.rank == c1.rank + c2.rank);
        CHECK(*cs.signature == *c1.signature + *c2.signature);
        CHECK(*cs.disc == *c1.disc * *c2.disc);
        // Hasse of a sum composes through the cocycle (disc1, disc2)_p
        for (const Place& pl : {Place::prime(2), Place::prime(3), Place::prime(5),
                                Place::prime(7), Place::at_infinity()}) {
            auto eps = [&](const SymmetricForm& q) {
                auto d = diagonalize(q);
                int e = 1;
                for (size_t i = 0; i < d.size(); ++i)
                    for (size_t j = i + 1; j < d.size(); ++j)
                        e *= hilbert_symbol(d[i].value(), d[j].value(), pl);
                return e;
            };
            int lhs = eps(sum);
            int rhs = eps(q1) * eps(q2) *
                      hilbert_symbol(c1.disc->representative(), c2.disc->representative(), pl);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("signature bounds and parity") {
    Rng rng(54);
    for (const char* spec : {"QQ", "RR"}) {
        FieldContext ctx = FieldContext::parse(spec);
        for (int t = 0; t < 30; ++t) {
            size_t n = static_cast<size_t>(rng.small(1, 5));
            std::vector<FieldElement> d;
            for (size_t i = 0; i < n; ++i) d.push_back(rng.nonzero_element(ctx, -9, 9));
            GWClass cls = invariants(SymmetricForm::diagonal(ctx, d));
            REQUIRE(cls.signature.has_value());
            long s = *cls.signature;
            CHECK(static_cast<size_t>(s < 0 ? -s : s) <= cls.rank);
            CHECK((s - static_cast<long>(cls.rank)) % 2 == 0);
        }
    }
}

TEST_CASE("equality is invariant under basis permutation") {
    const FieldContext qq = FieldContext::rationals();
    Rng rng(52);
    for (int t = 0; t < 10; ++t) {
        std::vector<FieldElement> d;
        for (int i = 0; i < 4; ++i) d.push_back(rng.nonzero_element(qq, -8, 8));
        SymmetricForm q = SymmetricForm::diagonal(qq, d);
        std::vector<size_t> perm{0, 1, 2, 3};
        for (size_t i = 3; i > 0; --i) std::swap(perm[i], perm[static_cast<size_t>(rng.small(0, static_cast<long>(i)))]);
        std::vector<std::vector<FieldElement>> g(4, std::vector<FieldElement>(4, fe(qq, 0)));
        for (size_t i = 0; i < 4; ++i) g[i][i] = d[perm[i]];
        CHECK(gw_equals(q, SymmetricForm::from_gram(qq, g)));
    }
}

TEST_CASE("square class invariance of rank one forms") {
    const FieldContext qq = FieldContext::rationals();
    Rng rng(53);
    for (int t = 0; t < 25; ++t) {
        FieldElement a = rng.nonzero_element(qq, -12, 12);
        FieldElement c = rng.nonzero_element(qq, 1, 9);
        CHECK(gw_equals(SymmetricForm::diagonal(qq, {a}),
                        SymmetricForm::diagonal(qq, {a * c * c})));
    }
}

TEST_CASE("trace forms") {
    const FieldContext qq = FieldContext::rationals();
    ExtPtr gauss = make_extension(qq, "t", UniPoly::from_ints(qq, {1, 0, 1}));
    SymmetricForm tr1 = trace_form(gauss, ExtElem::from_base(gauss, fe(qq, 1)));
    CHECK(tr1.entry(0, 0) == fe(qq, 2));
    CHECK(tr1.entry(0, 1) == fe(qq, 0));
    CHECK(tr1.entry(1, 1) == fe(qq, -2));
    CHECK(gw_equals(tr1, SymmetricForm::hyperbolic(qq, 1)));

    ExtPtr triv = make_extension(qq, "t", UniPoly::from_ints(qq, {-3, 1}));
    SymmetricForm c = trace_form(triv, ExtElem::from_base(triv, fe(qq, 7)));
    REQUIRE(c.rank() == 1);
    CHECK(c.entry(0, 0) == fe(qq, 7));

    ExtPtr sqrt2 = make_extension(qq, "t", UniPoly::from_ints(qq, {-2, 0, 1}));
    SymmetricForm trt = trace_form(sqrt2, ExtElem::generator(sqrt2));
    CHECK(trt.entry(0, 0) == fe(qq, 0));
    CHECK(trt.entry(0, 1) == fe(qq, 4));
    CHECK(trt.entry(1, 1) == fe(qq, 0));
    CHECK(gw_equals(trt, SymmetricForm::hyperbolic(qq, 1)));

    CHECK_THROWS_AS(trace_form(gauss, ExtElem::from_base(gauss, fe(qq, 0))), Error);
}
