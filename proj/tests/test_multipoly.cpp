#include "confdunkl/multipoly.hpp"
#include "confdunkl/roots.hpp"

#include "doctest.h"

using namespace confdunkl;

namespace {
MultiPoly var(int nv, int i) { return MultiPoly::variable(nv, i); }
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(41);
    for (int nv : {3, 4, 5}) {
        for (int trial = 0; trial < 30; ++trial) {
            MultiPoly p = random_poly(rng, nv, 4, 5);
            MultiPoly q = random_poly(rng, nv, 4, 5);
            MultiPoly r = random_poly(rng, nv, 4, 5);
            CHECK(p + q == q + p);
            CHECK((p + q) + r == p + (q + r));
            CHECK(p * q == q * p);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
            CHECK(p - p == MultiPoly(nv));
            CHECK(p * MultiPoly::constant(nv, Exact(1)) == p);
        }
    }
}

TEST_CASE("partial derivatives satisfy the Leibniz rule") {
    Rng rng(43);
    int nv = 4;
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = random_poly(rng, nv, 4, 4);
        MultiPoly q = random_poly(rng, nv, 4, 4);
        for (int v = 0; v < nv; ++v)
            CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
    }
    // partials commute
    MultiPoly p = random_poly(rng, nv, 5, 8);
    CHECK(p.partial(0).partial(2) == p.partial(2).partial(0));
}

TEST_CASE("compose_linear is functorial") {
    Rng rng(47);
    int nv = 4;
    for (int trial = 0; trial < 15; ++trial) {
        Mat<Exact> m1(nv), m2(nv);
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) {
                m1(i, j) = Exact(rng.rational(2, 2));
                m2(i, j) = Exact(rng.rational(2, 2));
            }
        MultiPoly p = random_poly(rng, nv, 3, 4);
        CHECK(p.compose_linear(m1 * m2) ==
              p.compose_linear(m1).compose_linear(m2));
    }
    // (p o M)(X) = p(M X) on sample points
    Mat<Exact> m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Exact(rng.rational(2, 2));
    MultiPoly p = random_poly(rng, 3, 3, 4);
    for (int t = 0; t < 10; ++t) {
        AmbientVector<Exact> x(3);
        for (int i = 0; i < 3; ++i) x[i] = Exact(rng.rational());
        AmbientVector<Exact> mx = m * x;
        CHECK(p.compose_linear(m).eval<Exact>(x.c) == p.eval<Exact>(mx.c));
    }
}

TEST_CASE("divide_by_linear: difference of squares") {
    int nv = 4;
    MultiPoly p = var(nv, 1) * var(nv, 1) - var(nv, 2) * var(nv, 2);
    std::vector<Exact> ell(nv, Exact(0));
    ell[1] = Exact(1);
    ell[2] = Exact(-1);
    CHECK(p.divide_by_linear(ell) == var(nv, 1) + var(nv, 2));
}

TEST_CASE("divide_by_linear: dunkl difference quotient") {
    // f = (X^1)^3, alpha = e1 euclidean: f - f o R_alpha = 2 (X^1)^3,
    // divided by <alpha,X> = X^1 gives 2 (X^1)^2
    int nv = 4;
    AmbientVector<Exact> av(nv);
    av[1] = Exact(1);
    Root alpha(av);
    MultiPoly f = var(nv, 1) * var(nv, 1) * var(nv, 1);
    MultiPoly diff = f - f.compose_linear(reflection_matrix(alpha));
    CHECK(diff == f.scaled(Exact(2)));
    std::vector<Exact> ell(nv, Exact(0));
    ell[1] = Exact(1);  // <e1, X> = X^1
    MultiPoly q = diff.divide_by_linear(ell);
    CHECK(q == (var(nv, 1) * var(nv, 1)).scaled(Exact(2)));
    // multiplication back is the oracle
    CHECK(MultiPoly::linear_form(ell) * q == diff);
}

TEST_CASE("divide_by_linear: non-divisible reports the remainder") {
    int nv = 3;
    MultiPoly p = var(nv, 1);
    std::vector<Exact> ell(nv, Exact(0));
    ell[2] = Exact(1);
    auto res = p.divmod_linear(ell);
    CHECK(!res.exact);
    CHECK(res.remainder == var(nv, 1));
    CHECK_THROWS_AS(p.divide_by_linear(ell), std::domain_error);
}

TEST_CASE("divide_by_linear undoes multiplication") {
    Rng rng(53);
    for (int nv : {3, 5}) {
        for (int trial = 0; trial < 40; ++trial) {
            MultiPoly q = random_poly(rng, nv, 4, 5);
            std::vector<Exact> ell(nv);
            bool nonzero = false;
            for (int v = 0; v < nv; ++v) {
                ell[v] = Exact(rng.rational(2, 2));
                nonzero = nonzero || !ell[v].is_zero();
            }
            if (!nonzero) ell[0] = Exact(1);
            MultiPoly p = MultiPoly::linear_form(ell) * q;
            CHECK(p.divide_by_linear(ell) == q);
        }
    }
}

TEST_CASE("euler operator: degree on homogeneous polynomials") {
    int nv = 4;
    MultiPoly p = var(nv, 0) * var(nv, 3);  // X^0 X^inf, degree 2
    CHECK(p.euler() == p.scaled(Exact(2)));
    CHECK(MultiPoly::constant(nv, Exact(1)).euler() == MultiPoly(nv));
    MultiPoly q = var(nv, 1) * var(nv, 1) * var(nv, 1) * var(nv, 2);
    CHECK(q.euler() == q.scaled(Exact(4)));

    // equals sum_a X_a d/dX_a applied literally
    Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly r = random_poly(rng, nv, 5, 6);
        MultiPoly via_partials(nv);
        for (int a = 0; a < nv; ++a)
            via_partials += MultiPoly::variable(nv, a) * r.partial(a);
        CHECK(r.euler() == via_partials);
    }
}

TEST_CASE("pairing and norm forms") {
    int nv = 4;
    AmbientVector<Exact> alpha{Exact(1), Exact(2), Exact(3), Exact(1)};
    MultiPoly ell = pairing_form(alpha);
    // <alpha, X> at X = (1,1,1,1): 1 + 1 + 2 + 3 = 7
    std::vector<Exact> ones(nv, Exact(1));
    CHECK(ell.eval<Exact>(ones) == Exact(7));
    // <X,X> at (1,1,1,1) = 2 + 1 + 1 = 4
    CHECK(norm_form(nv).eval<Exact>(ones) == Exact(4));
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_up_to(2, 3).size() == 10);   // C(5,2)
    CHECK(monomials_up_to(4, 6).size() == 210);  // C(10,4)
    CHECK(monomials_up_to(5, 6).size() == 462);  // C(11,5)
}
