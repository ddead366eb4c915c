#include "confdunkl/ambient.hpp"
#include "confdunkl/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace confdunkl;

namespace {

AmbientVector<Exact> random_exact_vec(Rng& rng, int dim) {
    AmbientVector<Exact> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Exact(rng.rational());
    return v;
}

AmbientVector<double> random_double_vec(Rng& rng, int dim) {
    AmbientVector<double> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.uniform(-3, 3);
    return v;
}

}  // namespace

TEST_CASE("pairing: fixed values") {
    BilinearForm form(2);
    // <(1,0,0,1), (1,0,0,1)> = 2
    AmbientVector<Exact> u{Exact(1), Exact(0), Exact(0), Exact(1)};
    CHECK(form.pair(u, u) == Exact(2));

    // null-cone point (1, x, -|x|^2/2) pairs to zero with itself
    AmbientVector<Exact> c{Exact(1), Exact(1), Exact(1), Exact(Rat(-1))};
    CHECK(form.pair(c, c) == Exact(0));

    // direct Gram evaluation, cross-checked against the tilde congruent form
    AmbientVector<double> a{1, 2, 3, 4}, b{0, 1, 1, 1};
    BilinearForm fd(2), ft(2, BasisMode::tilde);
    CHECK(fd.pair(a, b) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(ft.pair(to_tilde(a), to_tilde(b)) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("pairing is symmetric and bilinear") {
    Rng rng(5);
    for (int n : {1, 2, 3}) {
        BilinearForm form(n);
        for (int trial = 0; trial < 50; ++trial) {
            auto u = random_exact_vec(rng, n + 2);
            auto v = random_exact_vec(rng, n + 2);
            auto w = random_exact_vec(rng, n + 2);
            Exact s(rng.rational());
            CHECK(form.pair(u, v) == form.pair(v, u));
            CHECK(form.pair(u + v, w) == form.pair(u, w) + form.pair(v, w));
            CHECK(form.pair(s * u, w) == s * form.pair(u, w));
        }
    }
}

TEST_CASE("pairing rejects dimension mismatch") {
    BilinearForm form(2);
    AmbientVector<double> u{1, 2, 3, 4}, v{1, 2, 3};
    CHECK_THROWS_AS(form.pair(u, v), std::invalid_argument);
}

TEST_CASE("gram matrices: signature and congruence") {
    for (int n : {1, 2, 3}) {
        BilinearForm fs(n), ft(n, BasisMode::tilde);
        auto gs = fs.gram<double>();
        auto gt = ft.gram<double>();
        // pair via gram matrix equals direct pair
        Rng rng(17);
        for (int t = 0; t < 20; ++t) {
            auto u = random_double_vec(rng, n + 2);
            auto v = random_double_vec(rng, n + 2);
            double via_gram = 0;
            for (int i = 0; i < n + 2; ++i)
                for (int j = 0; j < n + 2; ++j) via_gram += u[i] * gs(i, j) * v[j];
            CHECK(via_gram == doctest::Approx(fs.pair(u, v)).epsilon(1e-12));
            // tilde change of basis is an isometry
            CHECK(ft.pair(to_tilde(u), to_tilde(v)) ==
                  doctest::Approx(fs.pair(u, v)).epsilon(1e-12));
        }
        // tilde gram is diag(+1..+1,-1)
        for (int i = 0; i < n + 2; ++i)
            for (int j = 0; j < n + 2; ++j)
                CHECK(gt(i, j) == (i == j ? (i == n + 1 ? -1.0 : 1.0) : 0.0));
    }
}

TEST_CASE("cone coordinates: fixed examples") {
    // (2, 2, 4, 1) -> t=2, x=(1,2), rho=3; oracle: inverse formula + round trip
    AmbientVector<double> X{2, 2, 4, 1};
    auto cc = to_cone_coords(X);
    CHECK(cc.t == doctest::Approx(2.0));
    CHECK(cc.x[0] == doctest::Approx(1.0));
    CHECK(cc.x[1] == doctest::Approx(2.0));
    CHECK(cc.rho == doctest::Approx(3.0));
    auto back = from_cone_coords(cc);
    for (int i = 0; i < 4; ++i) CHECK(back[i] == doctest::Approx(X[i]).epsilon(1e-14));

    // chart origin on the cone
    AmbientVector<Exact> O{Exact(1), Exact(0), Exact(0), Exact(0)};
    auto cco = to_cone_coords(O);
    CHECK(cco.t == Exact(1));
    CHECK(cco.rho == Exact(0));

    // t=1, rho=0 gives the chart lift (1, x, -|x|^2/2)
    ConeCoords<Exact> p;
    p.t = Exact(1);
    p.x = {Exact(3), Exact(Rat(1, 2))};
    p.rho = Exact(0);
    auto L = from_cone_coords(p);
    CHECK(L[0] == Exact(1));
    CHECK(L[1] == Exact(3));
    CHECK(L[2] == Exact(Rat(1, 2)));
    CHECK(L[3] == Exact(Rat(-37, 8)));  // -(9 + 1/4)/2

    AmbientVector<Exact> bad{Exact(0), Exact(1), Exact(0), Exact(0)};
    CHECK_THROWS_AS(to_cone_coords(bad), std::domain_error);
}

TEST_CASE("cone coordinates: round trip and the 2 t^2 rho identity") {
    Rng rng(23);
    for (int n : {1, 2, 3}) {
        BilinearForm form(n);
        for (int trial = 0; trial < 340; ++trial) {
            // exact round trip
            auto v = random_exact_vec(rng, n + 2);
            if (v[0].is_zero()) v[0] = Exact(1);
            auto cc = to_cone_coords(v);
            CHECK(from_cone_coords(cc) == v);
            // <X,X> = 2 t^2 rho, exactly
            CHECK(form.pair(v, v) == Exact(2) * cc.t * cc.t * cc.rho);

            // float round trip, relative 1e-12
            auto w = random_double_vec(rng, n + 2);
            if (std::abs(w[0]) < 0.1) w[0] += 1.0;
            auto cd = to_cone_coords(w);
            auto back = from_cone_coords(cd);
            for (int i = 0; i < n + 2; ++i)
                CHECK(back[i] == doctest::Approx(w[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("chart jacobian: displayed rows and finite differences") {
    // at t=1, x=0, rho=0 the row for d/dX^inf is (0,..,0,1)
    ConeCoords<double> p{1.0, {0.0, 0.0}, 0.0};
    auto m = chart_jacobian(p);
    CHECK(m(3, 0) == 0.0);
    CHECK(m(3, 1) == 0.0);
    CHECK(m(3, 2) == 0.0);
    CHECK(m(3, 3) == 1.0);
    // 1/t scaling at t=2
    ConeCoords<double> p2{2.0, {0.0, 0.0}, 0.0};
    CHECK(chart_jacobian(p2)(3, 3) == doctest::Approx(0.5));

    ConeCoords<double> sing{0.0, {0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(chart_jacobian(sing), std::domain_error);

    // generic point: matches the numerically differentiated coordinate change
    Rng rng(31);
    for (int n : {1, 2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto X = random_double_vec(rng, n + 2);
            if (std::abs(X[0]) < 0.3) X[0] = 1.0 + X[0];
            auto cc = to_cone_coords(X);
            auto jac = chart_jacobian(cc);
            double h = 1e-6;
            for (int a = 0; a < n + 2; ++a) {
                auto Xp = X, Xm = X;
                Xp[a] += h;
                Xm[a] -= h;
                auto cp = to_cone_coords(Xp), cm = to_cone_coords(Xm);
                std::vector<double> fd(n + 2);
                fd[0] = (cp.t - cm.t) / (2 * h);
                for (int i = 0; i < n; ++i) fd[i + 1] = (cp.x[i] - cm.x[i]) / (2 * h);
                fd[n + 1] = (cp.rho - cm.rho) / (2 * h);
                for (int b = 0; b < n + 2; ++b)
                    CHECK(std::abs(jac(a, b) - fd[b]) <= 1e-8 * std::max(1.0, std::abs(fd[b])));
            }
        }
    }
}

TEST_CASE("exact rank") {
    std::vector<std::vector<Exact>> rows = {
        {Exact(1), Exact(0), Exact(2)},
        {Exact(0), Exact(1), Exact(0)},
        {Exact(1), Exact(1), Exact(2)},
    };
    CHECK(exact_rank(rows) == 2);
    rows[2][2] = Exact(3);
    CHECK(exact_rank(rows) == 3);
}
