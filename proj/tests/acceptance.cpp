// Acceptance suite: runs every acceptance criterion at its pinned tolerance
// and prints one pass/fail line per criterion.  Exit status is nonzero if
// any criterion fails.

#include "confdunkl/conformal.hpp"
#include "confdunkl/config.hpp"
#include "confdunkl/rootsio.hpp"
#include "confdunkl/verify.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace confdunkl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// the three root systems of the acceptance grid at chart dimension n
std::vector<std::pair<std::string, RootSystem>> acceptance_systems(int n) {
    std::vector<std::pair<std::string, RootSystem>> out;
    out.emplace_back("A1", build_A1(n));
    out.emplace_back("B2_euclidean", build_euclidean_B(2, n));
    out.emplace_back("B3_embedded", build_embedded_B(3, n));
    return out;
}

// the three multiplicity choices; shorter lists cycle over the orbits
std::vector<std::pair<std::string, std::vector<Exact>>> acceptance_multiplicities() {
    return {{"k=0", {Exact(0)}},
            {"k=1/2", {Exact(make_rat(1, 2))}},
            {"k=(1,2)", {Exact(1), Exact(2)}}};
}

ExprId gaussian_bump(ExprPool& pool, int n) {
    ExprId norm2 = pool.zero();
    for (int i = 0; i < n; ++i) norm2 = pool.add(norm2, pool.ipow(pool.var(i), 2));
    return pool.expn(pool.mul(pool.constant(Exact(make_rat(-1, 2))), norm2));
}

ExprId acceptance_density(ExprPool& pool, int n) {
    ExprId f = pool.add(pool.one(), pool.ipow(pool.var(0), 2));
    if (n >= 2) f = pool.add(f, pool.mul(pool.var(0), pool.var(1)));
    return pool.add(f, gaussian_bump(pool, n));
}

Outcome criterion_sl2() {
    Outcome out;
    std::ostringstream os;
    int configs = 0;
    for (int n : {2, 3}) {
        for (auto& [sys_name, rs] : acceptance_systems(n)) {
            for (auto& [k_name, kv] : acceptance_multiplicities()) {
                auto k = MultiplicityFunction::per_orbit(rs, kv);
                DunklOps ops(DunklContext::make(rs, k));
                Sl2Report rep = ops.sl2_commutators(6);
                ++configs;
                if (!rep.ef_minus_h_zero || !rep.he_minus_2e_zero ||
                    !rep.hf_plus_2f_zero)
                    throw Failure("n=" + std::to_string(n) + " " + sys_name + " " +
                                  k_name + ": " + rep.detail);
            }
        }
    }
    os << configs << " configurations, every ambient monomial of degree <= 6, "
       << "exact zero; realized relations: [E,F] = H, [H,E] = 2E, [H,F] = -2F";
    out.detail = os.str();
    return out;
}

Outcome criterion_commutativity() {
    Outcome out;
    Rng rng(1002);
    int configs = 0;
    for (int n : {2, 3}) {
        for (auto& [sys_name, rs] : acceptance_systems(n)) {
            for (auto& [k_name, kv] : acceptance_multiplicities()) {
                auto k = MultiplicityFunction::per_orbit(rs, kv);
                DunklOps ops(DunklContext::make(rs, k));
                int nv = n + 2;
                for (int t = 0; t < 50; ++t) {
                    AmbientVector<Exact> xi(nv), eta(nv);
                    for (int a = 0; a < nv; ++a) {
                        xi[a] = Exact(rng.rational());
                        eta[a] = Exact(rng.rational());
                    }
                    MultiPoly p = random_poly(rng, nv, 6, 6);
                    if (!ops.commutativity_residual(xi, eta, p).is_zero())
                        throw Failure("n=" + std::to_string(n) + " " + sys_name +
                                      " " + k_name + ": nonzero [T_xi, T_eta]");
                }
                ++configs;
            }
        }
    }
    out.detail = std::to_string(configs) +
                 " configurations x 50 random (xi, eta) pairs, exact zero";
    return out;
}

Outcome criterion_two_laplacians() {
    Outcome out;
    Rng rng(1003);
    int configs = 0;
    for (int n : {2, 3}) {
        for (auto& [sys_name, rs] : acceptance_systems(n)) {
            for (auto& [k_name, kv] : acceptance_multiplicities()) {
                auto k = MultiplicityFunction::per_orbit(rs, kv);
                DunklOps ops(DunklContext::make(rs, k));
                int nv = n + 2;
                for (int t = 0; t < 200; ++t) {
                    MultiPoly p = random_poly(rng, nv, 6, 6);
                    if (!(ops.laplacian_sum(p) == ops.laplacian_direct(p)))
                        throw Failure("n=" + std::to_string(n) + " " + sys_name +
                                      " " + k_name + ": laplacian routes differ");
                }
                ++configs;
            }
        }
    }
    out.detail = std::to_string(configs) +
                 " configurations x 200 random polynomials, exact agreement";
    return out;
}

Outcome criterion_equivariance() {
    Outcome out;
    Rng rng(1004);
    int cases = 0;
    for (int n : {2, 3}) {
        for (auto& [sys_name, rs] : acceptance_systems(n)) {
            std::vector<Mat<Exact>> gens;
            for (std::size_t idx : rs.positive())
                gens.push_back(reflection_matrix(rs.roots()[idx]));
            for (auto& [k_name, kv] : acceptance_multiplicities()) {
                auto k = MultiplicityFunction::per_orbit(rs, kv);
                DunklOps ops(DunklContext::make(rs, k));
                int nv = n + 2;
                for (const auto& g : gens)
                    for (int t = 0; t < 50; ++t) {
                        MultiPoly p = random_poly(rng, nv, 5, 5);
                        if (!ops.equivariance_residual(g, p).is_zero())
                            throw Failure("n=" + std::to_string(n) + " " + sys_name +
                                          " " + k_name + ": equivariance broken");
                        ++cases;
                    }
            }
        }
    }
    out.detail = std::to_string(cases) +
                 " (generator, polynomial) cases over all configurations, exact";
    return out;
}

Outcome criterion_extension_independence() {
    Outcome out;
    Rng rng(1005);
    const double tol = default_tolerances().at("extension_independence");
    const double power_tol = default_tolerances().at("extension_power");
    int n = 2;
    double worst = 0.0, weakest_power = 1e300;
    for (auto& [sys_name, rs] : acceptance_systems(n)) {
        auto group = group_to_double(generate_group(rs));
        auto k = MultiplicityFunction::constant(rs, Exact(make_rat(1, 2)));
        auto ctx = DunklContext::make(rs, k);
        ExprPool pool;
        ExprId f = acceptance_density(pool, n);
        auto pts = sample_regular_points(rs, group, 100, rng, 0.1, -1.7, 1.7);
        for (int j : {1, 2}) {
            auto spec = ConformalOperatorSpec::at_critical_weight(ctx, j);
            for (int trial = 0; trial < 5; ++trial) {
                ExprId g = testutil::random_smooth_expr(pool, rng, n, 2);
                double res = extension_independence_residual(spec, pool, f, g, pts);
                worst = std::max(worst, res);
                if (res > tol)
                    throw Failure(sys_name + " j=" + std::to_string(j) +
                                  ": residual " + std::to_string(res));
            }
            // power check: off-critical weight must show dependence; the
            // perturbation must not be Dunkl-harmonic (x1^2 + x2 + 2 is not)
            auto off = ConformalOperatorSpec::at_weight(ctx, j, spec.weight + 0.5);
            ExprId g = pool.add(pool.ipow(pool.var(0), 2),
                                pool.add(pool.var(1), pool.constant(Exact(2))));
            double res_off = extension_independence_residual(off, pool, f, g, pts);
            weakest_power = std::min(weakest_power, res_off);
            if (res_off <= power_tol)
                throw Failure(sys_name + " j=" + std::to_string(j) +
                              ": off-critical residual only " + std::to_string(res_off));
        }
    }
    std::ostringstream os;
    os << "3 systems x j in {1,2} x 5 perturbations x 100 points: max residual "
       << worst << " <= " << tol << "; off-critical residual >= " << weakest_power
       << " > " << power_tol;
    out.detail = os.str();
    return out;
}

Outcome criterion_route_agreement() {
    Outcome out;
    Rng rng(1006);
    const double tol = default_tolerances().at("route_agreement");
    int n = 2;
    double worst = 0.0;
    int configs = 0;
    for (auto& [sys_name, rs] : acceptance_systems(n)) {
        auto group = group_to_double(generate_group(rs));
        for (auto& [k_name, kv] : acceptance_multiplicities()) {
            auto k = MultiplicityFunction::per_orbit(rs, kv);
            auto ctx = DunklContext::make(rs, k);
            auto spec = ConformalOperatorSpec::at_critical_weight(ctx, 1);
            ExprPool pool;
            ExprId f = acceptance_density(pool, n);
            auto pts = sample_regular_points(rs, group, 200, rng, 0.1, -1.8, 1.8);
            double res = cross_validate(spec, pool, f, pts);
            worst = std::max(worst, res);
            ++configs;
            if (res > tol)
                throw Failure(sys_name + " " + k_name + ": max relative error " +
                              std::to_string(res));
        }
    }
    std::ostringstream os;
    os << configs << " configurations x 200 regular points (margin 0.1): max "
       << worst << " <= " << tol;
    out.detail = os.str();
    return out;
}

Outcome criterion_classical_reduction() {
    Outcome out;
    Rng rng(1007);
    const double tol_cls = default_tolerances().at("classical_reduction");
    const double tol_k0 = default_tolerances().at("k0_reduction");
    double worst_cls = 0.0, worst_k0 = 0.0;
    for (int n : {2, 3}) {
        std::vector<std::pair<std::string, RootSystem>> systems;
        systems.emplace_back("A1", build_A1(n));
        systems.emplace_back("B2_euclidean", build_euclidean_B(2, n));
        for (auto& [sys_name, rs] : systems) {
            auto group = group_to_double(generate_group(rs));
            ExprPool pool;
            ExprId f = acceptance_density(pool, n);
            auto pts = sample_regular_points(rs, group, 60, rng, 0.1, -1.7, 1.7);
            for (auto& [k_name, kv] : acceptance_multiplicities()) {
                if (k_name == "k=0") continue;
                auto k = MultiplicityFunction::per_orbit(rs, kv);
                auto ctx = DunklContext::make(rs, k);
                auto spec = ConformalOperatorSpec::at_critical_weight(ctx, 1);
                auto pos = euclidean_positive_roots(ctx);
                for (const auto& x : pts) {
                    double a = chart_operator(spec, pool, f, x);
                    double b = classical_dunkl_chart(pool, pos, f, x);
                    worst_cls = std::max(worst_cls,
                                         std::abs(a - b) / std::max(1.0, std::abs(b)));
                }
            }
            // k = 0 collapses to the plain laplacian
            auto ctx0 = DunklContext::make(
                rs, MultiplicityFunction::constant(rs, Exact(0)));
            auto spec0 = ConformalOperatorSpec::at_critical_weight(ctx0, 1);
            ExprId lap = chart_laplacian_expr(pool, f, n);
            for (const auto& x : pts) {
                double a = chart_operator(spec0, pool, f, x);
                double b = pool.eval<double>(lap, x);
                worst_k0 = std::max(worst_k0,
                                    std::abs(a - b) / std::max(1.0, std::abs(b)));
            }
        }
    }
    if (worst_cls > tol_cls)
        throw Failure("classical comparison residual " + std::to_string(worst_cls));
    if (worst_k0 > tol_k0)
        throw Failure("k=0 reduction residual " + std::to_string(worst_k0));
    std::ostringstream os;
    os << "euclidean-only vs classical oracle: max " << worst_cls << " <= " << tol_cls
       << "; k=0 vs plain laplacian: max " << worst_k0 << " <= " << tol_k0;
    out.detail = os.str();
    return out;
}

Outcome criterion_gjms_flat() {
    Outcome out;
    Rng rng(1008);
    const double tol = default_tolerances().at("gjms_flat");
    double worst = 0.0;
    for (int n : {2, 3}) {
        RootSystem rs = build_embedded_B(3, n);
        auto ctx = DunklContext::make(rs, MultiplicityFunction::constant(rs, Exact(0)));
        auto spec = ConformalOperatorSpec::at_critical_weight(ctx, 2);
        ExprPool pool;

        // x1^4: Delta^2 = 24
        ExprId f4 = pool.ipow(pool.var(0), 4);
        for (int t = 0; t < 10; ++t) {
            auto x = rng.point(n, -1.3, 1.3);
            double v = higher_power(spec, pool, f4, x);
            worst = std::max(worst, std::abs(v - 24.0) / 24.0);
        }

        // smooth test functions against the symbolic chart bi-laplacian
        for (ExprId f : {acceptance_density(pool, n), gaussian_bump(pool, n)}) {
            ExprId bilap =
                chart_laplacian_expr(pool, chart_laplacian_expr(pool, f, n), n);
            AmbientRoute route(spec, pool, f);
            for (int t = 0; t < 40; ++t) {
                auto x = rng.point(n, -1.5, 1.5);
                double v = route.eval(x);
                double o = pool.eval<double>(bilap, x);
                worst = std::max(worst, std::abs(v - o) / std::max(1.0, std::abs(o)));
            }
        }
    }
    if (worst > tol) throw Failure("bi-laplacian residual " + std::to_string(worst));
    std::ostringstream os;
    os << "k=0, j=2 ambient route vs Delta^2 (n in {2,3}): max " << worst << " <= "
       << tol;
    out.detail = os.str();
    return out;
}

Outcome criterion_geometry() {
    Outcome out;
    Rng rng(1009);
    const double tol = default_tolerances().at("chart_reflection");
    // axioms and group orders 2^{n+1} (n+1)!
    for (int n : {1, 2}) {
        RootSystem rs = build_B(n);
        std::vector<Root> roots = rs.roots();
        ValidationReport rep = validate_root_system(roots);
        if (!rep.ok()) throw Failure("build_B axioms violated at n=" + std::to_string(n));
        std::size_t expected = (1u << (n + 1));
        for (int m = 2; m <= n + 1; ++m) expected *= m;
        std::size_t order = generate_group(rs).order();
        if (order != expected)
            throw Failure("group order " + std::to_string(order) + " != " +
                          std::to_string(expected));
        if (rs.orbit_count() != 2) throw Failure("orbit count != 2");
    }

    // hyperplane bases: exact orthogonality and full rank
    RootSystem b = build_B(2);
    for (const Root& alpha : b.roots()) {
        auto basis = hyperplane_basis(alpha);
        if (basis.size() != 3) throw Failure("hyperplane basis size != n+1");
        std::vector<std::vector<Exact>> rows;
        for (const auto& v : basis) {
            if (!(pair(v, alpha.vec()) == Exact(0)))
                throw Failure("hyperplane basis vector not orthogonal to alpha");
            rows.push_back(v.c);
        }
        if (exact_rank(rows) != 3) throw Failure("hyperplane basis rank deficient");
    }

    // chart reflection: involutive and equal to the lifted ambient reflection
    double worst_inv = 0.0, worst_amb = 0.0;
    for (const Root& alpha : b.roots()) {
        int done = 0;
        while (done < 60) {
            std::vector<double> x = rng.point(2, -2.0, 2.0);
            double D = chart_pairing(alpha, x);
            double J = chart_denominator(alpha, x);
            if (std::abs(D) < 0.05 || J < 0.05) continue;
            auto y = chart_reflection(alpha, x);
            auto z = chart_reflection(alpha, y);
            for (int i = 0; i < 2; ++i)
                worst_inv = std::max(worst_inv, std::abs(z[i] - x[i]) /
                                                    std::max(1.0, std::abs(x[i])));
            auto img = reflect(alpha, lift_chart_point(x));
            auto cc = to_cone_coords(img);
            for (int i = 0; i < 2; ++i)
                worst_amb = std::max(worst_amb, std::abs(y[i] - cc.x[i]) /
                                                    std::max(1.0, std::abs(cc.x[i])));
            ++done;
        }
    }
    if (worst_inv > tol) throw Failure("involution residual " + std::to_string(worst_inv));
    if (worst_amb > tol)
        throw Failure("ambient-match residual " + std::to_string(worst_amb));
    std::ostringstream os;
    os << "axioms exact; group orders 8 and 48; bases exact and full rank; "
       << "chart reflection involutive to " << worst_inv << " and ambient-matched to "
       << worst_amb << " (<= " << tol << ")";
    out.detail = os.str();
    return out;
}

Outcome criterion_derivative_engine() {
    Outcome out;
    Rng rng(1010);
    const double tol = default_tolerances().at("derivative_fd");
    ExprPool pool;
    double worst = 0.0;
    int checked = 0;
    while (checked < 500) {
        int nv = 1 + static_cast<int>(rng.below(3));
        ExprId e = testutil::random_smooth_expr(pool, rng, nv, 3);
        auto x = rng.point(nv, -1.0, 1.0);
        double res;
        try {
            res = testutil::derivative_fd_residual(pool, e, nv, x, 1e-5);
        } catch (const std::domain_error&) {
            continue;
        }
        worst = std::max(worst, res);
        if (res > tol)
            throw Failure("derivative residual " + std::to_string(res) + " on " +
                          pool.to_string(e));
        ++checked;
    }
    std::ostringstream os;
    os << "500 random smooth expressions, max |symbolic - central difference| = "
       << worst << " <= " << tol;
    out.detail = os.str();
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "exact sl(2) relations on all monomials of degree <= 6", criterion_sl2},
        {2, "Dunkl operators commute exactly", criterion_commutativity},
        {3, "two Dunkl-Laplacian constructions agree exactly", criterion_two_laplacians},
        {4, "Dunkl-Laplacian is exactly equivariant under the generators",
         criterion_equivariance},
        {5, "extension independence at the critical weight (j = 1, 2)",
         criterion_extension_independence},
        {6, "chart formula agrees with the ambient route (j = 1)",
         criterion_route_agreement},
        {7, "euclidean reduction to the classical Dunkl-Laplacian and to Delta",
         criterion_classical_reduction},
        {8, "k = 0, j = 2 ambient route is the flat bi-laplacian",
         criterion_gjms_flat},
        {9, "geometry: axioms, group orders, bases, chart reflection",
         criterion_geometry},
        {10, "symbolic derivatives vs central finite differences",
         criterion_derivative_engine},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = e.what();
        }
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
        std::printf("[%s] criterion %2d: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.title, dt.count());
        std::printf("            %s\n", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
