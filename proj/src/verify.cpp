#include "confdunkl/verify.hpp"

#include "confdunkl/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace confdunkl {

namespace {

AmbientVector<Exact> random_exact_direction(Rng& rng, int nv) {
    AmbientVector<Exact> xi(nv);
    for (int a = 0; a < nv; ++a) xi[a] = Exact(rng.rational());
    return xi;
}

ExprId standard_test_density(ExprPool& pool, int n) {
    // 1 + x1^2 + x1 x2 ... + exp(-|x|^2/2): smooth, no symmetry, no zeros
    ExprId norm2 = pool.zero();
    for (int i = 0; i < n; ++i) norm2 = pool.add(norm2, pool.ipow(pool.var(i), 2));
    ExprId poly = pool.add(pool.one(), pool.ipow(pool.var(0), 2));
    if (n >= 2) poly = pool.add(poly, pool.mul(pool.var(0), pool.var(1)));
    ExprId gauss = pool.expn(pool.mul(pool.constant(Exact(make_rat(-1, 2))), norm2));
    return pool.add(poly, gauss);
}

CheckResult check_sl2(const DunklOps& ops) {
    CheckResult r{"sl2_relations", false, 0.0, ""};
    Sl2Report rep = ops.sl2_commutators(4);
    r.pass = rep.ef_minus_h_zero && rep.he_minus_2e_zero && rep.hf_plus_2f_zero;
    r.residual = r.pass ? 0.0 : 1.0;
    r.detail = rep.detail + " (exact)";
    return r;
}

CheckResult check_commutativity(const DunklOps& ops, Rng& rng, int trials) {
    CheckResult r{"dunkl_commutativity", true, 0.0, ""};
    int nv = ops.ctx().nvars();
    for (int t = 0; t < trials; ++t) {
        MultiPoly p = random_poly(rng, nv, 5, 5);
        auto res = ops.commutativity_residual(random_exact_direction(rng, nv),
                                              random_exact_direction(rng, nv), p);
        if (!res.is_zero()) {
            r.pass = false;
            r.residual = 1.0;
        }
    }
    r.detail = "[T_xi, T_eta] = 0 on " + std::to_string(trials) +
               " random (xi, eta, p) triples (exact)";
    return r;
}

CheckResult check_equivariance(const DunklOps& ops, Rng& rng, int trials) {
    CheckResult r{"laplacian_equivariance", true, 0.0, ""};
    int nv = ops.ctx().nvars();
    const RootSystem& rs = *ops.ctx().rs;
    int count = 0;
    for (std::size_t idx : rs.positive()) {
        Mat<Exact> g = reflection_matrix(rs.roots()[idx]);
        for (int t = 0; t < trials; ++t) {
            MultiPoly p = random_poly(rng, nv, 5, 4);
            if (!ops.equivariance_residual(g, p).is_zero()) {
                r.pass = false;
                r.residual = 1.0;
            }
            ++count;
        }
    }
    r.detail = "Delta_k(p o g) = (Delta_k p) o g for every generator, " +
               std::to_string(count) + " cases (exact)";
    return r;
}

CheckResult check_two_laplacians(const DunklOps& ops, Rng& rng, int trials) {
    CheckResult r{"two_laplacians_agree", true, 0.0, ""};
    int nv = ops.ctx().nvars();
    for (int t = 0; t < trials; ++t) {
        MultiPoly p = random_poly(rng, nv, 6, 6);
        if (!(ops.laplacian_sum(p) == ops.laplacian_direct(p))) {
            r.pass = false;
            r.residual = 1.0;
        }
    }
    r.detail = "contracted T o T equals the explicit difference formula on " +
               std::to_string(trials) + " random polynomials (exact)";
    return r;
}

CheckResult check_extension_independence(const RunConfig& cfg, const DunklContext& ctx,
                                         const std::vector<Mat<double>>& group,
                                         Rng& rng) {
    CheckResult r{"extension_independence", false, 0.0, ""};
    double tol = cfg.tolerance("extension_independence");
    double power_tol = cfg.tolerance("extension_power");
    ExprPool pool;
    int n = ctx.n();
    ExprId f = standard_test_density(pool, n);
    // not Dunkl-harmonic for any builtin system, so the power check has teeth
    ExprId g = pool.add(pool.ipow(pool.var(0), 2),
                        pool.add(n >= 2 ? pool.var(1) : pool.var(0),
                                 pool.constant(Exact(2))));
    int npts = std::min(cfg.samples, 40);
    auto pts = sample_regular_points(*ctx.rs, group, npts, rng, cfg.margin, -1.6, 1.6);
    auto spec = ConformalOperatorSpec::at_critical_weight(ctx, cfg.j);
    double res = extension_independence_residual(spec, pool, f, g, pts);
    auto off = ConformalOperatorSpec::at_weight(ctx, cfg.j, spec.weight + 0.5);
    double res_off = extension_independence_residual(off, pool, f, g, pts);
    r.pass = res <= tol && res_off > power_tol;
    r.residual = res;
    std::ostringstream os;
    os << "j = " << cfg.j << ": residual " << res << " at the critical weight (<= "
       << tol << "); " << res_off << " at w + 1/2 (> " << power_tol << ")";
    r.detail = os.str();
    return r;
}

CheckResult check_route_agreement(const RunConfig& cfg, const DunklContext& ctx,
                                  const std::vector<Mat<double>>& group, Rng& rng) {
    CheckResult r{"route_agreement", false, 0.0, ""};
    double tol = cfg.tolerance("route_agreement");
    ExprPool pool;
    ExprId f = standard_test_density(pool, ctx.n());
    int npts = std::min(cfg.samples, 120);
    auto pts = sample_regular_points(*ctx.rs, group, npts, rng, cfg.margin, -1.8, 1.8);
    auto spec = ConformalOperatorSpec::at_critical_weight(ctx, 1);
    double res = cross_validate(spec, pool, f, pts);
    r.pass = res <= tol;
    r.residual = res;
    std::ostringstream os;
    os << "chart formula vs ambient route at " << pts.size() << " points: max "
       << res << " (<= " << tol << ")";
    r.detail = os.str();
    return r;
}

CheckResult check_k0_reduction(const RunConfig& cfg, const DunklContext& ctx,
                               Rng& rng) {
    CheckResult r{"k0_reduction", false, 0.0, ""};
    double tol = cfg.tolerance("k0_reduction");
    DunklContext zero = DunklContext::make(
        *ctx.rs, MultiplicityFunction::constant(*ctx.rs, Exact(0)));
    auto spec = ConformalOperatorSpec::at_critical_weight(zero, 1);
    ExprPool pool;
    int n = ctx.n();
    ExprId f = standard_test_density(pool, n);
    ExprId lap = chart_laplacian_expr(pool, f, n);
    double worst = 0.0;
    for (int t = 0; t < 60; ++t) {
        auto x = rng.point(n, -1.5, 1.5);
        double a = chart_operator(spec, pool, f, x);
        double b = pool.eval<double>(lap, x);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    r.pass = worst <= tol;
    r.residual = worst;
    std::ostringstream os;
    os << "k = 0: chart operator equals the plain laplacian, max " << worst
       << " (<= " << tol << ")";
    r.detail = os.str();
    return r;
}

CheckResult check_classical_oracle(const RunConfig& cfg, Rng& rng) {
    CheckResult r{"classical_oracle", false, 0.0, ""};
    double tol = cfg.tolerance("classical_reduction");
    // euclidean-only reduction context (the configured system may have
    // alpha0 != 0 roots; the reduction is checked on a euclidean companion)
    RootSystem rs = cfg.n >= 2 ? build_euclidean_B(2, cfg.n) : build_A1(cfg.n);
    Exact kval = cfg.multiplicity.empty() ? Exact(make_rat(1, 2))
                                          : Exact(cfg.multiplicity.front());
    auto ctx = DunklContext::make(rs, MultiplicityFunction::constant(rs, kval));
    auto group = group_to_double(generate_group(*ctx.rs));
    auto spec = ConformalOperatorSpec::at_critical_weight(ctx, 1);
    auto pos = euclidean_positive_roots(ctx);
    ExprPool pool;
    ExprId f = standard_test_density(pool, cfg.n);
    double worst = 0.0;
    int npts = std::min(cfg.samples, 120);
    auto pts = sample_regular_points(*ctx.rs, group, npts, rng, cfg.margin, -1.8, 1.8);
    for (const auto& x : pts) {
        double a = chart_operator(spec, pool, f, x);
        double b = classical_dunkl_chart(pool, pos, f, x);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    r.pass = worst <= tol;
    r.residual = worst;
    std::ostringstream os;
    os << "euclidean-only chart operator vs classical Dunkl-Laplacian on R^n at "
       << pts.size() << " points: max " << worst << " (<= " << tol << ")";
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<std::string> verification_check_names() {
    return {"sl2_relations",     "dunkl_commutativity", "laplacian_equivariance",
            "two_laplacians_agree", "extension_independence", "route_agreement",
            "k0_reduction",      "classical_oracle"};
}

std::vector<CheckResult> run_verification(const RunConfig& cfg) {
    DunklContext ctx = resolve_context(cfg);
    DunklOps ops(ctx);
    auto group = group_to_double(generate_group(*ctx.rs));
    Rng rng(cfg.seed);

    std::vector<CheckResult> out;
    out.push_back(check_sl2(ops));
    out.push_back(check_commutativity(ops, rng, std::min(cfg.samples, 25)));
    out.push_back(check_equivariance(ops, rng, 6));
    out.push_back(check_two_laplacians(ops, rng, std::min(cfg.samples, 50)));
    out.push_back(check_extension_independence(cfg, ctx, group, rng));
    out.push_back(check_route_agreement(cfg, ctx, group, rng));
    out.push_back(check_k0_reduction(cfg, ctx, rng));
    out.push_back(check_classical_oracle(cfg, rng));
    return out;
}

}  // namespace confdunkl
