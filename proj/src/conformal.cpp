#include "confdunkl/conformal.hpp"

#include <cmath>
#include <sstream>

namespace confdunkl {

double chart_operator(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                      const std::vector<double>& x, ChartOpDiagnostics* diag,
                      double margin) {
    const RootSystem& rs = *spec.ctx.rs;
    int n = rs.n();
    if (spec.j != 1)
        throw std::invalid_argument("the explicit chart formula covers j = 1 only");
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("chart point has wrong dimension");
    double w = spec.weight;

    // gradient and Laplacian of f at x through second-order duals
    std::vector<double> grad(n);
    double lap = 0.0, fx = 0.0;
    for (int v = 0; v < n; ++v) {
        std::vector<Dual2> xd(n);
        for (int i = 0; i < n; ++i) xd[i] = Dual2(x[i], i == v ? 1.0 : 0.0, 0.0);
        Dual2 r = pool.eval<Dual2>(f, xd);
        fx = r.v;
        grad[v] = r.d;
        lap += r.dd;
    }

    double xdotgrad = 0.0;
    for (int i = 0; i < n; ++i) xdotgrad += x[i] * grad[i];

    double out = lap;
    ChartOpDiagnostics local;
    for (std::size_t idx : rs.positive()) {
        const Root& alpha = rs.roots()[idx];
        double kval = spec.ctx.k.root_value(rs, idx).to_double();
        if (kval == 0.0) continue;

        double a0 = alpha.coord_d(0);
        double norm = alpha.norm_d();
        double D = chart_pairing(alpha, x);
        double J = 1.0 - 2.0 * a0 / norm * D;
        local.min_abs_pairing = std::min(local.min_abs_pairing, std::abs(D));
        local.min_denominator = std::min(local.min_denominator, J);
        if (D == 0.0)
            throw SingularPointError(idx, "D_alpha", D,
                                     "chart point lies on the reflecting subsphere");
        if (J == 0.0)
            throw SingularPointError(idx, "J_alpha", J,
                                     "reflected point is the point at infinity");
        if (J < 0.0)
            throw SingularPointError(idx, "J_alpha", J,
                                     "point is outside the operator's chart domain "
                                     "(negative power base)");
        if (std::abs(D) < margin || J < margin) local.conditioning_warning = true;

        double adotgrad = 0.0;
        for (int i = 0; i < n; ++i) adotgrad += alpha.coord_d(i + 1) * grad[i];
        double first_order = a0 * (w * fx - xdotgrad) + adotgrad;

        std::vector<double> reflected = chart_reflection(alpha, x);
        double f_reflected = pool.eval<double>(f, reflected);
        double difference = fx - std::pow(J, w) * f_reflected;

        out += kval * (2.0 / D * first_order - norm / (D * D) * difference);
    }
    if (diag) *diag = local;
    return out;
}

std::vector<EuclideanRoot> euclidean_positive_roots(const DunklContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    std::vector<EuclideanRoot> out;
    for (std::size_t idx : rs.positive()) {
        const Root& alpha = rs.roots()[idx];
        if (!alpha.alpha0().is_zero())
            throw std::invalid_argument(
                "system has a root with alpha0 != 0; not euclidean-only");
        EuclideanRoot er;
        er.alpha.resize(rs.n());
        for (int i = 0; i < rs.n(); ++i) er.alpha[i] = alpha.coord_d(i + 1);
        er.k = ctx.k.root_value(rs, idx).to_double();
        out.push_back(std::move(er));
    }
    return out;
}

double classical_dunkl_chart(ExprPool& pool, const std::vector<EuclideanRoot>& pos,
                             ExprId f, const std::vector<double>& x) {
    int n = static_cast<int>(x.size());
    double out = 0.0, fx = pool.eval<double>(f, x);
    std::vector<double> grad(n);
    for (int v = 0; v < n; ++v) {
        ExprId dv = pool.derivative(f, v);
        grad[v] = pool.eval<double>(dv, x);
        out += pool.eval<double>(pool.derivative(dv, v), x);
    }
    for (const EuclideanRoot& er : pos) {
        if (er.k == 0.0) continue;
        double norm = 0.0, ax = 0.0, agrad = 0.0;
        for (int i = 0; i < n; ++i) {
            norm += er.alpha[i] * er.alpha[i];
            ax += er.alpha[i] * x[i];
            agrad += er.alpha[i] * grad[i];
        }
        if (ax == 0.0)
            throw std::domain_error("classical oracle: point on a reflecting wall");
        // r_alpha x = x - 2 (<alpha,x>/<alpha,alpha>) alpha
        std::vector<double> rx(n);
        for (int i = 0; i < n; ++i) rx[i] = x[i] - 2.0 * ax / norm * er.alpha[i];
        double frx = pool.eval<double>(f, rx);
        out += er.k * (2.0 * agrad / ax - norm * (fx - frx) / (ax * ax));
    }
    return out;
}

AmbientRoute::AmbientRoute(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f) {
    Density d{f, spec.weight, spec.ctx.n()};
    build(spec, pool, density_to_ambient(pool, d));
}

AmbientRoute::AmbientRoute(const ConformalOperatorSpec& spec, ExprPool& pool,
                           ExprId ambient, bool) {
    build(spec, pool, ambient);
}

void AmbientRoute::build(const ConformalOperatorSpec& spec, ExprPool& pool,
                         ExprId ambient) {
    pool_ = &pool;
    ExprId e = ambient;
    for (int i = 0; i < spec.j; ++i)
        e = ambient_dunkl_laplacian_expr(pool, spec.ctx, e);
    restricted_ = restrict_to_cone(pool, e, spec.ctx.n());
}

double AmbientRoute::eval(const std::vector<double>& x) const {
    return pool_->eval<double>(restricted_, x);
}

double ambient_route(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                     const std::vector<double>& x) {
    return AmbientRoute(spec, pool, f).eval(x);
}

double higher_power(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                    const std::vector<double>& x) {
    return ambient_route(spec, pool, f, x);
}

double extension_independence_residual(const ConformalOperatorSpec& spec,
                                       ExprPool& pool, ExprId f, ExprId g,
                                       const std::vector<std::vector<double>>& samples) {
    Density fd{f, spec.weight, spec.ctx.n()};
    ExprId lifted = density_to_ambient(pool, fd);
    Density gd{g, spec.weight - 2.0, spec.ctx.n()};
    ExprId perturbed = perturb_extension(pool, lifted, gd);
    AmbientRoute base(spec, pool, lifted, true);
    AmbientRoute other(spec, pool, perturbed, true);
    double worst = 0.0;
    for (const auto& x : samples) {
        double a = base.eval(x);
        double b = other.eval(x);
        worst = std::max(worst, std::abs(b - a) / std::max(1.0, std::abs(a)));
    }
    return worst;
}

double cross_validate(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                      const std::vector<std::vector<double>>& samples) {
    AmbientRoute route_b(spec, pool, f);
    double worst = 0.0;
    for (const auto& x : samples) {
        double a = chart_operator(spec, pool, f, x);
        double b = route_b.eval(x);
        worst = std::max(worst, std::abs(b - a) / std::max(1.0, std::abs(a)));
    }
    return worst;
}

ExprId chart_denominator_expr(ExprPool& pool, const Root& alpha, int n) {
    // D = alpha0 (1 - |x|^2/2) + sum alpha_i x_i
    ExprId norm2 = pool.zero();
    for (int i = 0; i < n; ++i) norm2 = pool.add(norm2, pool.ipow(pool.var(i), 2));
    ExprId D = pool.mul(pool.constant(alpha.vec()[0]),
                        pool.sub(pool.one(),
                                 pool.mul(pool.constant(Exact(make_rat(1, 2))), norm2)));
    for (int i = 0; i < n; ++i)
        D = pool.add(D, pool.mul(pool.constant(alpha.vec()[i + 1]), pool.var(i)));
    // J = 1 - (2 alpha0/<alpha,alpha>) D
    Exact factor = Exact(2) * alpha.vec()[0] / alpha.norm();
    return pool.sub(pool.one(), pool.mul(pool.constant(factor), D));
}

ExprId pullback_density_expr(ExprPool& pool, const Root& alpha, ExprId f, int n,
                             double w) {
    ExprId norm2 = pool.zero();
    for (int i = 0; i < n; ++i) norm2 = pool.add(norm2, pool.ipow(pool.var(i), 2));
    ExprId D = pool.mul(pool.constant(alpha.vec()[0]),
                        pool.sub(pool.one(),
                                 pool.mul(pool.constant(Exact(make_rat(1, 2))), norm2)));
    for (int i = 0; i < n; ++i)
        D = pool.add(D, pool.mul(pool.constant(alpha.vec()[i + 1]), pool.var(i)));
    ExprId J = chart_denominator_expr(pool, alpha, n);
    std::vector<ExprId> sigma(n);
    for (int i = 0; i < n; ++i) {
        Exact c = Exact(2) * alpha.vec()[i + 1] / alpha.norm();
        sigma[i] = pool.div(pool.sub(pool.var(i), pool.mul(pool.constant(c), D)), J);
    }
    return pool.mul(pool.rpow(J, w), pool.substitute(f, sigma));
}

std::vector<Mat<double>> group_to_double(const ReflectionGroup& g) {
    std::vector<Mat<double>> out;
    for (const auto& m : g.elements()) {
        Mat<double> d(m.n);
        for (std::size_t i = 0; i < m.n; ++i)
            for (std::size_t j = 0; j < m.n; ++j) d(i, j) = m(i, j).to_double();
        out.push_back(std::move(d));
    }
    return out;
}

bool regular_chart_point(const RootSystem& rs, const std::vector<Mat<double>>& group,
                         const std::vector<double>& x, double margin) {
    AmbientVector<double> X = lift_chart_point(x);
    std::size_t nv = X.size();
    for (const auto& g : group) {
        AmbientVector<double> Y = g * X;
        if (Y[0] <= margin) return false;
        for (std::size_t idx : rs.positive()) {
            const Root& alpha = rs.roots()[idx];
            double ell = Y[0] * alpha.coord_d(nv - 1) + Y[nv - 1] * alpha.coord_d(0);
            for (std::size_t i = 1; i + 1 < nv; ++i) ell += Y[i] * alpha.coord_d(i);
            if (std::abs(ell) <= margin) return false;
        }
    }
    return true;
}

std::vector<std::vector<double>> sample_regular_points(
    const RootSystem& rs, const std::vector<Mat<double>>& group, int count, Rng& rng,
    double margin, double lo, double hi) {
    std::vector<std::vector<double>> out;
    long tries = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++tries > 400L * count + 10000)
            throw std::runtime_error("regular-point sampling stalled; widen the box "
                                     "or lower the margin");
        auto x = rng.point(rs.n(), lo, hi);
        if (regular_chart_point(rs, group, x, margin)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace confdunkl
