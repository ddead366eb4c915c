#pragma once

// The conformal Dunkl-Laplace operator on the chart: the explicit closed
// formula (route A, j = 1) and the ambient extend-apply-restrict
// construction (route B, any power j), the classical Dunkl oracle on R^n,
// and the extension-independence residual.

#include "confdunkl/chartexpr.hpp"
#include "confdunkl/dunkl.hpp"
#include "confdunkl/rng.hpp"

#include <string>
#include <vector>

namespace confdunkl {

// Evaluation hit a reflecting subsphere, the point at infinity, or left the
// positive-ray domain; names the offending root and denominator.
class SingularPointError : public std::domain_error {
  public:
    SingularPointError(std::size_t root_index, std::string denominator, double value,
                       const std::string& what)
        : std::domain_error(what),
          root_index(root_index),
          denominator(std::move(denominator)),
          value(value) {}

    std::size_t root_index;
    std::string denominator;  // "D_alpha" or "J_alpha"
    double value;
};

struct ConformalOperatorSpec {
    DunklContext ctx;
    int j = 1;
    double weight = 0.0;
    bool critical = true;

    // w = -n/2 + j - gamma_k
    static double critical_weight(const DunklContext& ctx, int j) {
        return -ctx.n() / 2.0 + j - ctx.gamma_k.to_double();
    }
    static ConformalOperatorSpec at_critical_weight(DunklContext ctx, int j) {
        ConformalOperatorSpec s;
        s.weight = critical_weight(ctx, j);
        s.ctx = std::move(ctx);
        s.j = j;
        s.critical = true;
        return s;
    }
    static ConformalOperatorSpec at_weight(DunklContext ctx, int j, double w) {
        ConformalOperatorSpec s;
        s.weight = w;
        s.ctx = std::move(ctx);
        s.j = j;
        s.critical = false;
        return s;
    }
};

struct ChartOpDiagnostics {
    double min_abs_pairing = 1e300;  // min |D_alpha(x)| over the roots used
    double min_denominator = 1e300;  // min J_alpha(x)
    bool conditioning_warning = false;
};

// Route A, j = 1: Delta f + sum_{alpha in R+} k(alpha) (
//   (2/D_alpha) (alpha0 (w - sum x_j d_j) + sum alpha_i d_i) f
//   - (<alpha,alpha>/D_alpha^2) (f(x) - J_alpha^w f(sigma_alpha x)) )
// at the critical weight w = -n/2 - gamma_k + 1.  Derivatives are
// second-order forward duals; margin violations set the conditioning flag.
double chart_operator(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                      const std::vector<double>& x,
                      ChartOpDiagnostics* diag = nullptr, double margin = 0.1);

// Independent oracle: the classical Dunkl-Laplacian on R^n for euclidean
// roots (linear reflections, symbolic derivatives).
struct EuclideanRoot {
    std::vector<double> alpha;  // in R^n
    double k = 0.0;
};
double classical_dunkl_chart(ExprPool& pool, const std::vector<EuclideanRoot>& pos,
                             ExprId f, const std::vector<double>& x);

// positive roots of an all-euclidean system (alpha0 = 0) with their k values;
// throws if any root has alpha0 != 0
std::vector<EuclideanRoot> euclidean_positive_roots(const DunklContext& ctx);

// Route B: f -> tilde f -> Delta_k^j -> restrict; built once, evaluated often.
class AmbientRoute {
  public:
    // extension of (X^0)^w f(X/X^0) by rho-independence
    AmbientRoute(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f);
    // explicit ambient extension (for the extension-independence test)
    AmbientRoute(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId ambient,
                 bool is_ambient_extension);

    double eval(const std::vector<double>& x) const;
    ExprId restricted() const { return restricted_; }

  private:
    void build(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId ambient);
    ExprPool* pool_ = nullptr;
    ExprId restricted_ = -1;
};

double ambient_route(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                     const std::vector<double>& x);

// j >= 2 powers go through route B only
double higher_power(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                    const std::vector<double>& x);

// max over samples of |route(f + <X,X> g) - route(f)| / max(1, |route(f)|)
double extension_independence_residual(const ConformalOperatorSpec& spec,
                                       ExprPool& pool, ExprId f, ExprId g,
                                       const std::vector<std::vector<double>>& samples);

// max over samples of |chart_operator - ambient_route| / max(1, |value|)
double cross_validate(const ConformalOperatorSpec& spec, ExprPool& pool, ExprId f,
                      const std::vector<std::vector<double>>& samples);

// the weight-w pullback of a density along the chart reflection of alpha:
// J_alpha(x)^w f(sigma_alpha x), as an expression over the chart variables
ExprId pullback_density_expr(ExprPool& pool, const Root& alpha, ExprId f, int n,
                             double w);

// J_alpha as a chart expression
ExprId chart_denominator_expr(ExprPool& pool, const Root& alpha, int n);

// group elements as double matrices (for fast margin checks)
std::vector<Mat<double>> group_to_double(const ReflectionGroup& g);

// true when the lifted point and its whole group orbit keep X^0 and every
// root pairing at least `margin` away from the singular sets
bool regular_chart_point(const RootSystem& rs, const std::vector<Mat<double>>& group,
                         const std::vector<double>& x, double margin);

// rejection-samples `count` regular points in [lo, hi]^n
std::vector<std::vector<double>> sample_regular_points(
    const RootSystem& rs, const std::vector<Mat<double>>& group, int count, Rng& rng,
    double margin, double lo, double hi);

}  // namespace confdunkl
