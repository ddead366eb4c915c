#pragma once

// Expression-tree calculus for smooth functions on the ambient space and the
// chart: hash-consed immutable DAG, symbolic derivatives, substitution,
// pullback by affine maps, and evaluation over double, exact and
// second-order dual scalars.

#include "confdunkl/ambient.hpp"
#include "confdunkl/dunkl.hpp"
#include "confdunkl/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace confdunkl {

using ExprId = std::int32_t;

enum class ExprKind : std::uint8_t {
    Constant,
    Var,
    Add,
    Mul,
    Div,
    IntPow,
    RealPow,  // base restricted positive at evaluation
    Exp,
    Affine,   // composition with an affine map: e(A x + b)
};

struct ExprNode {
    ExprKind kind;
    ExprId a = -1, b = -1;
    int var = -1;       // Var
    int map = -1;       // Affine
    int ipow = 0;       // IntPow exponent
    double rpow = 0.0;  // RealPow exponent
    bool exact_const = true;
    Exact cval;         // Constant (exact)
    double dval = 0.0;  // Constant (floating); also cached double of cval
};

struct AffineMap {
    Mat<Exact> linear;
    std::vector<Exact> offset;
    Mat<double> linear_d;
    std::vector<double> offset_d;
};

class ExprPool {
  public:
    explicit ExprPool(std::size_t max_nodes = 4000000) : max_nodes_(max_nodes) {}

    ExprId constant(const Exact& c);
    ExprId constant_d(double v);  // floating constant; exact evaluation rejects it
    ExprId var(int index);
    ExprId add(ExprId x, ExprId y);
    ExprId sub(ExprId x, ExprId y);
    ExprId mul(ExprId x, ExprId y);
    ExprId div(ExprId x, ExprId y);
    ExprId neg(ExprId x);
    ExprId ipow(ExprId x, int k);
    ExprId rpow(ExprId x, double w);  // integral w becomes ipow
    ExprId expn(ExprId x);
    ExprId affine(ExprId x, Mat<Exact> linear, std::vector<Exact> offset);
    ExprId affine_linear(ExprId x, const Mat<Exact>& linear);

    ExprId zero() { return constant(Exact(0)); }
    ExprId one() { return constant(Exact(1)); }

    // sum of coeff_i * var(i) + constant
    ExprId linear_combination(const std::vector<Exact>& coeff, const Exact& cst);

    // symbolic d/d var; memoised
    ExprId derivative(ExprId x, int var);

    // replace var(i) by repl[i] everywhere
    ExprId substitute(ExprId x, const std::vector<ExprId>& repl);

    const ExprNode& node(ExprId id) const { return nodes_[id]; }
    const AffineMap& map(int idx) const { return maps_[idx]; }
    std::size_t size() const { return nodes_.size(); }

    template <class S>
    S eval(ExprId id, const std::vector<S>& point) const;

    std::string to_string(ExprId id) const;

  private:
    ExprId intern(ExprNode n);
    int intern_map(Mat<Exact> linear, std::vector<Exact> offset);

    template <class S>
    struct EvalCtx;
    template <class S>
    S eval_rec(ExprId id, const std::vector<S>& point, EvalCtx<S>& ctx) const;

    std::size_t max_nodes_;
    std::vector<ExprNode> nodes_;
    std::vector<AffineMap> maps_;
    std::map<std::string, ExprId> intern_;
    std::map<std::pair<ExprId, int>, ExprId> deriv_memo_;
};

// f(x_1..x_n) together with a conformal weight.
struct Density {
    ExprId f = -1;
    double weight = 0.0;
    int n = 0;
};

// iota(f)(X) = (X^0)^w f(X^1/X^0 .. X^n/X^0); homogeneous of degree w,
// evaluation restricted to X^0 > 0 (non-integer weights).
ExprId density_to_ambient(ExprPool& pool, const Density& d);

// e + <X,X> * (ambient lift of g); unchanged on the cone
ExprId perturb_extension(ExprPool& pool, ExprId e, const Density& g);

// <X,X> as an expression over the ambient variables
ExprId norm_expr(ExprPool& pool, int n);

// evaluate at X = (1, x, -|x|^2/2): a chart function of x_1..x_n
ExprId restrict_to_cone(ExprPool& pool, ExprId e, int n);

// Delta e + sum_{alpha in R+} k(alpha) ( 2 <grad e, alpha>/<alpha,X>
//            - <alpha,alpha>(e - e o R_alpha)/<alpha,X>^2 )
// as a new expression; derivatives symbolic, reflections as affine nodes.
ExprId ambient_dunkl_laplacian_expr(ExprPool& pool, const DunklContext& ctx, ExprId e);

// plain chart Laplacian sum_i d^2/dx_i^2
ExprId chart_laplacian_expr(ExprPool& pool, ExprId f, int n);

// MultiPoly -> expression over the same variables (for exact cross-checks)
ExprId poly_to_expr(ExprPool& pool, const MultiPoly& p);

}  // namespace confdunkl
