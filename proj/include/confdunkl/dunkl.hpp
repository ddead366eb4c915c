#pragma once

// Ambient Dunkl operators acting exactly on polynomials: T_xi, the
// Dunkl-Laplacian by two independent constructions, the sl(2) triple and the
// equivariance / commutativity residuals.

#include "confdunkl/multipoly.hpp"
#include "confdunkl/roots.hpp"

#include <memory>
#include <mutex>
#include <string>

namespace confdunkl {

struct DunklContext {
    std::shared_ptr<const RootSystem> rs;
    MultiplicityFunction k;
    Exact gamma_k;

    static DunklContext make(RootSystem system, MultiplicityFunction mult) {
        DunklContext ctx;
        ctx.rs = std::make_shared<const RootSystem>(std::move(system));
        ctx.gamma_k = gamma(*ctx.rs, mult);
        ctx.k = std::move(mult);
        return ctx;
    }

    int n() const { return rs->n(); }
    int nvars() const { return rs->nvars(); }
};

struct Sl2Report {
    bool ef_minus_h_zero = true;   // [E,F] - H  == 0
    bool he_minus_2e_zero = true;  // [H,E] - 2E == 0
    bool hf_plus_2f_zero = true;   // [H,F] + 2F == 0
    int monomials_checked = 0;
    std::string detail;  // the relations established by the computation
};

// Operator engine bound to one context.  Applications are pure; the
// memoisation tables behind them are mutex guarded, so one instance can be
// shared across threads.
class DunklOps {
  public:
    explicit DunklOps(DunklContext ctx);

    const DunklContext& ctx() const { return ctx_; }

    // T_xi(k) p = d_xi p + sum_{alpha in R+} k(alpha) <alpha,xi>
    //                      (p - p o R_alpha)/<alpha,X>
    MultiPoly dunkl(const AmbientVector<Exact>& xi, const MultiPoly& p) const;
    MultiPoly dunkl_dir(int a, const MultiPoly& p) const;  // T_{e_a}

    // sum_{a,b} G^{ab} T_a T_b with the inverse Gram matrix of the form
    MultiPoly laplacian_sum(const MultiPoly& p) const;

    // flat Laplacian plus, per positive root,
    //   k(alpha) ( 2 <grad p, alpha>/<alpha,X>
    //              - <alpha,alpha> (p - p o R_alpha)/<alpha,X>^2 ),
    // realised through exact linear divisions.  The <alpha,alpha> weight on
    // the difference term is what makes the expression independent of the
    // root normalisation and exactly equal to laplacian_sum.
    MultiPoly laplacian_direct(const MultiPoly& p) const;

    MultiPoly sl2_E(const MultiPoly& p) const;  // multiplication by -<X,X>/4
    MultiPoly sl2_F(const MultiPoly& p) const;  // = laplacian_sum
    MultiPoly sl2_H(const MultiPoly& p) const;  // (n+2)/2 + gamma_k + Euler

    MultiPoly ef_minus_h(const MultiPoly& p) const;
    MultiPoly he_minus_2e(const MultiPoly& p) const;
    MultiPoly hf_plus_2f(const MultiPoly& p) const;

    // checks the three relations on every monomial of degree <= degree_bound
    Sl2Report sl2_commutators(int degree_bound) const;

    // Delta_k(p o g) - (Delta_k p) o g; zero for every group element
    MultiPoly equivariance_residual(const Mat<Exact>& g, const MultiPoly& p) const;

    // T_xi T_eta p - T_eta T_xi p; zero always
    MultiPoly commutativity_residual(const AmbientVector<Exact>& xi,
                                     const AmbientVector<Exact>& eta,
                                     const MultiPoly& p) const;

  private:
    // (m - m o R_alpha)/<alpha,X>, memoised per positive root and monomial
    const MultiPoly& divided_difference(std::size_t pos_idx, const Mono& m) const;
    const MultiPoly& laplacian_of_monomial(const Mono& m) const;
    MultiPoly dunkl_impl(const std::vector<Exact>& xi_coords, const MultiPoly& p) const;

    DunklContext ctx_;
    int nv_;
    std::vector<Mat<Exact>> refl_;             // reflection matrices, positive roots
    std::vector<std::vector<Exact>> ell_;      // <alpha, X> coefficient vectors
    std::vector<Exact> kpos_;                  // k(alpha)
    std::vector<Exact> normpos_;               // <alpha,alpha>
    std::vector<AmbientVector<Exact>> apos_;   // the positive roots themselves
    MultiPoly quarter_norm_neg_;               // -<X,X>/4
    Exact h_const_;                            // (n+2)/2 + gamma_k

    mutable std::mutex mu_;
    mutable std::vector<std::map<Mono, MultiPoly>> dcache_;
    mutable std::map<Mono, MultiPoly> lapcache_;
};

}  // namespace confdunkl
