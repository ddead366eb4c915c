#include "confdunkl/dunkl.hpp"

#include <sstream>

namespace confdunkl {

DunklOps::DunklOps(DunklContext ctx) : ctx_(std::move(ctx)) {
    const RootSystem& rs = *ctx_.rs;
    nv_ = rs.nvars();
    for (std::size_t idx : rs.positive()) {
        const Root& alpha = rs.roots()[idx];
        refl_.push_back(reflection_matrix(alpha));
        std::vector<Exact> ell(nv_, Exact(0));
        ell[0] = alpha.vec().xinf();
        ell[nv_ - 1] = alpha.vec().x0();
        for (int i = 1; i + 1 < nv_; ++i) ell[i] = alpha.vec()[i];
        ell_.push_back(std::move(ell));
        kpos_.push_back(ctx_.k.root_value(rs, idx));
        normpos_.push_back(alpha.norm());
        apos_.push_back(alpha.vec());
    }
    dcache_.resize(apos_.size());
    quarter_norm_neg_ = norm_form(nv_).scaled(Exact(make_rat(-1, 4)));
    h_const_ = Exact(make_rat(nv_, 2)) + ctx_.gamma_k;
}

const MultiPoly& DunklOps::divided_difference(std::size_t pos_idx, const Mono& m) const {
    {
        std::scoped_lock lock(mu_);
        auto it = dcache_[pos_idx].find(m);
        if (it != dcache_[pos_idx].end()) return it->second;
    }
    MultiPoly mono = MultiPoly::monomial(nv_, m, Exact(1));
    MultiPoly diff = mono - mono.compose_linear(refl_[pos_idx]);
    MultiPoly q;
    try {
        q = diff.divide_by_linear(ell_[pos_idx]);
    } catch (const std::domain_error& e) {
        throw std::logic_error(
            std::string("dunkl difference quotient is not polynomial "
                        "(internal invariant broken): ") + e.what());
    }
    std::scoped_lock lock(mu_);
    return dcache_[pos_idx].emplace(m, std::move(q)).first->second;
}

MultiPoly DunklOps::dunkl_impl(const std::vector<Exact>& xi, const MultiPoly& p) const {
    // directional derivative: sum_a xi_a d_a p
    MultiPoly out(nv_);
    for (int a = 0; a < nv_; ++a)
        if (!xi[a].is_zero()) out.add_scaled(p.partial(a), xi[a]);
    // difference terms
    for (std::size_t r = 0; r < apos_.size(); ++r) {
        if (kpos_[r].is_zero()) continue;
        // <alpha, xi> with the coefficient vector of <alpha, X>
        Exact axi(0);
        for (int a = 0; a < nv_; ++a) axi += ell_[r][a] * xi[a];
        if (axi.is_zero()) continue;
        Exact w = kpos_[r] * axi;
        for (const auto& [m, c] : p.terms())
            out.add_scaled(divided_difference(r, m), w * c);
    }
    return out;
}

MultiPoly DunklOps::dunkl(const AmbientVector<Exact>& xi, const MultiPoly& p) const {
    if (static_cast<int>(xi.size()) != nv_)
        throw std::invalid_argument("direction vector has wrong dimension");
    return dunkl_impl(xi.c, p);
}

MultiPoly DunklOps::dunkl_dir(int a, const MultiPoly& p) const {
    std::vector<Exact> xi(nv_, Exact(0));
    xi[a] = Exact(1);
    return dunkl_impl(xi, p);
}

const MultiPoly& DunklOps::laplacian_of_monomial(const Mono& m) const {
    {
        std::scoped_lock lock(mu_);
        auto it = lapcache_.find(m);
        if (it != lapcache_.end()) return it->second;
    }
    MultiPoly mono = MultiPoly::monomial(nv_, m, Exact(1));
    // 2 T_0 T_inf + sum_i T_i T_i (inverse Gram of the standard form)
    MultiPoly acc = dunkl_dir(0, dunkl_dir(nv_ - 1, mono));
    acc += dunkl_dir(nv_ - 1, dunkl_dir(0, mono));
    for (int i = 1; i + 1 < nv_; ++i) acc += dunkl_dir(i, dunkl_dir(i, mono));
    std::scoped_lock lock(mu_);
    return lapcache_.emplace(m, std::move(acc)).first->second;
}

MultiPoly DunklOps::laplacian_sum(const MultiPoly& p) const {
    MultiPoly out(nv_);
    for (const auto& [m, c] : p.terms()) out.add_scaled(laplacian_of_monomial(m), c);
    return out;
}

MultiPoly DunklOps::laplacian_direct(const MultiPoly& p) const {
    // flat part 2 d0 dinf + sum_i di^2
    MultiPoly out = p.partial(0).partial(nv_ - 1).scaled(Exact(2));
    for (int i = 1; i + 1 < nv_; ++i) out += p.partial(i).partial(i);
    for (std::size_t r = 0; r < apos_.size(); ++r) {
        if (kpos_[r].is_zero()) continue;
        // <grad p, alpha> = sum_a alpha_a d_a p  (the metric cancels)
        MultiPoly dirderiv(nv_);
        for (int a = 0; a < nv_; ++a)
            if (!apos_[r][a].is_zero())
                dirderiv.add_scaled(p.partial(a), apos_[r][a]);
        MultiPoly ell_poly = MultiPoly::linear_form(ell_[r]);
        MultiPoly numerator = (ell_poly * dirderiv).scaled(Exact(2)) -
                              (p - p.compose_linear(refl_[r])).scaled(normpos_[r]);
        MultiPoly q = numerator.divide_by_linear(ell_[r]).divide_by_linear(ell_[r]);
        out.add_scaled(q, kpos_[r]);
    }
    return out;
}

MultiPoly DunklOps::sl2_E(const MultiPoly& p) const { return quarter_norm_neg_ * p; }

MultiPoly DunklOps::sl2_F(const MultiPoly& p) const { return laplacian_sum(p); }

MultiPoly DunklOps::sl2_H(const MultiPoly& p) const {
    MultiPoly out = p.scaled(h_const_);
    out += p.euler();
    return out;
}

MultiPoly DunklOps::ef_minus_h(const MultiPoly& p) const {
    return sl2_E(sl2_F(p)) - sl2_F(sl2_E(p)) - sl2_H(p);
}

MultiPoly DunklOps::he_minus_2e(const MultiPoly& p) const {
    return sl2_H(sl2_E(p)) - sl2_E(sl2_H(p)) - sl2_E(p).scaled(Exact(2));
}

MultiPoly DunklOps::hf_plus_2f(const MultiPoly& p) const {
    return sl2_H(sl2_F(p)) - sl2_F(sl2_H(p)) + sl2_F(p).scaled(Exact(2));
}

Sl2Report DunklOps::sl2_commutators(int degree_bound) const {
    Sl2Report rep;
    for (const Mono& m : monomials_up_to(nv_, degree_bound)) {
        MultiPoly p = MultiPoly::monomial(nv_, m, Exact(1));
        if (!ef_minus_h(p).is_zero()) rep.ef_minus_h_zero = false;
        if (!he_minus_2e(p).is_zero()) rep.he_minus_2e_zero = false;
        if (!hf_plus_2f(p).is_zero()) rep.hf_plus_2f_zero = false;
        ++rep.monomials_checked;
    }
    std::ostringstream os;
    os << "[E,F] - H " << (rep.ef_minus_h_zero ? "= 0" : "!= 0")
       << "; [H,E] - 2E " << (rep.he_minus_2e_zero ? "= 0" : "!= 0")
       << "; [H,F] + 2F " << (rep.hf_plus_2f_zero ? "= 0" : "!= 0")
       << " on " << rep.monomials_checked << " monomials";
    rep.detail = os.str();
    return rep;
}

MultiPoly DunklOps::equivariance_residual(const Mat<Exact>& g, const MultiPoly& p) const {
    return laplacian_sum(p.compose_linear(g)) - laplacian_sum(p).compose_linear(g);
}

MultiPoly DunklOps::commutativity_residual(const AmbientVector<Exact>& xi,
                                           const AmbientVector<Exact>& eta,
                                           const MultiPoly& p) const {
    return dunkl(xi, dunkl(eta, p)) - dunkl(eta, dunkl(xi, p));
}

}  // namespace confdunkl
