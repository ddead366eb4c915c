#pragma once

// Roots in R^{n+1,1}, root-system validation, reflection-group generation,
// orbits, multiplicity functions, the embedded B systems, hyperplane bases,
// reflecting subspheres and the rational chart reflection.

#include "confdunkl/ambient.hpp"
#include "confdunkl/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace confdunkl {

// A root alpha = (a0, a1..an, a0): first and last coordinates equal, which
// places it in the euclidean subspace, and <alpha,alpha> > 0 automatically
// for any nonzero such vector.
class Root {
  public:
    explicit Root(AmbientVector<Exact> v);

    const AmbientVector<Exact>& vec() const { return v_; }
    const Exact& norm() const { return norm_; }  // <alpha, alpha>
    const Exact& alpha0() const { return v_[0]; }
    int chart_dim() const { return v_.chart_dim(); }

    double coord_d(std::size_t i) const { return vd_[i]; }
    double norm_d() const { return norm_d_; }

    template <class S>
    S coord_as(std::size_t i) const {
        if constexpr (std::is_same_v<S, double>)
            return vd_[i];
        else
            return v_[i];
    }
    template <class S>
    S norm_as() const {
        if constexpr (std::is_same_v<S, double>)
            return norm_d_;
        else
            return norm_;
    }

    bool operator==(const Root& o) const { return v_ == o.v_; }

  private:
    AmbientVector<Exact> v_;
    Exact norm_;
    std::vector<double> vd_;
    double norm_d_;
};

// R_alpha X = X - 2 (<alpha,X>/<alpha,alpha>) alpha
AmbientVector<Exact> reflect(const Root& alpha, const AmbientVector<Exact>& X);
AmbientVector<double> reflect(const Root& alpha, const AmbientVector<double>& X);

// matrix of R_alpha in the standard basis
Mat<Exact> reflection_matrix(const Root& alpha);

struct ValidationReport;

class RootSystem {
  public:
    int n() const { return n_; }
    int nvars() const { return n_ + 2; }

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<std::size_t>& positive() const { return positive_; }
    const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
    std::size_t orbit_count() const { return orbits_.size(); }
    int orbit_of(std::size_t root_idx) const { return orbit_of_[root_idx]; }
    const std::string& tag(std::size_t root_idx) const { return tags_[root_idx]; }

    // positive half with the opposite sign convention, for invariance tests
    std::vector<std::size_t> negative() const;

  private:
    friend ValidationReport validate_root_system(std::vector<Root> roots);
    friend RootSystem build_B(int n);
    RootSystem() = default;

    int n_ = 0;
    std::vector<Root> roots_;           // sorted canonically
    std::vector<std::size_t> positive_; // lexicographically positive half
    std::vector<std::vector<std::size_t>> orbits_;
    std::vector<int> orbit_of_;
    std::vector<std::string> tags_;
};

struct ValidationReport {
    std::optional<RootSystem> system;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty() && system.has_value(); }
};

// Checks the two root-system axioms exactly and computes orbits and the
// positive system; on failure lists every violated axiom instance.
ValidationReport validate_root_system(std::vector<Root> roots);
// convenience: builds Roots first, collecting construction errors
ValidationReport validate_root_vectors(const std::vector<AmbientVector<Exact>>& vecs);

// multiplicity function k: [R] -> Q, constant on orbits by construction
class MultiplicityFunction {
  public:
    static MultiplicityFunction constant(const RootSystem& rs, Exact v);
    // values per orbit; a shorter list is cycled across orbits
    static MultiplicityFunction per_orbit(const RootSystem& rs, std::vector<Exact> v);

    const Exact& orbit_value(int orbit) const { return k_.at(orbit); }
    const Exact& root_value(const RootSystem& rs, std::size_t root_idx) const {
        return k_.at(rs.orbit_of(root_idx));
    }
    std::size_t orbit_count() const { return k_.size(); }
    bool is_zero() const;

  private:
    std::vector<Exact> k_;
};

// gamma_k = sum over positive roots of k(alpha)
Exact gamma(const RootSystem& rs, const MultiplicityFunction& k);

// finite reflection group as explicit matrices, closed under composition
class ReflectionGroup {
  public:
    ReflectionGroup(std::vector<Mat<Exact>> elements, std::vector<Mat<Exact>> generators)
        : elements_(std::move(elements)), generators_(std::move(generators)) {}

    const std::vector<Mat<Exact>>& elements() const { return elements_; }
    const std::vector<Mat<Exact>>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

  private:
    std::vector<Mat<Exact>> elements_;
    std::vector<Mat<Exact>> generators_;
};

// breadth-first closure of the generating reflections; throws when the
// element count exceeds cap
ReflectionGroup generate_group(const RootSystem& rs, std::size_t cap = 1000000);

// Basis of the reflecting hyperplane H_alpha: n+1 vectors pairing to zero
// with alpha.  For alpha0 != 0 this is the explicit rational-span basis; for
// alpha0 = 0 that basis degenerates and {e_0, e_inf} plus a euclidean
// complement basis of (a1..an) is returned instead.
std::vector<AmbientVector<Exact>> hyperplane_basis(const Root& alpha);

// The reflecting subsphere in the chart: c0 + sum lin_i x_i + c2 |x|^2 = 0.
struct SubsphereQuadric {
    Exact c0;
    std::vector<Exact> lin;
    Exact c2;

    double eval(const std::vector<double>& x) const;
    Exact eval_exact(const std::vector<Exact>& x) const;
};
SubsphereQuadric subsphere_quadric(const Root& alpha);

// D_alpha(x) = alpha0 (1 - |x|^2/2) + sum alpha_i x_i  ( = <alpha, X(x)> )
template <class S>
S chart_pairing(const Root& alpha, const std::vector<S>& x) {
    int n = static_cast<int>(x.size());
    S norm2(0);
    for (const S& xi : x) norm2 = norm2 + xi * xi;
    S d = alpha.coord_as<S>(0) * (S(1) - norm2 / S(2));
    for (int i = 0; i < n; ++i) d = d + alpha.coord_as<S>(i + 1) * x[i];
    return d;
}

// denominator of the rational chart reflection
template <class S>
S chart_denominator(const Root& alpha, const std::vector<S>& x) {
    S d = chart_pairing(alpha, x);
    return S(1) - S(2) * alpha.coord_as<S>(0) / alpha.norm_as<S>() * d;
}

// The induced rational reflection of the chart.  Throws std::domain_error
// when the denominator vanishes (the image is the point at infinity).
template <class S>
std::vector<S> chart_reflection(const Root& alpha, const std::vector<S>& x) {
    int n = static_cast<int>(x.size());
    S d = chart_pairing(alpha, x);
    S norm = alpha.norm_as<S>();
    S j = S(1) - S(2) * alpha.coord_as<S>(0) / norm * d;
    if (j == S(0))
        throw std::domain_error(
            "chart reflection maps the point to the point at infinity");
    std::vector<S> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = (x[i] - S(2) * alpha.coord_as<S>(i + 1) / norm * d) / j;
    return out;
}

// ---- builtin systems ----

// {+-e1} placed with alpha0 = 0 in R^{n+1,1}
RootSystem build_A1(int n);
// B_rank on the euclidean chart directions e1..e_rank (alpha0 = 0); rank <= n
RootSystem build_euclidean_B(int rank, int n);
// B_rank on the directions {u0 = (e0+e_inf)/sqrt2, e1..e_{rank-1}}; rank-1 <= n
RootSystem build_embedded_B(int rank, int n);
// the full example system B_{n+1} = B_n union S with tags "B_n" / "S"
RootSystem build_B(int n);

}  // namespace confdunkl
