#pragma once

// Exact sparse multivariate polynomials over Q(sqrt2) in the n+2 ambient
// variables, including the exact division by linear forms that turns the
// Dunkl difference quotients into polynomials.

#include "confdunkl/ambient.hpp"
#include "confdunkl/rng.hpp"
#include "confdunkl/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace confdunkl {

// Exponent multi-index; length = number of variables.
using Mono = std::vector<std::uint8_t>;

struct LinearDivision;

class MultiPoly {
  public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, Exact c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, Mono m, Exact c);
    // the linear form sum_a coeff[a] * X_a
    static MultiPoly linear_form(const std::vector<Exact>& coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total degree; -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Exact>& terms() const { return terms_; }

    // true iff all terms share one total degree (vacuously true for 0)
    bool is_homogeneous(int* deg = nullptr) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { l += r; return l; }
    friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { l -= r; return l; }
    friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);

    MultiPoly scaled(const Exact& s) const;
    void add_scaled(const MultiPoly& o, const Exact& s);  // *this += s * o

    // d/dX_var
    MultiPoly partial(int var) const;

    // (p o M)(X) = p(M X) for a linear map M
    MultiPoly compose_linear(const Mat<Exact>& m) const;

    // Euler operator sum_a X_a d/dX_a; on homogeneous p of degree d gives d*p.
    MultiPoly euler() const;

    // division by the homogeneous linear form ell (coefficient vector);
    // p = ell * quotient + remainder with remainder free of the pivot variable
    LinearDivision divmod_linear(const std::vector<Exact>& ell) const;
    // throws std::domain_error mentioning the remainder when not divisible
    MultiPoly divide_by_linear(const std::vector<Exact>& ell) const;

    template <class S>
    S eval(const std::vector<S>& x) const {
        S acc(0);
        for (const auto& [m, c] : terms_) {
            S t = convert<S>(c);
            for (int v = 0; v < nvars_; ++v)
                for (int e = 0; e < m[v]; ++e) t = t * x[v];
            acc = acc + t;
        }
        return acc;
    }

    bool operator==(const MultiPoly&) const = default;

    std::string to_string() const;

  private:
    template <class S>
    static S convert(const Exact& c) {
        if constexpr (std::is_same_v<S, Exact>)
            return c;
        else
            return S(c.to_double());
    }

    void insert(const Mono& m, const Exact& c);

    int nvars_;
    std::map<Mono, Exact> terms_;  // canonical order, no zero coefficients
};

struct LinearDivision {
    MultiPoly quotient;
    MultiPoly remainder;
    bool exact = false;
};

// <alpha, X> as a polynomial: the linear form with coefficients G * alpha.
MultiPoly pairing_form(const AmbientVector<Exact>& alpha);

// <X, X> as a polynomial: 2 X^0 X^inf + sum_i (X^i)^2.
MultiPoly norm_form(int nvars);

// monomials of total degree <= degmax (lexicographic order)
std::vector<Mono> monomials_up_to(int nvars, int degmax);

// random sparse polynomial for property tests
MultiPoly random_poly(Rng& rng, int nvars, int degmax, int nterms);

}  // namespace confdunkl
