#pragma once

// The flat ambient space R^{n+1,1}: vectors, the signature-(n+1,1) pairing in
// the standard and tilde bases, and the null-cone-adapted coordinate system
// (t, x_1..x_n, rho).

#include "confdunkl/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace confdunkl {

// Ambient vector with coordinates (X^0, X^1..X^n, X^inf); size n+2.
template <class S>
struct AmbientVector {
    std::vector<S> c;

    AmbientVector() = default;
    explicit AmbientVector(std::size_t size) : c(size) {}
    AmbientVector(std::initializer_list<S> init) : c(init) {}
    explicit AmbientVector(std::vector<S> coords) : c(std::move(coords)) {}

    std::size_t size() const { return c.size(); }
    int chart_dim() const { return static_cast<int>(c.size()) - 2; }
    S& operator[](std::size_t i) { return c[i]; }
    const S& operator[](std::size_t i) const { return c[i]; }
    const S& x0() const { return c.front(); }
    const S& xinf() const { return c.back(); }

    bool operator==(const AmbientVector&) const = default;
};

template <class S>
AmbientVector<S> operator+(const AmbientVector<S>& a, const AmbientVector<S>& b) {
    AmbientVector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class S>
AmbientVector<S> operator-(const AmbientVector<S>& a, const AmbientVector<S>& b) {
    AmbientVector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class S>
AmbientVector<S> operator*(const S& s, const AmbientVector<S>& a) {
    AmbientVector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

// Dense square matrix, row major.
template <class S>
struct Mat {
    std::size_t n = 0;
    std::vector<S> a;

    Mat() = default;
    explicit Mat(std::size_t dim) : n(dim), a(dim * dim, S(0)) {}

    static Mat identity(std::size_t dim) {
        Mat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = S(1);
        return m;
    }

    S& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    bool operator==(const Mat&) const = default;
    auto operator<=>(const Mat&) const = default;

    friend Mat operator*(const Mat& l, const Mat& r) {
        Mat m(l.n);
        for (std::size_t i = 0; i < l.n; ++i)
            for (std::size_t k = 0; k < l.n; ++k) {
                const S& lik = l(i, k);
                if (lik == S(0)) continue;
                for (std::size_t j = 0; j < l.n; ++j) m(i, j) += lik * r(k, j);
            }
        return m;
    }

    friend AmbientVector<S> operator*(const Mat& m, const AmbientVector<S>& v) {
        AmbientVector<S> r(v.size());
        for (std::size_t i = 0; i < m.n; ++i) {
            S acc(0);
            for (std::size_t j = 0; j < m.n; ++j) acc += m(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }
};

// Rank over the exact field, by Gaussian elimination. Rows are the vectors.
int exact_rank(std::vector<std::vector<Exact>> rows);

enum class BasisMode { standard, tilde };

// The signature-(n+1,1) symmetric bilinear form on R^{n+1,1}.
//
// standard basis (e_0, e_1..e_n, e_inf):   <u,v> = u0 vinf + uinf v0 + sum ui vi
// tilde basis (t0, t1..tn, tinf):          <u,v> = u0 v0 + sum ui vi - uinf vinf
class BilinearForm {
  public:
    explicit BilinearForm(int n, BasisMode mode = BasisMode::standard)
        : n_(n), mode_(mode) {
        if (n < 1) throw std::invalid_argument("chart dimension must be >= 1");
    }

    int n() const { return n_; }
    int dim() const { return n_ + 2; }
    BasisMode mode() const { return mode_; }

    template <class S>
    S pair(const AmbientVector<S>& u, const AmbientVector<S>& v) const {
        check_dim(u.size());
        check_dim(v.size());
        S acc(0);
        if (mode_ == BasisMode::standard) {
            acc = u.c.front() * v.c.back() + u.c.back() * v.c.front();
            for (int i = 1; i <= n_; ++i) acc += u[i] * v[i];
        } else {
            acc = u.c.front() * v.c.front();
            for (int i = 1; i <= n_; ++i) acc += u[i] * v[i];
            acc -= u.c.back() * v.c.back();
        }
        return acc;
    }

    template <class S>
    Mat<S> gram() const {
        Mat<S> g(dim());
        if (mode_ == BasisMode::standard) {
            g(0, dim() - 1) = S(1);
            g(dim() - 1, 0) = S(1);
            for (int i = 1; i <= n_; ++i) g(i, i) = S(1);
        } else {
            for (int i = 0; i <= n_; ++i) g(i, i) = S(1);
            g(dim() - 1, dim() - 1) = S(-1);
        }
        return g;
    }

  private:
    void check_dim(std::size_t got) const {
        if (got != static_cast<std::size_t>(dim()))
            throw std::invalid_argument("ambient vector dimension mismatch");
    }

    int n_;
    BasisMode mode_;
};

template <class S>
S pair(const AmbientVector<S>& u, const AmbientVector<S>& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("ambient vector dimension mismatch");
    return BilinearForm(u.chart_dim()).pair(u, v);
}

// Change of basis to tilde coordinates; involves 1/sqrt(2), float only.
AmbientVector<double> to_tilde(const AmbientVector<double>& x);
AmbientVector<double> from_tilde(const AmbientVector<double>& x);

// Null-cone-adapted coordinates: t = X^0, x_i = X^i/X^0,
// rho = X^inf/X^0 + |x|^2_euclid / (2 (X^0)^2).
template <class S>
struct ConeCoords {
    S t{};
    std::vector<S> x;
    S rho{};
};

template <class S>
ConeCoords<S> to_cone_coords(const AmbientVector<S>& X) {
    if (X.size() < 3) throw std::invalid_argument("ambient vector too short");
    if (X.x0() == S(0))
        throw std::domain_error("point outside the chart-adapted region (X^0 = 0)");
    ConeCoords<S> cc;
    cc.t = X.x0();
    int n = X.chart_dim();
    cc.x.resize(n);
    S norm2(0);
    for (int i = 1; i <= n; ++i) {
        cc.x[i - 1] = X[i] / cc.t;
        norm2 += cc.x[i - 1] * cc.x[i - 1];
    }
    cc.rho = X.xinf() / cc.t + norm2 / S(2);
    return cc;
}

template <class S>
AmbientVector<S> from_cone_coords(const ConeCoords<S>& p) {
    int n = static_cast<int>(p.x.size());
    AmbientVector<S> X(n + 2);
    X[0] = p.t;
    S norm2(0);
    for (int i = 0; i < n; ++i) {
        X[i + 1] = p.t * p.x[i];
        norm2 += p.x[i] * p.x[i];
    }
    X[n + 1] = p.t * (p.rho - norm2 / S(2));
    return X;
}

// The chart point x lifted to the null cone: (1, x_1..x_n, -|x|^2/2).
template <class S>
AmbientVector<S> lift_chart_point(const std::vector<S>& x) {
    ConeCoords<S> cc;
    cc.t = S(1);
    cc.x = x;
    cc.rho = S(0);
    return from_cone_coords(cc);
}

// Jacobian of the chart map X -> (t, x, rho); row a, column b holds the
// coefficient of d/d(cone_b) in d/d(X^a). Requires t != 0.
template <class S>
Mat<S> chart_jacobian(const ConeCoords<S>& p) {
    if (p.t == S(0)) throw std::domain_error("chart_jacobian requires t != 0");
    int n = static_cast<int>(p.x.size());
    Mat<S> m(n + 2);
    S inv_t = S(1) / p.t;
    S norm2(0);
    for (int i = 0; i < n; ++i) norm2 += p.x[i] * p.x[i];
    // d/dX^0 = d/dt - (1/t) sum x_i d/dx_i - (1/t)(rho + |x|^2/2) d/drho
    m(0, 0) = S(1);
    for (int i = 0; i < n; ++i) m(0, i + 1) = S(0) - inv_t * p.x[i];
    m(0, n + 1) = S(0) - inv_t * (p.rho + norm2 / S(2));
    // d/dX^i = (1/t) d/dx_i + (x_i/t) d/drho
    for (int i = 0; i < n; ++i) {
        m(i + 1, i + 1) = inv_t;
        m(i + 1, n + 1) = p.x[i] * inv_t;
    }
    // d/dX^inf = (1/t) d/drho
    m(n + 1, n + 1) = inv_t;
    return m;
}

}  // namespace confdunkl
