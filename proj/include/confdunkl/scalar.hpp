#pragma once

// Scalar layer: exact arithmetic in the real quadratic field Q(sqrt(2)) on top
// of GMP rationals, plus second-order forward-mode dual numbers for the
// floating-point expression engine.
//
// The exact field is Q(sqrt(2)) rather than plain Q because the embedded
// B_{n+1} systems contain roots along the unit null-plane direction
// (e_0 + e_inf)/sqrt(2); their reflection matrices have entries in Q(sqrt(2)).
// Rational values are the b == 0 subfield and stay rational under arithmetic.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace confdunkl {

using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; comparisons need canonical form.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

// An element a + b*sqrt(2) of Q(sqrt(2)).
class Exact {
  public:
    Exact() : a_(0), b_(0) {}
    Exact(int v) : a_(v), b_(0) {}
    Exact(long v) : a_(v), b_(0) {}
    Exact(const Rat& a) : a_(a), b_(0) {}
    Exact(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Exact sqrt2() { return Exact(Rat(0), Rat(1)); }
    static Exact from_string(const std::string& s);

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt2_part() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integer() const;

    // Sign of the real number a + b*sqrt(2); exact (no floating point).
    int sign() const;

    Exact operator-() const { return Exact(Rat(-a_), Rat(-b_)); }
    Exact& operator+=(const Exact& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Exact& operator-=(const Exact& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Exact& operator*=(const Exact& o);
    Exact& operator/=(const Exact& o) { return *this *= o.inverse(); }

    friend Exact operator+(Exact l, const Exact& r) { l += r; return l; }
    friend Exact operator-(Exact l, const Exact& r) { l -= r; return l; }
    friend Exact operator*(Exact l, const Exact& r) { l *= r; return l; }
    friend Exact operator/(Exact l, const Exact& r) { l /= r; return l; }

    Exact inverse() const;  // throws std::domain_error on zero

    bool operator==(const Exact& o) const { return a_ == o.a_ && b_ == o.b_; }
    std::strong_ordering operator<=>(const Exact& o) const {
        int s = (*this - o).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const {
        return rat_to_double(a_) + rat_to_double(b_) * std::sqrt(2.0);
    }

    // "p/q" when rational, otherwise "a+b*r2" with rational a, b.
    std::string to_string() const;
    std::size_t hash() const;

  private:
    Rat a_, b_;
};

inline Exact abs(const Exact& x) { return x.sign() < 0 ? -x : x; }

// Second-order forward-mode dual number: value, first and second directional
// derivative along one seed direction.
struct Dual2 {
    double v = 0.0;
    double d = 0.0;
    double dd = 0.0;

    Dual2() = default;
    Dual2(double value) : v(value) {}
    Dual2(double value, double d1, double d2) : v(value), d(d1), dd(d2) {}

    Dual2 operator-() const { return {-v, -d, -dd}; }
    friend Dual2 operator+(const Dual2& a, const Dual2& b) {
        return {a.v + b.v, a.d + b.d, a.dd + b.dd};
    }
    friend Dual2 operator-(const Dual2& a, const Dual2& b) {
        return {a.v - b.v, a.d - b.d, a.dd - b.dd};
    }
    friend Dual2 operator*(const Dual2& a, const Dual2& b) {
        return {a.v * b.v, a.v * b.d + a.d * b.v,
                a.v * b.dd + 2.0 * a.d * b.d + a.dd * b.v};
    }
    friend Dual2 operator/(const Dual2& a, const Dual2& b) {
        return a * reciprocal(b);
    }
    static Dual2 reciprocal(const Dual2& b) {
        double iv = 1.0 / b.v;
        double d1 = -b.d * iv * iv;
        double d2 = (2.0 * b.d * b.d - b.v * b.dd) * iv * iv * iv;
        return {iv, d1, d2};
    }

    bool operator==(const Dual2&) const = default;
    auto operator<=>(const Dual2&) const = default;
};

inline Dual2 pow(const Dual2& u, double w) {
    double p2 = std::pow(u.v, w - 2.0);
    double p1 = p2 * u.v;
    double p0 = p1 * u.v;
    return {p0, w * p1 * u.d, w * (w - 1.0) * p2 * u.d * u.d + w * p1 * u.dd};
}

inline Dual2 exp(const Dual2& u) {
    double e = std::exp(u.v);
    return {e, e * u.d, e * (u.d * u.d + u.dd)};
}

}  // namespace confdunkl
