#include "confdunkl/scalar.hpp"

#include <functional>

namespace confdunkl {

Rat rat_from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(t.substr(0, slash), 10) != 0 ||
            den.set_str(t.substr(slash + 1), 10) != 0 || den == 0)
            throw std::invalid_argument("bad rational literal: " + s);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

    auto dot = t.find('.');
    if (dot == std::string::npos) {
        mpz_class num;
        if (num.set_str(t, 10) != 0)
            throw std::invalid_argument("bad integer literal: " + s);
        return Rat(num);
    }

    // decimal: sign, integer part, fractional digits
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    std::size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad decimal literal: " + s);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
        throw std::invalid_argument("bad decimal literal: " + s);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Exact Exact::from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");

    // forms: RAT, RAT'r2', RAT(+|-)RAT'r2'
    auto r2 = t.find("r2");
    if (r2 == std::string::npos) return Exact(rat_from_string(t));
    if (r2 + 2 != t.size())
        throw std::invalid_argument("bad scalar literal: " + s);

    std::string head = t.substr(0, r2);
    if (!head.empty() && head.back() == '*') head.pop_back();

    // split head into "a+b" / "a-b" at the last top-level sign (skip index 0)
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' &&
            std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string b = head.empty() || head == "+" ? "1" : head == "-" ? "-1" : head;
        return Exact(Rat(0), rat_from_string(b));
    }
    std::string a = head.substr(0, split);
    std::string b = head.substr(split);  // includes sign
    if (b == "+" ) b = "1";
    if (b == "-") b = "-1";
    return Exact(rat_from_string(a), rat_from_string(b));
}

bool Exact::is_integer() const { return b_ == 0 && a_.get_den() == 1; }

int Exact::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2 b^2
    Rat cmp = a_ * a_ - 2 * b_ * b_;
    int sc = sgn(cmp);
    // sc == 0 impossible for nonzero a, b (sqrt(2) irrational)
    return sc > 0 ? sa : sb;
}

Exact& Exact::operator*=(const Exact& o) {
    Rat a = a_ * o.a_ + 2 * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Exact Exact::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2)");
    // 1/(a + b r2) = (a - b r2)/(a^2 - 2 b^2)
    Rat den = a_ * a_ - 2 * b_ * b_;
    return Exact(a_ / den, -b_ / den);
}

std::string Exact::to_string() const {
    if (is_rational()) return rat_to_string(a_);
    std::string bs = rat_to_string(b_) + "r2";
    if (a_ == 0) return bs;
    return rat_to_string(a_) + (sgn(b_) > 0 ? "+" : "") + bs;
}

std::size_t Exact::hash() const {
    std::hash<std::string> h;
    return h(to_string());
}

}  // namespace confdunkl
