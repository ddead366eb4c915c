#include "confdunkl/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace confdunkl {

void MultiPoly::insert(const Mono& m, const Exact& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(int nvars, Exact c) {
    MultiPoly p(nvars);
    p.insert(Mono(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    Mono m(nvars, 0);
    m[var] = 1;
    return monomial(nvars, m, Exact(1));
}

MultiPoly MultiPoly::monomial(int nvars, Mono m, Exact c) {
    MultiPoly p(nvars);
    p.insert(m, c);
    return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<Exact>& coeff) {
    MultiPoly p(static_cast<int>(coeff.size()));
    for (std::size_t a = 0; a < coeff.size(); ++a) {
        Mono m(coeff.size(), 0);
        m[a] = 1;
        p.insert(m, coeff[a]);
    }
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (auto e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

bool MultiPoly::is_homogeneous(int* deg) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (auto e : m) t += e;
        if (d == -1)
            d = t;
        else if (d != t)
            return false;
    }
    if (deg) *deg = d;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
    MultiPoly p(l.nvars_);
    Mono m(l.nvars_, 0);
    for (const auto& [ml, cl] : l.terms_)
        for (const auto& [mr, cr] : r.terms_) {
            for (int v = 0; v < l.nvars_; ++v) {
                int e = ml[v] + mr[v];
                if (e > 255)
                    throw std::overflow_error("monomial exponent exceeds 255");
                m[v] = static_cast<std::uint8_t>(e);
            }
            p.insert(m, cl * cr);
        }
    return p;
}

MultiPoly MultiPoly::scaled(const Exact& s) const {
    MultiPoly p(nvars_);
    if (s.is_zero()) return p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, s * c);
    return p;
}

void MultiPoly::add_scaled(const MultiPoly& o, const Exact& s) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : o.terms_) insert(m, s * c);
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        p.insert(d, Exact(static_cast<long>(m[var])) * c);
    }
    return p;
}

MultiPoly MultiPoly::compose_linear(const Mat<Exact>& mat) const {
    // cache of (row linear form)^e per variable
    std::vector<std::vector<MultiPoly>> pows(nvars_);
    auto power_of_row = [&](int a, int e) -> const MultiPoly& {
        auto& cache = pows[a];
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(nvars_, Exact(1)));
            std::vector<Exact> row(nvars_);
            for (int b = 0; b < nvars_; ++b) row[b] = mat(a, b);
            cache.push_back(MultiPoly::linear_form(row));
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };

    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(nvars_, c);
        for (int a = 0; a < nvars_; ++a)
            if (m[a] > 0) term = term * power_of_row(a, m[a]);
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::euler() const {
    MultiPoly p(nvars_);
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (auto e : m) d += e;
        p.insert(m, Exact(d) * c);
    }
    return p;
}

LinearDivision MultiPoly::divmod_linear(const std::vector<Exact>& ell) const {
    if (static_cast<int>(ell.size()) != nvars_)
        throw std::invalid_argument("linear form has wrong variable count");
    int pivot = -1;
    for (int a = 0; a < nvars_; ++a)
        if (!ell[a].is_zero()) {
            pivot = a;
            break;
        }
    if (pivot < 0) throw std::invalid_argument("division by the zero linear form");

    // View p as a polynomial in X_pivot with MultiPoly coefficients.
    std::map<int, MultiPoly> layers;
    for (const auto& [m, c] : terms_) {
        int k = m[pivot];
        Mono stripped = m;
        stripped[pivot] = 0;
        auto [it, unused] = layers.try_emplace(k, MultiPoly(nvars_));
        it->second.insert(stripped, c);
    }

    // tail = ell - c_pivot X_pivot
    std::vector<Exact> tail_coeffs = ell;
    tail_coeffs[pivot] = Exact(0);
    MultiPoly tail = MultiPoly::linear_form(tail_coeffs);
    Exact inv_cp = ell[pivot].inverse();

    LinearDivision res{MultiPoly(nvars_), MultiPoly(nvars_), false};
    int top = layers.empty() ? 0 : layers.rbegin()->first;
    Mono pm(nvars_, 0);
    for (int k = top; k >= 1; --k) {
        auto it = layers.find(k);
        if (it == layers.end() || it->second.is_zero()) continue;
        MultiPoly q = it->second.scaled(inv_cp);  // goes with X_pivot^(k-1)
        pm.assign(nvars_, 0);
        pm[pivot] = static_cast<std::uint8_t>(k - 1);
        res.quotient += MultiPoly::monomial(nvars_, pm, Exact(1)) * q;
        auto [jt, unused] = layers.try_emplace(k - 1, MultiPoly(nvars_));
        jt->second -= q * tail;
        layers.erase(k);
    }
    auto it = layers.find(0);
    if (it != layers.end()) res.remainder = it->second;
    res.exact = res.remainder.is_zero();
    return res;
}

MultiPoly MultiPoly::divide_by_linear(const std::vector<Exact>& ell) const {
    LinearDivision r = divmod_linear(ell);
    if (!r.exact)
        throw std::domain_error("polynomial not divisible by linear form; remainder = " +
                                r.remainder.to_string());
    return r.quotient;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            os << "*X" << v;
            if (m[v] > 1) os << "^" << static_cast<int>(m[v]);
        }
    }
    return os.str();
}

MultiPoly pairing_form(const AmbientVector<Exact>& alpha) {
    int nv = static_cast<int>(alpha.size());
    std::vector<Exact> coeff(nv, Exact(0));
    coeff[0] = alpha.xinf();
    coeff[nv - 1] = alpha.x0();
    for (int i = 1; i + 1 < nv; ++i) coeff[i] = alpha[i];
    return MultiPoly::linear_form(coeff);
}

MultiPoly norm_form(int nvars) {
    MultiPoly p(nvars);
    Mono m(nvars, 0);
    m[0] = 1;
    m[nvars - 1] = 1;
    p = MultiPoly::monomial(nvars, m, Exact(2));
    for (int i = 1; i + 1 < nvars; ++i) {
        Mono q(nvars, 0);
        q[i] = 2;
        p += MultiPoly::monomial(nvars, q, Exact(1));
    }
    return p;
}

namespace {
void collect_monos(int nvars, int var, int remaining, Mono& cur,
                   std::vector<Mono>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[var] = static_cast<std::uint8_t>(e);
        collect_monos(nvars, var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}
}  // namespace

std::vector<Mono> monomials_up_to(int nvars, int degmax) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    collect_monos(nvars, 0, degmax, cur, out);
    return out;
}

MultiPoly random_poly(Rng& rng, int nvars, int degmax, int nterms) {
    MultiPoly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        Mono m(nvars, 0);
        int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(degmax) + 1));
        for (int d = 0; d < budget; ++d) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars)));
            m[v] += 1;
        }
        p += MultiPoly::monomial(nvars, m, Exact(rng.rational()));
    }
    return p;
}

}  // namespace confdunkl
