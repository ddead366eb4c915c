#include "confdunkl/chartexpr.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace confdunkl {

namespace {

bool is_const(const ExprNode& n) { return n.kind == ExprKind::Constant; }
bool is_exact_zero(const ExprNode& n) {
    return is_const(n) && n.exact_const && n.cval.is_zero();
}
bool is_exact_one(const ExprNode& n) {
    return is_const(n) && n.exact_const && n.cval == Exact(1);
}

std::string key_of(const ExprNode& n) {
    std::ostringstream os;
    os << static_cast<int>(n.kind) << ':' << n.a << ':' << n.b << ':' << n.var
       << ':' << n.map << ':' << n.ipow << ':';
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof n.rpow);
    std::memcpy(&bits, &n.rpow, sizeof bits);
    os << bits << ':';
    if (n.kind == ExprKind::Constant) {
        if (n.exact_const) {
            os << 'e' << n.cval.to_string();
        } else {
            std::memcpy(&bits, &n.dval, sizeof bits);
            os << 'd' << bits;
        }
    }
    return os.str();
}

}  // namespace

ExprId ExprPool::intern(ExprNode n) {
    if (n.kind == ExprKind::Constant && n.exact_const) n.dval = n.cval.to_double();
    std::string key = key_of(n);
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    if (nodes_.size() >= max_nodes_)
        throw std::length_error("expression pool exceeded " +
                                std::to_string(max_nodes_) +
                                " nodes; the requested composition is too deep");
    ExprId id = static_cast<ExprId>(nodes_.size());
    nodes_.push_back(std::move(n));
    intern_.emplace(std::move(key), id);
    return id;
}

int ExprPool::intern_map(Mat<Exact> linear, std::vector<Exact> offset) {
    for (std::size_t i = 0; i < maps_.size(); ++i)
        if (maps_[i].linear == linear && maps_[i].offset == offset)
            return static_cast<int>(i);
    AffineMap m;
    m.linear = std::move(linear);
    m.offset = std::move(offset);
    std::size_t nv = m.offset.size();
    m.linear_d = Mat<double>(nv);
    m.offset_d.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        m.offset_d[i] = m.offset[i].to_double();
        for (std::size_t j = 0; j < nv; ++j)
            m.linear_d(i, j) = m.linear(i, j).to_double();
    }
    maps_.push_back(std::move(m));
    return static_cast<int>(maps_.size()) - 1;
}

ExprId ExprPool::constant(const Exact& c) {
    ExprNode n;
    n.kind = ExprKind::Constant;
    n.exact_const = true;
    n.cval = c;
    return intern(std::move(n));
}

ExprId ExprPool::constant_d(double v) {
    ExprNode n;
    n.kind = ExprKind::Constant;
    n.exact_const = false;
    n.dval = v;
    return intern(std::move(n));
}

ExprId ExprPool::var(int index) {
    if (index < 0) throw std::invalid_argument("negative variable index");
    ExprNode n;
    n.kind = ExprKind::Var;
    n.var = index;
    return intern(std::move(n));
}

ExprId ExprPool::add(ExprId x, ExprId y) {
    const ExprNode &nx = nodes_[x], &ny = nodes_[y];
    if (is_exact_zero(nx)) return y;
    if (is_exact_zero(ny)) return x;
    if (is_const(nx) && is_const(ny)) {
        if (nx.exact_const && ny.exact_const) return constant(nx.cval + ny.cval);
        return constant_d(nx.dval + ny.dval);
    }
    ExprNode n;
    n.kind = ExprKind::Add;
    n.a = std::min(x, y);
    n.b = std::max(x, y);
    return intern(std::move(n));
}

ExprId ExprPool::sub(ExprId x, ExprId y) { return add(x, neg(y)); }

ExprId ExprPool::neg(ExprId x) { return mul(constant(Exact(-1)), x); }

ExprId ExprPool::mul(ExprId x, ExprId y) {
    const ExprNode &nx = nodes_[x], &ny = nodes_[y];
    if (is_exact_zero(nx) || is_exact_zero(ny)) return zero();
    if (is_exact_one(nx)) return y;
    if (is_exact_one(ny)) return x;
    if (is_const(nx) && is_const(ny)) {
        if (nx.exact_const && ny.exact_const) return constant(nx.cval * ny.cval);
        return constant_d(nx.dval * ny.dval);
    }
    ExprNode n;
    n.kind = ExprKind::Mul;
    n.a = std::min(x, y);
    n.b = std::max(x, y);
    return intern(std::move(n));
}

ExprId ExprPool::div(ExprId x, ExprId y) {
    const ExprNode& ny = nodes_[y];
    if (is_const(ny)) {
        if (ny.exact_const) {
            if (ny.cval.is_zero()) throw std::domain_error("division by zero constant");
            return mul(x, constant(ny.cval.inverse()));
        }
        if (ny.dval == 0.0) throw std::domain_error("division by zero constant");
        return mul(x, constant_d(1.0 / ny.dval));
    }
    if (is_exact_zero(nodes_[x])) return zero();
    ExprNode n;
    n.kind = ExprKind::Div;
    n.a = x;
    n.b = y;
    return intern(std::move(n));
}

ExprId ExprPool::ipow(ExprId x, int k) {
    if (k == 0) return one();
    if (k == 1) return x;
    const ExprNode& nx = nodes_[x];
    if (is_const(nx)) {
        if (nx.exact_const) {
            if (nx.cval.is_zero() && k < 0)
                throw std::domain_error("zero raised to a negative power");
            Exact r(1);
            Exact base = k > 0 ? nx.cval : nx.cval.inverse();
            for (int i = 0; i < std::abs(k); ++i) r *= base;
            return constant(r);
        }
        return constant_d(std::pow(nx.dval, k));
    }
    ExprNode n;
    n.kind = ExprKind::IntPow;
    n.a = x;
    n.ipow = k;
    return intern(std::move(n));
}

ExprId ExprPool::rpow(ExprId x, double w) {
    double r = std::round(w);
    if (r == w && std::abs(r) <= 32.0) return ipow(x, static_cast<int>(r));
    const ExprNode& nx = nodes_[x];
    if (is_const(nx) && nx.dval > 0.0) return constant_d(std::pow(nx.dval, w));
    ExprNode n;
    n.kind = ExprKind::RealPow;
    n.a = x;
    n.rpow = w;
    return intern(std::move(n));
}

ExprId ExprPool::expn(ExprId x) {
    const ExprNode& nx = nodes_[x];
    if (is_const(nx)) return constant_d(std::exp(nx.dval));
    ExprNode n;
    n.kind = ExprKind::Exp;
    n.a = x;
    return intern(std::move(n));
}

ExprId ExprPool::affine(ExprId x, Mat<Exact> linear, std::vector<Exact> offset) {
    const ExprNode& nx = nodes_[x];
    if (is_const(nx)) return x;
    std::size_t nv = offset.size();
    bool identity = true;
    for (std::size_t i = 0; i < nv && identity; ++i) {
        if (!offset[i].is_zero()) identity = false;
        for (std::size_t j = 0; j < nv && identity; ++j)
            if (!(linear(i, j) == (i == j ? Exact(1) : Exact(0)))) identity = false;
    }
    if (identity) return x;

    if (nx.kind == ExprKind::Var) {
        int i = nx.var;
        if (i >= static_cast<int>(nv))
            throw std::invalid_argument("affine map smaller than variable index");
        std::vector<Exact> row(nv);
        for (std::size_t j = 0; j < nv; ++j) row[j] = linear(i, j);
        return linear_combination(row, offset[i]);
    }
    if (nx.kind == ExprKind::Affine) {
        // e(A(Bx + b) + a) = e((A B) x + (A b + a))
        const AffineMap& inner = maps_[nx.map];
        Mat<Exact> lin = inner.linear * linear;
        std::vector<Exact> off(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            Exact acc = inner.offset[i];
            for (std::size_t j = 0; j < nv; ++j)
                acc += inner.linear(i, j) * offset[j];
            off[i] = acc;
        }
        return affine(nx.a, std::move(lin), std::move(off));
    }

    ExprNode n;
    n.kind = ExprKind::Affine;
    n.a = x;
    n.map = intern_map(std::move(linear), std::move(offset));
    return intern(std::move(n));
}

ExprId ExprPool::affine_linear(ExprId x, const Mat<Exact>& linear) {
    return affine(x, linear, std::vector<Exact>(linear.n, Exact(0)));
}

ExprId ExprPool::linear_combination(const std::vector<Exact>& coeff, const Exact& cst) {
    ExprId acc = constant(cst);
    for (std::size_t i = 0; i < coeff.size(); ++i)
        if (!coeff[i].is_zero())
            acc = add(acc, mul(constant(coeff[i]), var(static_cast<int>(i))));
    return acc;
}

ExprId ExprPool::derivative(ExprId x, int v) {
    auto memo = deriv_memo_.find({x, v});
    if (memo != deriv_memo_.end()) return memo->second;
    const ExprNode n = nodes_[x];  // copy: nodes_ may reallocate below
    ExprId out;
    switch (n.kind) {
        case ExprKind::Constant:
            out = zero();
            break;
        case ExprKind::Var:
            out = n.var == v ? one() : zero();
            break;
        case ExprKind::Add:
            out = add(derivative(n.a, v), derivative(n.b, v));
            break;
        case ExprKind::Mul:
            out = add(mul(derivative(n.a, v), n.b), mul(n.a, derivative(n.b, v)));
            break;
        case ExprKind::Div:
            out = div(sub(mul(derivative(n.a, v), n.b), mul(n.a, derivative(n.b, v))),
                      ipow(n.b, 2));
            break;
        case ExprKind::IntPow:
            out = mul(mul(constant(Exact(static_cast<long>(n.ipow))),
                          ipow(n.a, n.ipow - 1)),
                      derivative(n.a, v));
            break;
        case ExprKind::RealPow:
            out = mul(mul(constant_d(n.rpow), rpow(n.a, n.rpow - 1.0)),
                      derivative(n.a, v));
            break;
        case ExprKind::Exp:
            out = mul(expn(n.a), derivative(n.a, v));
            break;
        case ExprKind::Affine: {
            // d/dx_v e(Ax + b) = sum_j A_{j v} (d_j e)(Ax + b)
            out = zero();
            const int nv = static_cast<int>(maps_[n.map].offset.size());
            for (int j = 0; j < nv; ++j) {
                Exact a_jv = maps_[n.map].linear(j, v);
                if (a_jv.is_zero()) continue;
                ExprId dj = derivative(n.a, j);
                const AffineMap& am = maps_[n.map];  // re-read after recursion
                ExprId pulled = affine(dj, am.linear, am.offset);
                out = add(out, mul(constant(a_jv), pulled));
            }
            break;
        }
        default:
            throw std::logic_error("unhandled expression kind");
    }
    deriv_memo_.emplace(std::make_pair(x, v), out);
    return out;
}

namespace {
struct SubstCtx {
    // one node memo per distinct replacement vector
    std::map<std::vector<ExprId>, std::unordered_map<ExprId, ExprId>> memos;
};
}  // namespace

static ExprId substitute_rec(ExprPool& pool, ExprId x,
                             const std::vector<ExprId>& repl, SubstCtx& ctx) {
    auto& memo = ctx.memos[repl];
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    const ExprNode n = pool.node(x);  // copy
    ExprId out;
    switch (n.kind) {
        case ExprKind::Constant:
            out = x;
            break;
        case ExprKind::Var:
            if (n.var >= static_cast<int>(repl.size()))
                throw std::invalid_argument("substitution misses a variable");
            out = repl[n.var];
            break;
        case ExprKind::Add:
            out = pool.add(substitute_rec(pool, n.a, repl, ctx),
                           substitute_rec(pool, n.b, repl, ctx));
            break;
        case ExprKind::Mul:
            out = pool.mul(substitute_rec(pool, n.a, repl, ctx),
                           substitute_rec(pool, n.b, repl, ctx));
            break;
        case ExprKind::Div:
            out = pool.div(substitute_rec(pool, n.a, repl, ctx),
                           substitute_rec(pool, n.b, repl, ctx));
            break;
        case ExprKind::IntPow:
            out = pool.ipow(substitute_rec(pool, n.a, repl, ctx), n.ipow);
            break;
        case ExprKind::RealPow:
            out = pool.rpow(substitute_rec(pool, n.a, repl, ctx), n.rpow);
            break;
        case ExprKind::Exp:
            out = pool.expn(substitute_rec(pool, n.a, repl, ctx));
            break;
        case ExprKind::Affine: {
            // e(A y + b) with y = repl(x): new replacements A repl + b
            AffineMap am = pool.map(n.map);  // copy; pool may grow
            std::size_t nv = am.offset.size();
            std::vector<ExprId> inner(nv);
            for (std::size_t i = 0; i < nv; ++i) {
                ExprId acc = pool.constant(am.offset[i]);
                for (std::size_t j = 0; j < nv; ++j) {
                    if (am.linear(i, j).is_zero()) continue;
                    if (j >= repl.size())
                        throw std::invalid_argument("substitution misses a variable");
                    acc = pool.add(acc, pool.mul(pool.constant(am.linear(i, j)), repl[j]));
                }
                inner[i] = acc;
            }
            out = substitute_rec(pool, n.a, inner, ctx);
            break;
        }
        default:
            throw std::logic_error("unhandled expression kind");
    }
    ctx.memos[repl].emplace(x, out);
    return out;
}

ExprId ExprPool::substitute(ExprId x, const std::vector<ExprId>& repl) {
    SubstCtx ctx;
    return substitute_rec(*this, x, repl, ctx);
}

// ---- evaluation ----

namespace detail {

template <class S>
S const_value(const ExprNode& n);

template <>
double const_value<double>(const ExprNode& n) {
    return n.dval;
}
template <>
Exact const_value<Exact>(const ExprNode& n) {
    if (!n.exact_const)
        throw std::domain_error("floating constant in exact evaluation");
    return n.cval;
}
template <>
Dual2 const_value<Dual2>(const ExprNode& n) {
    return Dual2(n.dval);
}

template <class S>
bool positive(const S& v);
template <>
bool positive<double>(const double& v) {
    return v > 0.0;
}
template <>
bool positive<Exact>(const Exact& v) {
    return v.sign() > 0;
}
template <>
bool positive<Dual2>(const Dual2& v) {
    return v.v > 0.0;
}

template <class S>
S powi(S base, int k) {
    if (k < 0) {
        if (base == S(0)) throw std::domain_error("zero base with negative power");
        return S(1) / powi(base, -k);
    }
    S r(1);
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

double real_power(double base, double w) { return std::pow(base, w); }
Dual2 real_power(Dual2 base, double w) { return pow(base, w); }
Exact real_power(Exact, double) {
    throw std::domain_error("non-integer real power in exact evaluation");
}

double exp_of(double v) { return std::exp(v); }
Dual2 exp_of(Dual2 v) { return exp(v); }
Exact exp_of(const Exact&) {
    throw std::domain_error("exp in exact evaluation");
}

}  // namespace detail

template <class S>
struct ExprPool::EvalCtx {
    std::map<std::vector<S>, std::unordered_map<ExprId, S>> memo;
};

template <class S>
S ExprPool::eval_rec(ExprId id, const std::vector<S>& point, EvalCtx<S>& ctx) const {
    auto& memo = ctx.memo[point];
    auto hit = memo.find(id);
    if (hit != memo.end()) return hit->second;
    const ExprNode& n = nodes_[id];
    S out(0);
    switch (n.kind) {
        case ExprKind::Constant:
            out = detail::const_value<S>(n);
            break;
        case ExprKind::Var:
            if (n.var >= static_cast<int>(point.size()))
                throw std::invalid_argument("evaluation point too short");
            out = point[n.var];
            break;
        case ExprKind::Add:
            out = eval_rec(n.a, point, ctx) + eval_rec(n.b, point, ctx);
            break;
        case ExprKind::Mul:
            out = eval_rec(n.a, point, ctx) * eval_rec(n.b, point, ctx);
            break;
        case ExprKind::Div: {
            S den = eval_rec(n.b, point, ctx);
            if (den == S(0)) throw std::domain_error("division by zero at evaluation");
            out = eval_rec(n.a, point, ctx) / den;
            break;
        }
        case ExprKind::IntPow:
            out = detail::powi(eval_rec(n.a, point, ctx), n.ipow);
            break;
        case ExprKind::RealPow: {
            S base = eval_rec(n.a, point, ctx);
            if (!detail::positive(base))
                throw std::domain_error("real power needs a positive base");
            out = detail::real_power(base, n.rpow);
            break;
        }
        case ExprKind::Exp:
            out = detail::exp_of(eval_rec(n.a, point, ctx));
            break;
        case ExprKind::Affine: {
            const AffineMap& am = maps_[n.map];
            std::size_t nv = am.offset.size();
            if (point.size() < nv)
                throw std::invalid_argument("evaluation point too short");
            std::vector<S> moved(point.size());
            for (std::size_t i = 0; i < nv; ++i) {
                S acc(0);
                if constexpr (std::is_same_v<S, Exact>) {
                    acc = am.offset[i];
                    for (std::size_t j = 0; j < nv; ++j)
                        acc += am.linear(i, j) * point[j];
                } else {
                    acc = S(am.offset_d[i]);
                    for (std::size_t j = 0; j < nv; ++j)
                        acc = acc + S(am.linear_d(i, j)) * point[j];
                }
                moved[i] = acc;
            }
            for (std::size_t i = nv; i < point.size(); ++i) moved[i] = point[i];
            out = eval_rec(n.a, moved, ctx);
            break;
        }
        default:
            throw std::logic_error("unhandled expression kind");
    }
    ctx.memo[point].emplace(id, out);
    return out;
}

template <class S>
S ExprPool::eval(ExprId id, const std::vector<S>& point) const {
    EvalCtx<S> ctx;
    return eval_rec(id, point, ctx);
}

template double ExprPool::eval<double>(ExprId, const std::vector<double>&) const;
template Exact ExprPool::eval<Exact>(ExprId, const std::vector<Exact>&) const;
template Dual2 ExprPool::eval<Dual2>(ExprId, const std::vector<Dual2>&) const;

std::string ExprPool::to_string(ExprId id) const {
    const ExprNode& n = nodes_[id];
    switch (n.kind) {
        case ExprKind::Constant:
            return n.exact_const ? n.cval.to_string() : std::to_string(n.dval);
        case ExprKind::Var:
            return "v" + std::to_string(n.var);
        case ExprKind::Add:
            return "(" + to_string(n.a) + " + " + to_string(n.b) + ")";
        case ExprKind::Mul:
            return "(" + to_string(n.a) + " * " + to_string(n.b) + ")";
        case ExprKind::Div:
            return "(" + to_string(n.a) + " / " + to_string(n.b) + ")";
        case ExprKind::IntPow:
            return to_string(n.a) + "^" + std::to_string(n.ipow);
        case ExprKind::RealPow:
            return to_string(n.a) + "^(" + std::to_string(n.rpow) + ")";
        case ExprKind::Exp:
            return "exp(" + to_string(n.a) + ")";
        case ExprKind::Affine:
            return "comp#" + std::to_string(n.map) + "(" + to_string(n.a) + ")";
        default:
            return "?";
    }
}

// ---- chart calculus built on the pool ----

ExprId density_to_ambient(ExprPool& pool, const Density& d) {
    std::vector<ExprId> repl(d.n);
    ExprId x0 = pool.var(0);
    for (int i = 0; i < d.n; ++i) repl[i] = pool.div(pool.var(i + 1), x0);
    ExprId lifted = pool.substitute(d.f, repl);
    return pool.mul(pool.rpow(x0, d.weight), lifted);
}

ExprId norm_expr(ExprPool& pool, int n) {
    ExprId acc = pool.mul(pool.constant(Exact(2)),
                          pool.mul(pool.var(0), pool.var(n + 1)));
    for (int i = 1; i <= n; ++i) acc = pool.add(acc, pool.ipow(pool.var(i), 2));
    return acc;
}

ExprId perturb_extension(ExprPool& pool, ExprId e, const Density& g) {
    return pool.add(e, pool.mul(norm_expr(pool, g.n), density_to_ambient(pool, g)));
}

ExprId restrict_to_cone(ExprPool& pool, ExprId e, int n) {
    std::vector<ExprId> repl(n + 2);
    repl[0] = pool.one();
    ExprId half = pool.constant(Exact(Rat(-1, 2)));
    ExprId norm2 = pool.zero();
    for (int i = 0; i < n; ++i) {
        repl[i + 1] = pool.var(i);
        norm2 = pool.add(norm2, pool.ipow(pool.var(i), 2));
    }
    repl[n + 1] = pool.mul(half, norm2);
    return pool.substitute(e, repl);
}

ExprId ambient_dunkl_laplacian_expr(ExprPool& pool, const DunklContext& ctx, ExprId e) {
    const RootSystem& rs = *ctx.rs;
    int nv = rs.nvars();
    // flat part 2 d0 dinf + sum_i di^2
    ExprId out = pool.mul(pool.constant(Exact(2)),
                          pool.derivative(pool.derivative(e, 0), nv - 1));
    for (int i = 1; i + 1 < nv; ++i)
        out = pool.add(out, pool.derivative(pool.derivative(e, i), i));

    for (std::size_t idx : rs.positive()) {
        const Root& alpha = rs.roots()[idx];
        Exact kval = ctx.k.root_value(rs, idx);
        if (kval.is_zero()) continue;
        // <alpha, X> coefficients (G alpha)
        std::vector<Exact> ell(nv, Exact(0));
        ell[0] = alpha.vec().xinf();
        ell[nv - 1] = alpha.vec().x0();
        for (int i = 1; i + 1 < nv; ++i) ell[i] = alpha.vec()[i];
        ExprId ell_expr = pool.linear_combination(ell, Exact(0));

        // <grad e, alpha> = sum_a alpha_a d_a e
        ExprId dir = pool.zero();
        for (int a = 0; a < nv; ++a)
            if (!alpha.vec()[a].is_zero())
                dir = pool.add(dir, pool.mul(pool.constant(alpha.vec()[a]),
                                             pool.derivative(e, a)));

        ExprId reflected = pool.affine_linear(e, reflection_matrix(alpha));
        ExprId grad_term = pool.div(pool.mul(pool.constant(Exact(2)), dir), ell_expr);
        ExprId diff_term = pool.div(
            pool.mul(pool.constant(alpha.norm()), pool.sub(e, reflected)),
            pool.ipow(ell_expr, 2));
        out = pool.add(out, pool.mul(pool.constant(kval),
                                     pool.sub(grad_term, diff_term)));
    }
    return out;
}

ExprId chart_laplacian_expr(ExprPool& pool, ExprId f, int n) {
    ExprId out = pool.zero();
    for (int i = 0; i < n; ++i)
        out = pool.add(out, pool.derivative(pool.derivative(f, i), i));
    return out;
}

ExprId poly_to_expr(ExprPool& pool, const MultiPoly& p) {
    ExprId acc = pool.zero();
    for (const auto& [m, c] : p.terms()) {
        ExprId term = pool.constant(c);
        for (int v = 0; v < p.nvars(); ++v)
            if (m[v] > 0) term = pool.mul(term, pool.ipow(pool.var(v), m[v]));
        acc = pool.add(acc, term);
    }
    return acc;
}

}  // namespace confdunkl
