#include "confdunkl/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace confdunkl {

namespace {

std::string format_vec(const AmbientVector<Exact>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].to_string();
    }
    os << ")";
    return os.str();
}

Exact standard_pair(const AmbientVector<Exact>& u, const AmbientVector<Exact>& v) {
    Exact acc = u.c.front() * v.c.back() + u.c.back() * v.c.front();
    for (std::size_t i = 1; i + 1 < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

bool lex_positive(const AmbientVector<Exact>& v) {
    for (const Exact& c : v.c) {
        int s = c.sign();
        if (s != 0) return s > 0;
    }
    return false;
}

}  // namespace

Root::Root(AmbientVector<Exact> v) : v_(std::move(v)) {
    if (v_.size() < 3)
        throw std::invalid_argument("root vector must have at least 3 coordinates");
    if (!(v_.c.front() == v_.c.back()))
        throw std::invalid_argument(
            "root must have equal first and last coordinates: " + format_vec(v_));
    norm_ = standard_pair(v_, v_);
    if (norm_.sign() <= 0)
        throw std::invalid_argument("null root is not allowed: " + format_vec(v_));
    vd_.resize(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) vd_[i] = v_[i].to_double();
    norm_d_ = norm_.to_double();
}

AmbientVector<Exact> reflect(const Root& alpha, const AmbientVector<Exact>& X) {
    Exact factor = Exact(2) * standard_pair(alpha.vec(), X) / alpha.norm();
    AmbientVector<Exact> out(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        out[i] = X[i] - factor * alpha.vec()[i];
    return out;
}

AmbientVector<double> reflect(const Root& alpha, const AmbientVector<double>& X) {
    double ip = X.c.front() * alpha.coord_d(X.size() - 1) +
                X.c.back() * alpha.coord_d(0);
    for (std::size_t i = 1; i + 1 < X.size(); ++i) ip += X[i] * alpha.coord_d(i);
    double factor = 2.0 * ip / alpha.norm_d();
    AmbientVector<double> out(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        out[i] = X[i] - factor * alpha.coord_d(i);
    return out;
}

Mat<Exact> reflection_matrix(const Root& alpha) {
    std::size_t nv = alpha.vec().size();
    Mat<Exact> m = Mat<Exact>::identity(nv);
    // (G alpha)_j
    std::vector<Exact> ga(nv);
    ga[0] = alpha.vec().xinf();
    ga[nv - 1] = alpha.vec().x0();
    for (std::size_t i = 1; i + 1 < nv; ++i) ga[i] = alpha.vec()[i];
    Exact two_over_norm = Exact(2) / alpha.norm();
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            m(i, j) -= two_over_norm * alpha.vec()[i] * ga[j];
    return m;
}

ValidationReport validate_root_system(std::vector<Root> roots) {
    ValidationReport rep;
    if (roots.empty()) {
        rep.violations.push_back("root system must be nonempty");
        return rep;
    }
    std::size_t nv = roots[0].vec().size();
    for (const Root& r : roots)
        if (r.vec().size() != nv) {
            rep.violations.push_back("roots have mixed dimensions");
            return rep;
        }

    // set semantics: drop exact duplicates, sort canonically
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.vec().c < b.vec().c;
    });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::map<std::vector<Exact>, std::size_t> index;
    for (std::size_t i = 0; i < roots.size(); ++i) index[roots[i].vec().c] = i;

    // axiom 1: R cap R*alpha = {alpha, -alpha}
    for (std::size_t i = 0; i < roots.size(); ++i) {
        AmbientVector<Exact> neg = Exact(-1) * roots[i].vec();
        if (!index.count(neg.c))
            rep.violations.push_back("-alpha missing for root " +
                                     format_vec(roots[i].vec()));
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            // proportional?
            std::size_t p = 0;
            while (p < nv && roots[i].vec()[p].is_zero()) ++p;
            if (roots[j].vec()[p].is_zero()) continue;
            Exact c = roots[j].vec()[p] / roots[i].vec()[p];
            bool prop = true;
            for (std::size_t q = 0; q < nv; ++q)
                if (!(roots[j].vec()[q] == c * roots[i].vec()[q])) {
                    prop = false;
                    break;
                }
            if (prop && !(c == Exact(-1)) && !(c == Exact(1)))
                rep.violations.push_back(
                    "R cap R*alpha contains a third multiple: " +
                    format_vec(roots[i].vec()) + " and " + format_vec(roots[j].vec()));
        }
    }

    // axiom 2: R_alpha(R) = R
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) {
            AmbientVector<Exact> img = reflect(roots[i], roots[j].vec());
            if (!index.count(img.c))
                rep.violations.push_back(
                    "reflection of " + format_vec(roots[j].vec()) + " by " +
                    format_vec(roots[i].vec()) + " leaves the set: " + format_vec(img));
        }

    if (!rep.violations.empty()) return rep;

    RootSystem rs;
    rs.n_ = static_cast<int>(nv) - 2;
    rs.roots_ = std::move(roots);
    rs.tags_.assign(rs.roots_.size(), "");

    for (std::size_t i = 0; i < rs.roots_.size(); ++i)
        if (lex_positive(rs.roots_[i].vec())) rs.positive_.push_back(i);

    // orbits: breadth-first closure under all generating reflections
    rs.orbit_of_.assign(rs.roots_.size(), -1);
    for (std::size_t seed = 0; seed < rs.roots_.size(); ++seed) {
        if (rs.orbit_of_[seed] >= 0) continue;
        int id = static_cast<int>(rs.orbits_.size());
        std::vector<std::size_t> members;
        std::deque<std::size_t> todo{seed};
        rs.orbit_of_[seed] = id;
        while (!todo.empty()) {
            std::size_t cur = todo.front();
            todo.pop_front();
            members.push_back(cur);
            for (const Root& gen : rs.roots_) {
                AmbientVector<Exact> img = reflect(gen, rs.roots_[cur].vec());
                std::size_t next = index.at(img.c);
                if (rs.orbit_of_[next] < 0) {
                    rs.orbit_of_[next] = id;
                    todo.push_back(next);
                }
            }
        }
        std::sort(members.begin(), members.end());
        rs.orbits_.push_back(std::move(members));
    }

    rep.system = std::move(rs);
    return rep;
}

ValidationReport validate_root_vectors(const std::vector<AmbientVector<Exact>>& vecs) {
    ValidationReport rep;
    std::vector<Root> roots;
    for (const auto& v : vecs) {
        try {
            roots.emplace_back(v);
        } catch (const std::invalid_argument& e) {
            rep.violations.push_back(e.what());
        }
    }
    if (!rep.violations.empty()) return rep;
    return validate_root_system(std::move(roots));
}

std::vector<std::size_t> RootSystem::negative() const {
    std::vector<std::size_t> neg;
    std::set<std::size_t> pos(positive_.begin(), positive_.end());
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (!pos.count(i)) neg.push_back(i);
    return neg;
}

MultiplicityFunction MultiplicityFunction::constant(const RootSystem& rs, Exact v) {
    MultiplicityFunction k;
    k.k_.assign(rs.orbit_count(), v);
    return k;
}

MultiplicityFunction MultiplicityFunction::per_orbit(const RootSystem& rs,
                                                     std::vector<Exact> v) {
    if (v.empty()) throw std::invalid_argument("empty multiplicity list");
    MultiplicityFunction k;
    k.k_.resize(rs.orbit_count());
    for (std::size_t i = 0; i < rs.orbit_count(); ++i) k.k_[i] = v[i % v.size()];
    return k;
}

bool MultiplicityFunction::is_zero() const {
    for (const Exact& v : k_)
        if (!v.is_zero()) return false;
    return true;
}

Exact gamma(const RootSystem& rs, const MultiplicityFunction& k) {
    Exact g(0);
    for (std::size_t idx : rs.positive()) g += k.root_value(rs, idx);
    return g;
}

ReflectionGroup generate_group(const RootSystem& rs, std::size_t cap) {
    std::vector<Mat<Exact>> gens;
    for (std::size_t idx : rs.positive())
        gens.push_back(reflection_matrix(rs.roots()[idx]));

    std::set<Mat<Exact>> seen;
    std::deque<Mat<Exact>> todo;
    Mat<Exact> id = Mat<Exact>::identity(rs.nvars());
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        Mat<Exact> cur = std::move(todo.front());
        todo.pop_front();
        for (const Mat<Exact>& g : gens) {
            Mat<Exact> prod = g * cur;
            if (seen.insert(prod).second) {
                if (seen.size() > cap)
                    throw std::runtime_error(
                        "group generation exceeded the element cap (" +
                        std::to_string(cap) + "); non-finite or misconfigured input");
                todo.push_back(std::move(prod));
            }
        }
    }
    return ReflectionGroup(std::vector<Mat<Exact>>(seen.begin(), seen.end()),
                           std::move(gens));
}

std::vector<AmbientVector<Exact>> hyperplane_basis(const Root& alpha) {
    const AmbientVector<Exact>& a = alpha.vec();
    std::size_t nv = a.size();
    int n = static_cast<int>(nv) - 2;
    std::vector<AmbientVector<Exact>> basis;

    if (!a[0].is_zero()) {
        // (-a_i, 0.., a0 at slot i, ..0) for i = 1..n
        for (int i = 1; i <= n; ++i) {
            AmbientVector<Exact> v(nv);
            v[0] = -a[i];
            v[i] = a[0];
            basis.push_back(std::move(v));
        }
        // (-a0 - (1/a0) sum a_i^2, a_1..a_n, a0)
        AmbientVector<Exact> v(nv);
        Exact s(0);
        for (int i = 1; i <= n; ++i) s += a[i] * a[i];
        v[0] = -a[0] - s / a[0];
        for (int i = 1; i <= n; ++i) v[i] = a[i];
        v[nv - 1] = a[0];
        basis.push_back(std::move(v));
        return basis;
    }

    // alpha0 = 0: the span formula above divides by alpha0; return
    // {e_0, e_inf} plus a euclidean complement basis of (a_1..a_n).
    AmbientVector<Exact> e0(nv), einf(nv);
    e0[0] = Exact(1);
    einf[nv - 1] = Exact(1);
    basis.push_back(std::move(e0));
    basis.push_back(std::move(einf));
    int pivot = 0;
    for (int i = 1; i <= n; ++i)
        if (!a[i].is_zero()) {
            pivot = i;
            break;
        }
    for (int i = 1; i <= n; ++i) {
        if (i == pivot) continue;
        AmbientVector<Exact> v(nv);
        v[i] = a[pivot];
        v[pivot] = -a[i];
        basis.push_back(std::move(v));
    }
    return basis;
}

double SubsphereQuadric::eval(const std::vector<double>& x) const {
    double norm2 = 0, linpart = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        norm2 += x[i] * x[i];
        linpart += lin[i].to_double() * x[i];
    }
    return c0.to_double() + linpart + c2.to_double() * norm2;
}

Exact SubsphereQuadric::eval_exact(const std::vector<Exact>& x) const {
    Exact norm2(0), linpart(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        norm2 += x[i] * x[i];
        linpart += lin[i] * x[i];
    }
    return c0 + linpart + c2 * norm2;
}

SubsphereQuadric subsphere_quadric(const Root& alpha) {
    const AmbientVector<Exact>& a = alpha.vec();
    int n = a.chart_dim();
    SubsphereQuadric q;
    q.c0 = a[0];
    q.c2 = -a[0] / Exact(2);
    q.lin.resize(n);
    for (int i = 0; i < n; ++i) q.lin[i] = a[i + 1];
    return q;
}

namespace {

RootSystem validated_or_throw(std::vector<Root> roots, const char* what) {
    ValidationReport rep = validate_root_system(std::move(roots));
    if (!rep.ok())
        throw std::logic_error(std::string("builtin system failed validation (") +
                               what + "): " + rep.violations.front());
    return *std::move(rep.system);
}

}  // namespace

RootSystem build_A1(int n) {
    if (n < 1) throw std::invalid_argument("A1 needs chart dimension >= 1");
    std::vector<Root> roots;
    for (int s : {1, -1}) {
        AmbientVector<Exact> v(n + 2);
        v[1] = Exact(s);
        roots.emplace_back(std::move(v));
    }
    return validated_or_throw(std::move(roots), "A1");
}

RootSystem build_euclidean_B(int rank, int n) {
    if (rank < 1 || rank > n)
        throw std::invalid_argument("euclidean B_rank needs 1 <= rank <= n");
    std::vector<Root> roots;
    for (int i = 1; i <= rank; ++i)
        for (int s : {1, -1}) {
            AmbientVector<Exact> v(n + 2);
            v[i] = Exact(s);
            roots.emplace_back(std::move(v));
        }
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    AmbientVector<Exact> v(n + 2);
                    v[i] = Exact(si);
                    v[j] = Exact(sj);
                    roots.emplace_back(std::move(v));
                }
    return validated_or_throw(std::move(roots), "euclidean B");
}

RootSystem build_embedded_B(int rank, int n) {
    if (rank < 1 || rank - 1 > n)
        throw std::invalid_argument("embedded B_rank needs rank-1 <= n");
    // directions: u_0 = (e_0 + e_inf)/sqrt2 (exact: sqrt2/2 per end), u_i = e_i
    const Exact half_sqrt2(Rat(0), Rat(1, 2));
    auto direction = [&](int d, int sign) {
        AmbientVector<Exact> v(n + 2);
        if (d == 0) {
            v[0] = Exact(sign) * half_sqrt2;
            v[n + 1] = v[0];
        } else {
            v[d] = Exact(sign);
        }
        return v;
    };
    std::vector<Root> roots;
    for (int d = 0; d < rank; ++d)
        for (int s : {1, -1}) roots.emplace_back(direction(d, s));
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    roots.emplace_back(direction(i, si) + direction(j, sj));
    return validated_or_throw(std::move(roots), "embedded B");
}

RootSystem build_B(int n) {
    RootSystem rs = build_embedded_B(n + 1, n);
    // S is defined as the complement of B_n: exactly the roots with alpha0 != 0
    for (std::size_t i = 0; i < rs.roots_.size(); ++i)
        rs.tags_[i] = rs.roots_[i].alpha0().is_zero() ? "B_n" : "S";
    return rs;
}

}  // namespace confdunkl
