// confdunkl: build reflection groups in the ambient space, verify the
// operator identities, and evaluate the conformal Dunkl-Laplace operators.

#include "CLI11.hpp"
#include "json.hpp"

#include "confdunkl/conformal.hpp"
#include "confdunkl/config.hpp"
#include "confdunkl/exprparse.hpp"
#include "confdunkl/rootsio.hpp"
#include "confdunkl/verify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace confdunkl;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::vector<std::vector<double>> read_points(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file: " + path);
    std::vector<std::vector<double>> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<double> p;
        double v;
        while (ls >> v) p.push_back(v);
        if (p.empty()) continue;
        if (static_cast<int>(p.size()) != n)
            throw std::runtime_error("points file line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(n) +
                                     " coordinates");
        pts.push_back(std::move(p));
    }
    return pts;
}

int cmd_roots(const RunConfig& cfg, const std::string& format,
              const std::string& out_path) {
    DunklContext ctx = resolve_context(cfg);
    const RootSystem& rs = *ctx.rs;
    ReflectionGroup group = generate_group(rs);

    if (format == "csv") {
        std::ostringstream os;
        os << "index,tag,orbit,k,norm";
        for (int c = 0; c < rs.nvars(); ++c) os << ",coord_" << c;
        os << ",quadric_c0";
        for (int i = 1; i <= rs.n(); ++i) os << ",quadric_x" << i;
        os << ",quadric_c2\n";
        for (std::size_t i = 0; i < rs.roots().size(); ++i) {
            const Root& r = rs.roots()[i];
            auto q = subsphere_quadric(r);
            os << i << ',' << rs.tag(i) << ',' << rs.orbit_of(i) << ','
               << ctx.k.root_value(rs, i).to_string() << ',' << r.norm().to_string();
            for (std::size_t c = 0; c < r.vec().size(); ++c)
                os << ',' << r.vec()[c].to_string();
            os << ',' << q.c0.to_string();
            for (const auto& l : q.lin) os << ',' << l.to_string();
            os << ',' << q.c2.to_string() << '\n';
        }
        emit(os.str(), out_path);
        return 0;
    }

    if (format == "json") {
        json doc;
        doc["n"] = rs.n();
        doc["root_system"] = cfg.root_system;
        doc["root_count"] = rs.roots().size();
        doc["group_order"] = group.order();
        doc["gamma_k"] = ctx.gamma_k.to_string();
        doc["roots"] = json::array();
        for (std::size_t i = 0; i < rs.roots().size(); ++i) {
            const Root& r = rs.roots()[i];
            auto q = subsphere_quadric(r);
            json item;
            item["index"] = i;
            item["tag"] = rs.tag(i);
            item["orbit"] = rs.orbit_of(i);
            item["k"] = ctx.k.root_value(rs, i).to_string();
            item["norm"] = r.norm().to_string();
            item["positive"] = false;
            json coords = json::array();
            for (std::size_t c = 0; c < r.vec().size(); ++c)
                coords.push_back(r.vec()[c].to_string());
            item["coords"] = coords;
            json quad;
            quad["c0"] = q.c0.to_string();
            quad["c2"] = q.c2.to_string();
            json lin = json::array();
            for (const auto& l : q.lin) lin.push_back(l.to_string());
            quad["lin"] = lin;
            item["quadric"] = quad;
            doc["roots"].push_back(item);
        }
        for (std::size_t idx : rs.positive())
            doc["roots"][idx]["positive"] = true;
        doc["orbits"] = json::array();
        for (std::size_t o = 0; o < rs.orbit_count(); ++o) {
            json orb;
            orb["index"] = o;
            orb["size"] = rs.orbits()[o].size();
            orb["k"] = ctx.k.orbit_value(static_cast<int>(o)).to_string();
            orb["members"] = rs.orbits()[o];
            doc["orbits"].push_back(orb);
        }
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }

    std::ostringstream os;
    os << "root system " << cfg.root_system << " in R^{" << rs.n() << "+1,1}: "
       << rs.roots().size() << " roots, " << rs.orbit_count() << " orbits, group order "
       << group.order() << ", gamma_k = " << ctx.gamma_k.to_string() << "\n";
    for (std::size_t i = 0; i < rs.roots().size(); ++i) {
        const Root& r = rs.roots()[i];
        auto q = subsphere_quadric(r);
        os << "  [" << i << "]";
        if (!rs.tag(i).empty()) os << " " << rs.tag(i);
        os << " orbit " << rs.orbit_of(i) << " k=" << ctx.k.root_value(rs, i).to_string()
           << " (";
        for (std::size_t c = 0; c < r.vec().size(); ++c) {
            if (c) os << ", ";
            os << r.vec()[c].to_string();
        }
        os << ")  quadric: " << q.c0.to_string();
        for (int d = 0; d < rs.n(); ++d)
            if (!q.lin[d].is_zero())
                os << " + (" << q.lin[d].to_string() << ") x" << d + 1;
        if (!q.c2.is_zero()) os << " + (" << q.c2.to_string() << ") |x|^2";
        os << " = 0\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& format,
               const std::string& out_path) {
    auto results = run_verification(cfg);
    bool all_pass = true;
    if (format == "json") {
        json doc = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            json item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["residual"] = r.residual;
            item["detail"] = r.detail;
            doc.push_back(item);
        }
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name
               << "  residual=" << fmt17(r.residual) << "\n      " << r.detail << "\n";
        }
        os << (all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n");
        emit(os.str(), out_path);
    }
    return all_pass ? 0 : 1;
}

int cmd_eval(const RunConfig& cfg, const std::string& function_src,
             const std::string& points_path, const std::string& route,
             const std::string& format, const std::string& out_path) {
    DunklContext ctx = resolve_context(cfg);
    ExprPool pool;
    ExprId f = parse_function(pool, function_src, ctx.n());
    auto points = read_points(points_path, ctx.n());

    bool want_chart = route == "chart" || route == "both";
    bool want_ambient = route == "ambient" || route == "both";
    if (want_chart && cfg.j != 1)
        throw std::runtime_error("the chart route covers j = 1 only; "
                                 "use --route ambient for higher powers");

    auto spec = cfg.weight
                    ? ConformalOperatorSpec::at_weight(ctx, cfg.j, *cfg.weight)
                    : ConformalOperatorSpec::at_critical_weight(ctx, cfg.j);
    std::optional<AmbientRoute> ambient;
    if (want_ambient) ambient.emplace(spec, pool, f);

    struct Row {
        std::vector<double> x;
        std::optional<double> chart, ambient;
        std::string status = "ok";
    };
    std::vector<Row> rows;
    for (const auto& x : points) {
        Row row;
        row.x = x;
        try {
            if (want_chart) row.chart = chart_operator(spec, pool, f, x);
            if (ambient) row.ambient = ambient->eval(x);
        } catch (const SingularPointError& e) {
            std::ostringstream os;
            os << "singular: root #" << e.root_index << " " << e.denominator << " = "
               << fmt17(e.value) << " (" << e.what() << ")";
            row.status = os.str();
        } catch (const std::domain_error& e) {
            row.status = std::string("domain error: ") + e.what();
        }
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        json doc = json::array();
        for (const auto& r : rows) {
            json item;
            item["x"] = r.x;
            if (r.chart) item["chart"] = *r.chart;
            if (r.ambient) item["ambient"] = *r.ambient;
            item["status"] = r.status;
            doc.push_back(item);
        }
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::ostringstream os;
        for (int i = 0; i < ctx.n(); ++i) os << "x" << i + 1 << ",";
        if (want_chart) os << "chart,";
        if (want_ambient) os << "ambient,";
        os << "status\n";
        for (const auto& r : rows) {
            for (double v : r.x) os << fmt17(v) << ',';
            if (want_chart) os << (r.chart ? fmt17(*r.chart) : "") << ',';
            if (want_ambient) os << (r.ambient ? fmt17(*r.ambient) : "") << ',';
            os << '"' << r.status << "\"\n";
        }
        emit(os.str(), out_path);
    }
    return 0;
}

int cmd_table(const RunConfig& cfg, const std::string& format,
              const std::string& out_path) {
    DunklContext ctx = resolve_context(cfg);
    auto group = group_to_double(generate_group(*ctx.rs));
    auto spec = ConformalOperatorSpec::at_critical_weight(ctx, 1);
    ExprPool pool;
    ExprId f = pool.add(pool.one(),
                        pool.add(pool.ipow(pool.var(0), 2),
                                 pool.expn(pool.mul(
                                     pool.constant(Exact(make_rat(-1, 2))),
                                     pool.ipow(pool.var(0), 2)))));
    Rng rng(cfg.seed);
    auto pts =
        sample_regular_points(*ctx.rs, group, cfg.samples, rng, cfg.margin, -1.8, 1.8);
    AmbientRoute route_b(spec, pool, f);

    json jdoc = json::array();
    std::ostringstream os;
    for (int i = 0; i < ctx.n(); ++i) os << "x" << i + 1 << ",";
    os << "chart,ambient,rel_err\n";
    for (const auto& x : pts) {
        double a = chart_operator(spec, pool, f, x);
        double b = route_b.eval(x);
        double rel = std::abs(b - a) / std::max(1.0, std::abs(a));
        if (format == "json") {
            json item;
            item["x"] = x;
            item["chart"] = a;
            item["ambient"] = b;
            item["rel_err"] = rel;
            jdoc.push_back(item);
        } else {
            for (double v : x) os << fmt17(v) << ',';
            os << fmt17(a) << ',' << fmt17(b) << ',' << fmt17(rel) << '\n';
        }
    }
    emit(format == "json" ? jdoc.dump(2) + "\n" : os.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conformal Dunkl-Laplace operators via the flat ambient space"};
    app.require_subcommand(1);

    std::string config_path, out_path, format, function_src, points_path,
        route = "both";
    std::optional<std::uint64_t> seed_override;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run configuration file")->required();
        cmd->add_option("--seed", seed_override, "override the config seed");
        cmd->add_option("--out", out_path, "write output to this file");
        cmd->add_option("--format", format,
                        "output format (default: text for roots/verify, csv for "
                        "eval/table)")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };

    CLI::App* roots = app.add_subcommand(
        "roots", "list roots, orbits, group order and subsphere quadrics");
    add_common(roots);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every verification suite; nonzero exit on failure");
    add_common(verify);

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate the conformal operators at points from a file");
    add_common(eval);
    eval->add_option("--function", function_src,
                     "density as an expression in x1..xn, e.g. \"x1^2 + exp(x2)\"")
        ->required();
    eval->add_option("--points", points_path,
                     "file with one point per line, whitespace-separated decimals")
        ->required();
    eval->add_option("--route", route, "which construction to evaluate")
        ->check(CLI::IsMember({"chart", "ambient", "both"}));

    CLI::App* table = app.add_subcommand(
        "table", "cross-validation error table over sampled regular points");
    add_common(table);

    CLI11_PARSE(app, argc, argv);

    try {
        if (format.empty())
            format = (roots->parsed() || verify->parsed()) ? "text" : "csv";
        RunConfig cfg = RunConfig::from_file(config_path);
        if (seed_override) cfg.seed = *seed_override;
        if (roots->parsed()) return cmd_roots(cfg, format, out_path);
        if (verify->parsed()) return cmd_verify(cfg, format, out_path);
        if (eval->parsed())
            return cmd_eval(cfg, function_src, points_path, route, format, out_path);
        if (table->parsed()) return cmd_table(cfg, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
