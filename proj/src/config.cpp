#include "confdunkl/config.hpp"

#include "confdunkl/rootsio.hpp"

#include <fstream>
#include <sstream>

namespace confdunkl {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(rat_from_string(item));
    }
    if (out.empty()) throw std::invalid_argument("empty multiplicity list");
    return out;
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> defaults = {
        {"route_agreement", 1e-8},
        {"extension_independence", 1e-9},
        {"extension_power", 1e-3},   // residual must EXCEED this off criticality
        {"classical_reduction", 1e-10},
        {"k0_reduction", 1e-12},
        {"gjms_flat", 1e-7},
        {"derivative_fd", 1e-6},
        {"chart_reflection", 1e-10},
        {"equivariance_chart", 1e-8},
    };
    return defaults;
}

double RunConfig::tolerance(const std::string& name) const {
    auto it = tolerances.find(name);
    if (it != tolerances.end()) return it->second;
    auto dt = default_tolerances().find(name);
    if (dt == default_tolerances().end())
        throw std::invalid_argument("unknown tolerance name: " + name);
    return dt->second;
}

RunConfig RunConfig::from_stream(std::istream& in) {
    RunConfig cfg;
    std::string line, section = "run";
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "run" && section != "tolerances")
                throw std::invalid_argument("config: unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (section == "tolerances") {
            if (!default_tolerances().count(key))
                throw std::invalid_argument("config: unknown tolerance '" + key + "'");
            cfg.tolerances[key] = std::stod(val);
            continue;
        }
        if (key == "n") {
            cfg.n = std::stoi(val);
            if (cfg.n < 1) throw std::invalid_argument("config: n must be >= 1");
        } else if (key == "root_system") {
            cfg.root_system = val;
        } else if (key == "multiplicity") {
            if (val.rfind("file:", 0) == 0) {
                cfg.multiplicity_file = val.substr(5);
                cfg.multiplicity.clear();
            } else {
                cfg.multiplicity = parse_rat_list(val);
            }
        } else if (key == "j") {
            cfg.j = std::stoi(val);
            if (cfg.j < 1) throw std::invalid_argument("config: j must be >= 1");
        } else if (key == "weight") {
            if (val == "critical")
                cfg.weight.reset();
            else
                cfg.weight = std::stod(val);
        } else if (key == "seed") {
            cfg.seed = std::stoull(val);
        } else if (key == "samples") {
            cfg.samples = std::stoi(val);
            if (cfg.samples < 1) throw std::invalid_argument("config: samples >= 1");
        } else if (key == "margin") {
            cfg.margin = std::stod(val);
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return from_stream(in);
}

RootSystem resolve_root_system(const RunConfig& cfg) {
    const std::string& name = cfg.root_system;
    if (name == "A1") return build_A1(cfg.n);
    if (name == "B2_euclidean") return build_euclidean_B(2, cfg.n);
    if (name.size() > 2 && name.rfind("B(", 0) == 0 && name.back() == ')') {
        int rank = std::stoi(name.substr(2, name.size() - 3));
        // the full example system carries the B_n / S split tags
        if (rank == cfg.n + 1) return build_B(cfg.n);
        return build_embedded_B(rank, cfg.n);
    }
    ValidationReport rep = read_roots_file(name);
    if (!rep.ok()) {
        std::string msg = "root system file rejected: " + name;
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
    if (rep.system->n() != cfg.n)
        throw std::invalid_argument("root system file has chart dimension " +
                                    std::to_string(rep.system->n()) +
                                    " but the config says n = " + std::to_string(cfg.n));
    return *std::move(rep.system);
}

DunklContext resolve_context(const RunConfig& cfg) {
    RootSystem rs = resolve_root_system(cfg);
    MultiplicityFunction k = [&] {
        if (!cfg.multiplicity_file.empty())
            return read_assignments_file(rs, cfg.multiplicity_file);
        std::vector<Exact> values;
        for (const Rat& r : cfg.multiplicity) values.emplace_back(r);
        return MultiplicityFunction::per_orbit(rs, values);
    }();
    return DunklContext::make(std::move(rs), std::move(k));
}

}  // namespace confdunkl
