#include "confdunkl/rootsio.hpp"

#include <fstream>
#include <sstream>

namespace confdunkl {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

std::string write_roots(const RootSystem& rs) {
    std::ostringstream os;
    os << "# root system: " << rs.roots().size() << " roots in R^{" << rs.n()
       << "+1,1}\n";
    os << "# one root per line, " << rs.nvars() << " coordinates\n";
    for (std::size_t i = 0; i < rs.roots().size(); ++i) {
        const Root& r = rs.roots()[i];
        for (std::size_t c = 0; c < r.vec().size(); ++c) {
            if (c) os << ' ';
            os << r.vec()[c].to_string();
        }
        if (!rs.tag(i).empty()) os << "  # " << rs.tag(i);
        os << '\n';
    }
    return os.str();
}

ValidationReport read_roots(std::istream& in) {
    std::vector<AmbientVector<Exact>> vecs;
    std::string line;
    std::size_t lineno = 0;
    ValidationReport bad;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::vector<Exact> coords;
        std::string tok;
        while (ls >> tok) {
            try {
                coords.push_back(Exact::from_string(tok));
            } catch (const std::invalid_argument& e) {
                bad.violations.push_back("line " + std::to_string(lineno) + ": " +
                                         e.what());
            }
        }
        if (coords.empty()) continue;
        if (coords.size() < 3)
            bad.violations.push_back("line " + std::to_string(lineno) +
                                     ": too few coordinates");
        vecs.emplace_back(std::move(coords));
    }
    if (!bad.violations.empty()) return bad;
    return validate_root_vectors(vecs);
}

ValidationReport read_roots_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ValidationReport rep;
        rep.violations.push_back("cannot open roots file: " + path);
        return rep;
    }
    return read_roots(in);
}

std::string write_assignments(const RootSystem& rs, const MultiplicityFunction& k) {
    std::ostringstream os;
    os << "# orbit and multiplicity assignments\n";
    for (std::size_t o = 0; o < rs.orbit_count(); ++o) {
        os << "orbit." << o << " =";
        for (std::size_t idx : rs.orbits()[o]) os << ' ' << idx;
        os << '\n';
    }
    for (std::size_t o = 0; o < rs.orbit_count(); ++o) {
        const Exact& v = k.orbit_value(static_cast<int>(o));
        os << "k." << o << " = " << v.to_string() << '\n';
    }
    return os.str();
}

MultiplicityFunction read_assignments(const RootSystem& rs, std::istream& in) {
    std::vector<Exact> values(rs.orbit_count(), Exact(0));
    std::vector<bool> seen(rs.orbit_count(), false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            bool blank = body.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank)
                throw std::invalid_argument("assignments line " +
                                            std::to_string(lineno) + ": missing '='");
            continue;
        }
        std::string key = body.substr(0, eq);
        std::string val = body.substr(eq + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key.rfind("k.", 0) == 0) {
            std::size_t orbit = std::stoul(key.substr(2));
            if (orbit >= rs.orbit_count())
                throw std::invalid_argument("assignments: orbit index " +
                                            std::to_string(orbit) + " out of range");
            values[orbit] = Exact::from_string(val);
            seen[orbit] = true;
        } else if (key.rfind("orbit.", 0) == 0) {
            // informative; verify the member list against the computed orbits
            std::size_t orbit = std::stoul(key.substr(6));
            if (orbit >= rs.orbit_count())
                throw std::invalid_argument("assignments: orbit index " +
                                            std::to_string(orbit) + " out of range");
            std::istringstream vs(val);
            std::vector<std::size_t> members;
            std::size_t idx;
            while (vs >> idx) members.push_back(idx);
            if (members != rs.orbits()[orbit])
                throw std::invalid_argument(
                    "assignments: orbit." + std::to_string(orbit) +
                    " does not match the computed orbit partition");
        } else {
            throw std::invalid_argument("assignments: unknown key '" + key + "'");
        }
    }
    for (std::size_t o = 0; o < rs.orbit_count(); ++o)
        if (!seen[o])
            throw std::invalid_argument("assignments: missing k." + std::to_string(o));
    return MultiplicityFunction::per_orbit(rs, values);
}

MultiplicityFunction read_assignments_file(const RootSystem& rs,
                                           const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open assignments file: " + path);
    return read_assignments(rs, in);
}

}  // namespace confdunkl
