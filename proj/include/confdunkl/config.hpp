#pragma once

// Plain-text run configuration: flat key-value pairs in [run] and
// [tolerances] sections, '#' comments, unknown keys rejected.

#include "confdunkl/dunkl.hpp"
#include "confdunkl/roots.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confdunkl {

struct RunConfig {
    int n = 2;
    // A1 | B2_euclidean | B(<m>) | path to a roots file
    std::string root_system = "B2_euclidean";
    std::vector<Rat> multiplicity{make_rat(1, 2)};  // per orbit, cycled
    std::string multiplicity_file;                  // "file:PATH" alternative
    int j = 1;
    std::optional<double> weight;  // empty = critical
    std::uint64_t seed = 1;
    int samples = 200;
    double margin = 0.1;
    std::map<std::string, double> tolerances;  // overrides of the defaults

    static RunConfig from_stream(std::istream& in);
    static RunConfig from_file(const std::string& path);

    double tolerance(const std::string& name) const;
};

// the pinned default tolerance per named check
const std::map<std::string, double>& default_tolerances();

// materialise the configured system (builtin name or roots file)
RootSystem resolve_root_system(const RunConfig& cfg);
DunklContext resolve_context(const RunConfig& cfg);

}  // namespace confdunkl
