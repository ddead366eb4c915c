#pragma once

// Plain-text serialization of root systems and multiplicity assignments.
//
// Roots file: one root per line, n+2 coordinates, '#' comments.  A
// coordinate is a rational "p" or "p/q"; coordinates of embedded systems may
// carry a sqrt2 part written "a+b r2" without spaces, e.g. "1/2r2" or
// "-3+1/2r2".
//
// Companion key-value file: "k.<orbit> = <rational>" multiplicity
// assignments plus informative "orbit.<i> = <root indices>" lines (verified
// against the computed orbits when read back).

#include "confdunkl/roots.hpp"

#include <iosfwd>
#include <string>

namespace confdunkl {

std::string write_roots(const RootSystem& rs);
ValidationReport read_roots(std::istream& in);
ValidationReport read_roots_file(const std::string& path);

std::string write_assignments(const RootSystem& rs, const MultiplicityFunction& k);
MultiplicityFunction read_assignments(const RootSystem& rs, std::istream& in);
MultiplicityFunction read_assignments_file(const RootSystem& rs,
                                           const std::string& path);

}  // namespace confdunkl
