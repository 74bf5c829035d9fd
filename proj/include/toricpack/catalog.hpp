#pragma once

#include "toricpack/polytope.hpp"

#include <string>
#include <vector>

namespace toricpack {

/// Built-in polytope generators. All entries are Delzant except
/// glued-simplices with n >= 3, which is the canonical negative fixture.
Polytope catalog_cpn(std::size_t n, const Rational& lambda);
Polytope catalog_cp1xcp1(const Rational& lambda);
Polytope catalog_interval(const Rational& lambda);
/// Trapezoid conv{(0,0),(base,0),(1,1),(0,1)} with unit short sides.
Polytope catalog_hirzebruch(const Int& base);
/// Union of two unit simplices glued along a shared facet: [0,2] for
/// n = 1, conv{0, e_1..e_n, (1,..,1)} for n >= 2.
Polytope catalog_glued_simplices(std::size_t n);
/// Closure of a standard ball momentum image: conv{0, t*e_i}.
Polytope catalog_ball_image(std::size_t n, const Rational& t);

/// CLI-facing lookup by entry name with string parameters; throws
/// Error("UnknownCatalog") for unknown names and "ParseError" for bad
/// parameters.
Polytope catalog_lookup(const std::string& name, const std::vector<std::string>& params);

/// Names accepted by catalog_lookup, with parameter hints.
std::vector<std::pair<std::string, std::string>> catalog_entries();

} // namespace toricpack
