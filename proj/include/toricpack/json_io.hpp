#pragma once

#include "toricpack/delzant.hpp"
#include "toricpack/packing.hpp"
#include "toricpack/polytope.hpp"

#include <string>

namespace toricpack {

// All documents use rationals encoded as "p/q" strings ("p" when q = 1).
// Polytopes travel in V-representation only:
//   {"dim": n, "vertices": [["p/q", ...], ...]}

std::string polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const std::string& text);

std::string delzant_report_to_json(const DelzantReport& report);
std::string classification_to_json(const ClassificationResult& result);
std::string packing_report_to_json(const PackingReport& report);
std::string packing_decision_to_json(const PackingDecision& decision, bool enumerate);
std::string family_verdict_to_json(const FamilyVerdict& verdict);

} // namespace toricpack
