#pragma once

#include "toricpack/delzant.hpp"
#include "toricpack/polytope.hpp"
#include "toricpack/simplex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toricpack {

/// A set of open integral simplices anchored at vertices of a host
/// polytope, candidate for the coherence conditions.
struct CoherentFamily {
    Polytope host;
    std::vector<OpenSimplex> simplices;
};

struct MemberVerdict {
    bool anchored_at_vertex = false;  // anchor is a vertex of the host
    bool faces_in_boundary = false;   // every facet through the anchor lies in a host facet
    bool integral = false;            // integral simplex
    bool inside_host = false;         // closure contained in the host
    bool ok() const { return anchored_at_vertex && faces_in_boundary && integral && inside_host; }
};

/// Full verdict of the coherence conditions plus pairwise disjointness
/// and the Euler-characteristic size bound.
struct FamilyVerdict {
    bool size_ok = false;
    std::vector<MemberVerdict> members;
    std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs;
    bool valid = false;
};

/// Certified packing-density interval with the best validated witness.
struct PackingReport {
    Rational lower;
    Rational upper;
    bool exact = false;
    bool perfect = false;
    std::vector<OpenSimplex> witness;
};

/// The one-parameter family of two-ball packings of an interval: balls of
/// radius a and lambda - a anchored at the two endpoints, 0 < a < lambda.
struct SymbolicSplitFamily {
    QVector anchor_low;
    QVector anchor_high;
    Rational lambda;
};

struct PackingEnumeration {
    std::vector<std::vector<OpenSimplex>> packings;
    std::optional<SymbolicSplitFamily> split_family;
};

struct PackingDecision {
    bool perfect = false;
    PackingEnumeration enumeration;
};

/// Supremal admissible radius at a vertex: the minimum lattice length of
/// its incident edges. Throws "NotSimple" at non-simple vertices.
Rational max_radius(const Polytope& p, std::size_t vertex_id);

FamilyVerdict validate_family(const CoherentFamily& family);

/// Packed volume over host volume; throws "InvalidFamily" when the
/// coherence conditions fail.
Rational family_density(const CoherentFamily& family);

/// Certified packing density. Maximizes the packed volume over the
/// relaxation polytope {0 <= t_v <= max_radius(v), t_u + t_v <= edge
/// length} by exact vertex enumeration, validates optimal assignments,
/// and descends along exact pairwise-overlap cuts when validation fails.
/// budget caps the number of relaxation nodes solved.
PackingReport omega(const Polytope& p, int budget = 64);

/// Perfect-packing decision with enumeration of the perfect packings.
PackingDecision decide_perfect_packing(const Polytope& p);

/// Builds the canonical gluing of two unit simplices along a shared facet
/// and reports whether it satisfies the Delzant conditions (true exactly
/// for n in {1, 2}).
bool check_two_simplex_gluing(std::size_t n);

} // namespace toricpack
