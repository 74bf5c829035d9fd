#pragma once

#include "toricpack/polytope.hpp"
#include "toricpack/simplex.hpp"

#include <optional>
#include <vector>

namespace toricpack {

/// A polytope vertex with the primitive directions and lattice lengths of
/// its incident edges (the isotropy data of the fixed point it encodes).
struct VertexFrame {
    QVector vertex;
    std::vector<ZVector> directions;  // canonical lexicographic order
    std::vector<Rational> edge_lengths;
};

struct VertexDiagnostics {
    QVector vertex;
    std::size_t edge_count = 0;
    bool rational = false;
    bool smooth = false;
};

/// Per-vertex verification of the simple/rational/smooth conditions.
struct DelzantReport {
    bool is_delzant = false;
    std::vector<VertexDiagnostics> vertices;
    std::size_t euler_characteristic = 0; // = number of vertices
};

/// coefficient * pi^pi_power, kept symbolic in pi. For a polytope of
/// dimension n the coefficient is n! times the Euclidean volume.
struct SymplecticVolume {
    Rational coefficient;
    int pi_power = 0;
};

struct ModelId {
    enum class Kind { ProjectiveSpace, ProductCP1xCP1, Other } kind = Kind::Other;
    std::size_t n = 0;   // meaningful for ProjectiveSpace
    Rational lambda;     // meaningful unless Other
};

struct AffineTransform {
    ZMatrix a;
    QVector w;
};

struct ClassificationResult {
    ModelId model;
    std::optional<AffineTransform> transform; // model -> input, A*model + w
};

DelzantReport check_delzant(const Polytope& p);

/// Frame at a simple vertex; throws "NotSimple" otherwise.
VertexFrame vertex_frame(const Polytope& p, std::size_t vertex_id);

/// Momentum image of an equivariantly embedded ball of squared radius t
/// centered over the fixed point at this vertex. Throws "BallTooLarge"
/// when t exceeds the shortest incident edge.
OpenSimplex ball_momentum_image(const Polytope& p, std::size_t vertex_id, const Rational& t);

/// Integral-simplex test per the two equivalent routes (equal edge
/// lattice lengths + volume d^n/n!, and unimodular anchored frame with
/// all lengths d); both are computed and cross-checked.
bool is_integral_simplex(const std::vector<QVector>& simplex_vertices, std::size_t anchor_index);

SymplecticVolume symplectic_volume(const Polytope& p);

/// Searches for an integer-affine map with A*P + w = Q; |det A| = 1, or
/// det A = +1 when strict_sl is set.
std::optional<AffineTransform> agl_equivalent(const Polytope& p, const Polytope& q,
                                              bool strict_sl = false);

/// Matches against the two perfectly packable models: the scaled standard
/// simplex conv{0, lambda*e_i} and, in dimension 2, the square [0,lambda]^2.
ClassificationResult classify(const Polytope& p, bool strict_sl = false);

/// Corner chop of depth t at a vertex: removes the ball momentum image
/// and re-validates the result. Volume drops by exactly t^n/n!.
Polytope blow_up(const Polytope& p, std::size_t vertex_id, const Rational& t);

/// The model polytopes used by classify.
Polytope model_projective_space(std::size_t n, const Rational& lambda);
Polytope model_product_cp1_cp1(const Rational& lambda);

} // namespace toricpack
