#pragma once

#include "toricpack/lattice.hpp"
#include "toricpack/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toricpack {

/// Closed half-space {x : <normal, x> >= offset} with an inward-pointing
/// primitive integer normal.
struct HalfSpace {
    ZVector normal;
    Rational offset;

    bool operator==(const HalfSpace&) const = default;
};

/// A proper face, recorded by the vertices and facets incident to it.
struct Face {
    std::size_t dim = 0;
    std::vector<std::size_t> vertex_ids; // sorted
    std::vector<std::size_t> facet_ids;  // sorted; facets containing the face
};

/// Full-dimensional bounded rational polytope carrying both a canonical
/// V-representation (vertices sorted lexicographically) and the derived
/// irredundant H-representation, plus the full face lattice.
class Polytope {
public:
    /// Convex hull of a spanning point set; redundant input points are
    /// dropped. Throws "DuplicatePoint" or "DegenerateHull".
    static Polytope from_vertices(std::vector<QVector> points);

    /// Bounded full-dimensional intersection of half-spaces; throws
    /// "Unbounded" or "DegenerateHull" otherwise.
    static Polytope from_halfspaces(const std::vector<HalfSpace>& constraints);

    std::size_t dim() const { return dim_; }
    const std::vector<QVector>& vertices() const { return vertices_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    bool incident(std::size_t vertex_id, std::size_t facet_id) const {
        return incidence_[vertex_id][facet_id];
    }

    /// All k-faces, 0 <= k <= dim-1. Throws "FaceRange" outside that range.
    std::vector<Face> faces(std::size_t k) const;
    const std::vector<Face>& face_lattice() const { return faces_; }

    /// Exact Euclidean volume (triangulation fanned from a vertex).
    const Rational& volume() const { return volume_; }

    /// Vertex-id pairs of the edges. For dim 1 the segment itself counts
    /// as the unique edge even though it is the improper face.
    std::vector<std::pair<std::size_t, std::size_t>> edge_pairs() const;

    /// Ids of the vertices joined to vertex_id by an edge, sorted.
    std::vector<std::size_t> neighbors(std::size_t vertex_id) const;

    enum class Where { Interior, Boundary, Outside };
    struct Containment {
        Where where;
        std::optional<Face> face; // minimal face containing x when on the boundary
    };
    Containment contains(const QVector& x) const;

    std::optional<std::size_t> vertex_index(const QVector& x) const;

    bool operator==(const Polytope& other) const {
        return dim_ == other.dim_ && vertices_ == other.vertices_;
    }

private:
    Polytope() = default;
    static Polytope build(std::vector<QVector> hull_candidates,
                          std::vector<HalfSpace> facets);
    void build_face_lattice();
    void compute_volume();

    std::size_t dim_ = 0;
    std::vector<QVector> vertices_;
    std::vector<HalfSpace> facets_;
    std::vector<std::vector<bool>> incidence_; // vertex x facet
    std::vector<Face> faces_;                  // all proper faces, dims 0..dim-1
    Rational volume_;
};

/// Exact intersection of two polytopes of equal ambient dimension. A
/// touching, lower-dimensional intersection is a first-class outcome.
struct Intersection {
    enum class Kind { Empty, LowerDim, Full } kind = Kind::Empty;
    std::size_t dim = 0;            // affine dimension when nonempty
    std::vector<QVector> points;    // extreme points when nonempty
    std::optional<Polytope> polytope; // present when full-dimensional
};
Intersection intersect(const Polytope& p, const Polytope& q);

/// Image polytope A*P + w for integer A (|det A| need not be 1 here;
/// callers wanting lattice equivalences pass unimodular A).
Polytope transform(const Polytope& p, const ZMatrix& a, const QVector& w);

/// Uniform dilation s*P for a positive rational s.
Polytope dilate(const Polytope& p, const Rational& s);

} // namespace toricpack
