#pragma once

#include "toricpack/lattice.hpp"
#include "toricpack/linalg.hpp"

#include <utility>
#include <vector>

namespace toricpack {

/// Half-open momentum image of an equivariant ball: the simplex spanned
/// from an anchor vertex by a unimodular frame at scale t, minus the one
/// facet that does not contain the anchor. With t playing the role of
/// r^2, all edges have lattice length t and the volume is t^n/n!.
class OpenSimplex {
public:
    OpenSimplex(QVector anchor, std::vector<ZVector> directions, Rational radius);

    const QVector& anchor() const { return anchor_; }
    const std::vector<ZVector>& directions() const { return directions_; }
    const Rational& radius() const { return radius_; }
    std::size_t dim() const { return anchor_.size(); }

    /// anchor, then anchor + t*u_i in direction order.
    std::vector<QVector> closure_vertices() const;
    /// Vertices of the removed facet (the one opposite the anchor).
    std::vector<QVector> removed_face_vertices() const;

    /// The removed facet lies on {x : <normal, x> = level}; the normal is
    /// the primitive dual functional with <normal, u_i> = 1 for all i.
    std::pair<ZVector, Rational> removed_face_hyperplane() const;

    /// Half-open membership: in the closed simplex but not on the
    /// removed facet.
    bool contains_point(const QVector& x) const;

    /// Euclidean volume t^n/n! of the underlying simplex.
    Rational volume() const;

    bool operator==(const OpenSimplex& other) const {
        return anchor_ == other.anchor_ && directions_ == other.directions_ &&
               radius_ == other.radius_;
    }

private:
    QVector anchor_;
    std::vector<ZVector> directions_;
    Rational radius_;
};

/// True when the two open simplices are disjoint as open sets, i.e. the
/// closed simplices meet only inside the union of the removed facets.
bool open_disjoint(const OpenSimplex& s, const OpenSimplex& t);

} // namespace toricpack
