#include "toricpack/simplex.hpp"

#include "toricpack/error.hpp"
#include "toricpack/polytope.hpp"

namespace toricpack {

OpenSimplex::OpenSimplex(QVector anchor, std::vector<ZVector> directions, Rational radius)
    : anchor_(std::move(anchor)), directions_(std::move(directions)), radius_(std::move(radius)) {
    if (directions_.size() != anchor_.size())
        throw Error("DimensionMismatch", "open simplex needs dim directions");
    if (radius_ <= 0) throw Error("DomainError", "open simplex radius must be positive");
    if (!is_unimodular_frame(directions_))
        throw Error("NotUnimodular", "open simplex frame is not a lattice basis");
}

std::vector<QVector> OpenSimplex::closure_vertices() const {
    std::vector<QVector> vs;
    vs.reserve(directions_.size() + 1);
    vs.push_back(anchor_);
    for (const auto& u : directions_) vs.push_back(anchor_ + scale(radius_, to_qvector(u)));
    return vs;
}

std::vector<QVector> OpenSimplex::removed_face_vertices() const {
    auto vs = closure_vertices();
    vs.erase(vs.begin());
    return vs;
}

std::pair<ZVector, Rational> OpenSimplex::removed_face_hyperplane() const {
    // Solve U^T xi = (1,...,1). With U unimodular the solution is integer,
    // and its coordinates in the dual basis are all 1, hence primitive.
    const std::size_t n = dim();
    QMatrix ut(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ut[i][j] = Rational(directions_[i][j]);
    auto xi = solve_square(std::move(ut), QVector(n, Rational(1)));
    ZVector normal(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (rat_den((*xi)[j]) != 1)
            throw Error("Internal", "dual functional of a unimodular frame must be integer");
        normal[j] = rat_num((*xi)[j]);
    }
    const Rational level = dot(normal, anchor_) + radius_;
    return {normal, level};
}

bool OpenSimplex::contains_point(const QVector& x) const {
    // Coordinates c with x = anchor + sum c_i u_i; inside iff c >= 0 and
    // sum c_i < t (the removed facet is sum c_i = t).
    const std::size_t n = dim();
    QMatrix u(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i][j] = Rational(directions_[j][i]);
    auto c = solve_square(std::move(u), x - anchor_);
    Rational sum(0);
    for (const auto& ci : *c) {
        if (ci < 0) return false;
        sum += ci;
    }
    return sum < radius_;
}

Rational OpenSimplex::volume() const {
    return rational_pow(radius_, static_cast<unsigned>(dim())) /
           Rational(factorial(static_cast<unsigned>(dim())));
}

bool open_disjoint(const OpenSimplex& s, const OpenSimplex& t) {
    if (s.dim() != t.dim()) throw Error("DimensionMismatch", "disjointness in mixed dimensions");
    const Polytope sc = Polytope::from_vertices(s.closure_vertices());
    const Polytope tc = Polytope::from_vertices(t.closure_vertices());
    const Intersection meet = intersect(sc, tc);
    if (meet.kind == Intersection::Kind::Empty) return true;

    // The intersection is convex, so it avoids both open simplices exactly
    // when it lies inside one of the two removed-facet hyperplanes.
    const auto on_hyperplane = [&](const std::pair<ZVector, Rational>& plane) {
        for (const auto& p : meet.points)
            if (dot(plane.first, p) != plane.second) return false;
        return true;
    };
    return on_hyperplane(s.removed_face_hyperplane()) ||
           on_hyperplane(t.removed_face_hyperplane());
}

} // namespace toricpack
