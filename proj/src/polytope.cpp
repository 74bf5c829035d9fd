#include "toricpack/polytope.hpp"

#include "toricpack/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricpack {

namespace {

std::vector<IneqRow> to_rows(const std::vector<HalfSpace>& constraints) {
    std::vector<IneqRow> rows;
    rows.reserve(constraints.size());
    for (const auto& h : constraints) rows.push_back({to_qvector(h.normal), h.offset});
    return rows;
}

HalfSpace normalize_halfspace(const ZVector& normal, const Rational& offset) {
    auto [unit, c] = primitive(normal);
    return {unit, offset / Rational(c)};
}

} // namespace

Polytope Polytope::from_vertices(std::vector<QVector> points) {
    if (points.empty()) throw Error("DegenerateHull", "no input points");
    const std::size_t n = points[0].size();
    if (n == 0) throw Error("DegenerateHull", "zero-dimensional ambient space");
    for (const auto& p : points)
        if (p.size() != n) throw Error("DimensionMismatch", "points of mixed dimension");

    {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end(), [](const QVector& a, const QVector& b) {
            return lex_less(a, b);
        });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("DuplicatePoint", "input contains a repeated point");
    }
    if (const std::size_t r = affine_rank(points); r < n)
        throw Error("DegenerateHull",
                    "input spans an affine subspace of dimension " + std::to_string(r));

    // Exhaustive facet search: every supporting hyperplane is the affine
    // span of some n-subset of the input. Exact rank checks, no pivot
    // tolerances; fine for the small polytopes this library targets.
    std::map<std::pair<ZVector, Rational>, bool> seen;
    std::vector<HalfSpace> facets;
    std::vector<std::size_t> chosen;
    const auto consider = [&]() {
        QMatrix dirs;
        for (std::size_t i = 1; i < chosen.size(); ++i)
            dirs.push_back(points[chosen[i]] - points[chosen[0]]);
        if (!dirs.empty() && rank(dirs) != n - 1) return;
        if (dirs.empty() && n != 1) return;
        auto kernel = kernel_basis(dirs.empty() ? QMatrix{QVector(n, Rational(0))} : dirs);
        if (kernel.size() != 1) return;
        auto [normal, scale_factor] = primitive_direction(kernel[0]);
        (void)scale_factor;
        const Rational offset = dot(normal, points[chosen[0]]);
        int side = 0; // +1: all >=, -1: all <=
        for (const auto& p : points) {
            const Rational v = dot(normal, p) - offset;
            if (v > 0) {
                if (side < 0) return;
                side = 1;
            } else if (v < 0) {
                if (side > 0) return;
                side = -1;
            }
        }
        ZVector oriented = normal;
        Rational b = offset;
        if (side < 0) {
            for (auto& c : oriented) c = -c;
            b = -b;
        }
        if (side == 0) return; // all points on the hyperplane: impossible for spanning input
        if (seen.emplace(std::make_pair(oriented, b), true).second)
            facets.push_back({oriented, b});
    };
    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == n) {
            consider();
            return;
        }
        if (points.size() - start < n - chosen.size()) return;
        for (std::size_t i = start; i < points.size(); ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);

    return build(std::move(points), std::move(facets));
}

Polytope Polytope::from_halfspaces(const std::vector<HalfSpace>& constraints) {
    if (constraints.empty()) throw Error("Unbounded", "no constraints");
    const std::size_t n = constraints[0].normal.size();
    std::vector<HalfSpace> normalized;
    normalized.reserve(constraints.size());
    for (const auto& h : constraints) {
        if (h.normal.size() != n) throw Error("DimensionMismatch", "constraints of mixed dimension");
        normalized.push_back(normalize_halfspace(h.normal, h.offset));
    }
    const auto rows = to_rows(normalized);

    auto candidates = basic_feasible_points(rows, n);
    if (candidates.empty()) {
        if (!has_recession_ray(rows, n))
            throw Error("DegenerateHull", "empty intersection");
        if (fm_feasible(rows, n))
            throw Error("Unbounded", "intersection has a recession direction");
        throw Error("DegenerateHull", "empty intersection");
    }
    if (has_recession_ray(rows, n))
        throw Error("Unbounded", "intersection has a recession direction");
    if (affine_rank(candidates) < n)
        throw Error("DegenerateHull", "intersection is not full-dimensional");
    return from_vertices(std::move(candidates));
}

Polytope Polytope::build(std::vector<QVector> hull_candidates, std::vector<HalfSpace> facets) {
    const std::size_t n = hull_candidates[0].size();
    std::sort(facets.begin(), facets.end(), [](const HalfSpace& a, const HalfSpace& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    });

    // Keep exactly the extreme points: those whose tight facet normals
    // span the ambient space.
    std::vector<QVector> vertices;
    for (auto& p : hull_candidates) {
        QMatrix tight;
        for (const auto& f : facets)
            if (dot(f.normal, p) == f.offset) tight.push_back(to_qvector(f.normal));
        if (tight.size() >= n && rank(tight) == n) vertices.push_back(std::move(p));
    }
    std::sort(vertices.begin(), vertices.end(), [](const QVector& a, const QVector& b) {
        return lex_less(a, b);
    });
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() < n + 1)
        throw Error("DegenerateHull", "fewer than dim+1 extreme points");

    Polytope poly;
    poly.dim_ = n;
    poly.vertices_ = std::move(vertices);
    poly.facets_ = std::move(facets);

    poly.incidence_.assign(poly.vertices_.size(),
                           std::vector<bool>(poly.facets_.size(), false));
    for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
        for (std::size_t f = 0; f < poly.facets_.size(); ++f) {
            const Rational val = dot(poly.facets_[f].normal, poly.vertices_[v]);
            if (val < poly.facets_[f].offset)
                throw Error("DegenerateHull", "vertex violates a facet constraint");
            poly.incidence_[v][f] = (val == poly.facets_[f].offset);
        }

    poly.build_face_lattice();
    poly.compute_volume();
    return poly;
}

void Polytope::build_face_lattice() {
    const std::size_t nv = vertices_.size();
    const std::size_t nf = facets_.size();

    // closure(W) = vertices lying on every facet that contains all of W.
    const auto closure = [&](const std::set<std::size_t>& w) {
        std::vector<std::size_t> common_facets;
        for (std::size_t f = 0; f < nf; ++f) {
            bool all = true;
            for (auto v : w) all = all && incidence_[v][f];
            if (all) common_facets.push_back(f);
        }
        std::set<std::size_t> cl;
        for (std::size_t v = 0; v < nv; ++v) {
            bool on_all = true;
            for (auto f : common_facets) on_all = on_all && incidence_[v][f];
            if (on_all && !common_facets.empty()) cl.insert(v);
        }
        return std::make_pair(cl, common_facets);
    };

    std::set<std::set<std::size_t>> known;
    std::vector<std::set<std::size_t>> frontier;
    for (std::size_t v = 0; v < nv; ++v) {
        std::set<std::size_t> atom{v};
        if (known.insert(atom).second) frontier.push_back(atom);
    }
    // Join-closure: every face is the closure of its vertex set.
    while (!frontier.empty()) {
        std::vector<std::set<std::size_t>> next;
        for (const auto& w : frontier)
            for (std::size_t v = 0; v < nv; ++v) {
                if (w.count(v)) continue;
                auto joined = w;
                joined.insert(v);
                auto [cl, facs] = closure(joined);
                if (cl.empty() || cl.size() == nv) continue; // improper
                if (known.insert(cl).second) next.push_back(cl);
            }
        frontier = std::move(next);
    }

    faces_.clear();
    for (const auto& vset : known) {
        Face face;
        face.vertex_ids.assign(vset.begin(), vset.end());
        std::vector<QVector> pts;
        for (auto v : face.vertex_ids) pts.push_back(vertices_[v]);
        face.dim = affine_rank(pts);
        auto [cl, facs] = closure(vset);
        if (cl != vset) continue; // not closed: joined set was not a face
        face.facet_ids = std::move(facs);
        faces_.push_back(std::move(face));
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
}

std::vector<Face> Polytope::faces(std::size_t k) const {
    if (k >= dim_) throw Error("FaceRange", "face dimension out of range");
    std::vector<Face> out;
    for (const auto& f : faces_)
        if (f.dim == k) out.push_back(f);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edge_pairs() const {
    if (dim_ == 1) return {{0, 1}};
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& f : faces_)
        if (f.dim == 1) out.emplace_back(f.vertex_ids[0], f.vertex_ids[1]);
    return out;
}

std::vector<std::size_t> Polytope::neighbors(std::size_t vertex_id) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edge_pairs()) {
        if (a == vertex_id) out.push_back(b);
        if (b == vertex_id) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Polytope::compute_volume() {
    // Fan triangulation driven by the face lattice: triangulate each face
    // from its lex-least vertex, then cone the facet simplices over a
    // fixed apex of the polytope.
    std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo;

    const auto subfaces_of = [&](const Face& face) {
        std::vector<const Face*> subs;
        for (const auto& g : faces_) {
            if (g.dim + 1 != face.dim) continue;
            if (std::includes(face.vertex_ids.begin(), face.vertex_ids.end(),
                              g.vertex_ids.begin(), g.vertex_ids.end()))
                subs.push_back(&g);
        }
        return subs;
    };

    const auto triangulate = [&](auto&& self, const Face& face)
        -> const std::vector<std::vector<std::size_t>>& {
        auto it = memo.find(face.vertex_ids);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<std::size_t>> simplices;
        if (face.dim == 0) {
            simplices.push_back(face.vertex_ids);
        } else {
            const std::size_t apex = face.vertex_ids.front();
            for (const auto* sub : subfaces_of(face)) {
                if (std::find(sub->vertex_ids.begin(), sub->vertex_ids.end(), apex) !=
                    sub->vertex_ids.end())
                    continue;
                for (auto simplex : self(self, *sub)) {
                    simplex.push_back(apex);
                    simplices.push_back(std::move(simplex));
                }
            }
        }
        return memo.emplace(face.vertex_ids, std::move(simplices)).first->second;
    };

    const std::size_t apex = 0;
    Rational total(0);
    const Rational nf(factorial(static_cast<unsigned>(dim_)));
    for (const auto& facet_face : faces_) {
        if (facet_face.dim + 1 != dim_) continue;
        if (std::find(facet_face.vertex_ids.begin(), facet_face.vertex_ids.end(), apex) !=
            facet_face.vertex_ids.end())
            continue;
        for (const auto& simplex : triangulate(triangulate, facet_face)) {
            QMatrix m;
            for (auto v : simplex) m.push_back(vertices_[v] - vertices_[apex]);
            total += rational_abs(det(m)) / nf;
        }
    }
    volume_ = total;
}

Polytope::Containment Polytope::contains(const QVector& x) const {
    if (x.size() != dim_) throw Error("DimensionMismatch", "containment query dimension");
    std::set<std::size_t> tight;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
        const Rational v = dot(facets_[f].normal, x) - facets_[f].offset;
        if (v < 0) return {Where::Outside, std::nullopt};
        if (v == 0) tight.insert(f);
    }
    if (tight.empty()) return {Where::Interior, std::nullopt};
    // Minimal face containing x: vertices on every facet tight at x.
    std::vector<std::size_t> vset;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        bool on_all = true;
        for (auto f : tight) on_all = on_all && incidence_[v][f];
        if (on_all) vset.push_back(v);
    }
    for (const auto& face : faces_)
        if (face.vertex_ids == vset) return {Where::Boundary, face};
    // Tight set not matching a lattice face cannot happen for consistent data.
    throw Error("Internal", "boundary point without a minimal face");
}

std::optional<std::size_t> Polytope::vertex_index(const QVector& x) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                                     [](const QVector& a, const QVector& b) {
                                         return lex_less(a, b);
                                     });
    if (it != vertices_.end() && *it == x)
        return static_cast<std::size_t>(it - vertices_.begin());
    return std::nullopt;
}

Intersection intersect(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim())
        throw Error("DimensionMismatch", "intersection of mixed dimensions");
    const std::size_t n = p.dim();
    std::vector<HalfSpace> combined = p.facets();
    combined.insert(combined.end(), q.facets().begin(), q.facets().end());
    const auto rows = normalize_rows(to_rows(combined));

    auto candidates = basic_feasible_points(rows, n);
    Intersection result;
    if (candidates.empty()) {
        result.kind = Intersection::Kind::Empty;
        return result;
    }
    const std::size_t d = affine_rank(candidates);
    result.dim = d;
    result.points = std::move(candidates);
    if (d == n) {
        result.kind = Intersection::Kind::Full;
        result.polytope = Polytope::from_vertices(result.points);
        result.points = result.polytope->vertices();
    } else {
        result.kind = Intersection::Kind::LowerDim;
        // Filter the basic points down to the extreme ones by working in
        // coordinates on the affine hull.
        if (d >= 1 && result.points.size() > d + 1) {
            const QVector origin = result.points[0];
            QMatrix basis;
            for (std::size_t i = 1; i < result.points.size() && basis.size() < d; ++i) {
                QMatrix trial = basis;
                trial.push_back(result.points[i] - origin);
                if (rank(trial) == trial.size()) basis = std::move(trial);
            }
            // Coordinates of x - origin in the basis: solve B^T in the
            // least-squares-free exact sense via the Gram system.
            QMatrix gram(d, QVector(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(basis[i], basis[j]);
            std::vector<QVector> local;
            for (const auto& pt : result.points) {
                QVector rhs(d);
                const QVector diff = pt - origin;
                for (std::size_t i = 0; i < d; ++i) rhs[i] = dot(basis[i], diff);
                auto coords = solve_square(gram, rhs);
                local.push_back(*coords);
            }
            // Extreme points of the lower-dimensional polytope.
            std::vector<QVector> extreme;
            const Polytope flat = Polytope::from_vertices(local);
            for (std::size_t i = 0; i < local.size(); ++i)
                if (flat.vertex_index(local[i]).has_value())
                    extreme.push_back(result.points[i]);
            result.points = std::move(extreme);
        }
        std::sort(result.points.begin(), result.points.end(),
                  [](const QVector& a, const QVector& b) { return lex_less(a, b); });
        result.points.erase(std::unique(result.points.begin(), result.points.end()),
                            result.points.end());
    }
    return result;
}

Polytope transform(const Polytope& p, const ZMatrix& a, const QVector& w) {
    std::vector<QVector> mapped;
    mapped.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) mapped.push_back(apply_affine(a, v, w));
    return Polytope::from_vertices(std::move(mapped));
}

Polytope dilate(const Polytope& p, const Rational& s) {
    if (s <= 0) throw Error("DomainError", "dilation factor must be positive");
    std::vector<QVector> mapped;
    mapped.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) mapped.push_back(scale(s, v));
    return Polytope::from_vertices(std::move(mapped));
}

} // namespace toricpack
