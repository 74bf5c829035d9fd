#include "toricpack/delzant.hpp"

#include "toricpack/error.hpp"

#include <algorithm>
#include <numeric>

namespace toricpack {

namespace {

/// Primitive directions and lattice lengths of the edges at a vertex,
/// ordered lexicographically by direction.
std::pair<std::vector<ZVector>, std::vector<Rational>> edge_data_at(const Polytope& p,
                                                                    std::size_t vertex_id) {
    std::vector<std::pair<ZVector, Rational>> edges;
    for (auto other : p.neighbors(vertex_id)) {
        auto [dir, len] = primitive_direction(p.vertices()[other] - p.vertices()[vertex_id]);
        edges.emplace_back(std::move(dir), std::move(len));
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    std::vector<ZVector> dirs;
    std::vector<Rational> lens;
    for (auto& [d, l] : edges) {
        dirs.push_back(std::move(d));
        lens.push_back(std::move(l));
    }
    return {dirs, lens};
}

} // namespace

DelzantReport check_delzant(const Polytope& p) {
    DelzantReport report;
    report.euler_characteristic = p.vertices().size();
    report.is_delzant = true;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        auto [dirs, lens] = edge_data_at(p, v);
        VertexDiagnostics diag;
        diag.vertex = p.vertices()[v];
        diag.edge_count = dirs.size();
        // Edges of a rational polytope always have rational directions;
        // recorded per vertex for report completeness.
        diag.rational = true;
        diag.smooth = dirs.size() == p.dim() && is_unimodular_frame(dirs);
        report.is_delzant = report.is_delzant && diag.edge_count == p.dim() &&
                            diag.rational && diag.smooth;
        report.vertices.push_back(std::move(diag));
    }
    return report;
}

VertexFrame vertex_frame(const Polytope& p, std::size_t vertex_id) {
    if (vertex_id >= p.vertices().size()) throw Error("VertexRange", "vertex index out of range");
    auto [dirs, lens] = edge_data_at(p, vertex_id);
    if (dirs.size() != p.dim())
        throw Error("NotSimple", "vertex has " + std::to_string(dirs.size()) + " edges, needs " +
                                     std::to_string(p.dim()));
    return {p.vertices()[vertex_id], std::move(dirs), std::move(lens)};
}

OpenSimplex ball_momentum_image(const Polytope& p, std::size_t vertex_id, const Rational& t) {
    const VertexFrame frame = vertex_frame(p, vertex_id);
    if (!is_unimodular_frame(frame.directions))
        throw Error("NotDelzant", "vertex frame is not a lattice basis");
    if (t <= 0) throw Error("DomainError", "ball radius parameter must be positive");
    for (std::size_t i = 0; i < frame.edge_lengths.size(); ++i)
        if (t > frame.edge_lengths[i])
            throw Error("BallTooLarge", "radius " + to_string(t) + " exceeds edge of length " +
                                            to_string(frame.edge_lengths[i]) + " in direction " +
                                            to_string(Int(i)));
    return OpenSimplex(frame.vertex, frame.directions, t);
}

bool is_integral_simplex(const std::vector<QVector>& simplex_vertices, std::size_t anchor_index) {
    const std::size_t count = simplex_vertices.size();
    if (count < 2 || anchor_index >= count)
        throw Error("DegenerateSimplex", "simplex needs dim+1 vertices and a valid anchor");
    const std::size_t n = simplex_vertices[0].size();
    if (count != n + 1) throw Error("DegenerateSimplex", "simplex needs dim+1 vertices");
    if (affine_rank(simplex_vertices) != n)
        throw Error("DegenerateSimplex", "vertices are affinely dependent");

    // Route one: all pairwise edge lattice lengths agree and the Euclidean
    // volume matches d^n/n!.
    bool equal_lengths = true;
    Rational d(0);
    for (std::size_t i = 0; i < count && equal_lengths; ++i)
        for (std::size_t j = i + 1; j < count && equal_lengths; ++j) {
            const Rational len = lattice_length(simplex_vertices[i], simplex_vertices[j]);
            if (d == 0)
                d = len;
            else
                equal_lengths = (len == d);
        }
    QMatrix m;
    for (std::size_t i = 0; i < count; ++i)
        if (i != anchor_index) m.push_back(simplex_vertices[i] - simplex_vertices[anchor_index]);
    const Rational vol = rational_abs(det(m)) / Rational(factorial(static_cast<unsigned>(n)));
    const bool route_lengths =
        equal_lengths && vol == rational_pow(d, static_cast<unsigned>(n)) /
                                    Rational(factorial(static_cast<unsigned>(n)));

    // Route two: the frame anchored at the chosen vertex is unimodular
    // with all edge lengths equal.
    bool route_frame = true;
    std::vector<ZVector> frame;
    Rational d2(0);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == anchor_index) continue;
        auto [dir, len] = primitive_direction(simplex_vertices[i] - simplex_vertices[anchor_index]);
        frame.push_back(std::move(dir));
        if (d2 == 0)
            d2 = len;
        else
            route_frame = route_frame && (len == d2);
    }
    route_frame = route_frame && is_unimodular_frame(frame);

    if (route_lengths != route_frame)
        throw Error("Internal", "integral-simplex routes disagree");
    return route_lengths;
}

SymplecticVolume symplectic_volume(const Polytope& p) {
    return {Rational(factorial(static_cast<unsigned>(p.dim()))) * p.volume(),
            static_cast<int>(p.dim())};
}

std::optional<AffineTransform> agl_equivalent(const Polytope& p, const Polytope& q,
                                              bool strict_sl) {
    if (p.dim() != q.dim()) throw Error("DimensionMismatch", "equivalence in mixed dimensions");
    const std::size_t n = p.dim();
    if (p.vertices().size() != q.vertices().size() || p.volume() != q.volume()) return std::nullopt;

    // Anchor the search at the first vertex of P with a fixed independent
    // n-tuple of its edge directions; any valid map must send it to some
    // vertex of Q and the tuple to edge directions there.
    auto [p_dirs, p_lens] = edge_data_at(p, 0);
    std::vector<ZVector> p_tuple;
    {
        QMatrix acc;
        for (const auto& d : p_dirs) {
            QMatrix trial = acc;
            trial.push_back(to_qvector(d));
            if (rank(trial) == trial.size()) {
                acc = std::move(trial);
                p_tuple.push_back(d);
                if (p_tuple.size() == n) break;
            }
        }
    }
    if (p_tuple.size() != n) return std::nullopt; // cannot happen for full-dim polytopes

    QMatrix u_inv_rows(n, QVector(n));
    {
        // Solve U X = I columnwise to get U^{-1} exactly.
        QMatrix u(n, QVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) u[i][j] = Rational(p_tuple[j][i]);
        for (std::size_t col = 0; col < n; ++col) {
            QVector e(n, Rational(0));
            e[col] = 1;
            auto x = solve_square(u, e);
            for (std::size_t i = 0; i < n; ++i) u_inv_rows[i][col] = (*x)[i];
        }
    }

    const auto verify = [&](const ZMatrix& a, const QVector& w) {
        std::vector<QVector> mapped;
        mapped.reserve(p.vertices().size());
        for (const auto& v : p.vertices()) mapped.push_back(apply_affine(a, v, w));
        std::sort(mapped.begin(), mapped.end(),
                  [](const QVector& x, const QVector& y) { return lex_less(x, y); });
        return mapped == q.vertices();
    };

    for (std::size_t qi = 0; qi < q.vertices().size(); ++qi) {
        auto [q_dirs, q_lens] = edge_data_at(q, qi);
        if (q_dirs.size() < n) continue;
        std::vector<std::size_t> pick(q_dirs.size());
        std::iota(pick.begin(), pick.end(), 0);
        // All ordered n-tuples of edge directions at the target vertex.
        std::vector<std::size_t> idx(n, 0);
        std::vector<bool> used(q_dirs.size(), false);
        std::vector<std::size_t> tuple;
        bool found = false;
        AffineTransform result;
        const auto rec = [&](auto&& self) -> void {
            if (found) return;
            if (tuple.size() == n) {
                // A maps p_tuple[k] to q_dirs[tuple[k]]: A = W * U^{-1}.
                ZMatrix a(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        Rational s(0);
                        for (std::size_t k = 0; k < n; ++k)
                            s += Rational(q_dirs[tuple[k]][i]) * u_inv_rows[k][j];
                        if (rat_den(s) != 1) return;
                        a.at(i, j) = rat_num(s);
                    }
                const Int da = det(a);
                if (strict_sl ? da != 1 : (da != 1 && da != -1)) return;
                QVector w = q.vertices()[qi];
                const QVector ap = apply_affine(a, p.vertices()[0], QVector(n, Rational(0)));
                w = w - ap;
                if (verify(a, w)) {
                    found = true;
                    result = {a, w};
                }
                return;
            }
            for (std::size_t c = 0; c < q_dirs.size() && !found; ++c) {
                if (used[c]) continue;
                used[c] = true;
                tuple.push_back(c);
                self(self);
                tuple.pop_back();
                used[c] = false;
            }
        };
        rec(rec);
        if (found) return result;
    }
    return std::nullopt;
}

Polytope model_projective_space(std::size_t n, const Rational& lambda) {
    if (n == 0 || lambda <= 0)
        throw Error("DomainError", "projective-space model needs n >= 1, lambda > 0");
    std::vector<QVector> pts;
    pts.push_back(QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, Rational(0));
        e[i] = lambda;
        pts.push_back(std::move(e));
    }
    return Polytope::from_vertices(std::move(pts));
}

Polytope model_product_cp1_cp1(const Rational& lambda) {
    if (lambda <= 0) throw Error("DomainError", "product model needs lambda > 0");
    std::vector<QVector> pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            pts.push_back({a ? lambda : Rational(0), b ? lambda : Rational(0)});
    return Polytope::from_vertices(std::move(pts));
}

ClassificationResult classify(const Polytope& p, bool strict_sl) {
    const DelzantReport report = check_delzant(p);
    if (!report.is_delzant) throw Error("NotDelzant", "classification needs a Delzant polytope");

    // Both models have all edges of one lattice length lambda, so lambda
    // is read off the edges first; this keeps everything rational.
    Rational lambda(0);
    bool all_equal = true;
    for (const auto& face : p.face_lattice()) {
        if (face.dim != 1) continue;
        const Rational len = lattice_length(p.vertices()[face.vertex_ids[0]],
                                            p.vertices()[face.vertex_ids[1]]);
        if (lambda == 0)
            lambda = len;
        else
            all_equal = all_equal && (len == lambda);
    }
    ClassificationResult result;
    if (!all_equal || lambda == 0) return result;

    const std::size_t n = p.dim();
    if (p.vertices().size() == n + 1) {
        const Polytope model = model_projective_space(n, lambda);
        if (auto t = agl_equivalent(model, p, strict_sl)) {
            result.model = {ModelId::Kind::ProjectiveSpace, n, lambda};
            result.transform = std::move(t);
            return result;
        }
    }
    if (n == 2 && p.vertices().size() == 4) {
        const Polytope model = model_product_cp1_cp1(lambda);
        if (auto t = agl_equivalent(model, p, strict_sl)) {
            result.model = {ModelId::Kind::ProductCP1xCP1, 2, lambda};
            result.transform = std::move(t);
            return result;
        }
    }
    return result;
}

Polytope blow_up(const Polytope& p, std::size_t vertex_id, const Rational& t) {
    const DelzantReport report = check_delzant(p);
    if (!report.is_delzant) throw Error("NotDelzant", "blow-up needs a Delzant polytope");
    const VertexFrame frame = vertex_frame(p, vertex_id);
    for (const auto& len : frame.edge_lengths)
        if (t >= len)
            throw Error("ChopTooDeep", "chop depth " + to_string(t) +
                                           " reaches the incident edge of length " + to_string(len));
    if (t <= 0) throw Error("DomainError", "chop depth must be positive");

    // Cut off the open simplex at the vertex: keep <xi, x - v> >= t for
    // the dual functional xi of the frame.
    const OpenSimplex ball(frame.vertex, frame.directions, t);
    auto [xi, level] = ball.removed_face_hyperplane();

    std::vector<HalfSpace> constraints = p.facets();
    constraints.push_back({xi, level});
    Polytope chopped = Polytope::from_halfspaces(constraints);

    const Rational expected = p.volume() - ball.volume();
    if (chopped.volume() != expected)
        throw Error("NotDelzantResult",
                    "chop of depth " + to_string(t) + " interacts with non-adjacent facets");
    const DelzantReport after = check_delzant(chopped);
    if (!after.is_delzant)
        throw Error("NotDelzantResult", "chopped polytope fails the Delzant conditions");
    return chopped;
}

} // namespace toricpack
