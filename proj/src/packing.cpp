#include "toricpack/packing.hpp"

#include "toricpack/catalog.hpp"
#include "toricpack/error.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace toricpack {

Rational max_radius(const Polytope& p, std::size_t vertex_id) {
    const VertexFrame frame = vertex_frame(p, vertex_id);
    Rational best = frame.edge_lengths[0];
    for (const auto& len : frame.edge_lengths) best = std::min(best, len);
    return best;
}

FamilyVerdict validate_family(const CoherentFamily& family) {
    const Polytope& host = family.host;
    FamilyVerdict verdict;
    verdict.size_ok = family.simplices.size() <= host.vertices().size();

    for (const auto& simplex : family.simplices) {
        MemberVerdict member;
        member.anchored_at_vertex = host.vertex_index(simplex.anchor()).has_value();

        const auto closure = simplex.closure_vertices();
        member.inside_host = true;
        for (const auto& v : closure)
            member.inside_host =
                member.inside_host && host.contains(v).where != Polytope::Where::Outside;

        // Each facet of the simplex through the anchor must land inside a
        // single host facet; testing its vertices against the facet
        // hyperplane suffices because the simplex lies in the host.
        member.faces_in_boundary = true;
        for (std::size_t skip = 1; skip < closure.size(); ++skip) {
            bool in_some_facet = false;
            for (const auto& facet : host.facets()) {
                bool all_tight = true;
                for (std::size_t i = 0; i < closure.size(); ++i) {
                    if (i == skip) continue;
                    all_tight = all_tight && dot(facet.normal, closure[i]) == facet.offset;
                }
                if (all_tight) {
                    in_some_facet = true;
                    break;
                }
            }
            member.faces_in_boundary = member.faces_in_boundary && in_some_facet;
        }
        member.faces_in_boundary = member.faces_in_boundary && member.inside_host;

        member.integral = is_integral_simplex(closure, 0);
        verdict.members.push_back(member);
    }

    for (std::size_t i = 0; i < family.simplices.size(); ++i)
        for (std::size_t j = i + 1; j < family.simplices.size(); ++j)
            if (!open_disjoint(family.simplices[i], family.simplices[j]))
                verdict.overlapping_pairs.emplace_back(i, j);

    verdict.valid = verdict.size_ok && verdict.overlapping_pairs.empty();
    for (const auto& member : verdict.members) verdict.valid = verdict.valid && member.ok();
    return verdict;
}

Rational family_density(const CoherentFamily& family) {
    const FamilyVerdict verdict = validate_family(family);
    if (!verdict.valid) {
        std::string why = !verdict.size_ok ? "family exceeds the Euler characteristic bound"
                                           : "a coherence condition fails";
        if (!verdict.overlapping_pairs.empty()) why = "members overlap";
        for (const auto& m : verdict.members)
            if (!m.anchored_at_vertex) why = "a member is not anchored at a host vertex";
        throw Error("InvalidFamily", why);
    }
    Rational packed(0);
    for (const auto& s : family.simplices) packed += s.volume();
    return packed / family.host.volume();
}

namespace {

struct EdgeConstraint {
    std::size_t u, v;
    Rational length;
};

/// Exact projection of the closed-overlap region of the simplices grown
/// at two vertices onto their radius plane (a, b). The open-overlap
/// region is the interior of the result.
std::vector<IneqRow> pairwise_overlap_region(const Polytope& p, std::size_t u, std::size_t v) {
    const std::size_t n = p.dim();
    const VertexFrame fu = vertex_frame(p, u);
    const VertexFrame fv = vertex_frame(p, v);

    const auto inverse_rows = [n](const std::vector<ZVector>& dirs) {
        QMatrix m(n, QVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(dirs[j][i]);
        QMatrix inv(n, QVector(n));
        for (std::size_t col = 0; col < n; ++col) {
            QVector e(n, Rational(0));
            e[col] = 1;
            auto x = solve_square(m, e);
            for (std::size_t i = 0; i < n; ++i) inv[i][col] = (*x)[i];
        }
        return inv;
    };
    const QMatrix inv_u = inverse_rows(fu.directions);
    const QMatrix inv_v = inverse_rows(fv.directions);

    // Variables (x_1..x_n, a, b); rows <coeffs, z> >= rhs.
    std::vector<IneqRow> rows;
    const auto add_simplex_rows = [&](const QMatrix& inv, const QVector& anchor,
                                      std::size_t radius_var) {
        QVector colsum(n, Rational(0));
        Rational anchor_sum(0);
        for (std::size_t i = 0; i < n; ++i) {
            // c_i(x) = sum_j inv[i][j] (x_j - anchor_j) >= 0
            IneqRow row;
            row.coeffs.assign(n + 2, Rational(0));
            Rational rhs(0);
            for (std::size_t j = 0; j < n; ++j) {
                row.coeffs[j] = inv[i][j];
                rhs += inv[i][j] * anchor[j];
                colsum[j] += inv[i][j];
            }
            anchor_sum += rhs;
            row.rhs = rhs;
            rows.push_back(std::move(row));
        }
        // radius - sum_i c_i(x) >= 0
        IneqRow cap;
        cap.coeffs.assign(n + 2, Rational(0));
        for (std::size_t j = 0; j < n; ++j) cap.coeffs[j] = -colsum[j];
        cap.coeffs[radius_var] = 1;
        cap.rhs = -anchor_sum;
        rows.push_back(std::move(cap));
    };
    add_simplex_rows(inv_u, fu.vertex, n);
    add_simplex_rows(inv_v, fv.vertex, n + 1);
    for (std::size_t var : {n, n + 1}) {
        IneqRow nonneg;
        nonneg.coeffs.assign(n + 2, Rational(0));
        nonneg.coeffs[var] = 1;
        nonneg.rhs = 0;
        rows.push_back(std::move(nonneg));
    }
    return fm_project(std::move(rows), n + 2, n);
}

struct Node {
    std::vector<IneqRow> extra_rows;
    Rational bound;     // parent's relaxation optimum (root: +inf marker)
    std::size_t id = 0; // deterministic tie-break
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound < b.bound; // max-heap on bound
        return a.id > b.id;
    }
};

} // namespace

PackingReport omega(const Polytope& p, int budget) {
    const DelzantReport report = check_delzant(p);
    if (!report.is_delzant) throw Error("NotDelzant", "packing density needs a Delzant polytope");

    const std::size_t nv = p.vertices().size();
    const std::size_t n = p.dim();
    const unsigned un = static_cast<unsigned>(n);
    const Rational n_factorial(factorial(un));
    const Rational host_volume = p.volume();

    std::vector<Rational> caps(nv);
    for (std::size_t v = 0; v < nv; ++v) caps[v] = max_radius(p, v);
    std::vector<EdgeConstraint> edges;
    for (const auto& [a, b] : p.edge_pairs())
        edges.push_back({a, b, lattice_length(p.vertices()[a], p.vertices()[b])});

    std::vector<IneqRow> base_rows;
    for (std::size_t v = 0; v < nv; ++v) {
        IneqRow lo, hi;
        lo.coeffs.assign(nv, Rational(0));
        lo.coeffs[v] = 1;
        lo.rhs = 0;
        hi.coeffs.assign(nv, Rational(0));
        hi.coeffs[v] = -1;
        hi.rhs = -caps[v];
        base_rows.push_back(std::move(lo));
        base_rows.push_back(std::move(hi));
    }
    for (const auto& e : edges) {
        IneqRow row;
        row.coeffs.assign(nv, Rational(0));
        row.coeffs[e.u] = -1;
        row.coeffs[e.v] = -1;
        row.rhs = -e.length;
        base_rows.push_back(std::move(row));
    }

    const auto objective = [&](const QVector& t) {
        Rational s(0);
        for (const auto& tv : t) s += rational_pow(tv, un);
        return Rational(s / n_factorial); // packed volume
    };

    const auto family_for = [&](const QVector& t) {
        CoherentFamily family{p, {}};
        for (std::size_t v = 0; v < nv; ++v)
            if (t[v] > 0) family.simplices.push_back(ball_momentum_image(p, v, t[v]));
        return family;
    };

    // Branch-and-bound over relaxation nodes: each child strengthens the
    // parent by one facet cut of an exact pairwise-overlap region.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<IneqRow>> overlap_cache;
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open_nodes;
    std::size_t next_id = 0;

    Rational best_obj(0); // packed volume of the best validated family
    QVector best_assignment(nv, Rational(0));
    std::vector<OpenSimplex> best_witness;
    bool have_best = false;
    Rational loose_upper(0);
    {
        // Root bound placeholder: sum of caps^n/n! dominates everything.
        for (std::size_t v = 0; v < nv; ++v) loose_upper += rational_pow(caps[v], un);
        loose_upper /= n_factorial;
    }
    open_nodes.push({{}, loose_upper, next_id++});

    int solved = 0;
    bool exhausted = false;
    Rational frontier_bound(0);

    while (!open_nodes.empty()) {
        if (open_nodes.top().bound <= best_obj && have_best) break;
        if (solved >= budget) {
            exhausted = true;
            frontier_bound = open_nodes.top().bound;
            break;
        }
        const Node node = open_nodes.top();
        open_nodes.pop();
        ++solved;

        std::vector<IneqRow> rows = base_rows;
        rows.insert(rows.end(), node.extra_rows.begin(), node.extra_rows.end());
        const auto points = basic_feasible_points(rows, nv);
        if (points.empty()) continue;

        Rational node_opt(0);
        for (const auto& t : points) node_opt = std::max(node_opt, objective(t));
        if (have_best && node_opt < best_obj) continue;
        if (node_opt == 0) continue;

        std::vector<QVector> optimal;
        for (const auto& t : points)
            if (objective(t) == node_opt) optimal.push_back(t);
        std::sort(optimal.begin(), optimal.end(),
                  [](const QVector& a, const QVector& b) { return lex_less(a, b); });

        bool validated = false;
        bool have_branch = false;
        std::pair<std::size_t, std::size_t> branch_pair{0, 0};
        for (const auto& t : optimal) {
            CoherentFamily family = family_for(t);
            const FamilyVerdict verdict = validate_family(family);
            if (verdict.valid) {
                if (!have_best || node_opt > best_obj ||
                    (node_opt == best_obj && lex_less(t, best_assignment))) {
                    best_obj = node_opt;
                    best_assignment = t;
                    best_witness = family.simplices;
                    have_best = true;
                }
                validated = true;
                break;
            }
            if (!have_branch) {
                // Cap-respecting assignments can only fail on disjointness.
                if (verdict.overlapping_pairs.empty())
                    throw Error("Internal", "relaxation candidate failed without an overlap");
                have_branch = true;
                const auto [i, j] = verdict.overlapping_pairs.front();
                branch_pair = {*family.host.vertex_index(family.simplices[i].anchor()),
                               *family.host.vertex_index(family.simplices[j].anchor())};
            }
        }
        if (validated) continue; // node bound attained exactly

        // Descend: every disjoint assignment fails at least one inequality
        // of the overlap region strictly, so cutting along each facet of
        // that region keeps all of them while excluding the failed point.
        auto key = branch_pair;
        if (key.first > key.second) std::swap(key.first, key.second);
        auto it = overlap_cache.find(key);
        if (it == overlap_cache.end())
            it = overlap_cache
                     .emplace(key, pairwise_overlap_region(p, key.first, key.second))
                     .first;
        for (const auto& region_row : it->second) {
            bool trivial = region_row.coeffs[0] == 0 && region_row.coeffs[1] == 0;
            if (trivial) continue;
            IneqRow cut;
            cut.coeffs.assign(nv, Rational(0));
            cut.coeffs[key.first] = -region_row.coeffs[0];
            cut.coeffs[key.second] = -region_row.coeffs[1];
            cut.rhs = -region_row.rhs;
            Node child;
            child.extra_rows = node.extra_rows;
            child.extra_rows.push_back(std::move(cut));
            child.bound = node_opt;
            child.id = next_id++;
            open_nodes.push(std::move(child));
        }
    }

    PackingReport result;
    result.lower = best_obj / host_volume;
    if (exhausted) {
        const Rational ub = std::max(frontier_bound, best_obj);
        result.upper = ub / host_volume;
    } else {
        result.upper = result.lower;
    }
    result.exact = result.lower == result.upper;
    result.perfect = result.exact && result.lower == 1;
    result.witness = std::move(best_witness);
    return result;
}

PackingDecision decide_perfect_packing(const Polytope& p) {
    const ClassificationResult cls = classify(p);
    PackingDecision decision;
    decision.perfect = cls.model.kind != ModelId::Kind::Other;

    if (cls.model.kind == ModelId::Kind::ProjectiveSpace) {
        const Rational lambda = cls.model.lambda;
        if (p.dim() == 1) {
            // Two single-ball packings plus the one-parameter family of
            // splits between the endpoints.
            for (std::size_t v = 0; v < 2; ++v)
                decision.enumeration.packings.push_back({ball_momentum_image(p, v, lambda)});
            decision.enumeration.split_family =
                SymbolicSplitFamily{p.vertices()[0], p.vertices()[1], lambda};
        } else {
            // One packing: a single ball anchored at the image of the
            // model's corner at the origin.
            const QVector anchor = apply_affine(cls.transform->a,
                                                QVector(p.dim(), Rational(0)),
                                                cls.transform->w);
            decision.enumeration.packings.push_back(
                {ball_momentum_image(p, *p.vertex_index(anchor), lambda)});
        }
    } else if (cls.model.kind == ModelId::Kind::ProductCP1xCP1) {
        const Rational lambda = cls.model.lambda;
        const auto corner = [&](int a, int b) {
            const QVector model_pt = {a ? lambda : Rational(0), b ? lambda : Rational(0)};
            return *p.vertex_index(apply_affine(cls.transform->a, model_pt, cls.transform->w));
        };
        // The two diagonal pairs.
        decision.enumeration.packings.push_back(
            {ball_momentum_image(p, corner(0, 0), lambda),
             ball_momentum_image(p, corner(1, 1), lambda)});
        decision.enumeration.packings.push_back(
            {ball_momentum_image(p, corner(0, 1), lambda),
             ball_momentum_image(p, corner(1, 0), lambda)});
    }

    if (p.dim() <= 2) {
        // The combinatorial solver must agree with the classification.
        const PackingReport report = omega(p);
        const bool perfect_by_density = report.exact && report.lower == 1;
        if (perfect_by_density != decision.perfect)
            throw Error("Internal", "perfect-packing decision disagrees with density solver");
    }
    return decision;
}

bool check_two_simplex_gluing(std::size_t n) {
    return check_delzant(catalog_glued_simplices(n)).is_delzant;
}

} // namespace toricpack
