#include "toricpack/json_io.hpp"

#include "toricpack/error.hpp"

#include <json.hpp>

namespace toricpack {

using nlohmann::json;

namespace {

json qvector_to_json(const QVector& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(to_string(c));
    return arr;
}

json zmatrix_to_json(const ZMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

json simplex_to_json(const OpenSimplex& s) {
    return json{{"anchor", qvector_to_json(s.anchor())}, {"t", to_string(s.radius())}};
}

} // namespace

std::string polytope_to_json(const Polytope& p) {
    json doc;
    doc["dim"] = p.dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(qvector_to_json(v));
    doc["vertices"] = std::move(verts);
    return doc.dump();
}

Polytope polytope_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("ParseError", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices") ||
        !doc["dim"].is_number_unsigned() || !doc["vertices"].is_array())
        throw Error("ParseError", "expected {\"dim\": n, \"vertices\": [[...], ...]}");
    const std::size_t n = doc["dim"].get<std::size_t>();
    std::vector<QVector> points;
    for (const auto& row : doc["vertices"]) {
        if (!row.is_array() || row.size() != n)
            throw Error("ParseError", "vertex of wrong dimension");
        QVector v;
        for (const auto& entry : row) {
            if (entry.is_number_integer())
                v.push_back(Rational(Int(entry.get<long long>())));
            else if (entry.is_string())
                v.push_back(parse_rational(entry.get<std::string>()));
            else
                throw Error("ParseError", "vertex coordinates must be rational strings");
        }
        points.push_back(std::move(v));
    }
    return Polytope::from_vertices(std::move(points));
}

std::string delzant_report_to_json(const DelzantReport& report) {
    json doc;
    doc["is_delzant"] = report.is_delzant;
    doc["chi"] = report.euler_characteristic;
    json verts = json::array();
    for (const auto& diag : report.vertices)
        verts.push_back(json{{"vertex", qvector_to_json(diag.vertex)},
                             {"edge_count", diag.edge_count},
                             {"rational", diag.rational},
                             {"smooth", diag.smooth}});
    doc["vertices"] = std::move(verts);
    return doc.dump();
}

std::string classification_to_json(const ClassificationResult& result) {
    json doc;
    switch (result.model.kind) {
        case ModelId::Kind::ProjectiveSpace:
            doc["model"] = json{{"kind", "projective_space"},
                                {"n", result.model.n},
                                {"lambda", to_string(result.model.lambda)}};
            break;
        case ModelId::Kind::ProductCP1xCP1:
            doc["model"] =
                json{{"kind", "product_cp1_cp1"}, {"lambda", to_string(result.model.lambda)}};
            break;
        case ModelId::Kind::Other:
            doc["model"] = json{{"kind", "other"}};
            break;
    }
    if (result.transform) {
        doc["transform"] = json{{"A", zmatrix_to_json(result.transform->a)},
                                {"w", qvector_to_json(result.transform->w)}};
    }
    return doc.dump();
}

std::string packing_report_to_json(const PackingReport& report) {
    json doc;
    doc["lower"] = to_string(report.lower);
    doc["upper"] = to_string(report.upper);
    doc["exact"] = report.exact;
    doc["perfect"] = report.perfect;
    json witness = json::array();
    for (const auto& s : report.witness) witness.push_back(simplex_to_json(s));
    doc["witness"] = std::move(witness);
    return doc.dump();
}

std::string packing_decision_to_json(const PackingDecision& decision, bool enumerate) {
    json doc;
    doc["perfect"] = decision.perfect;
    if (enumerate) {
        json packings = json::array();
        for (const auto& family : decision.enumeration.packings) {
            json simplices = json::array();
            for (const auto& s : family) simplices.push_back(simplex_to_json(s));
            packings.push_back(json{{"kind", "fixed"}, {"simplices", std::move(simplices)}});
        }
        if (decision.enumeration.split_family) {
            const auto& split = *decision.enumeration.split_family;
            packings.push_back(json{{"kind", "one_parameter_family"},
                                    {"parameter", "a"},
                                    {"range", json::array({"0", to_string(split.lambda)})},
                                    {"anchors", json::array({qvector_to_json(split.anchor_low),
                                                             qvector_to_json(split.anchor_high)})}});
        }
        doc["packings"] = std::move(packings);
    }
    return doc.dump();
}

std::string family_verdict_to_json(const FamilyVerdict& verdict) {
    json doc;
    doc["valid"] = verdict.valid;
    doc["size_ok"] = verdict.size_ok;
    json members = json::array();
    for (const auto& m : verdict.members)
        members.push_back(json{{"anchored_at_vertex", m.anchored_at_vertex},
                               {"faces_in_boundary", m.faces_in_boundary},
                               {"integral", m.integral},
                               {"inside_host", m.inside_host}});
    doc["members"] = std::move(members);
    json pairs = json::array();
    for (const auto& [i, j] : verdict.overlapping_pairs) pairs.push_back(json::array({i, j}));
    doc["overlapping_pairs"] = std::move(pairs);
    return doc.dump();
}

} // namespace toricpack
