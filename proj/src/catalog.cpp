#include "toricpack/catalog.hpp"

#include "toricpack/error.hpp"

namespace toricpack {

Polytope catalog_cpn(std::size_t n, const Rational& lambda) {
    if (n == 0) throw Error("ParseError", "cpn needs n >= 1");
    if (lambda <= 0) throw Error("ParseError", "cpn needs lambda > 0");
    std::vector<QVector> pts;
    pts.push_back(QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, Rational(0));
        e[i] = lambda;
        pts.push_back(std::move(e));
    }
    return Polytope::from_vertices(std::move(pts));
}

Polytope catalog_cp1xcp1(const Rational& lambda) {
    if (lambda <= 0) throw Error("ParseError", "cp1xcp1 needs lambda > 0");
    std::vector<QVector> pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            pts.push_back({a ? lambda : Rational(0), b ? lambda : Rational(0)});
    return Polytope::from_vertices(std::move(pts));
}

Polytope catalog_interval(const Rational& lambda) { return catalog_cpn(1, lambda); }

Polytope catalog_hirzebruch(const Int& base) {
    if (base < 1) throw Error("ParseError", "hirzebruch needs base >= 1");
    std::vector<QVector> pts = {
        {Rational(0), Rational(0)},
        {Rational(base), Rational(0)},
        {Rational(1), Rational(1)},
        {Rational(0), Rational(1)},
    };
    return Polytope::from_vertices(std::move(pts));
}

Polytope catalog_glued_simplices(std::size_t n) {
    if (n == 0) throw Error("ParseError", "glued-simplices needs n >= 1");
    if (n == 1)
        return Polytope::from_vertices({{Rational(0)}, {Rational(2)}});
    std::vector<QVector> pts;
    pts.push_back(QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, Rational(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    pts.push_back(QVector(n, Rational(1)));
    return Polytope::from_vertices(std::move(pts));
}

Polytope catalog_ball_image(std::size_t n, const Rational& t) {
    if (t <= 0) throw Error("ParseError", "ball-image needs r^2 > 0");
    return catalog_cpn(n, t);
}

namespace {

std::size_t parse_index(const std::string& s) {
    const Rational r = parse_rational(s);
    if (rat_den(r) != 1 || r < 1)
        throw Error("ParseError", "expected a positive integer, got \"" + s + "\"");
    return static_cast<std::size_t>(rat_num(r).convert_to<unsigned long>());
}

void want(const std::vector<std::string>& params, std::size_t count, const std::string& usage) {
    if (params.size() != count)
        throw Error("ParseError", "expected parameters: " + usage);
}

} // namespace

Polytope catalog_lookup(const std::string& name, const std::vector<std::string>& params) {
    if (name == "cpn") {
        want(params, 2, "cpn <n> <lambda>");
        return catalog_cpn(parse_index(params[0]), parse_rational(params[1]));
    }
    if (name == "cp1xcp1") {
        want(params, 1, "cp1xcp1 <lambda>");
        return catalog_cp1xcp1(parse_rational(params[0]));
    }
    if (name == "interval") {
        want(params, 1, "interval <lambda>");
        return catalog_interval(parse_rational(params[0]));
    }
    if (name == "hirzebruch") {
        want(params, 1, "hirzebruch <base>");
        const Rational base = parse_rational(params[0]);
        if (rat_den(base) != 1) throw Error("ParseError", "hirzebruch base must be an integer");
        return catalog_hirzebruch(rat_num(base));
    }
    if (name == "glued-simplices") {
        want(params, 1, "glued-simplices <n>");
        return catalog_glued_simplices(parse_index(params[0]));
    }
    if (name == "ball-image") {
        want(params, 2, "ball-image <n> <r2>");
        return catalog_ball_image(parse_index(params[0]), parse_rational(params[1]));
    }
    throw Error("UnknownCatalog", "no catalog entry named \"" + name + "\"");
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"cpn", "<n> <lambda>"},
        {"cp1xcp1", "<lambda>"},
        {"interval", "<lambda>"},
        {"hirzebruch", "<base>"},
        {"glued-simplices", "<n>"},
        {"ball-image", "<n> <r2>"},
    };
}

} // namespace toricpack
