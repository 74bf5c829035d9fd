#include "toricpack/render.hpp"

#include "toricpack/error.hpp"

#include <algorithm>
#include <sstream>

namespace toricpack {

namespace {

constexpr int kScale = 60;  // pixels per lattice unit
constexpr int kMargin = 30; // pixels

/// Exact rational-to-pixel rounding; no floating point so the output is
/// reproducible across platforms.
long long to_px(const Rational& coord) {
    const Rational scaled = coord * kScale;
    return rational_floor(scaled + Rational(1, 2)).convert_to<long long>();
}

struct Frame {
    Int min_x, max_x, min_y, max_y;
    long long width, height;

    long long x(const Rational& v) const { return to_px(v - Rational(min_x)) + kMargin; }
    long long y(const Rational& v) const {
        // SVG y grows downward.
        return height - (to_px(v - Rational(min_y)) + kMargin);
    }
};

/// Vertices of a 2-polytope in boundary order around the centroid.
std::vector<QVector> boundary_cycle(const Polytope& p) {
    std::vector<std::size_t> order;
    std::vector<std::pair<std::size_t, std::size_t>> edges = p.edge_pairs();
    order.push_back(0);
    std::size_t prev = 0, current = 0;
    do {
        std::size_t next = p.vertices().size();
        for (const auto& [a, b] : edges) {
            if (a == current && b != prev) next = b;
            if (b == current && a != prev) next = a;
            if (next != p.vertices().size()) break;
        }
        if (next == p.vertices().size()) break;
        prev = current;
        current = next;
        if (current != 0) order.push_back(current);
    } while (current != 0);
    std::vector<QVector> cycle;
    for (auto i : order) cycle.push_back(p.vertices()[i]);
    return cycle;
}

std::string points_attr(const Frame& frame, const std::vector<QVector>& pts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << " ";
        out << frame.x(pts[i][0]) << "," << frame.y(pts[i][1]);
    }
    return out.str();
}

} // namespace

std::string render_svg(const Polytope& p, const std::vector<OpenSimplex>& witness) {
    if (p.dim() != 2) throw Error("RenderDimension", "rendering needs a 2-dimensional polytope");

    Frame frame;
    frame.min_x = rational_floor(p.vertices()[0][0]);
    frame.max_x = rational_ceil(p.vertices()[0][0]);
    frame.min_y = rational_floor(p.vertices()[0][1]);
    frame.max_y = rational_ceil(p.vertices()[0][1]);
    for (const auto& v : p.vertices()) {
        frame.min_x = std::min(frame.min_x, rational_floor(v[0]));
        frame.max_x = std::max(frame.max_x, rational_ceil(v[0]));
        frame.min_y = std::min(frame.min_y, rational_floor(v[1]));
        frame.max_y = std::max(frame.max_y, rational_ceil(v[1]));
    }
    frame.width = to_px(Rational(frame.max_x - frame.min_x)) + 2 * kMargin;
    frame.height = to_px(Rational(frame.max_y - frame.min_y)) + 2 * kMargin;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << frame.width
        << "\" height=\"" << frame.height << "\" viewBox=\"0 0 " << frame.width << " "
        << frame.height << "\">\n";
    svg << "  <rect width=\"" << frame.width << "\" height=\"" << frame.height
        << "\" fill=\"white\"/>\n";

    // Shaded packing simplices under the outline.
    static const char* kFills[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc"};
    for (std::size_t i = 0; i < witness.size(); ++i) {
        svg << "  <polygon points=\"" << points_attr(frame, witness[i].closure_vertices())
            << "\" fill=\"" << kFills[i % 4] << "\" fill-opacity=\"0.7\" stroke=\"none\"/>\n";
    }

    svg << "  <polygon points=\"" << points_attr(frame, boundary_cycle(p))
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

    // Lattice points of the bounding box.
    for (Int gx = frame.min_x; gx <= frame.max_x; ++gx)
        for (Int gy = frame.min_y; gy <= frame.max_y; ++gy) {
            svg << "  <circle cx=\"" << frame.x(Rational(gx)) << "\" cy=\""
                << frame.y(Rational(gy)) << "\" r=\"2\" fill=\"black\"/>\n";
        }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace toricpack
