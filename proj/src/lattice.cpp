#include "toricpack/lattice.hpp"

#include "toricpack/error.hpp"

#include <algorithm>

namespace toricpack {

std::pair<ZVector, Int> primitive(const ZVector& v) {
    Int g(0);
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw Error("ZeroDirection", "primitive part of the zero vector");
    ZVector u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / g;
    return {u, g};
}

std::pair<ZVector, Rational> primitive_direction(const QVector& d) {
    Int den_lcm(1);
    for (const auto& c : d) den_lcm = lcm(den_lcm, rat_den(c));
    ZVector scaled(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        scaled[i] = rat_num(d[i]) * (den_lcm / rat_den(d[i]));
    auto [u, g] = primitive(scaled);
    return {u, Rational(g, den_lcm)};
}

Rational lattice_length(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "lattice length endpoints");
    if (a == b) throw Error("DegenerateSegment", "lattice length of a point");
    return primitive_direction(b - a).second;
}

bool is_unimodular_frame(const std::vector<ZVector>& frame, bool strict_sl) {
    if (frame.empty()) throw Error("DimensionMismatch", "empty frame");
    const std::size_t n = frame.size();
    for (const auto& v : frame)
        if (v.size() != n) throw Error("DimensionMismatch", "frame is not square");
    const Int d = det(ZMatrix::from_columns(frame));
    return strict_sl ? d == 1 : (d == 1 || d == -1);
}

HnfResult hnf(const ZMatrix& m) {
    bool nonzero = false;
    for (const auto& e : m.entries) nonzero = nonzero || e != 0;
    if (!nonzero) throw Error("ZeroMatrix", "hnf of the zero matrix");

    ZMatrix h = m;
    ZMatrix u = ZMatrix::identity(m.rows);

    const auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < h.cols; ++j) std::swap(h.at(a, j), h.at(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    const auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < h.cols; ++j) h.at(dst, j) += f * h.at(src, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    const auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols && pivot_row < h.rows; ++col) {
        // Euclid on the column below pivot_row until one nonzero remains.
        while (true) {
            std::size_t best = h.rows;
            for (std::size_t i = pivot_row; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == h.rows || int_abs(h.at(i, col)) < int_abs(h.at(best, col))) best = i;
            }
            if (best == h.rows) break; // column clear
            bool reduced_any = false;
            for (std::size_t i = pivot_row; i < h.rows; ++i) {
                if (i == best || h.at(i, col) == 0) continue;
                const Int q = h.at(i, col) / h.at(best, col);
                add_row(i, best, -q);
                reduced_any = reduced_any || h.at(i, col) != 0;
            }
            bool lone = true;
            for (std::size_t i = pivot_row; i < h.rows; ++i)
                lone = lone && (i == best || h.at(i, col) == 0);
            if (lone) {
                swap_rows(pivot_row, best);
                break;
            }
            (void)reduced_any;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) negate_row(pivot_row);
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pivot_row; ++i) {
            const Int q = h.at(i, col) >= 0 ? Int(h.at(i, col) / h.at(pivot_row, col))
                                            : Int(-((-h.at(i, col) + h.at(pivot_row, col) - 1) /
                                                    h.at(pivot_row, col)));
            add_row(i, pivot_row, -q);
        }
        ++pivot_row;
    }
    return {h, u};
}

} // namespace toricpack
