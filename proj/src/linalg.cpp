#include "toricpack/linalg.hpp"

#include "toricpack/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricpack {

ZMatrix ZMatrix::identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<ZVector>& columns) {
    if (columns.empty()) throw Error("DimensionMismatch", "no columns");
    const std::size_t n = columns[0].size();
    ZMatrix m(n, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != n) throw Error("DimensionMismatch", "ragged columns");
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b) {
    if (a.cols != b.rows) throw Error("DimensionMismatch", "matrix product shape");
    ZMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Int det(const ZMatrix& m) {
    if (m.rows != m.cols) throw Error("DimensionMismatch", "determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    ZMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

QVector operator+(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "vector sum");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "vector difference");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector scale(const Rational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const ZVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

bool lex_less(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const ZVector& a, const ZVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

QVector to_qvector(const ZVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

QVector apply_affine(const ZMatrix& a, const QVector& x, const QVector& w) {
    if (a.cols != x.size() || a.rows != w.size())
        throw Error("DimensionMismatch", "affine application");
    QVector r(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < a.cols; ++j) s += Rational(a.at(i, j)) * x[j];
        r[i] = s + w[i];
    }
    return r;
}

Rational det(const QMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    for (const auto& row : m)
        if (row.size() != n) throw Error("DimensionMismatch", "determinant of non-square matrix");
    QMatrix a = m;
    Rational result(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            result = -result;
        }
        result *= a[k][k];
        const Rational inv = Rational(1) / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return result;
}

std::size_t rank(QMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t affine_rank(const std::vector<QVector>& points) {
    if (points.size() <= 1) return 0;
    QMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return rank(std::move(diffs));
}

std::optional<QVector> solve_square(QMatrix a, QVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error("DimensionMismatch", "solve shape");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        const Rational inv = Rational(1) / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    QVector x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

std::vector<QVector> kernel_basis(QMatrix m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    // Row-reduce, remembering pivot columns.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IneqRow> normalize_rows(std::vector<IneqRow> rows) {
    std::map<QVector, Rational> best; // coeffs -> strongest rhs
    for (auto& row : rows) {
        bool all_zero = true;
        Int num_gcd(0), den_lcm(1);
        for (const auto& c : row.coeffs) {
            if (c != 0) all_zero = false;
            num_gcd = gcd(num_gcd, rat_num(c));
            den_lcm = lcm(den_lcm, rat_den(c));
        }
        if (all_zero) {
            if (row.rhs > 0) {
                // 0 >= positive: keep as an explicit infeasibility marker.
                QVector zero(row.coeffs.size(), Rational(0));
                best[zero] = std::max(best.count(zero) ? best[zero] : Rational(0), row.rhs);
            }
            continue;
        }
        const Rational s = Rational(den_lcm) / Rational(int_abs(num_gcd));
        for (auto& c : row.coeffs) c *= s;
        row.rhs *= s;
        auto it = best.find(row.coeffs);
        if (it == best.end())
            best.emplace(row.coeffs, row.rhs);
        else if (row.rhs > it->second)
            it->second = row.rhs;
    }
    std::vector<IneqRow> out;
    out.reserve(best.size());
    for (auto& [coeffs, rhs] : best) out.push_back({coeffs, rhs});
    return out;
}

std::vector<QVector> basic_feasible_points(const std::vector<IneqRow>& rows, std::size_t dim) {
    const std::size_t m = rows.size();
    std::set<QVector> found;
    if (m < dim || dim == 0) return {};

    const auto feasible = [&](const QVector& x) {
        for (const auto& row : rows)
            if (dot(row.coeffs, x) < row.rhs) return false;
        return true;
    };

    // Choose `dim` tight rows at a time, pruning dependent choices through
    // an incremental echelon of the rows picked so far.
    std::vector<std::size_t> chosen;
    QMatrix echelon;     // reduced copies of chosen rows (coeffs | rhs)
    std::vector<QVector> reduced_stack;

    const auto reduce_against = [&](QVector aug) -> std::optional<QVector> {
        for (const auto& e : echelon) {
            std::size_t lead = 0;
            while (lead < dim && e[lead] == 0) ++lead;
            if (lead < dim && aug[lead] != 0) {
                const Rational f = aug[lead] / e[lead];
                for (std::size_t j = lead; j <= dim; ++j) aug[j] -= f * e[j];
            }
        }
        for (std::size_t j = 0; j < dim; ++j)
            if (aug[j] != 0) return aug;
        return std::nullopt; // coefficient part vanished: dependent
    };

    const auto solve_chosen = [&]() {
        QMatrix a(dim, QVector(dim));
        QVector b(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) a[i][j] = rows[chosen[i]].coeffs[j];
            b[i] = rows[chosen[i]].rhs;
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (x && feasible(*x)) found.insert(std::move(*x));
    };

    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == dim) {
            solve_chosen();
            return;
        }
        if (m - start < dim - chosen.size()) return;
        for (std::size_t i = start; i < m; ++i) {
            QVector aug = rows[i].coeffs;
            aug.push_back(rows[i].rhs);
            auto reduced = reduce_against(std::move(aug));
            if (!reduced) continue;
            // Pivot-normalize before stacking into the echelon.
            std::size_t lead = 0;
            while ((*reduced)[lead] == 0) ++lead;
            const Rational inv = Rational(1) / (*reduced)[lead];
            for (auto& c : *reduced) c *= inv;
            echelon.push_back(std::move(*reduced));
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            echelon.pop_back();
        }
    };
    rec(rec, 0);

    return {found.begin(), found.end()};
}

bool has_recession_ray(const std::vector<IneqRow>& rows, std::size_t dim) {
    QMatrix normals;
    normals.reserve(rows.size());
    for (const auto& row : rows) normals.push_back(row.coeffs);
    if (rank(normals) < dim) return true; // lineality space is nonzero

    const auto cone_feasible = [&](const QVector& r) {
        for (const auto& row : rows)
            if (dot(row.coeffs, r) < 0) return false;
        return true;
    };

    // The cone is pointed past this line, so any nonzero recession vector
    // yields an extreme ray whose tight set contains dim-1 independent
    // rows; enumerate those subsets and test their kernel directions.
    bool found = false;
    std::vector<std::size_t> chosen;
    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (found) return;
        if (chosen.size() + 1 == dim) {
            QMatrix sub;
            for (auto i : chosen) sub.push_back(rows[i].coeffs);
            if (!sub.empty() && rank(sub) != dim - 1) return;
            if (sub.empty()) sub.push_back(QVector(dim, Rational(0)));
            for (const auto& ray : kernel_basis(std::move(sub))) {
                bool nonzero = false;
                for (const auto& c : ray) nonzero = nonzero || c != 0;
                if (!nonzero) continue;
                if (cone_feasible(ray) || cone_feasible(scale(Rational(-1), ray))) {
                    found = true;
                    return;
                }
            }
            return;
        }
        for (std::size_t i = start; i < rows.size() && !found; ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

namespace {

std::vector<IneqRow> fm_eliminate_var(const std::vector<IneqRow>& rows, std::size_t var) {
    std::vector<IneqRow> zero, pos, neg;
    for (const auto& row : rows) {
        if (row.coeffs[var] == 0)
            zero.push_back(row);
        else if (row.coeffs[var] > 0)
            pos.push_back(row);
        else
            neg.push_back(row);
    }
    // <p,x> >= bp with p_var > 0 gives x_var >= ...; combine with every
    // upper bound from the negative rows.
    for (const auto& lo : pos)
        for (const auto& hi : neg) {
            const Rational a = lo.coeffs[var];
            const Rational b = -hi.coeffs[var];
            IneqRow combined;
            combined.coeffs.resize(lo.coeffs.size());
            for (std::size_t j = 0; j < lo.coeffs.size(); ++j)
                combined.coeffs[j] = b * lo.coeffs[j] + a * hi.coeffs[j];
            combined.rhs = b * lo.rhs + a * hi.rhs;
            combined.coeffs[var] = 0;
            zero.push_back(std::move(combined));
        }
    return normalize_rows(std::move(zero));
}

} // namespace

bool fm_feasible(std::vector<IneqRow> rows, std::size_t dim) {
    rows = normalize_rows(std::move(rows));
    for (std::size_t var = 0; var < dim; ++var) rows = fm_eliminate_var(rows, var);
    for (const auto& row : rows)
        if (row.rhs > 0) return false;
    return true;
}

std::vector<IneqRow> fm_project(std::vector<IneqRow> rows, std::size_t dim, std::size_t keep_from) {
    rows = normalize_rows(std::move(rows));
    for (std::size_t var = 0; var < keep_from; ++var) rows = fm_eliminate_var(rows, var);
    // Strip the eliminated coordinates.
    std::vector<IneqRow> out;
    for (auto& row : rows) {
        IneqRow trimmed;
        trimmed.coeffs.assign(row.coeffs.begin() + static_cast<std::ptrdiff_t>(keep_from),
                              row.coeffs.end());
        trimmed.rhs = row.rhs;
        out.push_back(std::move(trimmed));
    }
    (void)dim;
    return normalize_rows(std::move(out));
}

} // namespace toricpack
