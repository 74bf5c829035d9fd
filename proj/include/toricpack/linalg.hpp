#pragma once

#include "toricpack/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toricpack {

using QVector = std::vector<Rational>;
using ZVector = std::vector<Int>;
/// Dense row-major rational matrix; rows may double as affine forms.
using QMatrix = std::vector<QVector>;

/// Rectangular arbitrary-precision integer matrix.
struct ZMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries; // row-major

    ZMatrix() = default;
    ZMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static ZMatrix identity(std::size_t n);
    /// Columns built from n vectors of dimension n.
    static ZMatrix from_columns(const std::vector<ZVector>& columns);

    bool operator==(const ZMatrix& other) const = default;
};

ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b);
/// Determinant of a square integer matrix (fraction-free elimination).
Int det(const ZMatrix& m);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
Rational dot(const QVector& a, const QVector& b);
Rational dot(const ZVector& a, const QVector& b);
bool lex_less(const QVector& a, const QVector& b);
bool lex_less(const ZVector& a, const ZVector& b);

QVector to_qvector(const ZVector& v);
/// A*x + w for a square A acting on a point of matching dimension.
QVector apply_affine(const ZMatrix& a, const QVector& x, const QVector& w);

Rational det(const QMatrix& m);
std::size_t rank(QMatrix m);
/// Affine rank of a point set (dimension of its affine hull).
std::size_t affine_rank(const std::vector<QVector>& points);

/// Solves A x = b for square A; nullopt when A is singular.
std::optional<QVector> solve_square(QMatrix a, QVector b);

/// Kernel basis of an arbitrary rational matrix (columns = variables).
std::vector<QVector> kernel_basis(QMatrix m);

/// One linear-inequality row <coeffs, x> >= rhs.
struct IneqRow {
    QVector coeffs;
    Rational rhs;
};

/// Scales to integer coefficients and divides out the content; identical
/// rows with weaker right-hand sides are dropped.
std::vector<IneqRow> normalize_rows(std::vector<IneqRow> rows);

/// All basic feasible points of {x : <a_i,x> >= b_i}: solutions of
/// full-rank n-subsets of tight constraints that satisfy every row.
/// Exhaustive by design; intended for small systems only.
std::vector<QVector> basic_feasible_points(const std::vector<IneqRow>& rows, std::size_t dim);

/// True when {x : <a_i,x> >= 0} contains a nonzero vector, i.e. the
/// inequality system admits a recession direction.
bool has_recession_ray(const std::vector<IneqRow>& rows, std::size_t dim);

/// Exact feasibility of {x : <a_i,x> >= b_i} by Fourier-Motzkin elimination.
bool fm_feasible(std::vector<IneqRow> rows, std::size_t dim);

/// Eliminates variables [0, keep_from) by Fourier-Motzkin, returning the
/// projection onto the trailing variables.
std::vector<IneqRow> fm_project(std::vector<IneqRow> rows, std::size_t dim, std::size_t keep_from);

} // namespace toricpack
