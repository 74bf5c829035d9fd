#pragma once

#include "toricpack/linalg.hpp"
#include "toricpack/rational.hpp"

#include <utility>
#include <vector>

namespace toricpack {

/// Splits a nonzero integer vector as v = c*u with u primitive (content 1)
/// and c > 0. Throws Error("ZeroDirection") on the zero vector.
std::pair<ZVector, Int> primitive(const ZVector& v);

/// Splits a nonzero rational vector as d = c*u with u a primitive integer
/// vector and c a positive rational.
std::pair<ZVector, Rational> primitive_direction(const QVector& d);

/// Lattice length of the segment [a,b]: the unique c > 0 with b - a = c*u
/// for primitive integer u. Invariant under integer-affine maps.
Rational lattice_length(const QVector& a, const QVector& b);

/// True when the n vectors form a lattice basis: |det| = 1, or det = +1
/// with strict_sl set.
bool is_unimodular_frame(const std::vector<ZVector>& frame, bool strict_sl = false);

/// Row Hermite normal form: H = U*M with U unimodular, H in row-echelon
/// shape with positive pivots and reduced entries above each pivot.
struct HnfResult {
    ZMatrix h;
    ZMatrix u;
};
HnfResult hnf(const ZMatrix& m);

} // namespace toricpack
