#pragma once

// Exact linear algebra over Q.

#include "cblocks/exact.hpp"

#include <cstddef>
#include <vector>

namespace cblocks {

using RMatrix = std::vector<RVector>;

/// Reduced row echelon form, computed in place.
struct Echelon {
    RMatrix rows;                   // non-zero rows of the RREF
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

Echelon reduced_row_echelon(RMatrix m);

std::size_t matrix_rank(const RMatrix& m);

/// Integer-valued rows, fraction-free elimination. Faster for wide integer
/// matrices such as degree-vector tables.
std::size_t integer_matrix_rank(const std::vector<std::vector<Integer>>& m);

/// Basis of { x : m x = 0 }.
RMatrix null_space(const RMatrix& m, std::size_t cols);

Rational dot(const RVector& a, const RVector& b);

/// Scales a rational vector by a positive factor to a primitive integer
/// vector (denominators cleared, content divided out). Zero stays zero.
RVector primitive(const RVector& v);

}  // namespace cblocks
