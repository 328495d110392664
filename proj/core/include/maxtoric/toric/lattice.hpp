#pragma once

#include "maxtoric/toric/constraint_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace maxtoric::toric {

/// Integer basis of ker_Z(A) = {u in Z^m : A u = 0}.
struct LatticeBasis {
    std::vector<std::vector<std::int64_t>> vectors;
};

/// Rank over the rationals.
std::size_t rank(const ConstraintMatrix& a);

/// True when (1, ..., 1) is a rational combination of the rows of A.
bool check_ones_in_rowspan(const ConstraintMatrix& a);

/// A·u, the exponent of θ in the image of the monomial x^u. Throws
/// DimensionError when u has the wrong length.
std::vector<std::int64_t> apply_monomial_lift(const ConstraintMatrix& a,
                                              std::span<const std::int64_t> u);

/// Kernel lattice basis by unimodular column reduction of A (tracked in an
/// m×m transform, Hermite style); the transform columns matching the zero
/// columns of the reduced matrix span the kernel. Vectors are size-reduced
/// against each other and signed so their first nonzero entry is positive.
/// Throws ArgumentError if an entry leaves the 64-bit range.
LatticeBasis integer_kernel_basis(const ConstraintMatrix& a);

}  // namespace maxtoric::toric
