#pragma once

#include "maxtoric/maxent/poly_system.hpp"
#include "maxtoric/ratpoly/monomial_order.hpp"
#include "maxtoric/ratpoly/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace maxtoric::maxent {

struct AlgebraicSolution {
    std::vector<double> theta;
    /// Exact coordinates when every one of them was identified exactly.
    std::optional<std::vector<Rational>> exact;
};

inline constexpr std::size_t kMaxAlgebraicVars = 3;
inline constexpr std::int64_t kMaxAlgebraicDegree = 8;

/// Positive real solutions of d ordinary equations in d variables.
///
/// Computes a lex Gröbner basis (variable priority taken from `order`; a
/// grevlex order is used for a first basis that seeds the lex run), requires
/// it to be triangular, isolates the positive roots of the univariate
/// eliminant and back-substitutes. Throws SizeLimitError beyond
/// kMaxAlgebraicVars variables or kMaxAlgebraicDegree total degree,
/// UnsupportedStructureError when the basis is not zero-dimensional or not
/// triangular, DomainError for Laurent input, ArgumentError when the
/// equation count differs from the variable count.
std::vector<AlgebraicSolution> solve_algebraic(std::span<const ratpoly::Polynomial> equations,
                                               const ratpoly::MonomialOrder& order);

/// Solves the cleared equations of `system`.
std::vector<AlgebraicSolution> solve_algebraic(const PolySystem& system,
                                               const ratpoly::MonomialOrder& order);

}  // namespace maxtoric::maxent
