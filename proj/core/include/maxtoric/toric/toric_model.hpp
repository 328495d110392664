#pragma once

#include "maxtoric/ratpoly/polynomial.hpp"
#include "maxtoric/toric/constraint_matrix.hpp"
#include "maxtoric/toric/distribution.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxtoric::toric {

/// Toric parametrization p_j = h_j prod_i theta_i^{A[i][j]} / Z(theta).
/// An empty prior means h = (1, ..., 1). Throws DomainError for nonpositive
/// theta or h, DimensionError on length mismatch.
DistributionVector toric_param(const ConstraintMatrix& a, std::span<const double> theta,
                               std::span<const double> prior = {});

/// Exact counterpart for rational theta and prior.
DistributionVector toric_param_exact(const ConstraintMatrix& a, std::span<const Rational> theta,
                                     std::span<const Rational> prior = {});

/// Generators of the toric ideal of A, each x^{u+} - x^{u-} over p1..pm.
struct BinomialGenerators {
    std::vector<std::string> vars;
    std::vector<ratpoly::Polynomial> binomials;
};

inline constexpr std::size_t kMaxSaturationAlphabet = 10;

/// Lattice-basis binomials saturated by the product of all variables:
/// adjoin w, add w*p1*...*pm - 1, compute a Gröbner basis under an order
/// eliminating w, and keep the w-free elements. Each binomial is signed so
/// its lex-leading coefficient is +1. Throws SizeLimitError when m exceeds
/// kMaxSaturationAlphabet.
BinomialGenerators toric_ideal_generators(const ConstraintMatrix& a);

/// Lattice-basis binomials before saturation.
std::vector<ratpoly::Polynomial> lattice_binomials(const ConstraintMatrix& a,
                                                   const std::vector<std::string>& vars);

struct MembershipReport {
    bool member = true;
    double max_residual = 0.0;
    std::vector<double> residuals;
    /// Set when the distribution carried exact values: every generator
    /// vanished exactly.
    std::optional<bool> exact_member;
};

/// Evaluates every generator at p (divided componentwise by the prior when
/// one is given) and compares the largest absolute value with `tol`.
MembershipReport verify_model_membership(const DistributionVector& p,
                                         const BinomialGenerators& generators, double tol,
                                         std::span<const double> prior = {});

MembershipReport verify_model_membership(const DistributionVector& p, const ConstraintMatrix& a,
                                         double tol);

}  // namespace maxtoric::toric
