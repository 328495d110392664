#pragma once

#include "maxtoric/toric/distribution.hpp"

namespace maxtoric::maxent {

/// Shannon entropy in nats with 0·ln 0 = 0.
double shannon_entropy(const toric::DistributionVector& p);

/// sum_j p_j ln(p_j / h_j). Throws DomainError when h_j = 0 while p_j > 0,
/// DimensionError on a length mismatch.
double kl_divergence(const toric::DistributionVector& p, const toric::DistributionVector& h);

}  // namespace maxtoric::maxent
