#include "maxtoric/maxent/entropy.hpp"

#include "maxtoric/error.hpp"

#include <cmath>

namespace maxtoric::maxent {

double shannon_entropy(const toric::DistributionVector& p) {
    double s = 0.0;
    for (double pj : p.probs())
        if (pj > 0.0) s -= pj * std::log(pj);
    return s;
}

double kl_divergence(const toric::DistributionVector& p, const toric::DistributionVector& h) {
    if (p.size() != h.size()) throw DimensionError("kl_divergence: length mismatch");
    double d = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0.0) continue;
        if (h[j] == 0.0)
            throw DomainError("kl_divergence: reference has zero mass where p is positive");
        d += p[j] * std::log(p[j] / h[j]);
    }
    return d;
}

}  // namespace maxtoric::maxent
