#include "maxtoric/ratpoly/monomial_order.hpp"

#include "maxtoric/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace maxtoric::ratpoly {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
    auto sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity(priority_.size()))
        throw ArgumentError("monomial order priority is not a permutation");
    if (kind_ == Kind::elimination && block_ > priority_.size())
        throw ArgumentError("elimination block larger than the variable count");
    if (kind_ != Kind::elimination) block_ = 0;
}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) { return {Kind::lex, identity(num_vars)}; }

MonomialOrder MonomialOrder::grevlex(std::size_t num_vars) {
    return {Kind::grevlex, identity(num_vars)};
}

MonomialOrder MonomialOrder::elimination(std::size_t block, std::size_t num_vars) {
    return {Kind::elimination, identity(num_vars), block};
}

MonomialOrder MonomialOrder::with_num_vars(std::size_t num_vars) const {
    return {kind_, identity(num_vars), std::min(block_, num_vars)};
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const {
    if (a.size() != priority_.size() || b.size() != priority_.size())
        throw DimensionError("exponent vector length " + std::to_string(a.size()) + "/" +
                             std::to_string(b.size()) + " does not match order over " +
                             std::to_string(priority_.size()) + " variables");
    return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::grevlex_range(const ExponentVector& a,
                                                  const ExponentVector& b, std::size_t first,
                                                  std::size_t last) const noexcept {
    std::int64_t da = 0, db = 0;
    for (std::size_t k = first; k < last; ++k) {
        da += a[priority_[k]];
        db += b[priority_[k]];
    }
    if (da != db) return da <=> db;
    for (std::size_t k = last; k-- > first;) {
        const auto v = priority_[k];
        if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare_unchecked(const ExponentVector& a,
                                                      const ExponentVector& b) const noexcept {
    switch (kind_) {
        case Kind::lex:
            for (auto v : priority_)
                if (a[v] != b[v]) return a[v] <=> b[v];
            return std::strong_ordering::equal;
        case Kind::grevlex:
            return grevlex_range(a, b, 0, priority_.size());
        case Kind::elimination:
            if (auto c = grevlex_range(a, b, 0, block_); c != 0) return c;
            return grevlex_range(a, b, block_, priority_.size());
    }
    return std::strong_ordering::equal;
}

std::strong_ordering order_compare(const ExponentVector& a, const ExponentVector& b,
                                   const MonomialOrder& ord) {
    return ord.compare(a, b);
}

bool divides(const ExponentVector& a, const ExponentVector& b) noexcept {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) noexcept {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

std::int64_t total_degree(const ExponentVector& e) noexcept {
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

}  // namespace maxtoric::ratpoly
