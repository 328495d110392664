#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace maxtoric::ratpoly {

/// Exponents of one monomial, one entry per ring variable. Entries may be
/// negative only inside Laurent polynomials.
using ExponentVector = std::vector<std::int32_t>;

/// Total order on exponent vectors.
///
/// `priority` is a permutation of the variable indices; `priority[0]` names the
/// most significant variable. lex compares exponents in priority order.
/// grevlex compares total degree first and breaks ties by the least
/// significant variable, where the smaller exponent wins. The elimination
/// kind is a two-block product order: the first `block` variables of the
/// priority list are compared by grevlex, and ties are broken by grevlex on
/// the remaining variables. Any monomial containing a first-block variable is
/// larger than every monomial free of them, which is what elimination needs.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, elimination };

    MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block = 0);

    static MonomialOrder lex(std::size_t num_vars);
    static MonomialOrder grevlex(std::size_t num_vars);
    static MonomialOrder elimination(std::size_t block, std::size_t num_vars);

    Kind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& priority() const noexcept { return priority_; }
    std::size_t block() const noexcept { return block_; }
    std::size_t num_vars() const noexcept { return priority_.size(); }

    /// Same order over a different number of variables (identity priority).
    MonomialOrder with_num_vars(std::size_t num_vars) const;

    /// Throws DimensionError when either vector's length differs from
    /// num_vars().
    std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;

    /// compare() without the length check; used on hot paths where the
    /// caller already owns consistent data.
    std::strong_ordering compare_unchecked(const ExponentVector& a,
                                           const ExponentVector& b) const noexcept;

    bool greater(const ExponentVector& a, const ExponentVector& b) const noexcept {
        return compare_unchecked(a, b) == std::strong_ordering::greater;
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    std::strong_ordering grevlex_range(const ExponentVector& a, const ExponentVector& b,
                                       std::size_t first, std::size_t last) const noexcept;

    Kind kind_;
    std::vector<std::size_t> priority_;
    std::size_t block_;
};

std::strong_ordering order_compare(const ExponentVector& a, const ExponentVector& b,
                                   const MonomialOrder& ord);

/// True when x^a divides x^b.
bool divides(const ExponentVector& a, const ExponentVector& b) noexcept;

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

/// True when x^a and x^b share no variable.
bool coprime(const ExponentVector& a, const ExponentVector& b) noexcept;

std::int64_t total_degree(const ExponentVector& e) noexcept;

}  // namespace maxtoric::ratpoly
