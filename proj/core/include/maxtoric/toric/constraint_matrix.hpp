#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace maxtoric::toric {

/// Integer d×m matrix A = [t_i(j)]: row i holds the values of constraint
/// function i on the alphabet {1..m}. Requires d >= 1 and m >= 2.
class ConstraintMatrix {
public:
    ConstraintMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);

    /// Throws DimensionError on ragged rows, ArgumentError on a shape
    /// violating d >= 1, m >= 2.
    static ConstraintMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    static ConstraintMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * cols_ + j];
    }

    std::vector<std::int64_t> row(std::size_t i) const;
    std::vector<std::int64_t> column(std::size_t j) const;
    std::vector<std::vector<std::int64_t>> to_rows() const;

    std::int64_t min_entry() const;
    std::int64_t max_abs_entry() const;

    /// A with an all-ones row appended.
    ConstraintMatrix with_ones_row() const;

    friend bool operator==(const ConstraintMatrix&, const ConstraintMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> entries_;
};

}  // namespace maxtoric::toric
