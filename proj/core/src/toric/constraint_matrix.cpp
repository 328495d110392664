#include "maxtoric/toric/constraint_matrix.hpp"

#include "maxtoric/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace maxtoric::toric {

ConstraintMatrix::ConstraintMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1) throw ArgumentError("constraint matrix needs at least one row");
    if (cols_ < 2) throw ArgumentError("constraint matrix needs an alphabet of size >= 2");
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("constraint matrix has " + std::to_string(entries_.size()) +
                             " entries, expected " + std::to_string(rows_ * cols_));
}

ConstraintMatrix ConstraintMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw ArgumentError("constraint matrix needs at least one row");
    const std::size_t m = rows.front().size();
    std::vector<std::int64_t> entries;
    entries.reserve(rows.size() * m);
    for (const auto& r : rows) {
        if (r.size() != m) throw DimensionError("ragged constraint matrix");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return {rows.size(), m, std::move(entries)};
}

ConstraintMatrix ConstraintMatrix::identity(std::size_t n) {
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return {n, n, std::move(e)};
}

std::vector<std::int64_t> ConstraintMatrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::int64_t> ConstraintMatrix::column(std::size_t j) const {
    std::vector<std::int64_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<std::vector<std::int64_t>> ConstraintMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::int64_t ConstraintMatrix::min_entry() const {
    return *std::min_element(entries_.begin(), entries_.end());
}

std::int64_t ConstraintMatrix::max_abs_entry() const {
    std::int64_t m = 0;
    for (auto e : entries_) m = std::max(m, std::abs(e));
    return m;
}

ConstraintMatrix ConstraintMatrix::with_ones_row() const {
    auto e = entries_;
    e.insert(e.end(), cols_, 1);
    return {rows_ + 1, cols_, std::move(e)};
}

}  // namespace maxtoric::toric
