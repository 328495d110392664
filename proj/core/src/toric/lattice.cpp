#include "maxtoric/toric/lattice.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/rational.hpp"

#include <algorithm>
#include <utility>

namespace maxtoric::toric {

namespace {

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Rational>> to_rational(const ConstraintMatrix& a) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(static_cast<long>(a(i, j)));
    return m;
}

using IntVec = std::vector<Integer>;

Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Pairwise Gauss reduction: subtract the nearest-integer multiple of one
// vector from another while that shrinks the squared norm.
void size_reduce(std::vector<IntVec>& basis) {
    bool changed = true;
    for (int sweep = 0; changed && sweep < 100; ++sweep) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                const Integer nj = dot(basis[j], basis[j]);
                if (nj == 0) continue;
                const Integer num = dot(basis[i], basis[j]);
                // nearest integer to num / nj
                Integer twice = 2 * num + nj;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * nj).get_mpz_t());
                if (q == 0) continue;
                IntVec candidate = basis[i];
                for (std::size_t k = 0; k < candidate.size(); ++k) candidate[k] -= q * basis[j][k];
                if (dot(candidate, candidate) < dot(basis[i], basis[i])) {
                    basis[i] = std::move(candidate);
                    changed = true;
                }
            }
    }
}

}  // namespace

std::size_t rank(const ConstraintMatrix& a) { return rational_rank(to_rational(a)); }

bool check_ones_in_rowspan(const ConstraintMatrix& a) {
    return rank(a) == rank(a.with_ones_row());
}

std::vector<std::int64_t> apply_monomial_lift(const ConstraintMatrix& a,
                                              std::span<const std::int64_t> u) {
    if (u.size() != a.cols())
        throw DimensionError("exponent vector of length " + std::to_string(u.size()) +
                             " for a matrix with " + std::to_string(a.cols()) + " columns");
    std::vector<std::int64_t> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * u[j];
    return out;
}

LatticeBasis integer_kernel_basis(const ConstraintMatrix& a) {
    const std::size_t d = a.rows(), m = a.cols();
    // Columns stored as vectors: h[k] is column k of the reduced matrix,
    // t[k] the matching column of the unimodular transform.
    std::vector<IntVec> h(m, IntVec(d)), t(m, IntVec(m, 0));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < d; ++i) h[k][i] = Integer(static_cast<long>(a(i, k)));
        t[k][k] = 1;
    }

    std::size_t pivot_col = 0;
    for (std::size_t i = 0; i < d && pivot_col < m; ++i) {
        std::size_t nz = pivot_col;
        while (nz < m && h[nz][i] == 0) ++nz;
        if (nz == m) continue;
        std::swap(h[pivot_col], h[nz]);
        std::swap(t[pivot_col], t[nz]);
        for (std::size_t k = pivot_col + 1; k < m; ++k) {
            if (h[k][i] == 0) continue;
            const Integer x = h[pivot_col][i], y = h[k][i];
            Integer g, s, r;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            const Integer xg = x / g, yg = y / g;
            // [col_p, col_k] <- [s*col_p + r*col_k, -yg*col_p + xg*col_k]; det = 1
            auto combine = [&](std::vector<IntVec>& cols) {
                IntVec& cp = cols[pivot_col];
                IntVec& ck = cols[k];
                for (std::size_t q = 0; q < cp.size(); ++q) {
                    const Integer p = cp[q], c = ck[q];
                    cp[q] = s * p + r * c;
                    ck[q] = xg * c - yg * p;
                }
            };
            combine(h);
            combine(t);
        }
        ++pivot_col;
    }

    std::vector<IntVec> kernel(t.begin() + static_cast<std::ptrdiff_t>(pivot_col), t.end());
    size_reduce(kernel);

    LatticeBasis out;
    for (auto& v : kernel) {
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
        const bool flip = first != v.end() && *first < 0;
        std::vector<std::int64_t> u;
        u.reserve(v.size());
        for (auto& z : v) {
            if (flip) z = -z;
            if (!z.fits_slong_p()) throw ArgumentError("kernel vector entry exceeds 64 bits");
            u.push_back(z.get_si());
        }
        out.vectors.push_back(std::move(u));
    }
    return out;
}

}  // namespace maxtoric::toric
