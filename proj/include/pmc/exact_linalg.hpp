#ifndef PMC_EXACT_LINALG_HPP
#define PMC_EXACT_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/matrix.hpp>
#include <pmc/rational.hpp>

namespace pmc {

/// Sorted 1-based index set, the selector for principal minors.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
        std::sort(indices_.begin(), indices_.end());
        for (std::size_t k = 0; k < indices_.size(); ++k) {
            if (indices_[k] < 1)
                throw DomainError("index set entries must be >= 1");
            if (k > 0 && indices_[k] == indices_[k - 1])
                throw DomainError("index set entries must be distinct");
        }
    }

    static IndexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return IndexSet(std::move(v));
    }

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    const std::vector<int>& indices() const { return indices_; }
    int max() const { return indices_.empty() ? 0 : indices_.back(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < indices_.size(); ++k) {
            if (k > 0) s += ',';
            s += std::to_string(indices_[k]);
        }
        return s;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.indices_ == b.indices_;
    }

private:
    std::vector<int> indices_;
};

namespace detail {

/// Fraction-free (Bareiss) determinant over the integers. Consumes its
/// argument. Row swaps handle zero pivots; every division is exact by
/// Sylvester's determinant identity.
inline Integer bareiss_det(IntegerMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return Integer(1);
    Integer prev(1);
    Integer tmp;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return Integer(0);
        if (pivot != k) {
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& e = a(i, j);
                e *= a(k, k);
                tmp = a(i, k) * a(k, j);
                e -= tmp;
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

struct ScaledRows {
    IntegerMatrix matrix;
    std::vector<Integer> row_scale; // positive; matrix = diag(row_scale) * original
};

inline ScaledRows scale_rows_to_integer(const RationalMatrix& m) {
    ScaledRows out;
    out.matrix = IntegerMatrix(m.rows(), m.cols());
    out.row_scale.assign(m.rows(), Integer(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer& scale = out.row_scale[i];
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer q = scale / m(i, j).denominator();
            out.matrix(i, j) = m(i, j).numerator() * q;
        }
    }
    return out;
}

} // namespace detail

inline Integer det(const IntegerMatrix& m) {
    if (!m.is_square())
        throw ShapeError("determinant requires a square matrix, got " + m.shape_string());
    return detail::bareiss_det(m);
}

/// Exact determinant: rows are scaled to integers, then eliminated
/// fraction-free.
inline Rational det(const RationalMatrix& m) {
    if (!m.is_square())
        throw ShapeError("determinant requires a square matrix, got " + m.shape_string());
    auto scaled = detail::scale_rows_to_integer(m);
    Integer d = detail::bareiss_det(std::move(scaled.matrix));
    Integer denom(1);
    for (const Integer& s : scaled.row_scale) denom *= s;
    return Rational(d, denom);
}

/// Exact inverse via Gauss-Jordan elimination.
inline RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square())
        throw ShapeError("inverse requires a square matrix, got " + m.shape_string());
    const std::size_t n = m.rows();
    RationalMatrix work = hstack(m, RationalMatrix::identity(n));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && work(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError("matrix is singular");
        if (pivot != k) work.swap_rows(k, pivot);
        const Rational inv_pivot = Rational(1) / work(k, k);
        for (std::size_t j = k; j < 2 * n; ++j) work(k, j) *= inv_pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work(i, k).is_zero()) continue;
            const Rational factor = work(i, k);
            for (std::size_t j = k; j < 2 * n; ++j)
                work(i, j) -= factor * work(k, j);
        }
    }
    RationalMatrix result(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) result(i, j) = work(i, n + j);
    return result;
}

/// Determinant of the submatrix on rows and columns alpha (1-based).
inline Rational principal_minor(const RationalMatrix& m, const IndexSet& alpha) {
    if (!m.is_square())
        throw ShapeError("principal minor requires a square matrix, got " + m.shape_string());
    if (alpha.empty())
        throw DomainError("principal minor requires a non-empty index set");
    if (alpha.max() > static_cast<int>(m.rows()))
        throw DomainError("index set entry " + std::to_string(alpha.max()) +
                          " out of range for " + m.shape_string());
    const std::size_t k = alpha.size();
    RationalMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            sub(r, c) = m(static_cast<std::size_t>(alpha.indices()[r] - 1),
                          static_cast<std::size_t>(alpha.indices()[c] - 1));
    return det(sub);
}

/// det(I + FG) for F (k x n), G (n x k), evaluated on the smaller of the two
/// sides; both sides agree by the Sylvester determinant identity.
inline Rational det_identity_plus_product(const RationalMatrix& f, const RationalMatrix& g) {
    if (f.cols() != g.rows() || f.rows() != g.cols())
        throw ShapeError("incompatible shapes for det(I+FG): " + f.shape_string() +
                         " and " + g.shape_string());
    const std::size_t k = f.rows();
    const std::size_t n = f.cols();
    if (k <= n)
        return det(RationalMatrix::identity(k) + f * g);
    return det(RationalMatrix::identity(n) + g * f);
}

} // namespace pmc

#endif // PMC_EXACT_LINALG_HPP
