#ifndef PMC_PMATRIX_HPP
#define PMC_PMATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/exact_linalg.hpp>
#include <pmc/interval.hpp>
#include <pmc/matrix.hpp>
#include <pmc/rational.hpp>

namespace pmc {

/// Vector over {0,1}; indexes the rank-one slices of a radius matrix.
class BinaryVector {
public:
    BinaryVector() = default;

    explicit BinaryVector(std::vector<int> bits) : bits_(std::move(bits)) {
        for (int b : bits_)
            if (b != 0 && b != 1)
                throw DomainError("binary vector entries must be 0 or 1");
    }

    static BinaryVector zero(std::size_t m) { return BinaryVector(std::vector<int>(m, 0)); }

    std::size_t size() const { return bits_.size(); }
    int operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<int>& bits() const { return bits_; }

    /// 1-based positions of the one-entries.
    IndexSet support() const {
        std::vector<int> idx;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) idx.push_back(static_cast<int>(i + 1));
        return IndexSet(std::move(idx));
    }

    std::vector<Rational> to_rationals() const {
        std::vector<Rational> v(bits_.size());
        for (std::size_t i = 0; i < bits_.size(); ++i) v[i] = Rational(bits_[i]);
        return v;
    }

private:
    std::vector<int> bits_;
};

/// Witness that a matrix is not a P-matrix: an index set whose principal
/// minor is non-positive.
struct NonPCertificate {
    IndexSet index_set;
    Rational minor_value; // <= 0
};

struct PMatrixDecision {
    bool is_p = false;
    std::optional<NonPCertificate> certificate; // present iff !is_p
};

namespace detail {

/// Depth-first principal-minor sweep over the scaled integer matrix N,
/// sharing fraction-free elimination state across subsets. At a node with
/// included set inc, the state satisfies
///   state(r,c) = det N[inc + idx[r], inc + idx[c]],  prev = det N[inc] > 0,
/// so including idx[pos] reads the minor straight off the diagonal and one
/// Bareiss step (exact by Sylvester's identity) produces the child state.
/// Subtrees under a non-positive minor are pruned: any deeper subset is a
/// strict superset, hence larger in the size-then-lexicographic order.
class MinorSweep {
public:
    void run(const IntegerMatrix& n) {
        std::vector<int> idx(n.rows());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::vector<int> inc;
        dfs(n, idx, Integer(1), inc);
    }

    const std::optional<std::pair<std::vector<int>, Integer>>& best() const { return best_; }

private:
    static bool key_less(const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    // smallest key reachable in the branch is inc + {next}; once the best
    // found beats it, later branches at this node only get lexically worse
    bool branch_hopeless(std::vector<int>& inc, int next) const {
        if (!best_) return false;
        if (best_->first.size() < inc.size() + 1) return true;
        inc.push_back(next);
        const bool hopeless = !key_less(inc, best_->first);
        inc.pop_back();
        return hopeless;
    }

    void dfs(const IntegerMatrix& state, const std::vector<int>& idx, const Integer& prev,
             std::vector<int>& inc) {
        const std::size_t len = idx.size();
        Integer tmp;
        for (std::size_t pos = 0; pos < len; ++pos) {
            if (branch_hopeless(inc, idx[pos])) break;
            const Integer& minor = state(pos, pos);
            inc.push_back(idx[pos]);
            if (sgn(minor) <= 0) {
                if (!best_ || key_less(inc, best_->first)) best_ = {inc, minor};
            } else if (pos + 1 < len) {
                const std::size_t rem = len - pos - 1;
                IntegerMatrix child(rem, rem);
                for (std::size_t r = 0; r < rem; ++r)
                    for (std::size_t c = 0; c < rem; ++c) {
                        Integer& e = child(r, c);
                        e = state(pos + 1 + r, pos + 1 + c) * minor;
                        tmp = state(pos + 1 + r, pos) * state(pos, pos + 1 + c);
                        e -= tmp;
                        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
                    }
                const std::vector<int> idx_child(idx.begin() + static_cast<long>(pos) + 1,
                                                 idx.end());
                dfs(child, idx_child, minor, inc);
            }
            inc.pop_back();
        }
    }

    std::optional<std::pair<std::vector<int>, Integer>> best_;
};

} // namespace detail

/// Decides whether every principal minor is positive. On failure the
/// certificate carries the first offending index set in size-then-
/// lexicographic order together with its exact minor.
inline PMatrixDecision is_p_matrix(const RationalMatrix& m) {
    if (!m.is_square())
        throw ShapeError("P-matrix test requires a square matrix, got " + m.shape_string());
    const std::size_t n = m.rows();
    if (n > 20) throw DomainError("principal minor sweep limited to n <= 20");
    if (n == 0) return PMatrixDecision{true, std::nullopt};

    // size-1 minors are the diagonal; the first non-positive one is already
    // the overall first offender
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i).sign() <= 0)
            return PMatrixDecision{
                false, NonPCertificate{IndexSet({static_cast<int>(i + 1)}), m(i, i)}};

    auto scaled = detail::scale_rows_to_integer(m);
    detail::MinorSweep sweep;
    sweep.run(scaled.matrix);
    if (!sweep.best()) return PMatrixDecision{true, std::nullopt};

    const auto& [alpha0, minor_int] = *sweep.best();
    Integer denom(1);
    std::vector<int> alpha1;
    alpha1.reserve(alpha0.size());
    for (int i : alpha0) {
        denom *= scaled.row_scale[static_cast<std::size_t>(i)];
        alpha1.push_back(i + 1);
    }
    return PMatrixDecision{false,
                           NonPCertificate{IndexSet(std::move(alpha1)), Rational(minor_int, denom)}};
}

/// Rank-one factorization Delta = R S^T built from the slices
/// Delta^(i,j) = (Delta_ij e_i) e_j^T, columns in row-major (i,j) order.
/// Slices with Delta_ij = 0 are pruned by default; they contribute an
/// identity row and column to the derived matrix, so the P-matrix verdict
/// is unchanged.
struct RSFactorization {
    RationalMatrix r;                            // n x m
    RationalMatrix s;                            // n x m
    std::vector<std::pair<int, int>> column_map; // 1-based (i,j) per column

    std::size_t m() const { return column_map.size(); }
};

inline RSFactorization build_rs(const RationalMatrix& delta, bool prune_zero_slices = true) {
    if (!delta.is_square())
        throw ShapeError("factorization requires a square matrix, got " + delta.shape_string());
    const std::size_t n = delta.rows();
    std::vector<std::pair<int, int>> map;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (delta(i, j).sign() < 0)
                throw DomainError("factorization requires a non-negative matrix; entry (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") is negative");
            if (!prune_zero_slices || !delta(i, j).is_zero())
                map.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
        }

    RSFactorization rs;
    rs.r = RationalMatrix(n, map.size());
    rs.s = RationalMatrix(n, map.size());
    for (std::size_t k = 0; k < map.size(); ++k) {
        const auto [i, j] = map[k];
        rs.r(static_cast<std::size_t>(i - 1), k) =
            delta(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        rs.s(static_cast<std::size_t>(j - 1), k) = Rational(1);
    }
    rs.column_map = std::move(map);
    return rs;
}

/// M = I_m + S^T A^-1 R; the interval [A, A+Delta] is singular iff M is not
/// a P-matrix.
inline RationalMatrix coxson_matrix(const RationalMatrix& a, const RSFactorization& rs) {
    if (!a.is_square())
        throw ShapeError("reduction requires a square matrix, got " + a.shape_string());
    if (rs.r.rows() != a.rows())
        throw ShapeError("factorization dimension does not match the matrix");
    const RationalMatrix a_inv = inverse(a); // throws SingularMatrixError
    return RationalMatrix::identity(rs.m()) + rs.s.transpose() * (a_inv * rs.r);
}

inline RationalMatrix coxson_matrix(const RationalMatrix& a, const RationalMatrix& delta) {
    if (delta.rows() != a.rows() || delta.cols() != a.cols())
        throw ShapeError("radius shape " + delta.shape_string() + " does not match matrix " +
                         a.shape_string());
    return coxson_matrix(a, build_rs(delta));
}

/// psi(p) = det(I_n + A^-1 R D(p) S^T), evaluated on the n-dimensional side.
/// For p in {0,1}^m this equals the principal minor of the derived matrix
/// on the support of p.
inline Rational psi(const RationalMatrix& a, const RSFactorization& rs,
                    const std::vector<Rational>& p) {
    if (p.size() != rs.m())
        throw ShapeError("p has length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(rs.m()));
    if (!a.is_square() || a.rows() != rs.r.rows())
        throw ShapeError("factorization dimension does not match the matrix");
    const RationalMatrix a_inv = inverse(a); // throws SingularMatrixError
    RationalMatrix rd = rs.r;
    for (std::size_t k = 0; k < rs.m(); ++k)
        for (std::size_t i = 0; i < rd.rows(); ++i) rd(i, k) *= p[k];
    const std::size_t n = a.rows();
    return det(RationalMatrix::identity(n) + a_inv * (rd * rs.s.transpose()));
}

inline Rational psi(const RationalMatrix& a, const RSFactorization& rs, const BinaryVector& p) {
    return psi(a, rs, p.to_rationals());
}

/// Interval-singularity to P-matrix reduction. The interval is rewritten in
/// corner form [A', A' + 2 Delta] with A' = C - Delta; a non-singular corner
/// yields the derived matrix I + S^T A'^-1 R, and a singular corner already
/// certifies singularity, so the canonical non-P matrix [[-1]] is returned.
inline RationalMatrix interval_to_pmatrix_instance(const MatrixInterval& iv) {
    detail::check_radius_nonnegative(iv);
    const RationalMatrix corner = iv.lower();
    if (det(corner).is_zero()) return RationalMatrix{{Rational(-1)}};
    return coxson_matrix(corner, iv.radius * Rational(2));
}

} // namespace pmc

#endif // PMC_PMATRIX_HPP
