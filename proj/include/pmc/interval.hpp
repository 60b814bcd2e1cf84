#ifndef PMC_INTERVAL_HPP
#define PMC_INTERVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/exact_linalg.hpp>
#include <pmc/matrix.hpp>
#include <pmc/rational.hpp>
#include <pmc/rnorm.hpp>

namespace pmc {

/// The matrix interval [C - D, C + D] in center/radius form.
struct MatrixInterval {
    RationalMatrix center;
    RationalMatrix radius;

    MatrixInterval() = default;

    MatrixInterval(RationalMatrix c, RationalMatrix r)
        : center(std::move(c)), radius(std::move(r)) {
        if (!center.is_square())
            throw ShapeError("interval center must be square, got " + center.shape_string());
        if (radius.rows() != center.rows() || radius.cols() != center.cols())
            throw ShapeError("interval radius shape " + radius.shape_string() +
                             " does not match center " + center.shape_string());
    }

    /// Builds the interval [lower, upper].
    static MatrixInterval from_bounds(const RationalMatrix& lower, const RationalMatrix& upper) {
        if (lower.rows() != upper.rows() || lower.cols() != upper.cols())
            throw ShapeError("interval bounds shape mismatch");
        for (std::size_t i = 0; i < lower.rows(); ++i)
            for (std::size_t j = 0; j < lower.cols(); ++j)
                if (lower(i, j) > upper(i, j))
                    throw DomainError("interval lower bound exceeds upper bound at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        const Rational half(Integer(1), Integer(2));
        return MatrixInterval((lower + upper) * half, (upper - lower) * half);
    }

    std::size_t dim() const { return center.rows(); }
    RationalMatrix lower() const { return center - radius; }
    RationalMatrix upper() const { return center + radius; }

    bool contains(const RationalMatrix& b) const {
        if (b.rows() != center.rows() || b.cols() != center.cols()) return false;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational d = b(i, j) - center(i, j);
                if (d.abs() > radius(i, j)) return false;
            }
        return true;
    }
};

/// Diagonal matrix with the given diagonal.
inline RationalMatrix diag_of(const std::vector<Rational>& v) {
    RationalMatrix d(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d(i, i) = v[i];
    return d;
}

/// An exact singular member of a matrix interval.
struct SingularityCertificate {
    RationalMatrix witness_matrix; // det = 0, inside the interval
    // sign vectors from the construction; at most one entry is interior
    std::optional<std::vector<Rational>> y;
    std::optional<std::vector<Rational>> z;
};

struct SingularityDecision {
    bool singular = false;
    std::optional<SingularityCertificate> certificate; // present iff singular
};

namespace detail {

inline void check_radius_nonnegative(const MatrixInterval& iv) {
    for (std::size_t i = 0; i < iv.radius.rows(); ++i)
        for (std::size_t j = 0; j < iv.radius.cols(); ++j)
            if (iv.radius(i, j).sign() < 0)
                throw DomainError("interval radius has a negative entry at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

/// C - D(y) Delta D(z) for rational sign assignments.
inline RationalMatrix interval_vertex(const MatrixInterval& iv,
                                      const std::vector<Rational>& y,
                                      const std::vector<Rational>& z) {
    const std::size_t n = iv.dim();
    RationalMatrix b = iv.center;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b(i, j) -= y[i] * iv.radius(i, j) * z[j];
    return b;
}

inline std::vector<Rational> to_rationals(const SignVector& s) {
    std::vector<Rational> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) v[i] = Rational(s[i]);
    return v;
}

/// Walks from one vertex assignment to another, one coordinate flip at a
/// time, until the determinant hits zero or changes sign; then solves the
/// affine determinant equation along that edge. The root is rational and
/// lies in [-1,1], so the returned matrix is inside the interval.
inline SingularityCertificate certificate_from_conflict(const MatrixInterval& iv,
                                                        const SignVector& y_from,
                                                        const SignVector& z_from,
                                                        Rational det_from,
                                                        const SignVector& y_to,
                                                        const SignVector& z_to) {
    std::vector<Rational> y = to_rationals(y_from);
    std::vector<Rational> z = to_rationals(z_from);
    const std::size_t n = iv.dim();

    // flip order: y coordinates ascending, then z coordinates ascending
    std::vector<std::pair<bool, std::size_t>> flips;
    for (std::size_t i = 0; i < n; ++i)
        if (y_from[i] != y_to[i]) flips.emplace_back(true, i);
    for (std::size_t j = 0; j < n; ++j)
        if (z_from[j] != z_to[j]) flips.emplace_back(false, j);

    Rational d_cur = std::move(det_from);
    for (const auto& [is_y, idx] : flips) {
        std::vector<Rational>& coord = is_y ? y : z;
        const Rational old_value = coord[idx];
        coord[idx] = -old_value;
        const RationalMatrix vertex = interval_vertex(iv, y, z);
        const Rational d_next = det(vertex);
        if (d_next.is_zero())
            return SingularityCertificate{vertex, y, z};
        if (d_next.sign() != d_cur.sign()) {
            // along this edge det is affine in the flipped coordinate t:
            // det(t) = p + q*t with det(old_value) = d_cur, det(-old_value) = d_next
            const Rational half(Integer(1), Integer(2));
            const Rational p = (d_cur + d_next) * half;
            const Rational q = old_value * (d_cur - d_next) * half;
            coord[idx] = -p / q;
            const RationalMatrix root_vertex = interval_vertex(iv, y, z);
            if (!det(root_vertex).is_zero())
                throw Error("internal: affine edge root is not singular");
            return SingularityCertificate{root_vertex, y, z};
        }
        d_cur = d_next;
    }
    throw Error("internal: sign conflict vanished along the vertex walk");
}

} // namespace detail

/// Exact singularity test for [C - D, C + D]: the determinant of the vertex
/// matrices C - D(y) Delta D(z) is multi-affine in (y, z), so the interval
/// contains a singular matrix iff some vertex determinant vanishes or two
/// vertex determinants have opposite signs. Sweeps z outer, y inner, both
/// lexicographic; the first evidence seeds the certificate.
inline SingularityDecision is_singular_vertex_sign(const MatrixInterval& iv) {
    detail::check_radius_nonnegative(iv);
    const std::size_t n = iv.dim();
    if (n > 16) throw DomainError("vertex sweep limited to n <= 16");

    SignVector y_first, z_first;
    Rational d_first;
    bool have_first = false;

    const std::uint64_t limit = n == 0 ? 1 : (std::uint64_t(1) << n);
    for (std::uint64_t kz = 0; kz < limit; ++kz) {
        const SignVector z = detail::sign_vector_at(kz, n);
        for (std::uint64_t ky = 0; ky < limit; ++ky) {
            const SignVector y = detail::sign_vector_at(ky, n);
            const RationalMatrix vertex =
                detail::interval_vertex(iv, detail::to_rationals(y), detail::to_rationals(z));
            const Rational d = det(vertex);
            if (d.is_zero()) {
                SingularityCertificate cert{vertex, detail::to_rationals(y),
                                            detail::to_rationals(z)};
                return SingularityDecision{true, std::move(cert)};
            }
            if (!have_first) {
                y_first = y;
                z_first = z;
                d_first = d;
                have_first = true;
            } else if (d.sign() != d_first.sign()) {
                auto cert = detail::certificate_from_conflict(iv, y_first, z_first, d_first, y, z);
                return SingularityDecision{true, std::move(cert)};
            }
        }
    }
    return SingularityDecision{false, std::nullopt};
}

/// Exact singular member of a singular interval; errors if the interval is
/// non-singular.
inline SingularityCertificate singular_certificate(const MatrixInterval& iv) {
    SingularityDecision d = is_singular_vertex_sign(iv);
    if (!d.singular)
        throw DomainError("certificate requested for a non-singular interval");
    return *std::move(d.certificate);
}

/// Largest absolute real eigenvalue of A D(y) (alpha J) D(z), in closed
/// form: the product is rank one, so the value is alpha * |z^T A y|.
inline Rational rho0_rank1(const RationalMatrix& a, const SignVector& y, const SignVector& z,
                           const Rational& alpha) {
    if (!a.is_square())
        throw ShapeError("rank-one spectral value requires a square matrix");
    if (y.size() != a.rows() || z.size() != a.rows())
        throw ShapeError("sign vector length does not match the matrix");
    if (alpha.sign() <= 0) throw DomainError("alpha must be positive");
    Rational dot(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if ((z[i] > 0) == (y[j] > 0))
                dot += a(i, j);
            else
                dot -= a(i, j);
        }
    return alpha * dot.abs();
}

/// r-norm to interval-singularity reduction: for non-singular A and K > 0,
/// r(A) >= K iff [A^-1 - (1/K) J, A^-1 + (1/K) J] is singular.
inline MatrixInterval rnorm_to_interval_instance(const RationalMatrix& a, const Rational& k) {
    if (!a.is_square())
        throw ShapeError("reduction requires a square matrix, got " + a.shape_string());
    if (k.sign() <= 0)
        throw DomainError("reduction requires K > 0; r(A) >= K is trivial otherwise");
    RationalMatrix center = inverse(a); // throws SingularMatrixError if det(A) = 0
    const std::size_t n = a.rows();
    RationalMatrix radius = RationalMatrix::ones(n, n) * (Rational(1) / k);
    return MatrixInterval(std::move(center), std::move(radius));
}

} // namespace pmc

#endif // PMC_INTERVAL_HPP
