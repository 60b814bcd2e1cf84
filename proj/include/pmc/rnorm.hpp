#ifndef PMC_RNORM_HPP
#define PMC_RNORM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/exact_linalg.hpp>
#include <pmc/matrix.hpp>
#include <pmc/rational.hpp>

namespace pmc {

/// Vector over {-1,+1}.
class SignVector {
public:
    SignVector() = default;

    explicit SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e != 1 && e != -1)
                throw DomainError("sign vector entries must be +1 or -1");
    }

    static SignVector all_plus(std::size_t n) {
        return SignVector(std::vector<int>(n, 1));
    }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// Witness for the r-norm: value = z^T A y over sign vectors y, z.
struct NormWitness {
    SignVector y;
    SignVector z;
    Rational value;
};

namespace detail {

/// k-th sign vector in the sweep order: bit 0 of the mask maps to +1, so
/// k = 0 is the all-plus vector and ascending k is lexicographic with +1
/// ordered before -1.
inline SignVector sign_vector_at(std::uint64_t k, std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = ((k >> (n - 1 - i)) & 1) ? -1 : 1;
    return SignVector(std::move(v));
}

} // namespace detail

/// r(A) = max { z^T A y : y, z in {-1,1}^n }, exactly. The sweep runs over
/// z only; for fixed z the inner maximum is attained coordinatewise at
/// y_i = sign((z^T A)_i), with sign 0 mapped to +1. The witness is the first
/// maximizer in lexicographic z-order.
inline NormWitness r_norm(const RationalMatrix& a) {
    if (!a.is_square())
        throw ShapeError("r-norm requires a square matrix, got " + a.shape_string());
    const std::size_t n = a.rows();
    if (n > 30) throw DomainError("r-norm sweep limited to n <= 30");

    NormWitness best;
    best.value = Rational(-1);
    std::vector<Rational> w(n);
    const std::uint64_t limit = n == 0 ? 1 : (std::uint64_t(1) << n);
    for (std::uint64_t kz = 0; kz < limit; ++kz) {
        const SignVector z = detail::sign_vector_at(kz, n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = Rational(0);
            for (std::size_t j = 0; j < n; ++j) {
                if (z[j] > 0)
                    w[i] += a(j, i);
                else
                    w[i] -= a(j, i);
            }
        }
        Rational value(0);
        std::vector<int> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = w[i].sign() >= 0 ? 1 : -1;
            value += w[i].abs();
        }
        if (value > best.value) {
            best.value = value;
            best.y = SignVector(std::move(y));
            best.z = z;
        }
    }
    return best;
}

struct RNormDecision {
    bool answer = false;
    std::optional<NormWitness> witness; // present iff answer
};

/// Decides r(A) >= K.
inline RNormDecision decide_r_norm(const RationalMatrix& a, const Rational& k) {
    NormWitness w = r_norm(a);
    RNormDecision d;
    d.answer = w.value >= k;
    if (d.answer) d.witness = std::move(w);
    return d;
}

} // namespace pmc

#endif // PMC_RNORM_HPP
