#ifndef PMC_VERIFY_HPP
#define PMC_VERIFY_HPP

#include <string>

#include <pmc/exact_linalg.hpp>
#include <pmc/graph.hpp>
#include <pmc/interval.hpp>
#include <pmc/pmatrix.hpp>
#include <pmc/rnorm.hpp>

namespace pmc {

/// Outcome of an independent certificate check. Every check recomputes the
/// certified quantity from scratch, exactly.
struct VerifyResult {
    bool valid = false;
    std::string reason; // empty when valid

    static VerifyResult ok() { return {true, ""}; }
    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

inline VerifyResult verify_cut(const Graph& g, const CutCertificate& cert) {
    if (cert.side.size() != static_cast<std::size_t>(g.vertex_count()))
        return VerifyResult::fail("side vector length does not match the vertex count");
    for (int s : cert.side)
        if (s != 1 && s != 2) return VerifyResult::fail("side labels must be 1 or 2");
    long long crossing = 0;
    for (const auto& [u, v] : g.edges())
        if (cert.side[static_cast<std::size_t>(u - 1)] !=
            cert.side[static_cast<std::size_t>(v - 1)])
            ++crossing;
    if (crossing != cert.cut_size)
        return VerifyResult::fail("stated cut size " + std::to_string(cert.cut_size) +
                                  " differs from recomputed " + std::to_string(crossing));
    return VerifyResult::ok();
}

inline VerifyResult verify_norm_witness(const RationalMatrix& a, const NormWitness& w) {
    if (!a.is_square()) return VerifyResult::fail("instance matrix is not square");
    const std::size_t n = a.rows();
    if (w.y.size() != n || w.z.size() != n)
        return VerifyResult::fail("witness sign vector length does not match the matrix");
    Rational value(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if ((w.z[i] > 0) == (w.y[j] > 0))
                value += a(i, j);
            else
                value -= a(i, j);
        }
    if (value != w.value)
        return VerifyResult::fail("stated value " + w.value.to_string() +
                                  " differs from recomputed z^T A y = " + value.to_string());
    return VerifyResult::ok();
}

inline VerifyResult verify_singular_matrix(const MatrixInterval& iv,
                                           const SingularityCertificate& cert) {
    const RationalMatrix& b = cert.witness_matrix;
    if (b.rows() != iv.center.rows() || b.cols() != iv.center.cols())
        return VerifyResult::fail("witness matrix shape does not match the interval");
    if (!det(b).is_zero())
        return VerifyResult::fail("witness matrix has non-zero determinant " +
                                  det(b).to_string());
    if (!iv.contains(b))
        return VerifyResult::fail("witness matrix lies outside the interval");
    return VerifyResult::ok();
}

inline VerifyResult verify_non_p_minor(const RationalMatrix& m, const NonPCertificate& cert) {
    if (!m.is_square()) return VerifyResult::fail("instance matrix is not square");
    if (cert.index_set.empty()) return VerifyResult::fail("empty index set");
    if (cert.index_set.max() > static_cast<int>(m.rows()))
        return VerifyResult::fail("index set exceeds the matrix dimension");
    const Rational minor = principal_minor(m, cert.index_set);
    if (minor != cert.minor_value)
        return VerifyResult::fail("stated minor " + cert.minor_value.to_string() +
                                  " differs from recomputed " + minor.to_string());
    if (minor.sign() > 0)
        return VerifyResult::fail("the certified principal minor is positive");
    return VerifyResult::ok();
}

} // namespace pmc

#endif // PMC_VERIFY_HPP
