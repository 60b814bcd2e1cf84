#ifndef PMC_IO_HPP
#define PMC_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/graph.hpp>
#include <pmc/interval.hpp>
#include <pmc/matrix.hpp>
#include <pmc/pmatrix.hpp>
#include <pmc/rational.hpp>
#include <pmc/rnorm.hpp>

// Text formats. All numbers are exact: integers as `p`, fractions as `p/q`
// with q > 0. Parsers are token-based, so any whitespace layout is accepted;
// writers produce the canonical layouts shown in the README. Parsers read
// exactly the announced number of tokens and ignore trailing content, which
// lets reduction outputs carry informational trailer lines.

namespace pmc {
namespace detail {

inline std::string next_token(std::istream& in, const std::string& what) {
    std::string t;
    if (!(in >> t)) throw ParseError("unexpected end of input while reading " + what);
    return t;
}

inline long parse_count(const std::string& token, const std::string& what) {
    const Rational r = [&] {
        try {
            return Rational::parse(token);
        } catch (const ParseError&) {
            throw ParseError("expected " + what + ", got '" + token + "'");
        }
    }();
    if (!r.is_integer() || r.sign() < 0 || r.numerator() > 1000000)
        throw ParseError("expected " + what + " in 0..1000000, got '" + token + "'");
    return r.numerator().get_si();
}

inline void expect_tag(std::istream& in, const std::string& tag) {
    const std::string t = next_token(in, "tag '" + tag + "'");
    if (t != tag) throw ParseError("expected '" + tag + "', got '" + t + "'");
}

inline Rational parse_rational_token(std::istream& in, const std::string& what) {
    return Rational::parse(next_token(in, what));
}

} // namespace detail

// ---- matrix: `rows cols` then row-major entries ----

inline RationalMatrix parse_matrix(std::istream& in) {
    const long rows = detail::parse_count(detail::next_token(in, "row count"), "row count");
    const long cols = detail::parse_count(detail::next_token(in, "column count"), "column count");
    if (rows * cols > 1000000) throw ParseError("matrix too large");
    RationalMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = detail::parse_rational_token(in, "matrix entry");
    return m;
}

inline void write_matrix(std::ostream& out, const RationalMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

// ---- graph: `n m` then m lines `u v` with 1 <= u < v <= n ----

inline Graph parse_graph(std::istream& in) {
    const long n = detail::parse_count(detail::next_token(in, "vertex count"), "vertex count");
    const long m = detail::parse_count(detail::next_token(in, "edge count"), "edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long e = 0; e < m; ++e) {
        const long u = detail::parse_count(detail::next_token(in, "edge endpoint"), "vertex id");
        const long v = detail::parse_count(detail::next_token(in, "edge endpoint"), "vertex id");
        if (!(1 <= u && u < v && v <= n))
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") violates 1 <= u < v <= n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// ---- interval: two tagged matrices, center/radius or lower/upper ----

inline MatrixInterval parse_interval(std::istream& in) {
    const std::string tag = detail::next_token(in, "interval tag");
    try {
        if (tag == "center") {
            RationalMatrix c = parse_matrix(in);
            detail::expect_tag(in, "radius");
            RationalMatrix r = parse_matrix(in);
            return MatrixInterval(std::move(c), std::move(r));
        }
        if (tag == "lower") {
            RationalMatrix lo = parse_matrix(in);
            detail::expect_tag(in, "upper");
            RationalMatrix up = parse_matrix(in);
            return MatrixInterval::from_bounds(lo, up);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected 'center' or 'lower', got '" + tag + "'");
}

inline void write_interval(std::ostream& out, const MatrixInterval& iv) {
    out << "center\n";
    write_matrix(out, iv.center);
    out << "radius\n";
    write_matrix(out, iv.radius);
}

// ---- cut certificate ----

inline CutCertificate parse_cut_certificate(std::istream& in) {
    detail::expect_tag(in, "cut");
    detail::expect_tag(in, "vertices");
    const long n = detail::parse_count(detail::next_token(in, "vertex count"), "vertex count");
    detail::expect_tag(in, "side");
    CutCertificate cert;
    cert.side.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const long s = detail::parse_count(detail::next_token(in, "side label"), "side label");
        if (s != 1 && s != 2) throw ParseError("side labels must be 1 or 2");
        cert.side[static_cast<std::size_t>(i)] = static_cast<int>(s);
    }
    detail::expect_tag(in, "cut_size");
    cert.cut_size =
        detail::parse_count(detail::next_token(in, "cut size"), "cut size");
    return cert;
}

inline void write_cut_certificate(std::ostream& out, const CutCertificate& cert) {
    out << "cut\nvertices " << cert.side.size() << "\nside";
    for (int s : cert.side) out << ' ' << s;
    out << "\ncut_size " << cert.cut_size << '\n';
}

// ---- r-norm witness certificate ----

inline NormWitness parse_norm_witness(std::istream& in) {
    detail::expect_tag(in, "norm-witness");
    detail::expect_tag(in, "dim");
    const long n = detail::parse_count(detail::next_token(in, "dimension"), "dimension");
    auto read_signs = [&](const std::string& tag) {
        detail::expect_tag(in, tag);
        std::vector<int> v(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            const std::string t = detail::next_token(in, "sign entry");
            if (t == "1")
                v[static_cast<std::size_t>(i)] = 1;
            else if (t == "-1")
                v[static_cast<std::size_t>(i)] = -1;
            else
                throw ParseError("sign entries must be 1 or -1, got '" + t + "'");
        }
        return SignVector(std::move(v));
    };
    NormWitness w;
    w.y = read_signs("y");
    w.z = read_signs("z");
    detail::expect_tag(in, "value");
    w.value = detail::parse_rational_token(in, "witness value");
    return w;
}

inline void write_norm_witness(std::ostream& out, const NormWitness& w) {
    out << "norm-witness\ndim " << w.y.size() << "\ny";
    for (int e : w.y.entries()) out << ' ' << e;
    out << "\nz";
    for (int e : w.z.entries()) out << ' ' << e;
    out << "\nvalue " << w.value << '\n';
}

// ---- singular-matrix certificate ----

inline SingularityCertificate parse_singularity_certificate(std::istream& in) {
    detail::expect_tag(in, "singular-matrix");
    detail::expect_tag(in, "matrix");
    SingularityCertificate cert;
    cert.witness_matrix = parse_matrix(in);
    const std::size_t n = cert.witness_matrix.rows();
    std::string tag;
    while (in >> tag) {
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = detail::parse_rational_token(in, "sign assignment entry");
        if (tag == "y")
            cert.y = std::move(v);
        else if (tag == "z")
            cert.z = std::move(v);
        else
            throw ParseError("unexpected tag '" + tag + "' in singular-matrix certificate");
    }
    return cert;
}

inline void write_singularity_certificate(std::ostream& out, const SingularityCertificate& cert) {
    out << "singular-matrix\nmatrix\n";
    write_matrix(out, cert.witness_matrix);
    if (cert.y) {
        out << "y";
        for (const Rational& e : *cert.y) out << ' ' << e;
        out << '\n';
    }
    if (cert.z) {
        out << "z";
        for (const Rational& e : *cert.z) out << ' ' << e;
        out << '\n';
    }
}

// ---- non-P certificate: `NOT_P index_set=<i1,i2,...> minor=<p/q>` ----

inline NonPCertificate parse_non_p_certificate(std::istream& in) {
    detail::expect_tag(in, "NOT_P");
    const std::string idx_field = detail::next_token(in, "index_set field");
    if (idx_field.rfind("index_set=", 0) != 0)
        throw ParseError("expected 'index_set=...', got '" + idx_field + "'");
    const std::string minor_field = detail::next_token(in, "minor field");
    if (minor_field.rfind("minor=", 0) != 0)
        throw ParseError("expected 'minor=...', got '" + minor_field + "'");

    std::vector<int> indices;
    std::stringstream list(idx_field.substr(std::string("index_set=").size()));
    std::string item;
    while (std::getline(list, item, ','))
        indices.push_back(
            static_cast<int>(detail::parse_count(item, "index")));
    if (indices.empty()) throw ParseError("empty index set");

    NonPCertificate cert;
    try {
        cert.index_set = IndexSet(std::move(indices));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    cert.minor_value = Rational::parse(minor_field.substr(std::string("minor=").size()));
    return cert;
}

inline void write_non_p_certificate(std::ostream& out, const NonPCertificate& cert) {
    out << "NOT_P index_set=" << cert.index_set.to_string() << " minor=" << cert.minor_value
        << '\n';
}

// ---- files ----

namespace detail {

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

} // namespace detail

inline RationalMatrix load_matrix(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_matrix(in);
}

inline Graph load_graph(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_graph(in);
}

inline MatrixInterval load_interval(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_interval(in);
}

} // namespace pmc

#endif // PMC_IO_HPP
