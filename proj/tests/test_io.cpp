#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <pmc/io.hpp>

#include "test_support.hpp"

using namespace pmc;
using pmc::test::Rng;

namespace {

template <typename T, typename Writer, typename Parser>
T round_trip(const T& value, Writer write, Parser parse) {
    std::stringstream buffer;
    write(buffer, value);
    return parse(buffer);
}

} // namespace

TEST_CASE("matrix text format") {
    SECTION("canonical layout") {
        RationalMatrix m{{Rational(1), Rational(Integer(1), Integer(2))},
                         {Rational(-3), Rational(0)}};
        std::stringstream out;
        write_matrix(out, m);
        REQUIRE(out.str() == "2 2\n1 1/2\n-3 0\n");
    }

    SECTION("exact round-trip on random matrices") {
        Rng rng(501);
        for (int it = 0; it < 50; ++it) {
            const std::size_t rows = static_cast<std::size_t>(it % 4);
            const std::size_t cols = static_cast<std::size_t>((it / 4) % 4);
            const RationalMatrix m = pmc::test::random_matrix(rng, rows, cols, 100, 100);
            const RationalMatrix back = round_trip(
                m, [](std::ostream& o, const RationalMatrix& v) { write_matrix(o, v); },
                [](std::istream& i) { return parse_matrix(i); });
            REQUIRE(back == m);
        }
    }

    SECTION("trailing content is ignored") {
        std::stringstream in("1 2\n3 4/5\nthreshold 23\n");
        const RationalMatrix m = parse_matrix(in);
        REQUIRE(m == RationalMatrix{{Rational(3), Rational(Integer(4), Integer(5))}});
    }

    SECTION("malformed input") {
        std::stringstream truncated("2 2\n1 2 3");
        REQUIRE_THROWS_AS(parse_matrix(truncated), ParseError);
        std::stringstream bad_entry("1 1\n1/0");
        REQUIRE_THROWS_AS(parse_matrix(bad_entry), ParseError);
        std::stringstream negative_entry_denominator("1 1\n1/-2");
        REQUIRE_THROWS_AS(parse_matrix(negative_entry_denominator), ParseError);
        std::stringstream bad_dims("-1 2\n");
        REQUIRE_THROWS_AS(parse_matrix(bad_dims), ParseError);
        std::stringstream garbage("two 2\n");
        REQUIRE_THROWS_AS(parse_matrix(garbage), ParseError);
    }
}

TEST_CASE("graph text format") {
    SECTION("round-trip") {
        const Graph g(4, {{1, 2}, {2, 4}, {1, 3}});
        const Graph back = round_trip(
            g, [](std::ostream& o, const Graph& v) { write_graph(o, v); },
            [](std::istream& i) { return parse_graph(i); });
        REQUIRE(back.vertex_count() == 4);
        REQUIRE(back.edges() == g.edges());
    }

    SECTION("endpoint order is enforced") {
        std::stringstream reversed("2 1\n2 1\n");
        REQUIRE_THROWS_AS(parse_graph(reversed), ParseError);
        std::stringstream loop("2 1\n1 1\n");
        REQUIRE_THROWS_AS(parse_graph(loop), ParseError);
        std::stringstream out_of_range("2 1\n1 3\n");
        REQUIRE_THROWS_AS(parse_graph(out_of_range), ParseError);
        std::stringstream duplicate("3 2\n1 2\n1 2\n");
        REQUIRE_THROWS_AS(parse_graph(duplicate), ParseError);
        std::stringstream truncated("3 2\n1 2\n");
        REQUIRE_THROWS_AS(parse_graph(truncated), ParseError);
    }
}

TEST_CASE("interval text format") {
    const MatrixInterval iv(RationalMatrix{{Rational(Integer(1), Integer(2))}},
                            RationalMatrix{{Rational(1)}});

    SECTION("center/radius round-trip") {
        const MatrixInterval back = round_trip(
            iv, [](std::ostream& o, const MatrixInterval& v) { write_interval(o, v); },
            [](std::istream& i) { return parse_interval(i); });
        REQUIRE(back.center == iv.center);
        REQUIRE(back.radius == iv.radius);
    }

    SECTION("lower/upper form") {
        std::stringstream in("lower\n1 1\n-1/2\nupper\n1 1\n3/2\n");
        const MatrixInterval parsed = parse_interval(in);
        REQUIRE(parsed.center == iv.center);
        REQUIRE(parsed.radius == iv.radius);
    }

    SECTION("malformed input") {
        std::stringstream bad_tag("middle\n1 1\n0\n");
        REQUIRE_THROWS_AS(parse_interval(bad_tag), ParseError);
        std::stringstream mismatched("center\n1 1\n0\nupper\n1 1\n1\n");
        REQUIRE_THROWS_AS(parse_interval(mismatched), ParseError);
        std::stringstream crossed("lower\n1 1\n2\nupper\n1 1\n1\n");
        REQUIRE_THROWS_AS(parse_interval(crossed), ParseError);
        std::stringstream shapes("center\n1 1\n0\nradius\n2 2\n1 1 1 1\n");
        REQUIRE_THROWS_AS(parse_interval(shapes), ParseError);
    }
}

TEST_CASE("cut certificate format") {
    CutCertificate cert;
    cert.side = {1, 2, 2};
    cert.cut_size = 2;

    std::stringstream out;
    write_cut_certificate(out, cert);
    REQUIRE(out.str() == "cut\nvertices 3\nside 1 2 2\ncut_size 2\n");

    const CutCertificate back = parse_cut_certificate(out);
    REQUIRE(back.side == cert.side);
    REQUIRE(back.cut_size == cert.cut_size);

    std::stringstream bad_label("cut\nvertices 1\nside 3\ncut_size 0\n");
    REQUIRE_THROWS_AS(parse_cut_certificate(bad_label), ParseError);
}

TEST_CASE("norm witness certificate format") {
    NormWitness w;
    w.y = SignVector({1, -1});
    w.z = SignVector({-1, 1});
    w.value = Rational(Integer(7), Integer(3));

    std::stringstream out;
    write_norm_witness(out, w);
    REQUIRE(out.str() == "norm-witness\ndim 2\ny 1 -1\nz -1 1\nvalue 7/3\n");

    const NormWitness back = parse_norm_witness(out);
    REQUIRE(back.y == w.y);
    REQUIRE(back.z == w.z);
    REQUIRE(back.value == w.value);

    std::stringstream bad_sign("norm-witness\ndim 1\ny 2\nz 1\nvalue 0\n");
    REQUIRE_THROWS_AS(parse_norm_witness(bad_sign), ParseError);
}

TEST_CASE("singular-matrix certificate format") {
    SingularityCertificate cert;
    cert.witness_matrix = RationalMatrix{{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
    cert.y = std::vector<Rational>{Rational(1), Rational(Integer(-2), Integer(3))};
    cert.z = std::vector<Rational>{Rational(-1), Rational(1)};

    std::stringstream out;
    write_singularity_certificate(out, cert);
    const SingularityCertificate back = parse_singularity_certificate(out);
    REQUIRE(back.witness_matrix == cert.witness_matrix);
    REQUIRE(back.y == cert.y);
    REQUIRE(back.z == cert.z);

    SECTION("sign vectors are optional") {
        std::stringstream plain("singular-matrix\nmatrix\n1 1\n0\n");
        const SingularityCertificate parsed = parse_singularity_certificate(plain);
        REQUIRE(parsed.witness_matrix == RationalMatrix{{Rational(0)}});
        REQUIRE(!parsed.y.has_value());
        REQUIRE(!parsed.z.has_value());
    }

    SECTION("unknown tags are rejected") {
        std::stringstream bad("singular-matrix\nmatrix\n1 1\n0\nw 1\n");
        REQUIRE_THROWS_AS(parse_singularity_certificate(bad), ParseError);
    }
}

TEST_CASE("non-P certificate format") {
    NonPCertificate cert;
    cert.index_set = IndexSet({1, 2});
    cert.minor_value = Rational(-5);

    std::stringstream out;
    write_non_p_certificate(out, cert);
    REQUIRE(out.str() == "NOT_P index_set=1,2 minor=-5\n");

    const NonPCertificate back = parse_non_p_certificate(out);
    REQUIRE(back.index_set == cert.index_set);
    REQUIRE(back.minor_value == cert.minor_value);

    std::stringstream fraction("NOT_P index_set=3 minor=-7/2\n");
    const NonPCertificate parsed = parse_non_p_certificate(fraction);
    REQUIRE(parsed.index_set == IndexSet({3}));
    REQUIRE(parsed.minor_value == Rational(Integer(-7), Integer(2)));

    std::stringstream empty_set("NOT_P index_set= minor=0\n");
    REQUIRE_THROWS_AS(parse_non_p_certificate(empty_set), ParseError);
    std::stringstream wrong_tag("IS_P index_set=1 minor=0\n");
    REQUIRE_THROWS_AS(parse_non_p_certificate(wrong_tag), ParseError);
    std::stringstream duplicate("NOT_P index_set=2,2 minor=0\n");
    REQUIRE_THROWS_AS(parse_non_p_certificate(duplicate), ParseError);
}
