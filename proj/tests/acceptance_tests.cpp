// Acceptance suite: oracle-equivalence and property checks for the whole
// reduction chain, run at desk scale with exact arithmetic. Prints one
// PASS/FAIL line per criterion and exits non-zero if any criterion fails.
//
// Usage: acceptance_tests [--seed N] [--max-n N]
//   --seed   seed for the randomized suites (default 20240817)
//   --max-n  largest vertex count for the exhaustive chain sweep (default 4)

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <pmc/pmc.hpp>

#include "test_support.hpp"

using namespace pmc;
using pmc::test::Rng;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

int failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << "criterion " << number << ": " << title << " ... "
              << (check.ok ? "PASS" : "FAIL") << " [" << elapsed << " ms]";
    if (!check.ok) {
        std::cout << "\n  " << check.detail;
        ++failures;
    }
    std::cout << '\n' << std::flush;
}

std::string describe(const Graph& g, long k) {
    std::ostringstream os;
    os << "graph n=" << g.vertex_count() << " edges={";
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (e) os << ',';
        os << g.edges()[e].first << '-' << g.edges()[e].second;
    }
    os << "} K=" << k;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20240817;
    int max_n = 4;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc)
            seed = std::stoull(argv[++i]);
        else if (arg == "--max-n" && i + 1 < argc)
            max_n = std::stoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance_tests [--seed N] [--max-n N]\n";
            return 2;
        }
    }

    run_criterion(1, "exhaustive chain agreement on all graphs with n <= " +
                         std::to_string(max_n),
                  [&](Check& check) {
                      long instances = 0;
                      for (int n = 1; n <= max_n; ++n)
                          for (const Graph& g : pmc::test::all_graphs(n))
                              for (long k = 1; k <= g.edge_count(); ++k) {
                                  const PipelineReport rep = run_pipeline(g, k);
                                  ++instances;
                                  check.expect(rep.consistent,
                                               "verdicts disagree on " + describe(g, k));
                                  if (!check.ok) return;
                              }
                      check.expect(instances > 0, "no instances were generated");
                  });

    run_criterion(2, "triangle anchor values (max cut 2, l = 7, r-norm 23)", [](Check& check) {
        const Graph k3 = pmc::test::complete_graph(3);
        check.expect(max_cut_bruteforce(k3).cut_size == 2, "max cut of the triangle is not 2");
        const RNormInstance inst = graph_to_rnorm_instance(k3, 2);
        check.expect(inst.matrix(0, 0) == Rational(7), "diagonal entry l is not 7");
        check.expect(inst.threshold == Rational(23), "threshold is not 23");
        const Rational r = r_norm(inst.matrix).value;
        check.expect(r == Rational(23), "r-norm of the triangle matrix is " + r.to_string());
        // identity n*l + 4m' - 2|E| at the maximum cut
        check.expect(r == Rational(3 * 7 + 4 * 2 - 2 * 3), "r-norm misses the cut identity");
    });

    run_criterion(3, "det(I+FG) = det(I+GF) on 200 random factor pairs", [&](Check& check) {
        Rng rng(seed + 3);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int it = 0; it < 200; ++it) {
            const std::size_t k = dim(rng);
            const std::size_t n = dim(rng);
            const RationalMatrix f = pmc::test::random_matrix(rng, k, n, 10, 10);
            const RationalMatrix g = pmc::test::random_matrix(rng, n, k, 10, 10);
            const Rational small_side = det(RationalMatrix::identity(k) + f * g);
            const Rational large_side = det(RationalMatrix::identity(n) + g * f);
            check.expect(small_side == large_side, "sides disagree at iteration " +
                                                       std::to_string(it));
            check.expect(det_identity_plus_product(f, g) == small_side,
                         "operation disagrees with the direct evaluation at iteration " +
                             std::to_string(it));
            if (!check.ok) return;
        }
    });

    run_criterion(4, "rank-one spectral maximum equals alpha * r(A) on 50 instances",
                  [&](Check& check) {
                      Rng rng(seed + 4);
                      for (int it = 0; it < 50; ++it) {
                          const std::size_t n = 1 + static_cast<std::size_t>(it % 3);
                          const RationalMatrix a =
                              pmc::test::random_nonsingular_matrix(rng, n, 5, 5);
                          Rational alpha = pmc::test::random_rational(rng, 6, 6).abs();
                          if (alpha.is_zero()) alpha = Rational(Integer(1), Integer(2));

                          Rational best(0);
                          const std::uint64_t limit = std::uint64_t(1) << n;
                          for (std::uint64_t ky = 0; ky < limit; ++ky)
                              for (std::uint64_t kz = 0; kz < limit; ++kz) {
                                  std::vector<int> y(n), z(n);
                                  for (std::size_t i = 0; i < n; ++i) {
                                      y[i] = ((ky >> i) & 1) ? -1 : 1;
                                      z[i] = ((kz >> i) & 1) ? -1 : 1;
                                  }
                                  const Rational value =
                                      rho0_rank1(a, SignVector(y), SignVector(z), alpha);
                                  if (value > best) best = value;
                              }
                          check.expect(best == alpha * r_norm(a).value,
                                       "mismatch at iteration " + std::to_string(it));
                          if (!check.ok) return;
                      }
                  });

    run_criterion(5, "interval singularity vs P-matrix verdict and minor correspondence",
                  [&](Check& check) {
                      Rng rng(seed + 5);
                      const Rational half(Integer(1), Integer(2));
                      for (int it = 0; it < 100; ++it) {
                          const std::size_t n = 1 + static_cast<std::size_t>(it % 3);
                          const RationalMatrix a =
                              pmc::test::random_nonsingular_matrix(rng, n, 5, 5);
                          const RationalMatrix delta =
                              pmc::test::random_nonnegative_matrix(rng, n, n, 40);
                          const RSFactorization rs = build_rs(delta);
                          const RationalMatrix m = coxson_matrix(a, rs);

                          const bool singular =
                              is_singular_vertex_sign(
                                  MatrixInterval(a + delta * half, delta * half))
                                  .singular;
                          const bool not_p = !is_p_matrix(m).is_p;
                          check.expect(singular == not_p,
                                       "interval and P-matrix verdicts disagree at iteration " +
                                           std::to_string(it));

                          check.expect(psi(a, rs, BinaryVector::zero(rs.m())) == Rational(1),
                                       "psi(0) is not 1 at iteration " + std::to_string(it));
                          const std::uint64_t limit = std::uint64_t(1) << rs.m();
                          for (std::uint64_t mask = 1; mask < limit; ++mask) {
                              std::vector<int> bits(rs.m());
                              for (std::size_t b = 0; b < rs.m(); ++b) bits[b] = (mask >> b) & 1;
                              const BinaryVector p(bits);
                              if (psi(a, rs, p) != principal_minor(m, p.support())) {
                                  check.expect(false, "minor correspondence fails at iteration " +
                                                          std::to_string(it));
                                  break;
                              }
                          }
                          if (!check.ok) return;
                      }
                  });

    run_criterion(6, "matrix norm axioms for the r-norm on 100 random instances",
                  [&](Check& check) {
                      Rng rng(seed + 6);
                      for (int it = 0; it < 100; ++it) {
                          const std::size_t n = 1 + static_cast<std::size_t>(it % 4);
                          const RationalMatrix a = pmc::test::random_matrix(rng, n, n);
                          const RationalMatrix b = pmc::test::random_matrix(rng, n, n);
                          const Rational k = pmc::test::random_rational(rng);
                          const Rational ra = r_norm(a).value;

                          check.expect(ra.sign() >= 0, "negative norm value");
                          if (!(a == RationalMatrix(n, n)))
                              check.expect(ra.sign() > 0, "zero norm for a non-zero matrix");
                          check.expect(r_norm(a * k).value == k.abs() * ra,
                                       "absolute homogeneity fails");
                          check.expect(r_norm(a + b).value <= ra + r_norm(b).value,
                                       "subadditivity fails");
                          if (!check.ok) return;
                      }
                  });

    run_criterion(7, "all emitted certificates re-verify after a text round-trip",
                  [&](Check& check) {
                      long verified = 0;
                      // chain certificates from every pipeline instance with n <= 3
                      for (int n = 1; n <= 3; ++n)
                          for (const Graph& g : pmc::test::all_graphs(n))
                              for (long k = 1; k <= g.edge_count(); ++k) {
                                  const PipelineReport rep = run_pipeline(g, k);
                                  {
                                      std::stringstream buf;
                                      write_cut_certificate(buf, rep.cut);
                                      check.expect(
                                          verify_cut(rep.graph, parse_cut_certificate(buf)).valid,
                                          "cut certificate fails on " + describe(g, k));
                                      ++verified;
                                  }
                                  {
                                      std::stringstream buf;
                                      write_norm_witness(buf, rep.norm_witness);
                                      check.expect(verify_norm_witness(rep.rnorm_matrix,
                                                                       parse_norm_witness(buf))
                                                       .valid,
                                                   "norm witness fails on " + describe(g, k));
                                      ++verified;
                                  }
                                  if (rep.singularity.certificate) {
                                      std::stringstream buf;
                                      write_singularity_certificate(buf,
                                                                    *rep.singularity.certificate);
                                      check.expect(
                                          verify_singular_matrix(
                                              rep.interval, parse_singularity_certificate(buf))
                                              .valid,
                                          "singular-matrix certificate fails on " +
                                              describe(g, k));
                                      ++verified;
                                  }
                                  if (rep.pmatrix.certificate) {
                                      std::stringstream buf;
                                      write_non_p_certificate(buf, *rep.pmatrix.certificate);
                                      check.expect(verify_non_p_minor(rep.pmatrix_instance,
                                                                      parse_non_p_certificate(buf))
                                                       .valid,
                                                   "non-P certificate fails on " + describe(g, k));
                                      ++verified;
                                  }
                                  if (!check.ok) return;
                              }

                      // singular-matrix certificates from random intervals
                      Rng rng(seed + 7);
                      int singular_seen = 0;
                      for (int it = 0; it < 400 && singular_seen < 50; ++it) {
                          const std::size_t n = 1 + static_cast<std::size_t>(it % 3);
                          const MatrixInterval iv(
                              pmc::test::random_matrix(rng, n, n, 5, 5),
                              pmc::test::random_nonnegative_matrix(rng, n, n, 25, 3, 2));
                          const SingularityDecision d = is_singular_vertex_sign(iv);
                          if (!d.singular) continue;
                          ++singular_seen;
                          std::stringstream buf;
                          write_singularity_certificate(buf, *d.certificate);
                          check.expect(
                              verify_singular_matrix(iv, parse_singularity_certificate(buf)).valid,
                              "random singular-matrix certificate fails at iteration " +
                                  std::to_string(it));
                          ++verified;
                          if (!check.ok) return;
                      }
                      check.expect(singular_seen == 50, "too few singular intervals sampled");

                      // non-P certificates from random matrices
                      int non_p_seen = 0;
                      for (int it = 0; it < 400 && non_p_seen < 50; ++it) {
                          const std::size_t n = 1 + static_cast<std::size_t>(it % 4);
                          const RationalMatrix m = pmc::test::random_matrix(rng, n, n, 4, 3);
                          const PMatrixDecision d = is_p_matrix(m);
                          if (d.is_p) continue;
                          ++non_p_seen;
                          std::stringstream buf;
                          write_non_p_certificate(buf, *d.certificate);
                          check.expect(verify_non_p_minor(m, parse_non_p_certificate(buf)).valid,
                                       "random non-P certificate fails at iteration " +
                                           std::to_string(it));
                          ++verified;
                          if (!check.ok) return;
                      }
                      check.expect(non_p_seen == 50, "too few non-P matrices sampled");
                      check.expect(verified > 0, "no certificates were produced");
                  });

    run_criterion(8, "block determinant invariance on 100 random instances", [&](Check& check) {
        Rng rng(seed + 8);
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        for (int it = 0; it < 100; ++it) {
            const std::size_t m1 = dim(rng);
            const std::size_t m2 = dim(rng);
            const std::size_t n1 = dim(rng);
            if (m1 + m2 <= n1) continue;
            const std::size_t n2 = m1 + m2 - n1;

            const RationalMatrix a11 = pmc::test::random_matrix(rng, m1, n1);
            const RationalMatrix a12 = pmc::test::random_matrix(rng, m1, n2);
            const RationalMatrix a21 = pmc::test::random_matrix(rng, m2, n1);
            const RationalMatrix a22 = pmc::test::random_matrix(rng, m2, n2);
            const RationalMatrix x = pmc::test::random_matrix(rng, m1, m2);
            const RationalMatrix y = pmc::test::random_matrix(rng, n1, n2);

            const Rational d = det(vstack(hstack(a11, a12), hstack(a21, a22)));
            const Rational row_updated =
                det(vstack(hstack(a11 + x * a21, a12 + x * a22), hstack(a21, a22)));
            const Rational col_updated =
                det(vstack(hstack(a11, a12 + a11 * y), hstack(a21, a22 + a21 * y)));
            check.expect(row_updated == d, "row update changes the determinant at iteration " +
                                               std::to_string(it));
            check.expect(col_updated == d, "column update changes the determinant at iteration " +
                                               std::to_string(it));
            if (!check.ok) return;
        }
    });

    if (failures == 0) {
        std::cout << "ACCEPTANCE: all criteria PASS\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures << " criterion(s) FAILED\n";
    return 1;
}
