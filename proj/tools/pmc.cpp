// pmc: exact decision oracles, reductions and certificate checks for the
// chain SIMPLE MAX CUT -> MATRIX R-NORM -> MATRIX-INTERVAL SINGULARITY ->
// P-MATRIX. All arithmetic is rational and all printed numbers are exact.
//
// Exit codes: 0 yes/valid/consistent, 1 no/invalid, 2 chain inconsistency,
// 3 input error.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <pmc/pmc.hpp>

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitInputError = 3;

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path);
    if (!out) throw pmc::Error("cannot write '" + path + "'");
    writer(out);
    std::cout << "certificate written: " << path << '\n';
}

std::string join_signs(const pmc::SignVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_labels(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_maxcut(const std::string& graph_path, long k, const std::string& cert_out) {
    const pmc::Graph g = pmc::load_graph(graph_path);
    const pmc::CutCertificate best = pmc::max_cut_bruteforce(g);
    const bool yes = best.cut_size >= k;
    std::cout << (yes ? "YES" : "NO") << '\n';
    std::cout << "max_cut " << best.cut_size << '\n';
    std::cout << "side " << join_labels(best.side) << '\n';
    if (!cert_out.empty())
        write_file(cert_out, [&](std::ostream& o) { pmc::write_cut_certificate(o, best); });
    return yes ? kExitYes : kExitNo;
}

int cmd_rnorm(const std::string& matrix_path, const std::string& k_text,
              const std::string& cert_out) {
    const pmc::RationalMatrix a = pmc::load_matrix(matrix_path);
    const pmc::Rational k = pmc::Rational::parse(k_text);
    const pmc::RNormDecision d = pmc::decide_r_norm(a, k);
    if (!d.answer) {
        std::cout << "NO\n";
        return kExitNo;
    }
    std::cout << "YES\n";
    std::cout << "value " << d.witness->value << '\n';
    std::cout << "y " << join_signs(d.witness->y) << '\n';
    std::cout << "z " << join_signs(d.witness->z) << '\n';
    if (!cert_out.empty())
        write_file(cert_out, [&](std::ostream& o) { pmc::write_norm_witness(o, *d.witness); });
    return kExitYes;
}

int cmd_interval_sing(const std::string& interval_path, int max_n, const std::string& cert_out) {
    const pmc::MatrixInterval iv = pmc::load_interval(interval_path);
    if (static_cast<int>(iv.dim()) > max_n)
        throw pmc::DomainError("interval dimension " + std::to_string(iv.dim()) +
                               " exceeds the 4^n sweep cap " + std::to_string(max_n) +
                               "; raise with --max-n");
    const pmc::SingularityDecision d = pmc::is_singular_vertex_sign(iv);
    std::cout << (d.singular ? "SINGULAR" : "NONSINGULAR") << '\n';
    if (d.singular && !cert_out.empty())
        write_file(cert_out, [&](std::ostream& o) {
            pmc::write_singularity_certificate(o, *d.certificate);
        });
    return d.singular ? kExitYes : kExitNo;
}

int cmd_pmatrix(const std::string& matrix_path, int max_n, const std::string& cert_out) {
    const pmc::RationalMatrix m = pmc::load_matrix(matrix_path);
    if (static_cast<int>(m.rows()) > max_n)
        throw pmc::DomainError("matrix dimension " + std::to_string(m.rows()) +
                               " exceeds the 2^n minor sweep cap " + std::to_string(max_n) +
                               "; raise with --max-n");
    const pmc::PMatrixDecision d = pmc::is_p_matrix(m);
    if (d.is_p) {
        std::cout << "P\n";
        return kExitYes;
    }
    pmc::write_non_p_certificate(std::cout, *d.certificate);
    if (!cert_out.empty())
        write_file(cert_out,
                   [&](std::ostream& o) { pmc::write_non_p_certificate(o, *d.certificate); });
    return kExitNo;
}

int cmd_reduce_maxcut(const std::string& graph_path, long k) {
    const pmc::Graph g = pmc::load_graph(graph_path);
    const pmc::RNormInstance inst = pmc::graph_to_rnorm_instance(g, k);
    pmc::write_matrix(std::cout, inst.matrix);
    std::cout << "threshold " << inst.threshold << '\n';
    return kExitYes;
}

int cmd_reduce_rnorm(const std::string& matrix_path, const std::string& k_text) {
    const pmc::RationalMatrix a = pmc::load_matrix(matrix_path);
    const pmc::MatrixInterval iv =
        pmc::rnorm_to_interval_instance(a, pmc::Rational::parse(k_text));
    pmc::write_interval(std::cout, iv);
    return kExitYes;
}

int cmd_reduce_interval(const std::string& interval_path) {
    const pmc::MatrixInterval iv = pmc::load_interval(interval_path);
    pmc::write_matrix(std::cout, pmc::interval_to_pmatrix_instance(iv));
    return kExitYes;
}

int cmd_pipeline(const std::string& graph_path, long k, int max_n,
                 const std::string& cert_prefix) {
    const pmc::Graph g = pmc::load_graph(graph_path);
    if (g.vertex_count() > max_n)
        throw pmc::DomainError("pipeline builds a " +
                               std::to_string(g.vertex_count() * g.vertex_count()) +
                               "-dimensional P-matrix instance for n=" +
                               std::to_string(g.vertex_count()) + "; raise the cap with --max-n");
    const pmc::PipelineReport rep = pmc::run_pipeline(g, k);
    const long l = 2 * g.edge_count() + 1;

    std::cout << "instance: n=" << g.vertex_count() << " |E|=" << g.edge_count() << " K=" << k
              << '\n';
    std::cout << "stage 1 maxcut: verdict=" << (rep.verdict_maxcut ? "YES" : "NO")
              << " cut_size=" << rep.cut.cut_size << " side=" << join_labels(rep.cut.side)
              << '\n';
    std::cout << "stage 2 rnorm: l=" << l << " threshold=" << rep.threshold
              << " value=" << rep.norm_witness.value
              << " verdict=" << (rep.verdict_rnorm ? "YES" : "NO")
              << " y=" << join_signs(rep.norm_witness.y)
              << " z=" << join_signs(rep.norm_witness.z) << '\n';
    std::cout << "stage 3 interval-sing: dim=" << rep.interval.dim()
              << " verdict=" << (rep.verdict_interval ? "SINGULAR" : "NONSINGULAR") << '\n';
    std::cout << "stage 4 pmatrix: dim=" << rep.pmatrix_instance.rows() << " verdict=";
    if (rep.pmatrix.is_p)
        std::cout << "P\n";
    else
        std::cout << "NOT_P index_set=" << rep.pmatrix.certificate->index_set.to_string()
                  << " minor=" << rep.pmatrix.certificate->minor_value << '\n';

    if (!cert_prefix.empty()) {
        write_file(cert_prefix + ".cut",
                   [&](std::ostream& o) { pmc::write_cut_certificate(o, rep.cut); });
        write_file(cert_prefix + ".norm-witness",
                   [&](std::ostream& o) { pmc::write_norm_witness(o, rep.norm_witness); });
        if (rep.singularity.certificate)
            write_file(cert_prefix + ".singular-matrix", [&](std::ostream& o) {
                pmc::write_singularity_certificate(o, *rep.singularity.certificate);
            });
        if (rep.pmatrix.certificate)
            write_file(cert_prefix + ".non-p-minor", [&](std::ostream& o) {
                pmc::write_non_p_certificate(o, *rep.pmatrix.certificate);
            });
    }

    if (!rep.consistent) {
        const auto [first, second] = *rep.first_disagreement();
        std::cout << "consistent: NO (stage " << first << " vs stage " << second << ")\n";
        return kExitInconsistent;
    }
    std::cout << "consistent: YES\n";
    std::cout << "answer: " << (rep.verdict_maxcut ? "YES" : "NO") << '\n';
    return rep.verdict_maxcut ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& kind, const std::string& instance_path,
               const std::string& cert_path) {
    std::ifstream cert_in(cert_path);
    if (!cert_in) throw pmc::ParseError("cannot open '" + cert_path + "'");

    pmc::VerifyResult result;
    try {
        if (kind == "cut") {
            const pmc::Graph g = pmc::load_graph(instance_path);
            result = pmc::verify_cut(g, pmc::parse_cut_certificate(cert_in));
        } else if (kind == "norm-witness") {
            const pmc::RationalMatrix a = pmc::load_matrix(instance_path);
            result = pmc::verify_norm_witness(a, pmc::parse_norm_witness(cert_in));
        } else if (kind == "singular-matrix") {
            const pmc::MatrixInterval iv = pmc::load_interval(instance_path);
            result =
                pmc::verify_singular_matrix(iv, pmc::parse_singularity_certificate(cert_in));
        } else if (kind == "non-p-minor") {
            const pmc::RationalMatrix m = pmc::load_matrix(instance_path);
            result = pmc::verify_non_p_minor(m, pmc::parse_non_p_certificate(cert_in));
        } else {
            throw pmc::DomainError(
                "unknown certificate kind '" + kind +
                "'; expected cut, norm-witness, singular-matrix or non-p-minor");
        }
    } catch (const pmc::ParseError& e) {
        // only the certificate stream is still being parsed here; a
        // malformed certificate is an invalid one, with the reason echoed
        result = pmc::VerifyResult::fail(e.what());
    }

    if (result.valid) {
        std::cout << "valid\n";
        return kExitYes;
    }
    std::cout << "invalid: " << result.reason << '\n';
    return kExitNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact oracles, reductions and certificates for the chain\n"
                 "SIMPLE MAX CUT -> MATRIX R-NORM -> MATRIX-INTERVAL SINGULARITY -> P-MATRIX"};
    app.require_subcommand(1);
    int exit_code = kExitYes;

    std::string graph_path, matrix_path, interval_path, instance_path, cert_path, cert_out;
    std::string k_text, kind;
    long k = 0;
    int interval_max_n = 6;
    int pmatrix_max_n = 12;
    int pipeline_max_n = 3;

    auto* maxcut =
        app.add_subcommand("maxcut", "decide whether the graph has a cut of size >= K");
    maxcut->add_option("graph", graph_path, "graph file")->required();
    maxcut->add_option("K", k, "cut size bound, K >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    maxcut->add_option("--cert-out", cert_out, "write the cut certificate here");
    maxcut->callback([&] { exit_code = cmd_maxcut(graph_path, k, cert_out); });

    auto* rnorm = app.add_subcommand("rnorm", "decide whether r(A) >= K");
    rnorm->add_option("matrix", matrix_path, "matrix file")->required();
    rnorm->add_option("K", k_text, "rational bound, `p` or `p/q`")->required();
    rnorm->add_option("--cert-out", cert_out, "write the sign-vector witness here");
    rnorm->callback([&] { exit_code = cmd_rnorm(matrix_path, k_text, cert_out); });

    auto* ising = app.add_subcommand(
        "interval-sing", "decide whether a matrix interval contains a singular matrix");
    ising->add_option("interval", interval_path, "interval file (center/radius or lower/upper)")
        ->required();
    ising->add_option("--max-n", interval_max_n, "dimension cap for the 4^n vertex sweep");
    ising->add_option("--cert-out", cert_out, "write the singular-matrix certificate here");
    ising->callback([&] { exit_code = cmd_interval_sing(interval_path, interval_max_n, cert_out); });

    auto* pmat =
        app.add_subcommand("pmatrix", "decide whether all principal minors are positive");
    pmat->add_option("matrix", matrix_path, "matrix file")->required();
    pmat->add_option("--max-n", pmatrix_max_n, "dimension cap for the 2^n minor sweep");
    pmat->add_option("--cert-out", cert_out, "write the non-P certificate here");
    pmat->callback([&] { exit_code = cmd_pmatrix(matrix_path, pmatrix_max_n, cert_out); });

    auto* red1 = app.add_subcommand(
        "reduce-maxcut", "emit the r-norm instance for a max-cut instance (matrix + threshold)");
    red1->add_option("graph", graph_path, "graph file")->required();
    red1->add_option("K", k, "cut size bound, K >= 1")->required()->check(CLI::PositiveNumber);
    red1->callback([&] { exit_code = cmd_reduce_maxcut(graph_path, k); });

    auto* red2 = app.add_subcommand(
        "reduce-rnorm", "emit the interval [A^-1 - (1/K)J, A^-1 + (1/K)J] for an r-norm instance");
    red2->add_option("matrix", matrix_path, "matrix file, non-singular")->required();
    red2->add_option("K", k_text, "positive rational bound, `p` or `p/q`")->required();
    red2->callback([&] { exit_code = cmd_reduce_rnorm(matrix_path, k_text); });

    auto* red3 = app.add_subcommand("reduce-interval",
                                    "emit the P-matrix instance I + S^T A^-1 R for an interval");
    red3->add_option("interval", interval_path, "interval file")->required();
    red3->callback([&] { exit_code = cmd_reduce_interval(interval_path); });

    auto* pipe = app.add_subcommand(
        "pipeline", "run all four oracles through the reductions and check they agree");
    pipe->add_option("graph", graph_path, "graph file")->required();
    pipe->add_option("K", k, "cut size bound, K >= 1")->required()->check(CLI::PositiveNumber);
    pipe->add_option("--max-n", pipeline_max_n,
                     "vertex cap; the final stage sweeps 2^(n^2) principal minors");
    pipe->add_option("--cert-out", cert_out, "prefix for the emitted certificate files");
    pipe->callback([&] { exit_code = cmd_pipeline(graph_path, k, pipeline_max_n, cert_out); });

    auto* verify = app.add_subcommand("verify", "recheck a certificate against its instance");
    verify->add_option("kind", kind, "cut | norm-witness | singular-matrix | non-p-minor")
        ->required();
    verify->add_option("instance", instance_path, "instance file (graph, matrix or interval)")
        ->required();
    verify->add_option("cert", cert_path, "certificate file")->required();
    verify->callback([&] { exit_code = cmd_verify(kind, instance_path, cert_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    } catch (const pmc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return exit_code;
}
