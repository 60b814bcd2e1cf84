#ifndef PMC_PIPELINE_HPP
#define PMC_PIPELINE_HPP

#include <array>
#include <optional>
#include <utility>

#include <pmc/graph.hpp>
#include <pmc/interval.hpp>
#include <pmc/pmatrix.hpp>
#include <pmc/rnorm.hpp>

namespace pmc {

/// End-to-end run of the reduction chain on one (graph, K) instance. Each
/// stage holds the instance it decided, its oracle verdict and certificate;
/// the four verdicts must agree when every reduction is correct.
struct PipelineReport {
    Graph graph;
    long k = 0;

    // stage 1: maximum cut
    CutCertificate cut;
    bool verdict_maxcut = false; // max cut >= K

    // stage 2: r-norm on l*I - A(G) against the derived threshold
    RationalMatrix rnorm_matrix;
    Rational threshold;
    NormWitness norm_witness;
    bool verdict_rnorm = false; // r(A) >= threshold

    // stage 3: interval around the inverse with radius (1/threshold) J
    MatrixInterval interval;
    SingularityDecision singularity;
    bool verdict_interval = false; // interval singular

    // stage 4: P-matrix test on the derived m x m matrix
    RationalMatrix pmatrix_instance;
    PMatrixDecision pmatrix;
    bool verdict_pmatrix = false; // NOT a P-matrix

    bool consistent = false;

    std::array<bool, 4> verdicts() const {
        return {verdict_maxcut, verdict_rnorm, verdict_interval, verdict_pmatrix};
    }

    /// First adjacent pair of stages (1-based) whose verdicts differ.
    std::optional<std::pair<int, int>> first_disagreement() const {
        const auto v = verdicts();
        for (int i = 0; i < 3; ++i)
            if (v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i + 1)])
                return std::make_pair(i + 1, i + 2);
        return std::nullopt;
    }
};

/// Runs all four oracles through the reduction chain and cross-checks them.
/// The derived P-matrix instance has dimension n^2, so the final sweep costs
/// 2^(n^2) minors; callers should cap n accordingly.
inline PipelineReport run_pipeline(const Graph& g, long k) {
    if (k < 1) throw DomainError("pipeline requires a positive integer K");

    PipelineReport rep;
    rep.graph = g;
    rep.k = k;

    rep.cut = max_cut_bruteforce(g);
    rep.verdict_maxcut = rep.cut.cut_size >= k;

    RNormInstance inst = graph_to_rnorm_instance(g, k);
    rep.rnorm_matrix = std::move(inst.matrix);
    rep.threshold = std::move(inst.threshold);
    rep.norm_witness = r_norm(rep.rnorm_matrix);
    rep.verdict_rnorm = rep.norm_witness.value >= rep.threshold;

    rep.interval = rnorm_to_interval_instance(rep.rnorm_matrix, rep.threshold);
    rep.singularity = is_singular_vertex_sign(rep.interval);
    rep.verdict_interval = rep.singularity.singular;

    rep.pmatrix_instance = interval_to_pmatrix_instance(rep.interval);
    rep.pmatrix = is_p_matrix(rep.pmatrix_instance);
    rep.verdict_pmatrix = !rep.pmatrix.is_p;

    rep.consistent = rep.verdict_maxcut == rep.verdict_rnorm &&
                     rep.verdict_rnorm == rep.verdict_interval &&
                     rep.verdict_interval == rep.verdict_pmatrix;
    return rep;
}

} // namespace pmc

#endif // PMC_PIPELINE_HPP
