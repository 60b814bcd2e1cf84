#ifndef PMC_PMC_HPP
#define PMC_PMC_HPP

// Umbrella header for the exact reduction chain
// SIMPLE MAX CUT -> MATRIX R-NORM -> MATRIX-INTERVAL SINGULARITY -> P-MATRIX.

#include <pmc/errors.hpp>
#include <pmc/exact_linalg.hpp>
#include <pmc/graph.hpp>
#include <pmc/interval.hpp>
#include <pmc/io.hpp>
#include <pmc/matrix.hpp>
#include <pmc/pipeline.hpp>
#include <pmc/pmatrix.hpp>
#include <pmc/rational.hpp>
#include <pmc/rnorm.hpp>
#include <pmc/verify.hpp>

#endif // PMC_PMC_HPP
