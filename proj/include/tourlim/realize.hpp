#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tourlim/conditions.hpp"
#include "tourlim/max_flow.hpp"
#include "tourlim/types.hpp"

namespace tourlim {

/// Pair/vertex network whose feasible flows are the (generalised)
/// tournaments with a given score sequence: source -> {i,j} with capacity 1,
/// {i,j} -> i and {i,j} -> j with capacity 1, i -> sink with capacity d_i.
struct ScoreFlowNetwork {
  MaxFlow network;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j), i < j
  std::vector<std::size_t> to_first;   // arc {i,j} -> i, per pair
  std::vector<std::size_t> to_second;  // arc {i,j} -> j, per pair
  std::vector<std::size_t> to_sink;    // arc i -> sink, per vertex
};

ScoreFlowNetwork build_score_network(const ScoreSequence& s);

/// A (generalised) tournament whose row sums are `s`, in input order.
/// Integer sequences give 0/1 tournaments. Throws ValidationError when the
/// Landau condition fails.
GeneralizedTournament realize_scores(const ScoreSequence& s, double tol = kDefaultTolerance);

/// d_i = n^2 * integral over the i-th n-cell of (f - 1/(2n)), i.e.
/// n * (cell mean) - 1/2. Grids that do not nest are refined to the lcm.
ScoreSequence discretize_score_function(const ScoreFunction& f, std::size_t n,
                                        double tol = kDefaultTolerance);

/// Means of f over the n uniform cells.
ScoreFunction average_to_grid(const ScoreFunction& f, std::size_t n);

/// Step kernel on n blocks whose score function is the n-cell average of f.
StepKernel kernel_from_score_function(const ScoreFunction& f, std::size_t n,
                                      double tol = kDefaultTolerance);

/// Reorders vertices by non-decreasing score, then averages with the
/// rho-mirrored converse, rho(i) = n-1-i. The result satisfies
/// alpha(i,j) + alpha(rho i, rho j) = 1 and keeps every score. Vertices of
/// the result are in sorted-score order.
GeneralizedTournament symmetrize_self_converse(const GeneralizedTournament& g,
                                               double tol = kDefaultTolerance);

/// Self-converse realisation of an Eplett sequence. The output may contain
/// entries 1/2 even for integer input.
GeneralizedTournament realize_self_converse(const ScoreSequence& s,
                                            double tol = kDefaultTolerance);

}  // namespace tourlim
