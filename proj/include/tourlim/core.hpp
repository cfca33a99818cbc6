#pragma once

#include <cstddef>
#include <vector>

#include "tourlim/types.hpp"

namespace tourlim {

/// W_G: off-diagonal blocks copy alpha, diagonal blocks are 1/2.
StepKernel step_kernel_from_tournament(const GeneralizedTournament& g);

/// Row sums of alpha. Integer kind exactly when g is a 0/1 tournament.
ScoreSequence scores_of_tournament(const GeneralizedTournament& g);

/// Cell i is the mean of row i of the block matrix.
ScoreFunction score_function_of_kernel(const StepKernel& w);

GeneralizedTournament converse(const GeneralizedTournament& g);
StepKernel converse(const StepKernel& w);

ScoreFunction decreasing_rearrangement(const ScoreFunction& f);
ScoreFunction increasing_rearrangement(const ScoreFunction& f);

/// Grid form of the measure-preserving map sigma with f* o sigma = f:
/// result[i] is the position of cell i in the decreasing rearrangement.
/// Ties keep their original order.
std::vector<std::size_t> rearrangement_map(const ScoreFunction& f);

/// Relabels blocks: result(i,j) = w(perm[i], perm[j]).
StepKernel pullback(const StepKernel& w, const std::vector<std::size_t>& perm);

/// The same kernel on a grid `factor` times finer.
StepKernel subdivide(const StepKernel& w, std::size_t factor);

/// Degree distribution of a step kernel. Atom i of `outdegree` pairs with
/// atom i of `indegree`; paired positions sum to 1.
struct KernelDegreeDistribution {
  DegreeDistribution outdegree;
  DegreeDistribution indegree;
};

KernelDegreeDistribution degree_distribution(const StepKernel& w);

/// Wasserstein-1 distance: the L1 distance between quantile functions,
/// computed exactly over the merged breakpoints.
double wasserstein1(const DegreeDistribution& mu, const DegreeDistribution& nu);

}  // namespace tourlim
