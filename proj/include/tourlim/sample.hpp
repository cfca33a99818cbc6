#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tourlim/density.hpp"
#include "tourlim/types.hpp"

namespace tourlim {

struct SampleConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t reps = 1;

  void validate() const;
};

/// Reproducible random stream, version 1: a std::mt19937_64 keyed by
/// SplitMix64(seed, stream). Uniforms take the top 53 bits, so the sequence
/// does not depend on the standard library's distribution classes.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64-splitmix64/v1";

  Rng(std::uint64_t seed, std::uint64_t stream);

  /// Uniform on [0, 1).
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Latent position of a vertex: the block it falls into and the offset of
/// X inside that block, both from one uniform draw.
struct LatentPoint {
  std::size_t block;
  double offset;  // in [0, 1)
};

LatentPoint draw_point(Rng& rng, std::size_t blocks);

/// G(n, W) using stream `rep` of cfg.seed: X_i uniform, edge i -> j (i < j)
/// with probability W(X_i, X_j).
GeneralizedTournament sample_tournament(const StepKernel& w, const SampleConfig& cfg,
                                        std::uint64_t rep = 0);

/// True when sigma is an involution of the blocks and
/// M(i,j) = M(sigma j, sigma i) within kSkewTolerance.
bool is_strongly_self_converse(const StepKernel& w, const std::vector<std::size_t>& sigma);

/// H(2n, W): vertices v_1..v_n are 0..n-1 and w_1..w_n are n..2n-1. The map
/// v_i <-> w_i carries the tournament onto its converse.
GeneralizedTournament sample_self_converse(const StepKernel& w,
                                           const std::vector<std::size_t>& sigma,
                                           const SampleConfig& cfg, std::uint64_t rep = 0);

/// True when perm maps g onto its converse: g(perm a, perm b) = g(b, a).
bool is_converse_witness(const GeneralizedTournament& g, const std::vector<std::size_t>& perm);

/// Samples d_i / n.
DegreeDistribution empirical_degree_distribution(const GeneralizedTournament& g);

struct ConvergenceRow {
  std::string pattern;  // pattern name, or "W1" for the degree-distribution row
  std::size_t n = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double exact = 0.0;   // t(F, W); 0 for W1 rows
  double median = 0.0;  // median over reps
};

/// For each size and pattern: mean and standard error over cfg.reps samples
/// of t_inj(F, G(n, W)), next to t(F, W). One extra row per size reports the
/// Wasserstein-1 distance from the empirical outdegree distribution to that
/// of W. Rows are ordered by size, then pattern, then the W1 row.
std::vector<ConvergenceRow> convergence_report(const StepKernel& w,
                                               const std::vector<std::string>& patterns,
                                               const std::vector<std::size_t>& sizes,
                                               const SampleConfig& cfg);

}  // namespace tourlim
