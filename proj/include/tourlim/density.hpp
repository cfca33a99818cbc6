#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tourlim/pattern.hpp"
#include "tourlim/types.hpp"

namespace tourlim {

enum class DensityMode { hom, inj, ind };

inline constexpr int kMaxPatternVertices = 8;
inline constexpr double kKernelAssignmentBudget = 1e8;
inline constexpr double kFiniteAssignmentBudget = 2e8;

/// t(F,G), t_inj(F,G) or t_ind(F,G) for a (generalised) tournament G.
/// Injective modes return 0 when F has more vertices than G. Stars and the
/// 3-cycle in 0/1 tournaments are counted from the score sequence; other
/// cases enumerate all maps.
double density_finite(const DigraphPattern& f, const GeneralizedTournament& g,
                      DensityMode mode);

/// Reference enumeration for density_finite, without the counting shortcuts.
double density_finite_direct(const DigraphPattern& f, const GeneralizedTournament& g,
                             DensityMode mode);

/// t(F,W) for a step kernel. Patterns whose underlying graph is a forest
/// are contracted leaf by leaf, directed cycles use trace((M/n)^k), and
/// everything else sums over block assignments.
double density_kernel(const DigraphPattern& f, const StepKernel& w);

/// t(F,W) by summing over all n^k block assignments in lexicographic order
/// with compensated summation.
double density_kernel_direct(const DigraphPattern& f, const StepKernel& w);

/// t(S_{out,in}, W) = mean over cells of f^out (1-f)^in.
double star_density(const StepKernel& w, int out, int in);

/// The 3-cycle density recovered from the degree distribution alone:
/// 3 t(S_{1,1})/2 - 1/4.
double c3_from_degree(const StepKernel& w);

/// Densities of one representative per isomorphism class of tournaments on
/// 1..max_size vertices. Different fingerprints certify non-equivalent
/// kernels; equal fingerprints certify nothing.
struct DensityFingerprint {
  int max_size = 0;
  std::vector<std::pair<std::string, double>> entries;  // canonical word, t(F,W)

  double at(const std::string& word) const;
};

DensityFingerprint fingerprint(const StepKernel& w, int max_size);

/// Largest absolute difference between matching entries.
double fingerprint_distance(const DensityFingerprint& a, const DensityFingerprint& b);

}  // namespace tourlim
