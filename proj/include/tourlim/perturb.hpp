#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <variant>

#include "tourlim/types.hpp"

namespace tourlim {

/// Three distinct blocks whose cyclic entries M(i,j), M(j,k), M(k,i) all
/// lie in [delta, 1 - delta].
struct CyclicBox {
  std::array<std::size_t, 3> blocks;
  double delta;
};

/// The ordered triple with the largest margin; ties go to the
/// lexicographically smallest triple. None when every margin is 0.
std::optional<CyclicBox> find_cyclic_box(const StepKernel& w);

/// Largest admissible perturbation size, min(1, n * delta).
double max_perturbation(const StepKernel& w, const CyclicBox& box);

/// Pushes mass s/n around the box's 3-cycle: M(i,j), M(j,k), M(k,i) grow by
/// s/n and their transposes shrink by the same amount. Every row gains and
/// loses s/n once, so the score function is unchanged.
StepKernel perturb_family(const StepKernel& w, const CyclicBox& box, double s);

/// Coefficients a_0..a_4 of s -> t(C4, W_s), fitted from five equally
/// spaced evaluations on [0, s_max].
std::array<double, 5> c4_polynomial(const StepKernel& w, const CyclicBox& box);

double evaluate_polynomial(const std::array<double, 5>& a, double s);

struct NonUniquenessCertificate {
  double s0;
  StepKernel kernel_s0;
  double c4_base;
  double c4_perturbed;
  double score_max_diff;
  CyclicBox box;
  std::size_t refinements;  // subdivision rounds applied to W before the box was found
};

struct TransitiveLike {};

using CertificateResult = std::variant<NonUniquenessCertificate, TransitiveLike>;

/// Searches for a score-preserving perturbation that changes the C4
/// density, scanning 17 equally spaced s in (0, s_max]. When no block
/// triple has interior values and refine_rounds > 0, the grid is halved
/// (the kernel itself is unchanged) and the search repeats; this finds
/// cyclic mass inside diagonal blocks.
CertificateResult nonuniqueness_certificate(const StepKernel& w, int refine_rounds = 0);

}  // namespace tourlim
