#include "tourlim/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tourlim/core.hpp"
#include "tourlim/density.hpp"
#include "tourlim/error.hpp"

namespace tourlim {

namespace {

constexpr int kScanPoints = 17;
constexpr double kCertificateThreshold = 1e-9;

double margin(double m) { return std::min(m, 1.0 - m); }

double c4(const StepKernel& w) { return density_kernel(DigraphPattern::cycle(4), w); }

}  // namespace

std::optional<CyclicBox> find_cyclic_box(const StepKernel& w) {
  const std::size_t n = w.size();
  if (n < 3) throw ValidationError("a cyclic box needs at least 3 blocks");
  std::optional<CyclicBox> best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const double d = std::min({margin(w(i, j)), margin(w(j, k)), margin(w(k, i))});
        if (d > 0.0 && (!best || d > best->delta)) best = CyclicBox{{i, j, k}, d};
      }
    }
  }
  return best;
}

double max_perturbation(const StepKernel& w, const CyclicBox& box) {
  return std::min(1.0, static_cast<double>(w.size()) * box.delta);
}

StepKernel perturb_family(const StepKernel& w, const CyclicBox& box, double s) {
  const double s_max = max_perturbation(w, box);
  if (!(s >= 0.0 && s <= s_max)) {
    throw ValidationError("perturbation size " + std::to_string(s) + " outside [0, " +
                          std::to_string(s_max) + "]");
  }
  const double step = s / static_cast<double>(w.size());
  SquareMatrix m = w.matrix();
  const auto [i, j, k] = box.blocks;
  for (auto [a, b] : {std::pair{i, j}, std::pair{j, k}, std::pair{k, i}}) {
    const double up = m(a, b) + step;
    const double down = m(b, a) - step;
    if (up > 1.0 + 1e-15 || down < -1e-15) {
      throw InternalError("perturbed entry left [0,1]");
    }
    m(a, b) = std::min(up, 1.0);
    m(b, a) = std::max(down, 0.0);
  }
  return StepKernel(std::move(m));
}

std::array<double, 5> c4_polynomial(const StepKernel& w, const CyclicBox& box) {
  const double s_max = max_perturbation(w, box);
  if (!(s_max > 0.0)) throw ValidationError("degenerate perturbation range");
  // Fit in t = s / s_max on nodes 0, 1/4, ..., 1, then rescale.
  constexpr int kN = 5;
  std::array<std::array<double, kN + 1>, kN> aug{};
  for (int r = 0; r < kN; ++r) {
    const double t = r / 4.0;
    double p = 1.0;
    for (int c = 0; c < kN; ++c, p *= t) aug[r][c] = p;
    aug[r][kN] = c4(perturb_family(w, box, t == 1.0 ? s_max : s_max * t));
  }
  for (int col = 0; col < kN; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kN; ++r)
      if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) pivot = r;
    std::swap(aug[col], aug[pivot]);
    if (aug[col][col] == 0.0) throw ValidationError("singular Vandermonde system");
    for (int r = 0; r < kN; ++r) {
      if (r == col) continue;
      const double factor = aug[r][col] / aug[col][col];
      for (int c = col; c <= kN; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  std::array<double, 5> coeffs{};
  double scale = 1.0;
  for (int c = 0; c < kN; ++c, scale *= s_max) coeffs[c] = aug[c][kN] / aug[c][c] / scale;
  return coeffs;
}

double evaluate_polynomial(const std::array<double, 5>& a, double s) {
  double v = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * s + *it;
  return v;
}

CertificateResult nonuniqueness_certificate(const StepKernel& w, int refine_rounds) {
  StepKernel base = w;
  std::optional<CyclicBox> box;
  std::size_t rounds = 0;
  // Fewer than three blocks cannot hold a box; halving the grid is free.
  while (base.size() < 3) {
    base = subdivide(base, 2);
    ++rounds;
  }
  for (int extra = 0;; ++extra) {
    box = find_cyclic_box(base);
    if (box || extra >= refine_rounds) break;
    base = subdivide(base, 2);
    ++rounds;
  }
  if (!box) return TransitiveLike{};

  const double s_max = max_perturbation(base, *box);
  const double c4_base = c4(base);
  double best_s = 0.0;
  double best_c4 = c4_base;
  for (int p = 1; p <= kScanPoints; ++p) {
    const double s = p == kScanPoints ? s_max : s_max * p / kScanPoints;
    const double value = c4(perturb_family(base, *box, s));
    if (std::fabs(value - c4_base) > std::fabs(best_c4 - c4_base)) {
      best_s = s;
      best_c4 = value;
    }
  }
  if (std::fabs(best_c4 - c4_base) <= kCertificateThreshold) return TransitiveLike{};

  StepKernel perturbed = perturb_family(base, *box, best_s);
  const ScoreFunction f = score_function_of_kernel(base);
  const ScoreFunction fs = score_function_of_kernel(perturbed);
  double diff = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) diff = std::max(diff, std::fabs(f[i] - fs[i]));
  return NonUniquenessCertificate{best_s, std::move(perturbed), c4_base, best_c4, diff, *box, rounds};
}

}  // namespace tourlim
