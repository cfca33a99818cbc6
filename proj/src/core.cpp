#include "tourlim/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tourlim/error.hpp"
#include "tourlim/numerics.hpp"

namespace tourlim {

StepKernel step_kernel_from_tournament(const GeneralizedTournament& g) {
  SquareMatrix m = g.matrix();
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 0.5;
  return StepKernel(std::move(m));
}

ScoreSequence scores_of_tournament(const GeneralizedTournament& g) {
  std::vector<double> d(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) d[i] = exact_sum(g.matrix().row(i));
  return {std::move(d), g.is_tournament() ? ScoreKind::integer : ScoreKind::real};
}

ScoreFunction score_function_of_kernel(const StepKernel& w) {
  const auto n = static_cast<double>(w.size());
  std::vector<double> cells(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    cells[i] = std::clamp(exact_sum(w.matrix().row(i)) / n, 0.0, 1.0);
  }
  return ScoreFunction(std::move(cells));
}

namespace {

SquareMatrix transposed(const SquareMatrix& a) {
  SquareMatrix t(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t(i, j) = a(j, i);
  return t;
}

}  // namespace

// The transpose rather than 1 - x: it is exact, so converse is an involution
// bit for bit.
GeneralizedTournament converse(const GeneralizedTournament& g) {
  return GeneralizedTournament(transposed(g.matrix()));
}

StepKernel converse(const StepKernel& w) { return StepKernel(transposed(w.matrix())); }

ScoreFunction decreasing_rearrangement(const ScoreFunction& f) {
  std::vector<double> c(f.cells().begin(), f.cells().end());
  std::stable_sort(c.begin(), c.end(), std::greater<>());
  return ScoreFunction(std::move(c));
}

ScoreFunction increasing_rearrangement(const ScoreFunction& f) {
  std::vector<double> c(f.cells().begin(), f.cells().end());
  std::stable_sort(c.begin(), c.end());
  return ScoreFunction(std::move(c));
}

std::vector<std::size_t> rearrangement_map(const ScoreFunction& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f[a] > f[b]; });
  std::vector<std::size_t> sigma(f.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) sigma[order[pos]] = pos;
  return sigma;
}

StepKernel pullback(const StepKernel& w, const std::vector<std::size_t>& perm) {
  const std::size_t n = w.size();
  if (perm.size() != n) throw ValidationError("permutation length differs from block count");
  std::vector<char> seen(n, 0);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw ValidationError("not a permutation of the blocks");
    seen[p] = 1;
  }
  SquareMatrix m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = w(perm[i], perm[j]);
  return StepKernel(std::move(m));
}

StepKernel subdivide(const StepKernel& w, std::size_t factor) {
  if (factor == 0) throw ValidationError("subdivision factor must be positive");
  const std::size_t n = w.size() * factor;
  SquareMatrix m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 0.5 : w(i / factor, j / factor);
  return StepKernel(std::move(m));
}

KernelDegreeDistribution degree_distribution(const StepKernel& w) {
  const ScoreFunction f = score_function_of_kernel(w);
  std::vector<double> cells(f.cells().begin(), f.cells().end());
  std::sort(cells.begin(), cells.end());
  const auto n = static_cast<double>(cells.size());
  std::vector<Atom> out;
  std::vector<Atom> in;
  std::size_t i = 0;
  while (i < cells.size()) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    const double weight = static_cast<double>(j - i) / n;
    out.push_back({cells[i], weight});
    in.push_back({1.0 - cells[i], weight});
    i = j;
  }
  return {DegreeDistribution::from_atoms(std::move(out)),
          DegreeDistribution::from_atoms(std::move(in))};
}

double wasserstein1(const DegreeDistribution& mu, const DegreeDistribution& nu) {
  const std::vector<Atom> a = mu.atoms();
  const std::vector<Atom> b = nu.atoms();
  // Walk both quantile functions over (0,1]; between consecutive breakpoints
  // both are constant.
  CompensatedSum total;
  std::size_t ia = 0;
  std::size_t ib = 0;
  double ca = a[0].weight;  // cumulative weight through atom ia
  double cb = b[0].weight;
  double t = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const bool last_a = ia + 1 == a.size();
    const bool last_b = ib + 1 == b.size();
    const double end = std::min(last_a ? 1.0 : ca, last_b ? 1.0 : cb);
    if (end > t) total += (end - t) * std::fabs(a[ia].position - b[ib].position);
    t = std::max(t, end);
    if (last_a && last_b) break;
    const bool step_a = !last_a && ca <= end;
    const bool step_b = !last_b && cb <= end;
    if (step_a) ca += a[++ia].weight;
    if (step_b) cb += b[++ib].weight;
    if (!step_a && !step_b) break;
  }
  return total.value();
}

}  // namespace tourlim
