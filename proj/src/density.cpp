#include "tourlim/density.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "tourlim/core.hpp"
#include "tourlim/error.hpp"
#include "tourlim/numerics.hpp"

namespace tourlim {

namespace {

void guard_pattern(const DigraphPattern& f) {
  if (f.vertex_count() > kMaxPatternVertices) {
    throw CostGuardError("pattern has " + std::to_string(f.vertex_count()) +
                         " vertices; at most " + std::to_string(kMaxPatternVertices) +
                         " are supported");
  }
}

void guard_budget(std::size_t n, int k, double budget) {
  if (std::pow(static_cast<double>(n), k) > budget) {
    throw CostGuardError("enumerating " + std::to_string(n) + "^" + std::to_string(k) +
                         " assignments exceeds the budget");
  }
}

/// Per-vertex factor lists: level v lists the edges and absent pairs whose
/// later endpoint is v, so a product is complete once v is assigned.
struct Schedule {
  std::vector<std::vector<std::pair<int, int>>> edges;
  std::vector<std::vector<std::pair<int, int>>> absent;
};

Schedule schedule_for(const DigraphPattern& f, bool with_absent) {
  const int k = f.vertex_count();
  Schedule s{std::vector<std::vector<std::pair<int, int>>>(k),
             std::vector<std::vector<std::pair<int, int>>>(k)};
  for (auto [u, v] : f.edges()) s.edges[std::max(u, v)].emplace_back(u, v);
  if (with_absent) {
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v)
        if (!f.has_edge(u, v) && !f.has_edge(v, u)) s.absent[v].emplace_back(u, v);
  }
  return s;
}

/// Sum over maps phi: V(F) -> {0..n-1} (optionally injective) of the product
/// of weight(phi u, phi v) over edges and, for absent pairs, of
/// (1 - weight(phi u, phi v)) (1 - weight(phi v, phi u)).
double assignment_sum(const DigraphPattern& f, const SquareMatrix& weight, bool injective,
                      bool with_absent) {
  const int k = f.vertex_count();
  const std::size_t n = weight.size();
  const Schedule sched = schedule_for(f, with_absent);
  std::vector<std::size_t> phi(k, 0);
  std::vector<char> used(n, 0);
  CompensatedSum total;

  std::function<void(int, double)> descend = [&](int level, double partial) {
    if (level == k) {
      total += partial;
      return;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (injective && used[b]) continue;
      phi[level] = b;
      double p = partial;
      for (auto [u, v] : sched.edges[level]) p *= weight(phi[u], phi[v]);
      for (auto [u, v] : sched.absent[level]) {
        p *= (1.0 - weight(phi[u], phi[v])) * (1.0 - weight(phi[v], phi[u]));
      }
      if (p == 0.0) continue;
      used[b] = 1;
      descend(level + 1, p);
      used[b] = 0;
    }
  };
  descend(0, 1.0);
  return total.value();
}

std::vector<long long> integer_scores(const GeneralizedTournament& g) {
  std::vector<long long> d(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) d[i] += g(i, j) == 1.0 ? 1 : 0;
  return d;
}

double falling(long long x, int k) { return falling_factorial(x, k); }

/// Children lists of a spanning forest rooted at the smallest vertex of each
/// component, or nothing when the underlying graph has a cycle.
struct Forest {
  std::vector<int> roots;
  std::vector<std::vector<std::pair<int, bool>>> children;  // (child, edge points to child)
};

std::optional<Forest> as_forest(const DigraphPattern& f) {
  const int k = f.vertex_count();
  std::vector<int> parent(k);
  for (int v = 0; v < k; ++v) parent[v] = v;
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<std::pair<int, bool>>> adj(k);
  for (auto [u, v] : f.edges()) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return std::nullopt;
    parent[std::max(a, b)] = std::min(a, b);
    adj[u].emplace_back(v, true);
    adj[v].emplace_back(u, false);
  }
  Forest out{{}, std::vector<std::vector<std::pair<int, bool>>>(k)};
  std::vector<char> seen(k, 0);
  for (int r = 0; r < k; ++r) {
    if (seen[r]) continue;
    out.roots.push_back(r);
    seen[r] = 1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [c, forward] : adj[v]) {
        if (seen[c]) continue;
        seen[c] = 1;
        out.children[v].emplace_back(c, forward);
        stack.push_back(c);
      }
    }
  }
  return out;
}

/// value[b] = conditional density of the subtree at v given that v sits in
/// block b.
std::vector<double> subtree_values(const Forest& forest, int v, const StepKernel& w) {
  const std::size_t n = w.size();
  std::vector<double> value(n, 1.0);
  for (auto [c, forward] : forest.children[v]) {
    const std::vector<double> child = subtree_values(forest, c, w);
    for (std::size_t b = 0; b < n; ++b) {
      CompensatedSum s;
      for (std::size_t d = 0; d < n; ++d) s += (forward ? w(b, d) : w(d, b)) * child[d];
      value[b] *= s.value() / static_cast<double>(n);
    }
  }
  return value;
}

double forest_density(const Forest& forest, const StepKernel& w) {
  double product = 1.0;
  for (int r : forest.roots) {
    CompensatedSum s;
    for (double x : subtree_values(forest, r, w)) s += x;
    product *= s.value() / static_cast<double>(w.size());
  }
  return product;
}

}  // namespace

double density_finite_direct(const DigraphPattern& f, const GeneralizedTournament& g,
                             DensityMode mode) {
  guard_pattern(f);
  const int k = f.vertex_count();
  const std::size_t n = g.size();
  if (mode != DensityMode::hom && static_cast<std::size_t>(k) > n) return 0.0;
  guard_budget(n, k, kFiniteAssignmentBudget);
  const bool injective = mode != DensityMode::hom;
  const double sum = assignment_sum(f, g.matrix(), injective, mode == DensityMode::ind);
  const double maps = injective ? falling_factorial(static_cast<long long>(n), k)
                                : std::pow(static_cast<double>(n), k);
  return sum / maps;
}

double density_finite(const DigraphPattern& f, const GeneralizedTournament& g,
                      DensityMode mode) {
  guard_pattern(f);
  const int k = f.vertex_count();
  const auto n = static_cast<long long>(g.size());
  if (mode != DensityMode::hom && k > n) return 0.0;
  if (!g.is_tournament()) return density_finite_direct(f, g, mode);

  const double maps = mode == DensityMode::hom ? std::pow(static_cast<double>(n), k)
                                               : falling_factorial(n, k);
  if (const auto star = as_star(f)) {
    // Out- and in-neighbourhoods of a vertex are disjoint, so leaves on
    // different sides never collide.
    if (mode == DensityMode::ind && !f.is_tournament()) return 0.0;
    const auto [out, in] = *star;
    const std::vector<long long> d = integer_scores(g);
    CompensatedSum total;
    for (long long dv : d) {
      const long long indeg = n - 1 - dv;
      total += mode == DensityMode::hom
                   ? std::pow(static_cast<double>(dv), out) * std::pow(static_cast<double>(indeg), in)
                   : falling(dv, out) * falling(indeg, in);
    }
    return total.value() / maps;
  }
  if (k == 3 && is_directed_cycle(f)) {
    // Cyclic triples: C(n,3) - sum C(d_i,2). A non-injective map of a
    // 3-cycle needs a loop or a 2-cycle, neither present in a tournament.
    const std::vector<long long> d = integer_scores(g);
    long long transitive = 0;
    for (long long dv : d) transitive += dv * (dv - 1) / 2;
    const long long cyclic = n * (n - 1) * (n - 2) / 6 - transitive;
    return 3.0 * static_cast<double>(cyclic) / maps;
  }
  return density_finite_direct(f, g, mode);
}

double density_kernel_direct(const DigraphPattern& f, const StepKernel& w) {
  guard_pattern(f);
  const int k = f.vertex_count();
  guard_budget(w.size(), k, kKernelAssignmentBudget);
  return assignment_sum(f, w.matrix(), false, false) /
         std::pow(static_cast<double>(w.size()), k);
}

double density_kernel(const DigraphPattern& f, const StepKernel& w) {
  guard_pattern(f);
  if (const auto forest = as_forest(f)) return forest_density(*forest, w);
  if (!is_directed_cycle(f)) return density_kernel_direct(f, w);
  const std::size_t n = w.size();
  const auto nd = static_cast<double>(n);
  SquareMatrix base(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base(i, j) = w(i, j) / nd;
  SquareMatrix power = base;
  for (int step = 1; step < f.vertex_count(); ++step) {
    SquareMatrix next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CompensatedSum s;
        for (std::size_t l = 0; l < n; ++l) s += power(i, l) * base(l, j);
        next(i, j) = s.value();
      }
    }
    power = std::move(next);
  }
  CompensatedSum trace;
  for (std::size_t i = 0; i < n; ++i) trace += power(i, i);
  return trace.value();
}

double star_density(const StepKernel& w, int out, int in) {
  if (out < 0 || in < 0) throw ValidationError("star sizes must be non-negative");
  const ScoreFunction f = score_function_of_kernel(w);
  CompensatedSum total;
  for (double x : f.cells()) total += std::pow(x, out) * std::pow(1.0 - x, in);
  return total.value() / static_cast<double>(f.size());
}

double c3_from_degree(const StepKernel& w) { return 1.5 * star_density(w, 1, 1) - 0.25; }

double DensityFingerprint::at(const std::string& word) const {
  for (const auto& [key, value] : entries)
    if (key == word) return value;
  throw ValidationError("fingerprint has no entry '" + word + "'");
}

DensityFingerprint fingerprint(const StepKernel& w, int max_size) {
  if (max_size < 1 || max_size > 5) throw CostGuardError("fingerprint size must lie in [1, 5]");
  guard_budget(w.size(), max_size, kKernelAssignmentBudget);
  DensityFingerprint fp{max_size, {}};
  for (int k = 1; k <= max_size; ++k) {
    for (const std::string& word : tournament_classes(k)) {
      fp.entries.emplace_back(word, density_kernel(DigraphPattern::from_orientation(k, word), w));
    }
  }
  return fp;
}

double fingerprint_distance(const DensityFingerprint& a, const DensityFingerprint& b) {
  if (a.max_size != b.max_size || a.entries.size() != b.entries.size()) {
    throw ValidationError("fingerprints of different sizes");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].first != b.entries[i].first) throw ValidationError("fingerprint keys differ");
    d = std::max(d, std::fabs(a.entries[i].second - b.entries[i].second));
  }
  return d;
}

}  // namespace tourlim
