#pragma once

// Brute-force reference computations shared by the unit and acceptance
// tests. Nothing here calls into the library's algorithms; inputs are plain
// matrices and vectors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tourlim/types.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

/// Every labelled tournament on n vertices, as 0/1 adjacency matrices.
inline std::vector<Adjacency> all_tournaments(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Adjacency> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Adjacency a(n, std::vector<int>(n, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      if (mask >> p & 1U) {
        a[i][j] = 1;
      } else {
        a[j][i] = 1;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<int> sorted_scores(const Adjacency& a) {
  std::vector<int> d;
  for (const auto& row : a) d.push_back(std::accumulate(row.begin(), row.end(), 0));
  std::sort(d.begin(), d.end());
  return d;
}

/// Lexicographically smallest relabelled adjacency, flattened.
inline std::vector<int> canonical_form(const Adjacency& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> flat;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(a[perm[i]][perm[j]]);
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Sorted score sequence -> number of isomorphism classes realising it.
inline std::map<std::vector<int>, std::size_t> classes_per_score_sequence(int n) {
  std::map<std::vector<int>, std::set<std::vector<int>>> classes;
  for (const Adjacency& a : all_tournaments(n)) classes[sorted_scores(a)].insert(canonical_form(a));
  std::map<std::vector<int>, std::size_t> out;
  for (const auto& [s, c] : classes) out[s] = c.size();
  return out;
}

/// Sum over all maps of an edge set into n targets of prod weight(phi u, phi v),
/// by odometer; optional injectivity and induced non-edge factors.
inline double map_sum(int k, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::vector<double>>& weight, bool injective,
                      bool induced) {
  const int n = static_cast<int>(weight.size());
  std::vector<int> phi(k, 0);
  long double total = 0.0L;
  while (true) {
    bool ok = true;
    if (injective) {
      std::set<int> used(phi.begin(), phi.end());
      ok = static_cast<int>(used.size()) == k;
    }
    if (ok) {
      long double p = 1.0L;
      for (auto [u, v] : edges) p *= weight[phi[u]][phi[v]];
      if (induced) {
        for (int u = 0; u < k; ++u) {
          for (int v = u + 1; v < k; ++v) {
            const bool linked = std::find(edges.begin(), edges.end(), std::pair{u, v}) != edges.end() ||
                                std::find(edges.begin(), edges.end(), std::pair{v, u}) != edges.end();
            if (!linked) p *= (1.0L - weight[phi[u]][phi[v]]) * (1.0L - weight[phi[v]][phi[u]]);
          }
        }
      }
      total += p;
    }
    int pos = k - 1;
    while (pos >= 0 && ++phi[pos] == n) phi[pos--] = 0;
    if (pos < 0) break;
  }
  return static_cast<double>(total);
}

inline std::vector<std::vector<double>> to_rows(const tourlim::SquareMatrix& m) { return m.rows(); }

/// Step kernel with independent uniform upper-triangle entries.
inline tourlim::StepKernel random_kernel(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  tourlim::SquareMatrix m(n, 0.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = u(rng);
      m(j, i) = 1.0 - m(i, j);
    }
  }
  return tourlim::StepKernel(std::move(m));
}

/// Random tournament adjacency with fair coin orientations.
inline tourlim::GeneralizedTournament random_tournament(std::size_t n, std::mt19937_64& rng) {
  tourlim::SquareMatrix m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool forward = (rng() >> 63) != 0;
      m(i, j) = forward ? 1.0 : 0.0;
      m(j, i) = forward ? 0.0 : 1.0;
    }
  }
  return tourlim::GeneralizedTournament(std::move(m));
}

/// Condition I probed on random cell subsets: integral over B of f is at
/// least |B|^2 / 2. Returns false on the first violation found.
inline bool condition_I_on_subsets(const std::vector<double>& cells, int trials, double tol,
                                   std::mt19937_64& rng) {
  const std::size_t m = cells.size();
  for (int t = 0; t < trials; ++t) {
    double mass = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (rng() & 1U) {
        mass += cells[i];
        ++count;
      }
    }
    const double measure = static_cast<double>(count) / static_cast<double>(m);
    if (mass / static_cast<double>(m) < measure * measure / 2.0 - tol) return false;
  }
  return true;
}

/// Wasserstein-1 distance between two atomic laws, by integrating
/// |F_mu - F_nu| over a fine uniform grid of [0, 1].
inline double wasserstein_by_cdf(const std::vector<tourlim::Atom>& mu,
                                 const std::vector<tourlim::Atom>& nu, int grid) {
  const auto cdf = [](const std::vector<tourlim::Atom>& law, double x) {
    double c = 0.0;
    for (const auto& a : law)
      if (a.position <= x) c += a.weight;
    return c;
  };
  double total = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) / grid;
    total += std::fabs(cdf(mu, x) - cdf(nu, x));
  }
  return total / grid;
}

}  // namespace oracle
