#include "tourlim/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tourlim/core.hpp"
#include "tourlim/error.hpp"
#include "tourlim/numerics.hpp"

namespace tourlim {

namespace {

std::string describe(const ValidityReport& r) {
  if (r.valid || !r.witness) return "valid";
  const Witness& w = *r.witness;
  std::string at;
  for (long long x : w.at) at += (at.empty() ? "" : ",") + std::to_string(x);
  return w.condition + " at (" + at + "): " + std::to_string(w.lhs) +
         (w.relation == Relation::equal ? " != " : " < ") + std::to_string(w.rhs);
}

}  // namespace

ScoreFlowNetwork build_score_network(const ScoreSequence& s) {
  const std::size_t n = s.size();
  const std::size_t pair_count = n * (n - 1) / 2;
  const std::size_t first_vertex = 1 + pair_count;
  ScoreFlowNetwork net{MaxFlow(first_vertex + n + 1), 0, first_vertex + n, {}, {}, {}, {}};
  std::size_t node = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++node) {
      net.pairs.emplace_back(i, j);
      net.network.add_arc(net.source, node, 1.0);
      net.to_first.push_back(net.network.add_arc(node, first_vertex + i, 1.0));
      net.to_second.push_back(net.network.add_arc(node, first_vertex + j, 1.0));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    net.to_sink.push_back(net.network.add_arc(first_vertex + i, net.sink, s[i]));
  }
  return net;
}

GeneralizedTournament realize_scores(const ScoreSequence& s, double tol) {
  if (const ValidityReport r = check_landau(s, tol); !r) {
    throw ValidationError("not a score sequence: " + describe(r));
  }
  ScoreFlowNetwork net = build_score_network(s);
  const double value = net.network.solve(net.source, net.sink);
  const auto required = static_cast<double>(net.pairs.size());
  const double slack = s.is_integer() ? 0.0 : tol * static_cast<double>(s.size());
  if (value < required - slack) {
    throw InternalError("max flow " + std::to_string(value) + " below C(n,2) = " +
                        std::to_string(required) + " for a Landau sequence");
  }
  const std::size_t n = s.size();
  SquareMatrix alpha(n, 0.0);
  for (std::size_t p = 0; p < net.pairs.size(); ++p) {
    const auto [i, j] = net.pairs[p];
    const double a = std::clamp(net.network.flow(net.to_first[p]), 0.0, 1.0);
    alpha(i, j) = a;
    alpha(j, i) = 1.0 - a;
  }
  return GeneralizedTournament(std::move(alpha));
}

ScoreFunction average_to_grid(const ScoreFunction& f, std::size_t n) {
  if (n == 0) throw ValidationError("grid size must be positive");
  const std::size_t m = f.size();
  const std::size_t fine = std::lcm(m, n);
  const std::size_t per_source = fine / m;  // fine cells per input cell
  const std::size_t per_target = fine / n;  // fine cells per output cell
  std::vector<double> out(n);
  std::vector<double> terms;
  for (std::size_t i = 0; i < n; ++i) {
    terms.clear();
    const std::size_t lo = i * per_target;
    const std::size_t hi = lo + per_target;
    for (std::size_t c = lo / per_source; c * per_source < hi; ++c) {
      const std::size_t overlap =
          std::min(hi, (c + 1) * per_source) - std::max(lo, c * per_source);
      terms.push_back(f[c] * static_cast<double>(overlap));
    }
    out[i] = std::clamp(exact_sum(terms) / static_cast<double>(per_target), 0.0, 1.0);
  }
  return ScoreFunction(std::move(out));
}

ScoreSequence discretize_score_function(const ScoreFunction& f, std::size_t n, double tol) {
  if (const ValidityReport r = check_condition_I(f, tol); !r) {
    throw ValidationError("score function violates condition I: " + describe(r));
  }
  const ScoreFunction means = average_to_grid(f, n);
  const auto nd = static_cast<double>(n);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = std::max(0.0, nd * means[i] - 0.5);
  ScoreSequence s = ScoreSequence::reals(std::move(d));
  // Condition I on f implies Landau on the discretisation.
  if (const ValidityReport r = check_landau(s, tol * std::max(1.0, nd * nd)); !r) {
    throw InternalError("discretisation of a condition-I function fails Landau: " + describe(r));
  }
  return s;
}

StepKernel kernel_from_score_function(const ScoreFunction& f, std::size_t n, double tol) {
  const ScoreSequence d = discretize_score_function(f, n, tol);
  return step_kernel_from_tournament(
      realize_scores(d, tol * std::max(1.0, static_cast<double>(n * n))));
}

GeneralizedTournament symmetrize_self_converse(const GeneralizedTournament& g, double tol) {
  const ScoreSequence scores = scores_of_tournament(g);
  if (const ValidityReport r = check_eplett(scores, tol); !r) {
    throw ValidationError("scores are not self-converse: " + describe(r));
  }
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  auto sorted = [&](std::size_t i, std::size_t j) { return g(order[i], order[j]); };
  auto rho = [n](std::size_t i) { return n - 1 - i; };

  // Each orbit {(i,j), (j,i), (rho i, rho j), (rho j, rho i)} is written
  // once, from a single value x, so both identities hold exactly.
  SquareMatrix out(n, 0.0);
  std::vector<char> done(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || done[i * n + j]) continue;
      const double x = std::clamp((sorted(i, j) + 1.0 - sorted(rho(i), rho(j))) / 2.0, 0.0, 1.0);
      out(i, j) = x;
      out(j, i) = 1.0 - x;
      out(rho(i), rho(j)) = 1.0 - x;
      out(rho(j), rho(i)) = x;
      done[i * n + j] = done[j * n + i] = 1;
      done[rho(i) * n + rho(j)] = done[rho(j) * n + rho(i)] = 1;
    }
  }
  return GeneralizedTournament(std::move(out));
}

GeneralizedTournament realize_self_converse(const ScoreSequence& s, double tol) {
  if (const ValidityReport r = check_eplett(s, tol); !r) {
    throw ValidationError("not a self-converse score sequence: " + describe(r));
  }
  return symmetrize_self_converse(realize_scores(s, tol), tol);
}

}  // namespace tourlim
