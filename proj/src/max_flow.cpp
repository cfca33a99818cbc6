#include "tourlim/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "tourlim/error.hpp"

namespace tourlim {

MaxFlow::MaxFlow(std::size_t nodes, double epsilon)
    : epsilon_(epsilon), adjacency_(nodes), level_(nodes), next_(nodes) {}

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, double capacity) {
  if (from >= adjacency_.size() || to >= adjacency_.size()) {
    throw ValidationError("arc endpoint out of range");
  }
  if (!(capacity >= 0.0)) throw ValidationError("arc capacity must be non-negative");
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity, 0.0});
  arcs_.push_back({from, 0.0, 0.0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t id : adjacency_[u]) {
      const Arc& a = arcs_[id];
      if (a.residual() > epsilon_ && level_[a.to] < 0) {
        level_[a.to] = level_[u] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlow::push(std::size_t node, std::size_t sink, double limit) {
  if (node == sink) return limit;
  for (std::size_t& i = next_[node]; i < adjacency_[node].size(); ++i) {
    const std::size_t id = adjacency_[node][i];
    Arc& a = arcs_[id];
    if (a.residual() <= epsilon_ || level_[a.to] != level_[node] + 1) continue;
    const double pushed = push(a.to, sink, std::min(limit, a.residual()));
    if (pushed > 0.0) {
      a.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0.0;
}

double MaxFlow::solve(std::size_t source, std::size_t sink) {
  double total = 0.0;
  while (build_levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    for (;;) {
      const double pushed = push(source, sink, std::numeric_limits<double>::infinity());
      if (pushed <= 0.0) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace tourlim
