#pragma once

#include <cstddef>
#include <vector>

namespace tourlim {

/// Dinic's algorithm over double capacities. Residuals at or below
/// `epsilon` count as saturated; with integral capacities and epsilon < 1
/// every augmentation is integral, so the flow is exact.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes, double epsilon = 1e-12);

  /// Adds arc from -> to; returns its id for flow().
  std::size_t add_arc(std::size_t from, std::size_t to, double capacity);

  double solve(std::size_t source, std::size_t sink);

  double flow(std::size_t arc) const { return arcs_[arc].flow; }
  double capacity(std::size_t arc) const { return arcs_[arc].capacity; }
  std::size_t node_count() const noexcept { return adjacency_.size(); }

 private:
  struct Arc {
    std::size_t to;
    double capacity;
    double flow;
    double residual() const { return capacity - flow; }
  };

  bool build_levels(std::size_t source, std::size_t sink);
  double push(std::size_t node, std::size_t sink, double limit);

  double epsilon_;
  std::vector<Arc> arcs_;  // arc 2k is forward, 2k+1 its reverse
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace tourlim
