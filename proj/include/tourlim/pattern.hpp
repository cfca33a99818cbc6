#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tourlim {

/// Small labelled simple digraph used as a density probe. Vertices are
/// 0..k-1; edges are ordered pairs without loops or duplicates.
class DigraphPattern {
 public:
  using Edge = std::pair<int, int>;

  DigraphPattern(int k, std::vector<Edge> edges);

  int vertex_count() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(int u, int v) const;
  /// True when every pair of distinct vertices is joined in exactly one
  /// direction.
  bool is_tournament() const;

  /// Directed cycle 0 -> 1 -> ... -> k-1 -> 0 (k >= 2).
  static DigraphPattern cycle(int k);
  /// S_{out,in}: a centre with `out` out-neighbours and `in` in-neighbours,
  /// no edges among the leaves. Its density in a kernel is the mixed
  /// moment of f^out (1-f)^in.
  static DigraphPattern star(int out, int in);
  /// Transitive tournament: i -> j iff i < j.
  static DigraphPattern transitive(int k);
  /// Tournament on k vertices from its orientation word: bit p (in the
  /// order (0,1), (0,2), ..., (k-2,k-1)) is '1' iff the lower vertex wins.
  static DigraphPattern from_orientation(int k, const std::string& bits);

  /// Parses "C3", "T4", "S1,2" / "S1_2", "E" (single edge), or a raw
  /// orientation word such as "b:101".
  static DigraphPattern parse(const std::string& name);

  friend bool operator==(const DigraphPattern&, const DigraphPattern&) = default;

 private:
  int k_;
  std::vector<Edge> edges_;  // sorted
};

/// Every edge reversed.
DigraphPattern converse(const DigraphPattern& f);

/// Orientation word of a tournament pattern (see from_orientation).
std::string orientation_word(const DigraphPattern& f);

/// Smallest orientation word over all k! relabellings.
std::string canonical_word(const DigraphPattern& f);

/// One representative per isomorphism class of k-vertex tournaments, given
/// by canonical word, sorted.
std::vector<std::string> tournament_classes(int k);

/// (out, in) when `f` is a star S_{out,in} up to relabelling.
std::optional<std::pair<int, int>> as_star(const DigraphPattern& f);

/// True when `f` is a directed cycle through all of its vertices.
bool is_directed_cycle(const DigraphPattern& f);

}  // namespace tourlim
