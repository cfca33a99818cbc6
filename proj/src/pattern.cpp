#include "tourlim/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tourlim/error.hpp"

namespace tourlim {

DigraphPattern::DigraphPattern(int k, std::vector<Edge> edges)
    : k_(k), edges_(std::move(edges)) {
  if (k_ < 1) throw ValidationError("pattern needs at least one vertex");
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= k_ || v >= k_) throw ValidationError("pattern edge out of range");
    if (u == v) throw ValidationError("pattern has a loop");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("pattern has a repeated edge");
  }
}

bool DigraphPattern::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool DigraphPattern::is_tournament() const {
  for (int u = 0; u < k_; ++u)
    for (int v = u + 1; v < k_; ++v)
      if (has_edge(u, v) == has_edge(v, u)) return false;
  return true;
}

DigraphPattern DigraphPattern::cycle(int k) {
  if (k < 2) throw ValidationError("cycle needs at least two vertices");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return {k, std::move(e)};
}

DigraphPattern DigraphPattern::star(int out, int in) {
  if (out < 0 || in < 0) throw ValidationError("star sizes must be non-negative");
  std::vector<Edge> e;
  for (int i = 1; i <= out; ++i) e.emplace_back(0, i);
  for (int i = out + 1; i <= out + in; ++i) e.emplace_back(i, 0);
  return {1 + out + in, std::move(e)};
}

DigraphPattern DigraphPattern::transitive(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return {k, std::move(e)};
}

DigraphPattern DigraphPattern::from_orientation(int k, const std::string& bits) {
  if (k < 1) throw ValidationError("pattern needs at least one vertex");
  if (bits.size() != static_cast<std::size_t>(k * (k - 1) / 2)) {
    throw ValidationError("orientation word has the wrong length");
  }
  std::vector<Edge> e;
  std::size_t p = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++p) {
      if (bits[p] == '1') {
        e.emplace_back(i, j);
      } else if (bits[p] == '0') {
        e.emplace_back(j, i);
      } else {
        throw ValidationError("orientation word must be binary");
      }
    }
  }
  return {k, std::move(e)};
}

namespace {

int parse_count(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) || text.size() > 2) {
    throw ValidationError("cannot parse pattern '" + whole + "'");
  }
  return std::stoi(text);
}

int vertices_for_word(std::size_t length) {
  for (int k = 1; k <= 12; ++k)
    if (static_cast<std::size_t>(k * (k - 1) / 2) == length) return k;
  throw ValidationError("orientation word length is not k(k-1)/2");
}

}  // namespace

DigraphPattern DigraphPattern::parse(const std::string& name) {
  if (name.empty()) throw ValidationError("empty pattern name");
  if (name == "E") return star(0, 1);
  const std::string rest = name.substr(1);
  switch (name[0]) {
    case 'C':
      return cycle(parse_count(rest, name));
    case 'T':
      return transitive(parse_count(rest, name));
    case 'S': {
      const auto sep = rest.find_first_of(",_");
      if (sep == std::string::npos) throw ValidationError("star pattern needs 'S<out>,<in>'");
      return star(parse_count(rest.substr(0, sep), name), parse_count(rest.substr(sep + 1), name));
    }
    case 'b':
      if (rest.size() >= 1 && rest[0] == ':') {
        const std::string word = rest.substr(1);
        return from_orientation(vertices_for_word(word.size()), word);
      }
      break;
    default:
      break;
  }
  throw ValidationError("unknown pattern '" + name + "'");
}

DigraphPattern converse(const DigraphPattern& f) {
  std::vector<DigraphPattern::Edge> e;
  for (auto [u, v] : f.edges()) e.emplace_back(v, u);
  return {f.vertex_count(), std::move(e)};
}

std::string orientation_word(const DigraphPattern& f) {
  if (!f.is_tournament()) throw ValidationError("orientation word needs a tournament pattern");
  std::string w;
  for (int i = 0; i < f.vertex_count(); ++i)
    for (int j = i + 1; j < f.vertex_count(); ++j) w.push_back(f.has_edge(i, j) ? '1' : '0');
  return w;
}

std::string canonical_word(const DigraphPattern& f) {
  const int k = f.vertex_count();
  if (!f.is_tournament()) throw ValidationError("canonical word needs a tournament pattern");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    // Vertex i of the relabelled pattern is perm[i] of the original.
    std::string w;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) w.push_back(f.has_edge(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || w < best) best = std::move(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::string> tournament_classes(int k) {
  if (k < 1 || k > 6) throw ValidationError("tournament classes enumerated for 1 <= k <= 6");
  const int bits = k * (k - 1) / 2;
  std::set<std::string> classes;
  for (long mask = 0; mask < (1L << bits); ++mask) {
    std::string w(bits, '0');
    for (int p = 0; p < bits; ++p)
      if (mask >> p & 1) w[p] = '1';
    classes.insert(canonical_word(DigraphPattern::from_orientation(k, w)));
  }
  return {classes.begin(), classes.end()};
}

std::optional<std::pair<int, int>> as_star(const DigraphPattern& f) {
  const int k = f.vertex_count();
  if (k == 1) return std::pair{0, 0};
  for (int c = 0; c < k; ++c) {
    int out = 0;
    int in = 0;
    bool ok = true;
    for (auto [u, v] : f.edges()) {
      if (u == c) {
        ++out;
      } else if (v == c) {
        ++in;
      } else {
        ok = false;
        break;
      }
    }
    // Every other vertex must touch the centre exactly once.
    if (ok && out + in == k - 1) {
      for (int x = 0; x < k && ok; ++x)
        if (x != c && f.has_edge(c, x) == f.has_edge(x, c)) ok = false;
      if (ok) return std::pair{out, in};
    }
  }
  return std::nullopt;
}

bool is_directed_cycle(const DigraphPattern& f) {
  const int k = f.vertex_count();
  if (k < 2 || f.edges().size() != static_cast<std::size_t>(k)) return false;
  std::vector<int> succ(k, -1);
  std::vector<int> indeg(k, 0);
  for (auto [u, v] : f.edges()) {
    if (succ[u] != -1) return false;
    succ[u] = v;
    ++indeg[v];
  }
  for (int d : indeg)
    if (d != 1) return false;
  int x = 0;
  for (int step = 1; step < k; ++step) {
    x = succ[x];
    if (x == 0) return false;
  }
  return succ[x] == 0;
}

}  // namespace tourlim
