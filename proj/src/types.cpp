#include "tourlim/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tourlim/error.hpp"
#include "tourlim/numerics.hpp"

namespace tourlim {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

}  // namespace

ScoreSequence::ScoreSequence(std::vector<double> values, ScoreKind kind)
    : values_(std::move(values)), kind_(kind) {
  if (values_.empty()) throw ValidationError("score sequence must be non-empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("score " + std::to_string(i) + " is negative or not finite");
    }
    if (kind_ == ScoreKind::integer && v != std::floor(v)) {
      throw ValidationError("score " + std::to_string(i) + " is not an integer");
    }
  }
}

ScoreSequence ScoreSequence::integers(const std::vector<long long>& values) {
  std::vector<double> v(values.begin(), values.end());
  for (long long x : values) {
    if (x < 0) throw ValidationError("negative score");
  }
  return {std::move(v), ScoreKind::integer};
}

ScoreSequence ScoreSequence::reals(std::vector<double> values) {
  return {std::move(values), ScoreKind::real};
}

std::vector<double> ScoreSequence::sorted() const {
  std::vector<double> s = values_;
  std::sort(s.begin(), s.end());
  return s;
}

ScoreFunction::ScoreFunction(std::vector<double> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw ValidationError("score function needs at least one cell");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!in_unit_interval(cells_[i])) {
      throw ValidationError("cell " + std::to_string(i) + " outside [0,1]");
    }
  }
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) throw ValidationError("matrix data is not n x n");
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> data;
  data.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("row " + std::to_string(i) + " has length " +
                            std::to_string(rows[i].size()) + ", expected " +
                            std::to_string(n));
    }
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return {n, std::move(data)};
}

std::vector<std::vector<double>> SquareMatrix::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

GeneralizedTournament::GeneralizedTournament(SquareMatrix alpha)
    : alpha_(std::move(alpha)) {
  const std::size_t n = alpha_.size();
  if (n == 0) throw ValidationError("tournament must have at least one vertex");
  tournament_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha_(i, i) != 0.0) throw ValidationError("alpha" + at(i, i) + " must be 0");
    for (std::size_t j = 0; j < n; ++j) {
      const double a = alpha_(i, j);
      if (!in_unit_interval(a)) throw ValidationError("alpha" + at(i, j) + " outside [0,1]");
      if (a != 0.0 && a != 1.0) tournament_ = false;
      if (i < j && std::fabs(a + alpha_(j, i) - 1.0) > kSkewTolerance) {
        throw ValidationError("alpha" + at(i, j) + " + alpha" + at(j, i) + " != 1");
      }
    }
  }
}

GeneralizedTournament GeneralizedTournament::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SquareMatrix a(n, 0.0);
  std::vector<char> set(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw ValidationError("edge endpoint out of range");
    a(u, v) = 1.0;
    set[u * n + v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (set[i * n + j] && set[j * n + i]) {
        throw ValidationError("pair" + at(i, j) + " oriented both ways");
      }
      if (!set[i * n + j] && !set[j * n + i]) a(j, i) = 1.0;
    }
  }
  return GeneralizedTournament(std::move(a));
}

GeneralizedTournament GeneralizedTournament::transitive(std::size_t n) {
  SquareMatrix a(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = 1.0;
  return GeneralizedTournament(std::move(a));
}

GeneralizedTournament GeneralizedTournament::three_cycle() {
  return from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
}

GeneralizedTournament GeneralizedTournament::half(std::size_t n) {
  SquareMatrix a(n, 0.5);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 0.0;
  return GeneralizedTournament(std::move(a));
}

StepKernel::StepKernel(SquareMatrix blocks) : blocks_(std::move(blocks)) {
  const std::size_t n = blocks_.size();
  if (n == 0) throw ValidationError("kernel must have at least one block");
  for (std::size_t i = 0; i < n; ++i) {
    if (blocks_(i, i) != 0.5) throw ValidationError("M" + at(i, i) + " must be 1/2");
    for (std::size_t j = 0; j < n; ++j) {
      const double m = blocks_(i, j);
      if (!in_unit_interval(m)) throw ValidationError("M" + at(i, j) + " outside [0,1]");
      if (i < j && std::fabs(m + blocks_(j, i) - 1.0) > kSkewTolerance) {
        throw ValidationError("M" + at(i, j) + " + M" + at(j, i) + " != 1");
      }
    }
  }
}

StepKernel StepKernel::constant_half(std::size_t n) {
  return StepKernel(SquareMatrix(n, 0.5));
}

DegreeDistribution DegreeDistribution::from_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ValidationError("distribution needs at least one atom");
  std::vector<double> weights;
  for (const Atom& a : atoms) {
    if (!in_unit_interval(a.position)) throw ValidationError("atom position outside [0,1]");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw ValidationError("atom weight must be positive");
    }
    weights.push_back(a.weight);
  }
  if (std::fabs(exact_sum(weights) - 1.0) > kSkewTolerance) {
    throw ValidationError("atom weights must sum to 1");
  }
  return DegreeDistribution(std::move(atoms));
}

DegreeDistribution DegreeDistribution::from_samples(std::vector<double> samples) {
  if (samples.empty()) throw ValidationError("empirical distribution needs samples");
  for (double x : samples) {
    if (!in_unit_interval(x)) throw ValidationError("sample outside [0,1]");
  }
  return DegreeDistribution(Samples{std::move(samples)});
}

std::vector<Atom> DegreeDistribution::atoms() const {
  std::vector<Atom> raw;
  if (const auto* s = std::get_if<Samples>(&rep_)) {
    const double w = 1.0 / static_cast<double>(s->values.size());
    for (double x : s->values) raw.push_back({x, w});
  } else {
    raw = std::get<Atoms>(rep_);
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Atom& a, const Atom& b) { return a.position < b.position; });
  std::vector<Atom> merged;
  std::vector<double> pending;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    pending.push_back(raw[i].weight);
    if (i + 1 == raw.size() || raw[i + 1].position != raw[i].position) {
      merged.push_back({raw[i].position, exact_sum(pending)});
      pending.clear();
    }
  }
  return merged;
}

std::span<const double> DegreeDistribution::samples() const {
  if (const auto* s = std::get_if<Samples>(&rep_)) return s->values;
  return {};
}

double DegreeDistribution::mean() const {
  std::vector<double> terms;
  for (const Atom& a : atoms()) terms.push_back(a.position * a.weight);
  return exact_sum(terms);
}

}  // namespace tourlim
