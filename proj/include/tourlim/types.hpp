#pragma once

// Value types shared by every module. All of them validate on construction
// and are immutable afterwards.

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace tourlim {

/// Tolerance for the skew identity a(i,j) + a(j,i) = 1 in floating storage.
inline constexpr double kSkewTolerance = 1e-12;

enum class ScoreKind { integer, real };

/// Out-scores d_1..d_n of a (generalised) tournament, in input order.
class ScoreSequence {
 public:
  ScoreSequence(std::vector<double> values, ScoreKind kind);

  static ScoreSequence integers(const std::vector<long long>& values);
  static ScoreSequence reals(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  ScoreKind kind() const noexcept { return kind_; }
  bool is_integer() const noexcept { return kind_ == ScoreKind::integer; }

  /// Values rearranged non-decreasingly.
  std::vector<double> sorted() const;

  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::vector<double> values_;
  ScoreKind kind_;
};

/// Piecewise-constant function on [0,1]: cell i holds the mean of f over
/// ((i-1)/m, i/m].
class ScoreFunction {
 public:
  explicit ScoreFunction(std::vector<double> cells);

  std::size_t size() const noexcept { return cells_.size(); }
  std::span<const double> cells() const noexcept { return cells_; }
  double operator[](std::size_t i) const { return cells_[i]; }

  friend bool operator==(const ScoreFunction&, const ScoreFunction&) = default;

 private:
  std::vector<double> cells_;
};

/// Dense n x n row-major matrix of doubles; the storage behind tournaments
/// and kernels.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}
  SquareMatrix(std::size_t n, std::vector<double> data);
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  std::span<const double> data() const noexcept { return data_; }
  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Generalised tournament: alpha(i,i) = 0, alpha(i,j) + alpha(j,i) = 1.
/// A tournament when every entry is 0 or 1.
class GeneralizedTournament {
 public:
  explicit GeneralizedTournament(SquareMatrix alpha);

  std::size_t size() const noexcept { return alpha_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return alpha_(i, j); }
  const SquareMatrix& matrix() const noexcept { return alpha_; }
  bool is_tournament() const noexcept { return tournament_; }

  /// Tournament on n vertices with i -> j for every listed (i, j); pairs
  /// not listed are oriented j -> i. Zero-based.
  static GeneralizedTournament from_edges(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  /// Transitive tournament: i -> j iff i < j.
  static GeneralizedTournament transitive(std::size_t n);
  /// Cyclic 3-tournament 0 -> 1 -> 2 -> 0.
  static GeneralizedTournament three_cycle();
  /// Every off-diagonal weight equal to 1/2.
  static GeneralizedTournament half(std::size_t n);

  friend bool operator==(const GeneralizedTournament&,
                         const GeneralizedTournament&) = default;

 private:
  SquareMatrix alpha_;
  bool tournament_ = false;
};

/// Step tournament kernel on the uniform n-block grid. Block (i,j) holds the
/// constant value M(i,j); M(i,j) + M(j,i) = 1 and M(i,i) = 1/2.
class StepKernel {
 public:
  explicit StepKernel(SquareMatrix blocks);

  std::size_t size() const noexcept { return blocks_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return blocks_(i, j); }
  const SquareMatrix& matrix() const noexcept { return blocks_; }

  static StepKernel constant_half(std::size_t n);

  friend bool operator==(const StepKernel&, const StepKernel&) = default;

 private:
  SquareMatrix blocks_;
};

struct Atom {
  double position;
  double weight;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Distribution on [0,1], either atomic or an empirical sample list.
class DegreeDistribution {
 public:
  static DegreeDistribution from_atoms(std::vector<Atom> atoms);
  static DegreeDistribution from_samples(std::vector<double> samples);

  bool is_empirical() const noexcept {
    return std::holds_alternative<Samples>(rep_);
  }
  /// Atoms sorted by position with equal positions merged. Samples become
  /// atoms of weight count/N.
  std::vector<Atom> atoms() const;
  /// Underlying samples; empty for the atomic representation.
  std::span<const double> samples() const;
  double mean() const;

 private:
  struct Samples {
    std::vector<double> values;
  };
  using Atoms = std::vector<Atom>;
  explicit DegreeDistribution(std::variant<Atoms, Samples> rep)
      : rep_(std::move(rep)) {}

  std::variant<Atoms, Samples> rep_;
};

/// Putative power moments (a_0, ..., a_K). Not validated on construction:
/// the moment checker reports violations instead.
struct MomentSequence {
  std::vector<double> a;
  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

}  // namespace tourlim
