#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourlim/types.hpp"

namespace tourlim {

inline constexpr double kDefaultTolerance = 1e-9;

/// How lhs and rhs of a witness were supposed to relate.
enum class Relation { at_least, equal };

/// A violated inequality: `lhs` should have been `relation` `rhs`.
struct Witness {
  std::string condition;      // e.g. "landau-prefix", "eplett-pair"
  std::vector<long long> at;  // prefix length, index pair, (n, m), ...
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::at_least;
};

struct ValidityReport {
  bool valid = true;
  std::optional<Witness> witness;

  static ValidityReport ok() { return {}; }
  static ValidityReport fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return valid; }
};

/// Landau/Moon: sorted prefix sums reach C(k,2), with equality at k = n.
/// Integer kind is checked in exact integer arithmetic.
ValidityReport check_landau(const ScoreSequence& s, double tol = kDefaultTolerance);

/// Landau plus d_i + d_{n+1-i} = n - 1 on the sorted sequence.
ValidityReport check_eplett(const ScoreSequence& s, double tol = kDefaultTolerance);

/// For every r = k/m the integral of the increasing rearrangement over
/// [0, r] is at least r^2/2, with equality at r = 1.
ValidityReport check_condition_I(const ScoreFunction& f, double tol = kDefaultTolerance);

/// cells[i] + cells[m-1-i] = 1; an odd middle cell must equal 1/2.
ValidityReport check_condition_II(const ScoreFunction& f, double tol = kDefaultTolerance);

/// Splits a sorted integer score sequence at every proper prefix where the
/// Landau inequality is tight. Each block is shifted down by the number of
/// vertices below it, so every block is itself an irreducible score sequence.
std::vector<ScoreSequence> irreducible_decomposition(const ScoreSequence& s);

/// True iff every irreducible block is {0}, {1,1,1}, {1,1,2,2} or
/// {2,2,2,2,2}, i.e. the sequence has a unique realisation up to isomorphism.
bool is_simple_avery(const ScoreSequence& s);

/// Finite Hausdorff test up to `order`: a_0 = 1, all iterated differences
/// sum_k (-1)^k C(m,k) a_{n+k} >= 0 for n + m <= order, and the Hankel
/// matrix [a_{i+j}] for i, j <= order/2 positive semidefinite.
ValidityReport check_hausdorff_moments(const MomentSequence& a, int order);

/// a_k = mean of cells^k for k = 0..max_power.
MomentSequence moments_of_score_function(const ScoreFunction& f, int max_power);

}  // namespace tourlim
