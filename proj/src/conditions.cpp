#include "tourlim/conditions.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "tourlim/core.hpp"
#include "tourlim/error.hpp"
#include "tourlim/numerics.hpp"

namespace tourlim {

namespace {

constexpr double kDifferenceTolerance = 1e-12;
constexpr double kHankelTolerance = 1e-9;

std::int64_t pairs(std::int64_t k) { return k * (k - 1) / 2; }

std::vector<std::int64_t> sorted_integers(const ScoreSequence& s) {
  std::vector<std::int64_t> d;
  for (double v : s.sorted()) d.push_back(static_cast<std::int64_t>(v));
  return d;
}

ValidityReport landau_integer(const ScoreSequence& s) {
  const std::vector<std::int64_t> d = sorted_integers(s);
  const auto n = static_cast<std::int64_t>(d.size());
  std::int64_t total = 0;
  for (std::int64_t x : d) total += x;
  if (total != pairs(n)) {
    return ValidityReport::fail({"landau-total", {n}, static_cast<double>(total),
                                 static_cast<double>(pairs(n)), Relation::equal});
  }
  std::int64_t prefix = 0;
  for (std::int64_t k = 1; k < n; ++k) {
    prefix += d[k - 1];
    if (prefix < pairs(k)) {
      return ValidityReport::fail({"landau-prefix", {k}, static_cast<double>(prefix),
                                   static_cast<double>(pairs(k)), Relation::at_least});
    }
  }
  return ValidityReport::ok();
}

ValidityReport landau_real(const ScoreSequence& s, double tol) {
  const std::vector<double> d = s.sorted();
  const auto n = static_cast<std::int64_t>(d.size());
  const double total = exact_sum(d);
  if (std::fabs(total - static_cast<double>(pairs(n))) > tol) {
    return ValidityReport::fail(
        {"landau-total", {n}, total, static_cast<double>(pairs(n)), Relation::equal});
  }
  CompensatedSum prefix;
  for (std::int64_t k = 1; k < n; ++k) {
    prefix += d[k - 1];
    const auto bound = static_cast<double>(pairs(k));
    if (prefix.value() < bound - tol) {
      return ValidityReport::fail(
          {"landau-prefix", {k}, prefix.value(), bound, Relation::at_least});
    }
  }
  return ValidityReport::ok();
}

}  // namespace

ValidityReport check_landau(const ScoreSequence& s, double tol) {
  return s.is_integer() ? landau_integer(s) : landau_real(s, tol);
}

ValidityReport check_eplett(const ScoreSequence& s, double tol) {
  ValidityReport landau = check_landau(s, tol);
  if (!landau) return landau;
  const std::vector<double> d = s.sorted();
  const std::size_t n = d.size();
  const auto target = static_cast<double>(n - 1);
  for (std::size_t i = 0; 2 * i + 1 <= n; ++i) {
    const double sum = d[i] + d[n - 1 - i];
    const bool ok = s.is_integer() ? sum == target : std::fabs(sum - target) <= tol;
    if (!ok) {
      return ValidityReport::fail({"eplett-pair",
                                   {static_cast<long long>(i + 1), static_cast<long long>(n - i)},
                                   sum, target, Relation::equal});
    }
  }
  return ValidityReport::ok();
}

// The mass condition is tested before the prefixes so that a function with
// the wrong total is reported as such.
ValidityReport check_condition_I(const ScoreFunction& f, double tol) {
  const ScoreFunction up = increasing_rearrangement(f);
  const std::size_t m = up.size();
  const auto md = static_cast<double>(m);
  const double total = exact_sum(up.cells()) / md;
  if (std::fabs(total - 0.5) > tol) {
    return ValidityReport::fail({"condition-I-total",
                                 {static_cast<long long>(m), static_cast<long long>(m)},
                                 total, 0.5, Relation::equal});
  }
  CompensatedSum prefix;
  for (std::size_t k = 1; k < m; ++k) {
    prefix += up[k - 1];
    const double integral = prefix.value() / md;
    const double r = static_cast<double>(k) / md;
    if (integral < r * r / 2.0 - tol) {
      return ValidityReport::fail({"condition-I-prefix",
                                   {static_cast<long long>(k), static_cast<long long>(m)},
                                   integral, r * r / 2.0, Relation::at_least});
    }
  }
  return ValidityReport::ok();
}

ValidityReport check_condition_II(const ScoreFunction& f, double tol) {
  const std::size_t m = f.size();
  for (std::size_t i = 0; 2 * i + 1 <= m; ++i) {
    const double sum = f[i] + f[m - 1 - i];
    if (std::fabs(sum - 1.0) > tol) {
      return ValidityReport::fail({"condition-II-pair",
                                   {static_cast<long long>(i + 1), static_cast<long long>(m - i)},
                                   sum, 1.0, Relation::equal});
    }
  }
  return ValidityReport::ok();
}

std::vector<ScoreSequence> irreducible_decomposition(const ScoreSequence& s) {
  if (!s.is_integer()) {
    throw ValidationError("irreducible decomposition needs an integer score sequence");
  }
  if (!check_landau(s)) throw ValidationError("not a score sequence (Landau condition fails)");
  const std::vector<std::int64_t> d = sorted_integers(s);
  const auto n = static_cast<std::int64_t>(d.size());
  std::vector<ScoreSequence> blocks;
  std::vector<long long> current;
  std::int64_t prefix = 0;
  std::int64_t below = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    current.push_back(d[k - 1] - below);
    if (prefix == pairs(k)) {
      blocks.push_back(ScoreSequence::integers(current));
      below = k;
      current.clear();
    }
  }
  return blocks;
}

bool is_simple_avery(const ScoreSequence& s) {
  static const std::array<std::vector<double>, 4> kSimple = {
      std::vector<double>{0},
      std::vector<double>{1, 1, 1},
      std::vector<double>{1, 1, 2, 2},
      std::vector<double>{2, 2, 2, 2, 2}};
  for (const ScoreSequence& block : irreducible_decomposition(s)) {
    const std::vector<double> b = block.sorted();
    if (std::find(kSimple.begin(), kSimple.end(), b) == kSimple.end()) return false;
  }
  return true;
}

ValidityReport check_hausdorff_moments(const MomentSequence& a, int order) {
  if (order < 0 || order > 60) throw ValidationError("moment order must lie in [0, 60]");
  if (a.a.size() < static_cast<std::size_t>(order) + 1) {
    throw ValidationError("moment sequence shorter than order + 1");
  }
  if (std::fabs(a.a[0] - 1.0) > kDifferenceTolerance) {
    return ValidityReport::fail({"moment-a0", {0}, a.a[0], 1.0, Relation::equal});
  }
  for (int m = 0; m <= order; ++m) {
    for (int n = 0; n + m <= order; ++n) {
      CompensatedSum diff;
      for (int k = 0; k <= m; ++k) {
        const double c = static_cast<double>(binomial(m, k));
        diff += (k % 2 == 0 ? c : -c) * a.a[n + k];
      }
      if (diff.value() < -kDifferenceTolerance) {
        return ValidityReport::fail(
            {"moment-difference", {n, m}, diff.value(), 0.0, Relation::at_least});
      }
    }
  }
  const int h = order / 2 + 1;
  Eigen::MatrixXd hankel(h, h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) hankel(i, j) = a.a[i + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hankel, Eigen::EigenvaluesOnly);
  const double smallest = solver.eigenvalues().minCoeff();
  if (smallest < -kHankelTolerance) {
    return ValidityReport::fail({"moment-hankel", {h}, smallest, 0.0, Relation::at_least});
  }
  return ValidityReport::ok();
}

MomentSequence moments_of_score_function(const ScoreFunction& f, int max_power) {
  if (max_power < 0) throw ValidationError("moment order must be non-negative");
  MomentSequence out;
  out.a.push_back(1.0);
  std::vector<double> powers(f.cells().begin(), f.cells().end());
  for (int k = 1; k <= max_power; ++k) {
    out.a.push_back(exact_sum(powers) / static_cast<double>(f.size()));
    for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= f[i];
  }
  return out;
}

}  // namespace tourlim
