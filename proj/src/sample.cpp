#include "tourlim/sample.hpp"

#include <algorithm>
#include <cmath>

#include "tourlim/core.hpp"
#include "tourlim/error.hpp"

namespace tourlim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size();
  return m % 2 ? xs[m / 2] : (xs[m / 2 - 1] + xs[m / 2]) / 2.0;
}

}  // namespace

void SampleConfig::validate() const {
  if (n < 1) throw ValidationError("sample size n must be at least 1");
  if (reps < 1) throw ValidationError("reps must be at least 1");
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state ^= stream * 0xd1b54a32d192ed03ULL;
  const std::uint64_t b = splitmix64(state);
  engine_.seed(a ^ (b << 1) ^ (b >> 63));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

LatentPoint draw_point(Rng& rng, std::size_t blocks) {
  const double x = rng.uniform() * static_cast<double>(blocks);
  const auto block = std::min(static_cast<std::size_t>(x), blocks - 1);
  return {block, x - static_cast<double>(block)};
}

GeneralizedTournament sample_tournament(const StepKernel& w, const SampleConfig& cfg,
                                        std::uint64_t rep) {
  cfg.validate();
  Rng rng(cfg.seed, rep);
  std::vector<LatentPoint> x(cfg.n);
  for (auto& p : x) p = draw_point(rng, w.size());
  SquareMatrix a(cfg.n, 0.0);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    for (std::size_t j = i + 1; j < cfg.n; ++j) {
      const bool forward = rng.bernoulli(w(x[i].block, x[j].block));
      a(i, j) = forward ? 1.0 : 0.0;
      a(j, i) = forward ? 0.0 : 1.0;
    }
  }
  return GeneralizedTournament(std::move(a));
}

bool is_strongly_self_converse(const StepKernel& w, const std::vector<std::size_t>& sigma) {
  const std::size_t n = w.size();
  if (sigma.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || sigma[sigma[i]] != i) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::fabs(w(i, j) - w(sigma[j], sigma[i])) > kSkewTolerance) return false;
  return true;
}

GeneralizedTournament sample_self_converse(const StepKernel& w,
                                           const std::vector<std::size_t>& sigma,
                                           const SampleConfig& cfg, std::uint64_t rep) {
  cfg.validate();
  if (!is_strongly_self_converse(w, sigma)) {
    throw ValidationError("sigma is not an involution with M(i,j) = M(sigma j, sigma i)");
  }
  const std::size_t n = cfg.n;
  Rng rng(cfg.seed, rep);
  std::vector<LatentPoint> x(n);
  for (auto& p : x) p = draw_point(rng, w.size());
  auto v = [](std::size_t i) { return i; };
  auto u = [n](std::size_t i) { return n + i; };  // w_i
  SquareMatrix a(2 * n, 0.0);
  auto orient = [&a](std::size_t from, std::size_t to) {
    a(from, to) = 1.0;
    a(to, from) = 0.0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(w(x[i].block, x[j].block))) {
        orient(v(i), v(j));
        orient(u(j), u(i));
      } else {
        orient(v(j), v(i));
        orient(u(i), u(j));
      }
    }
  }
  // v_i w_j for i <= j with probability W(X_i, sigma X_j); its mirror
  // v_j w_i follows it. The diagonal pair v_i w_i has no partner.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const bool forward = rng.bernoulli(w(x[i].block, sigma[x[j].block]));
      if (forward) {
        orient(v(i), u(j));
        if (j != i) orient(v(j), u(i));
      } else {
        orient(u(j), v(i));
        if (j != i) orient(u(i), v(j));
      }
    }
  }
  return GeneralizedTournament(std::move(a));
}

bool is_converse_witness(const GeneralizedTournament& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && g(perm[a], perm[b]) != g(b, a)) return false;
  return true;
}

DegreeDistribution empirical_degree_distribution(const GeneralizedTournament& g) {
  const ScoreSequence d = scores_of_tournament(g);
  const auto n = static_cast<double>(g.size());
  std::vector<double> samples;
  for (double x : d.values()) samples.push_back(std::clamp(x / n, 0.0, 1.0));
  return DegreeDistribution::from_samples(std::move(samples));
}

std::vector<ConvergenceRow> convergence_report(const StepKernel& w,
                                               const std::vector<std::string>& patterns,
                                               const std::vector<std::size_t>& sizes,
                                               const SampleConfig& cfg) {
  cfg.validate();
  std::vector<DigraphPattern> parsed;
  std::vector<double> exact;
  for (const std::string& name : patterns) {
    parsed.push_back(DigraphPattern::parse(name));
    exact.push_back(density_kernel(parsed.back(), w));
  }
  const DegreeDistribution limit = degree_distribution(w).outdegree;

  auto summarize = [&](std::string name, std::size_t n, const std::vector<double>& xs,
                       double target) {
    const auto r = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= r;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    const double se = xs.size() > 1 ? std::sqrt(var / (r - 1.0) / r) : 0.0;
    return ConvergenceRow{std::move(name), n, mean, se, target, median(xs)};
  };

  std::vector<ConvergenceRow> rows;
  for (std::size_t n : sizes) {
    SampleConfig at = cfg;
    at.n = n;
    std::vector<std::vector<double>> values(parsed.size());
    std::vector<double> distances;
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
      const GeneralizedTournament g =
          sample_tournament(w, at, (static_cast<std::uint64_t>(n) << 32) ^ rep);
      for (std::size_t p = 0; p < parsed.size(); ++p) {
        values[p].push_back(density_finite(parsed[p], g, DensityMode::inj));
      }
      distances.push_back(wasserstein1(empirical_degree_distribution(g), limit));
    }
    for (std::size_t p = 0; p < parsed.size(); ++p) {
      rows.push_back(summarize(patterns[p], n, values[p], exact[p]));
    }
    rows.push_back(summarize("W1", n, distances, 0.0));
  }
  return rows;
}

}  // namespace tourlim
