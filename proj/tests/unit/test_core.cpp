#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tourlim/core.hpp"
#include "tourlim/error.hpp"
#include "tourlim/numerics.hpp"

using namespace tourlim;

TEST_CASE("exact_sum is correctly rounded where naive summation is not") {
  const std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  CHECK(exact_sum(v) == 2.0);
  CompensatedSum c;
  for (double x : {0.1, 0.2, 0.3}) c += x;
  CHECK(c.value() == doctest::Approx(0.6).epsilon(1e-16));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(falling_factorial(6, 3) == 120.0);
}

TEST_CASE("score sequence of the 3-cycle and the transitive tournament") {
  CHECK(scores_of_tournament(GeneralizedTournament::three_cycle()) ==
        ScoreSequence::integers({1, 1, 1}));
  CHECK(scores_of_tournament(GeneralizedTournament::transitive(4)) ==
        ScoreSequence::integers({3, 2, 1, 0}));
  const ScoreSequence half = scores_of_tournament(GeneralizedTournament::half(4));
  CHECK_FALSE(half.is_integer());
  CHECK(half.sorted() == std::vector<double>{1.5, 1.5, 1.5, 1.5});
}

TEST_CASE("type invariants reject malformed values") {
  CHECK_THROWS_AS(ScoreSequence({}, ScoreKind::integer), ValidationError);
  CHECK_THROWS_AS(ScoreSequence({0.5}, ScoreKind::integer), ValidationError);
  CHECK_THROWS_AS(ScoreFunction({1.2}), ValidationError);
  CHECK_THROWS_AS(GeneralizedTournament(SquareMatrix::from_rows({{0, 0.3}, {0.3, 0}})),
                  ValidationError);
  CHECK_THROWS_AS(StepKernel(SquareMatrix::from_rows({{0.4, 0.5}, {0.5, 0.5}})), ValidationError);
  CHECK_THROWS_AS(DegreeDistribution::from_atoms({{0.2, 0.5}}), ValidationError);
}

TEST_CASE("W_G keeps alpha off the diagonal and scores scale by n") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_tournament(2 + trial % 7, rng);
    const StepKernel w = step_kernel_from_tournament(g);
    const ScoreSequence d = scores_of_tournament(g);
    const ScoreFunction f = score_function_of_kernel(w);
    const double n = static_cast<double>(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(w(i, i) == 0.5);
      CHECK(f[i] == doctest::Approx((d[i] + 0.5) / n).epsilon(1e-15));
    }
  }
}

TEST_CASE("converse is an involution and reflects the score function") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StepKernel w = oracle::random_kernel(1 + trial % 9, rng);
    CHECK(converse(converse(w)) == w);
    const ScoreFunction f = score_function_of_kernel(w);
    const ScoreFunction g = score_function_of_kernel(converse(w));
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] + g[i] == doctest::Approx(1.0));
  }
}

TEST_CASE("rearrangements are sorted, equimeasurable and realised by the map") {
  const ScoreFunction f({0.3, 0.9, 0.3, 0.1});
  CHECK(decreasing_rearrangement(f) == ScoreFunction({0.9, 0.3, 0.3, 0.1}));
  CHECK(increasing_rearrangement(f) == ScoreFunction({0.1, 0.3, 0.3, 0.9}));
  const auto sigma = rearrangement_map(f);
  CHECK(sigma == std::vector<std::size_t>{1, 0, 2, 3});
  const ScoreFunction star = decreasing_rearrangement(f);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(star[sigma[i]] == f[i]);
}

TEST_CASE("Hardy-Littlewood triple inequality on random grids") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 17;
    std::vector<double> a(m), b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
    }
    const ScoreFunction f(a), h(b);
    const ScoreFunction fd = decreasing_rearrangement(f);
    const ScoreFunction hd = decreasing_rearrangement(h);
    const ScoreFunction hi = increasing_rearrangement(h);
    double upper = 0, middle = 0, lower = 0;
    for (std::size_t i = 0; i < m; ++i) {
      upper += fd[i] * hd[i];
      middle += f[i] * h[i];
      lower += fd[i] * hi[i];
    }
    CHECK(upper >= middle - 1e-12);
    CHECK(middle >= lower - 1e-12);
  }
}

TEST_CASE("pullback by the rearrangement map sorts the score function") {
  std::mt19937_64 rng(5);
  const StepKernel w = oracle::random_kernel(6, rng);
  const ScoreFunction f = score_function_of_kernel(w);
  const auto sigma = rearrangement_map(f);
  std::vector<std::size_t> inverse(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inverse[sigma[i]] = i;
  const ScoreFunction g = score_function_of_kernel(pullback(w, inverse));
  CHECK(g == decreasing_rearrangement(f));
}

TEST_CASE("subdivision keeps the score function and the degree distribution") {
  std::mt19937_64 rng(13);
  const StepKernel w = oracle::random_kernel(4, rng);
  const StepKernel fine = subdivide(w, 3);
  CHECK(fine.size() == 12);
  const ScoreFunction f = score_function_of_kernel(w);
  const ScoreFunction g = score_function_of_kernel(fine);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == doctest::Approx(f[i / 3]).epsilon(1e-15));
  CHECK(wasserstein1(degree_distribution(w).outdegree, degree_distribution(fine).outdegree) <
        1e-15);
}

TEST_CASE("degree distribution of the transitive kernel is the uniform grid") {
  const StepKernel w = step_kernel_from_tournament(GeneralizedTournament::transitive(4));
  const auto d = degree_distribution(w);
  const auto out = d.outdegree.atoms();
  const auto in = d.indegree.atoms();
  REQUIRE(out.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(out[i].position == doctest::Approx((i + 0.5) / 4));
    CHECK(out[i].weight == 0.25);
    CHECK(out[i].position + in[3 - i].position == 1.0);
  }
}

TEST_CASE("wasserstein1 matches the CDF integral oracle") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(1 + trial % 6), ys(1 + trial % 4);
    for (double& x : xs) x = std::round(u(rng) * 64) / 64;
    for (double& y : ys) y = std::round(u(rng) * 64) / 64;
    const auto mu = DegreeDistribution::from_samples(xs);
    const auto nu = DegreeDistribution::from_samples(ys);
    const double expected = oracle::wasserstein_by_cdf(mu.atoms(), nu.atoms(), 64 * 64);
    CHECK(wasserstein1(mu, nu) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(wasserstein1(mu, nu) == doctest::Approx(wasserstein1(nu, mu)).epsilon(1e-14));
  }
  const auto point = DegreeDistribution::from_atoms({{0.5, 1.0}});
  CHECK(wasserstein1(point, DegreeDistribution::from_atoms({{0.25, 0.5}, {1.0, 0.5}})) == 0.375);
}
