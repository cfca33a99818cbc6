#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tourlim/conditions.hpp"
#include "tourlim/core.hpp"
#include "tourlim/error.hpp"

using namespace tourlim;

namespace {

/// All non-decreasing sequences of length n with entries in [0, top].
void sequences(int n, int top, std::vector<long long>& prefix,
               std::vector<std::vector<long long>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  const long long lo = prefix.empty() ? 0 : prefix.back();
  for (long long v = lo; v <= top; ++v) {
    prefix.push_back(v);
    sequences(n, top, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("Landau witnesses") {
  const ValidityReport bad = check_landau(ScoreSequence::integers({0, 0, 3}));
  REQUIRE_FALSE(bad.valid);
  CHECK(bad.witness->condition == "landau-prefix");
  CHECK(bad.witness->at == std::vector<long long>{2});
  CHECK(bad.witness->lhs == 0.0);
  CHECK(bad.witness->rhs == 1.0);

  const ValidityReport total = check_landau(ScoreSequence::integers({1, 1, 2}));
  REQUIRE_FALSE(total.valid);
  CHECK(total.witness->condition == "landau-total");
  CHECK(total.witness->relation == Relation::equal);

  CHECK(check_landau(ScoreSequence::integers({1, 1, 1})).valid);
  CHECK(check_landau(ScoreSequence::reals({1.5, 1.5, 1.5, 1.5})).valid);
  CHECK_FALSE(check_landau(ScoreSequence::reals({0.0, 0.4, 2.6})).valid);
}

TEST_CASE("check_landau agrees with exhaustive enumeration for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto realised = oracle::classes_per_score_sequence(n);
    std::vector<std::vector<long long>> all;
    std::vector<long long> prefix;
    sequences(n, n, prefix, all);
    for (const auto& s : all) {
      const std::vector<int> key(s.begin(), s.end());
      CHECK(check_landau(ScoreSequence::integers(s)).valid == (realised.count(key) == 1));
    }
  }
}

TEST_CASE("Eplett condition") {
  CHECK(check_eplett(ScoreSequence::integers({1, 1, 1})).valid);
  CHECK(check_eplett(ScoreSequence::integers({0, 1, 2})).valid);
  CHECK(check_eplett(ScoreSequence::integers({1, 1, 2, 2})).valid);
  const ValidityReport r = check_eplett(ScoreSequence::integers({0, 2, 2, 2}));
  REQUIRE_FALSE(r.valid);
  CHECK(r.witness->condition == "eplett-pair");
  CHECK(r.witness->at == std::vector<long long>{1, 4});
}

TEST_CASE("every self-converse tournament on five vertices has an Eplett sequence") {
  for (const auto& a : oracle::all_tournaments(5)) {
    oracle::Adjacency conv(5, std::vector<int>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) conv[i][j] = a[j][i];
    if (oracle::canonical_form(a) != oracle::canonical_form(conv)) continue;
    const auto d = oracle::sorted_scores(a);
    CHECK(check_eplett(ScoreSequence::integers({d.begin(), d.end()})).valid);
  }
}

TEST_CASE("condition I on grids") {
  CHECK(check_condition_I(ScoreFunction({0.5, 0.5, 0.5})).valid);
  CHECK(check_condition_I(ScoreFunction({0.125, 0.375, 0.625, 0.875})).valid);

  // x^2 on a 4-cell grid has mean below 1/2: the total is reported.
  const ValidityReport sq = check_condition_I(ScoreFunction({0.0, 0.1, 0.4, 0.9}));
  REQUIRE_FALSE(sq.valid);
  CHECK(sq.witness->condition == "condition-I-total");
  CHECK(sq.witness->at == std::vector<long long>{4, 4});

  const ValidityReport pre = check_condition_I(ScoreFunction({0.0, 0.5, 1.0}));
  REQUIRE_FALSE(pre.valid);
  CHECK(pre.witness->condition == "condition-I-prefix");
  CHECK(pre.witness->at == std::vector<long long>{1, 3});
}

TEST_CASE("condition I agrees with the random-subset oracle on kernel score functions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const StepKernel w = oracle::random_kernel(2 + trial % 12, rng);
    const ScoreFunction f = score_function_of_kernel(w);
    CHECK(check_condition_I(f).valid);
    CHECK(oracle::condition_I_on_subsets({f.cells().begin(), f.cells().end()}, 10000, 1e-12, rng));
  }
}

TEST_CASE("condition II") {
  CHECK(check_condition_II(ScoreFunction({0.2, 0.5, 0.8})).valid);
  const ValidityReport r = check_condition_II(ScoreFunction({0.2, 0.6, 0.8}));
  REQUIRE_FALSE(r.valid);
  CHECK(r.witness->at == std::vector<long long>{2, 2});
}

TEST_CASE("irreducible decomposition and Avery's simple sequences") {
  const auto blocks = irreducible_decomposition(ScoreSequence::integers({0, 2, 2, 2, 4}));
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == ScoreSequence::integers({0}));
  CHECK(blocks[1] == ScoreSequence::integers({1, 1, 1}));
  CHECK(blocks[2] == ScoreSequence::integers({0}));
  CHECK(is_simple_avery(ScoreSequence::integers({0, 1, 2, 3})));
  CHECK(is_simple_avery(ScoreSequence::integers({1, 1, 2, 2})));
  CHECK_FALSE(is_simple_avery(ScoreSequence::integers({1, 1, 2, 3, 3})));
  CHECK_THROWS_AS(irreducible_decomposition(ScoreSequence::integers({0, 0, 3})), ValidationError);
  CHECK_THROWS_AS(irreducible_decomposition(ScoreSequence::reals({1, 1, 1})), ValidationError);
}

TEST_CASE("Hausdorff moments") {
  MomentSequence uniform;
  for (int k = 0; k <= 12; ++k) uniform.a.push_back(1.0 / (k + 1));
  CHECK(check_hausdorff_moments(uniform, 8).valid);

  const ValidityReport bad = check_hausdorff_moments({{1, 0.5, 0.5, 0.1}}, 3);
  REQUIRE_FALSE(bad.valid);
  CHECK(bad.witness->condition == "moment-difference");
  CHECK(bad.witness->lhs == doctest::Approx(-0.4));

  const ValidityReport a0 = check_hausdorff_moments({{0.9, 0.5}}, 1);
  REQUIRE_FALSE(a0.valid);
  CHECK(a0.witness->condition == "moment-a0");

  CHECK_THROWS_AS(check_hausdorff_moments({{1, 0.5}}, 4), ValidationError);
  CHECK_THROWS_AS(check_hausdorff_moments(uniform, 61), ValidationError);
}

TEST_CASE("moments of a score function are Hausdorff moments") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const ScoreFunction f = score_function_of_kernel(oracle::random_kernel(3 + trial, rng));
    CHECK(check_hausdorff_moments(moments_of_score_function(f, 6), 6).valid);
  }
  const MomentSequence m = moments_of_score_function(ScoreFunction({0.25, 0.75}), 2);
  CHECK(m.a == std::vector<double>{1.0, 0.5, 0.3125});
}
