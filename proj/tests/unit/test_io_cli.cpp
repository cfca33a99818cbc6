#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "tourlim/cli.hpp"
#include "tourlim/core.hpp"
#include "tourlim/error.hpp"
#include "tourlim/io.hpp"
#include "tourlim/realize.hpp"

using namespace tourlim;
namespace fs = std::filesystem;
using io::Json;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir(TOURLIM_TEST_SCRATCH);
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("typed JSON round trips") {
  std::mt19937_64 rng(83);
  const StepKernel w = oracle::random_kernel(4, rng);
  CHECK(io::kernel_from_json(io::parse(io::to_json(w).dump())) == w);
  const auto g = oracle::random_tournament(5, rng);
  CHECK(io::tournament_from_json(io::parse(io::to_json(g).dump())) == g);
  const auto s = ScoreSequence::integers({0, 1, 2});
  CHECK(io::score_sequence_from_json(io::parse(io::to_json(s).dump())) == s);
  const auto r = ScoreSequence::reals({0.1, 1.2, 1.7});
  CHECK(io::score_sequence_from_json(io::parse(io::to_json(r).dump())) == r);
  const ScoreFunction f = score_function_of_kernel(w);
  CHECK(io::score_function_from_json(io::parse(io::to_json(f).dump())) == f);
  const MomentSequence m{{1, 0.5, 1.0 / 3}};
  CHECK(io::moments_from_json(io::parse(io::to_json(m).dump())) == m);

  const ValidityReport bad = check_landau(ScoreSequence::integers({0, 0, 3}));
  const ValidityReport back = io::report_from_json(io::parse(io::to_json(bad).dump()));
  CHECK(back.valid == bad.valid);
  CHECK(back.witness->condition == bad.witness->condition);
  CHECK(back.witness->at == bad.witness->at);
  CHECK(back.witness->lhs == bad.witness->lhs);

  const DensityFingerprint fp = fingerprint(w, 3);
  const DensityFingerprint fp2 = io::fingerprint_from_json(io::parse(io::to_json(fp).dump()));
  CHECK(fingerprint_distance(fp, fp2) == 0.0);

  const auto d = degree_distribution(w).outdegree;
  const auto d2 = io::degree_distribution_from_csv(io::degree_distribution_csv(d));
  CHECK(d2.atoms() == d.atoms());
}

TEST_CASE("readers name the offending field") {
  const auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message([] { io::kernel_from_json(io::parse(R"({"n":2,"blocks":[[0.5,0.2],[0.8]]})")); })
            .find("blocks[1]") != std::string::npos);
  CHECK(message([] { io::score_sequence_from_json(io::parse(R"({"vals":[1]})")); })
            .find("values") != std::string::npos);
  CHECK(message([] { io::score_sequence_from_json(io::parse(R"({"values":[1,"x"]})")); })
            .find("values[1]") != std::string::npos);
  CHECK(message([] { io::tournament_from_json(io::parse(R"({"n":2,"alpha":[[0,1],[1,0]]})")); })
            .find("alpha") != std::string::npos);
  CHECK(message([] { io::parse("{not json"); }).find("malformed") != std::string::npos);
  CHECK(message([] { io::degree_distribution_from_csv("position,weight\n0.5;1\n"); })
            .find("row 2") != std::string::npos);
}

TEST_CASE("CLI exit-code matrix") {
  const std::string bad_seq = write("bad_seq.json", R"({"values":[0,0,3],"kind":"integer"})");
  const std::string good_seq = write("good_seq.json", R"({"values":[2,0,1],"kind":"integer"})");
  const std::string half3 =
      write("half3.json", io::to_json(StepKernel::constant_half(3)).dump());
  const std::string t9 = write("t9.json", io::to_json(GeneralizedTournament::transitive(9)).dump());
  const std::string broken = write("broken.json", R"({"values":[0,1)");
  const std::string bad_field = write("bad_field.json", R"({"values":[0,"one"]})");

  Result r = run({"check-score-seq", "--input", bad_seq});
  CHECK(r.code == 1);
  const Json report = io::parse(r.out);
  CHECK(report["witness"]["condition"] == "landau-prefix");
  CHECK(report["witness"]["at"][0] == 2);

  CHECK(run({"check-score-seq", "--input", good_seq}).code == 0);
  CHECK(run({"check-score-seq", "--input", good_seq, "--condition", "eplett"}).code == 0);
  CHECK(run({"realize", "--input", bad_seq}).code == 1);

  r = run({"realize", "--input", good_seq});
  REQUIRE(r.code == 0);
  const auto g = io::tournament_from_json(io::parse(r.out));
  CHECK(scores_of_tournament(g) == ScoreSequence::integers({2, 0, 1}));

  r = run({"perturb", "--input", half3});
  REQUIRE(r.code == 0);
  CHECK(std::fabs(io::parse(r.out)["c4_difference"].get<double>() - 2.0 / 729) <= 1e-12);

  r = run({"density", "--pattern", "C3", "--input", t9});
  REQUIRE(r.code == 0);
  CHECK(std::fabs(io::parse(r.out)["density"].get<double>() - 1.0 / 648) <= 1e-16);
  r = run({"density", "--pattern", "C3", "--mode", "inj", "--input", t9});
  CHECK(io::parse(r.out)["density"] == 0.0);

  r = run({"check-score-seq", "--input", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed") != std::string::npos);
  r = run({"check-score-seq", "--input", bad_field});
  CHECK(r.code == 2);
  CHECK(r.err.find("values[1]") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"check-score-seq", "--input", good_seq, "--bogus"}).code == 2);
  CHECK(run({"check-score-seq", "--input", good_seq, "--format", "xml"}).code == 2);
  CHECK(run({"check-score-seq", "--input", good_seq, "--format", "csv"}).code == 2);
  CHECK(run({"density", "--pattern", "Q9", "--input", t9}).code == 2);
  CHECK(run({"check-score-seq", "--input", scratch("missing.json").string()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("CLI strict mode and determinism") {
  const std::string half3 =
      write("half3.json", io::to_json(StepKernel::constant_half(3)).dump());
  CHECK(run({"sample", "--input", half3, "--n", "5", "--strict"}).code == 2);
  CHECK(run({"sample", "--input", half3, "--n", "5", "--strict", "--seed", "0"}).code == 0);

  const std::string first = scratch("sample_a.json").string();
  const std::string second = scratch("sample_b.json").string();
  for (const auto& path : {first, second}) {
    CHECK(run({"sample", "--input", half3, "--n", "12", "--seed", "4", "--output", path}).code == 0);
  }
  std::ifstream a(first), b(second);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("every JSON the CLI emits re-parses to an equal value") {
  const std::string half3 =
      write("half3.json", io::to_json(StepKernel::constant_half(3)).dump());
  const std::string seq = write("seq.json", R"({"values":[1,1,2,2],"kind":"integer"})");
  const std::string fn = write("fn.json", R"({"cells":[0.125,0.375,0.625,0.875]})");
  const std::string mom = write("mom.json", R"({"a":[1,0.5,0.3333333333333333]})");
  const std::vector<std::vector<std::string>> commands{
      {"check-score-seq", "--input", seq},
      {"check-score-fn", "--input", fn},
      {"check-score-fn", "--input", fn, "--condition", "II"},
      {"realize", "--input", seq},
      {"realize-selfconverse", "--input", seq},
      {"discretize", "--input", fn, "--blocks", "2"},
      {"kernel-from-fn", "--input", fn, "--blocks", "4"},
      {"density", "--input", half3, "--pattern", "S1_2"},
      {"degree-dist", "--input", half3},
      {"sample", "--input", half3, "--n", "6", "--seed", "1", "--reps", "2"},
      {"sample-selfconverse", "--input", half3, "--n", "4", "--seed", "1"},
      {"converge", "--input", half3, "--sizes", "10,20", "--reps", "3", "--seed", "2"},
      {"perturb", "--input", half3},
      {"fingerprint", "--input", half3, "--order", "4"},
      {"moments", "--input", mom},
      {"moments", "--input", fn, "--order", "5"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const Result r = run(args);
    CHECK(r.code == 0);
    const Json j = io::parse(r.out);
    CHECK(io::parse(j.dump()) == j);
  }
  CHECK(io::kernel_from_json(io::parse(run({"kernel-from-fn", "--input", fn, "--blocks", "4"}).out))
            .size() == 4);
  CHECK(run({"discretize", "--input", fn}).code == 2);
}

TEST_CASE("CLI CSV outputs") {
  const std::string half3 =
      write("half3.json", io::to_json(StepKernel::constant_half(3)).dump());
  Result r = run({"degree-dist", "--input", half3, "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "position,weight\n0.5,1\n");
  r = run({"converge", "--input", half3, "--sizes", "10", "--reps", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("pattern,n,mean,stderr,exact\n", 0) == 0);
}
