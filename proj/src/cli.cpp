#include "tourlim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "tourlim/conditions.hpp"
#include "tourlim/core.hpp"
#include "tourlim/density.hpp"
#include "tourlim/error.hpp"
#include "tourlim/io.hpp"
#include "tourlim/perturb.hpp"
#include "tourlim/realize.hpp"
#include "tourlim/sample.hpp"

namespace tourlim::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::size_t blocks = 0;
  int order = -1;
  bool strict = false;

  std::string pattern = "C3";
  std::string mode = "kernel";
  std::string condition;
  std::size_t n = 0;
  std::size_t reps = 1;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> sigma;
  std::vector<std::string> patterns;
  int refine = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a command produced and whether it counts as a failed check.
struct Outcome {
  std::string text;
  int code = 0;
};

Outcome emit(const Json& j, int code = 0) { return {j.dump(2) + "\n", code}; }

Json read_input(const Options& o) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw UsageError("cannot read input file '" + o.input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return io::parse(text);
}

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("this command only writes --format json");
}

void require_blocks(const Options& o) {
  if (o.blocks == 0) throw UsageError("--blocks is required and must be positive");
}

Outcome report(const ValidityReport& r) { return emit(io::to_json(r), r.valid ? 0 : 1); }

Outcome check_score_seq(const Options& o) {
  require_json(o);
  const ScoreSequence s = io::score_sequence_from_json(read_input(o));
  const std::string c = o.condition.empty() ? "landau" : o.condition;
  if (c == "landau") return report(check_landau(s, o.tolerance));
  if (c == "eplett") return report(check_eplett(s, o.tolerance));
  throw UsageError("--condition for score sequences is 'landau' or 'eplett'");
}

Outcome check_score_fn(const Options& o) {
  require_json(o);
  const ScoreFunction f = io::score_function_from_json(read_input(o));
  const std::string c = o.condition.empty() ? "I" : o.condition;
  if (c == "I") return report(check_condition_I(f, o.tolerance));
  if (c == "II") return report(check_condition_II(f, o.tolerance));
  throw UsageError("--condition for score functions is 'I' or 'II'");
}

Outcome realize(const Options& o) {
  require_json(o);
  const ScoreSequence s = io::score_sequence_from_json(read_input(o));
  const ValidityReport r = check_landau(s, o.tolerance);
  if (!r) return report(r);
  return emit(io::to_json(realize_scores(s, o.tolerance)));
}

Outcome realize_selfconverse(const Options& o) {
  require_json(o);
  const ScoreSequence s = io::score_sequence_from_json(read_input(o));
  const ValidityReport r = check_eplett(s, o.tolerance);
  if (!r) return report(r);
  return emit(io::to_json(realize_self_converse(s, o.tolerance)));
}

Outcome discretize(const Options& o) {
  require_json(o);
  require_blocks(o);
  const ScoreFunction f = io::score_function_from_json(read_input(o));
  const ValidityReport r = check_condition_I(f, o.tolerance);
  if (!r) return report(r);
  return emit(io::to_json(discretize_score_function(f, o.blocks, o.tolerance)));
}

Outcome kernel_from_fn(const Options& o) {
  require_json(o);
  require_blocks(o);
  const ScoreFunction f = io::score_function_from_json(read_input(o));
  const ValidityReport r = check_condition_I(f, o.tolerance);
  if (!r) return report(r);
  return emit(io::to_json(kernel_from_score_function(f, o.blocks, o.tolerance)));
}

/// Inputs carrying "blocks" are kernels; inputs carrying "alpha" are
/// tournaments and become W_G.
StepKernel kernel_input(const Json& j) {
  if (j.is_object() && j.contains("alpha")) {
    return step_kernel_from_tournament(io::tournament_from_json(j));
  }
  return io::kernel_from_json(j);
}

Outcome density(const Options& o) {
  require_json(o);
  const DigraphPattern f = [&] {
    try {
      return DigraphPattern::parse(o.pattern);
    } catch (const ValidationError& e) {
      throw UsageError(std::string("--pattern: ") + e.what());
    }
  }();
  const Json j = read_input(o);
  double value = 0.0;
  if (o.mode == "kernel") {
    value = density_kernel(f, kernel_input(j));
  } else {
    DensityMode mode = DensityMode::hom;
    if (o.mode == "inj") {
      mode = DensityMode::inj;
    } else if (o.mode == "ind") {
      mode = DensityMode::ind;
    } else if (o.mode != "hom") {
      throw UsageError("--mode is one of kernel, hom, inj, ind");
    }
    value = density_finite(f, io::tournament_from_json(j), mode);
  }
  return emit({{"pattern", o.pattern}, {"mode", o.mode}, {"density", value}});
}

Outcome degree_dist(const Options& o) {
  const Json j = read_input(o);
  DegreeDistribution out = DegreeDistribution::from_atoms({{0.0, 1.0}});
  std::optional<DegreeDistribution> in;
  if (j.is_object() && j.contains("alpha")) {
    out = empirical_degree_distribution(io::tournament_from_json(j));
  } else {
    KernelDegreeDistribution d = degree_distribution(io::kernel_from_json(j));
    out = d.outdegree;
    in = d.indegree;
  }
  if (o.format == "csv") return {io::degree_distribution_csv(out), 0};
  Json result = {{"outdegree", io::to_json(out)}};
  if (in) result["indegree"] = io::to_json(*in);
  return emit(result);
}

void require_seed(const Options& o, const CLI::App& app) {
  if (o.strict && app.count("--seed") == 0) {
    throw UsageError("--strict requires an explicit --seed for randomized commands");
  }
}

Outcome sample(const Options& o, const CLI::App& app) {
  require_json(o);
  require_seed(o, app);
  const StepKernel w = kernel_input(read_input(o));
  const SampleConfig cfg{o.n, o.seed, o.reps};
  cfg.validate();
  if (o.reps == 1) return emit(io::to_json(sample_tournament(w, cfg, 0)));
  Json all = Json::array();
  for (std::size_t r = 0; r < o.reps; ++r) all.push_back(io::to_json(sample_tournament(w, cfg, r)));
  return emit(all);
}

Outcome sample_selfconverse(const Options& o, const CLI::App& app) {
  require_json(o);
  require_seed(o, app);
  const StepKernel w = kernel_input(read_input(o));
  std::vector<std::size_t> sigma = o.sigma;
  if (sigma.empty()) {
    sigma.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) sigma[i] = w.size() - 1 - i;
  }
  const SampleConfig cfg{o.n, o.seed, o.reps};
  cfg.validate();
  std::vector<std::size_t> witness(2 * o.n);
  for (std::size_t i = 0; i < o.n; ++i) {
    witness[i] = o.n + i;
    witness[o.n + i] = i;
  }
  Json all = Json::array();
  for (std::size_t r = 0; r < o.reps; ++r) {
    all.push_back({{"tournament", io::to_json(sample_self_converse(w, sigma, cfg, r))},
                   {"witness", witness}});
  }
  return emit(o.reps == 1 ? all[0] : all);
}

Outcome converge(const Options& o, const CLI::App& app) {
  require_seed(o, app);
  const StepKernel w = kernel_input(read_input(o));
  const std::vector<std::string> patterns =
      o.patterns.empty() ? std::vector<std::string>{"S0_1", "S1_1", "C3"} : o.patterns;
  const std::vector<std::size_t> sizes =
      o.sizes.empty() ? std::vector<std::size_t>{50, 100, 200} : o.sizes;
  const SampleConfig cfg{sizes.front(), o.seed, o.reps};
  const std::vector<ConvergenceRow> rows = convergence_report(w, patterns, sizes, cfg);
  if (o.format == "csv") return {io::convergence_csv(rows), 0};
  Json all = Json::array();
  for (const ConvergenceRow& r : rows) {
    all.push_back({{"pattern", r.pattern},
                   {"n", r.n},
                   {"mean", r.mean},
                   {"stderr", r.std_error},
                   {"exact", r.exact},
                   {"median", r.median}});
  }
  return emit(all);
}

Outcome perturb(const Options& o) {
  require_json(o);
  if (o.refine < 0 || o.refine > 2) throw UsageError("--refine must lie in [0, 2]");
  const StepKernel w = kernel_input(read_input(o));
  const CertificateResult r = nonuniqueness_certificate(w, o.refine);
  if (std::holds_alternative<TransitiveLike>(r)) return emit({{"result", "transitive-like"}});
  Json j = {{"result", "certificate"}};
  j.update(io::to_json(std::get<NonUniquenessCertificate>(r)));
  return emit(j);
}

Outcome fingerprint_cmd(const Options& o) {
  require_json(o);
  const StepKernel w = kernel_input(read_input(o));
  return emit(io::to_json(fingerprint(w, o.order < 0 ? 3 : o.order)));
}

Outcome moments(const Options& o) {
  require_json(o);
  const Json j = read_input(o);
  if (j.is_object() && j.contains("cells")) {
    const ScoreFunction f = io::score_function_from_json(j);
    return emit(io::to_json(moments_of_score_function(f, o.order < 0 ? 8 : o.order)));
  }
  const MomentSequence a = io::moments_from_json(j);
  if (a.a.empty()) throw FormatError("field 'a' must be non-empty");
  const int order = o.order < 0 ? static_cast<int>(std::min<std::size_t>(a.a.size() - 1, 60))
                                : o.order;
  return report(check_hausdorff_moments(a, order));
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot write output file '" + o.output + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tournament limits: score sequences, kernels, densities, sampling."};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--input", o.input, "input JSON file (stdin when absent)");
  app.add_option("--output", o.output, "write the primary output here instead of stdout");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--tolerance", o.tolerance, "tolerance for real-valued checks");
  app.add_option("--blocks", o.blocks, "number of grid cells or vertices");
  app.add_option("--order", o.order, "moment order, or largest fingerprint size");
  app.add_flag("--strict", o.strict, "randomized commands must be given --seed");

  struct Entry {
    CLI::App* sub;
    std::function<Outcome()> action;
  };
  std::vector<Entry> commands;
  const auto add = [&](const char* name, const char* help, std::function<Outcome()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back({sub, std::move(fn)});
    return sub;
  };

  add("check-score-seq", "Landau or Eplett check of a score sequence",
      [&] { return check_score_seq(o); })
      ->add_option("--condition", o.condition, "landau (default) or eplett");
  add("check-score-fn", "condition I or II for a score function",
      [&] { return check_score_fn(o); })
      ->add_option("--condition", o.condition, "I (default) or II");
  add("realize", "tournament with a given score sequence", [&] { return realize(o); });
  add("realize-selfconverse", "self-converse realisation of an Eplett sequence",
      [&] { return realize_selfconverse(o); });
  add("discretize", "integer-grid score sequence of a score function",
      [&] { return discretize(o); });
  add("kernel-from-fn", "step kernel with a given score function",
      [&] { return kernel_from_fn(o); });
  CLI::App* dens = add("density", "homomorphism density of a pattern", [&] { return density(o); });
  dens->add_option("--pattern", o.pattern, "C<k>, T<k>, S<out>_<in>, E or b:<word>");
  dens->add_option("--mode", o.mode, "kernel (default), hom, inj or ind");
  add("degree-dist", "degree distribution of a kernel or tournament",
      [&] { return degree_dist(o); });
  CLI::App* samp = add("sample", "W-random tournament", [&] { return sample(o, app); });
  samp->add_option("--n", o.n, "number of vertices")->required();
  samp->add_option("--reps", o.reps, "number of samples");
  CLI::App* scs = add("sample-selfconverse", "self-converse W-random tournament on 2n vertices",
                      [&] { return sample_selfconverse(o, app); });
  scs->add_option("--n", o.n, "half the number of vertices")->required();
  scs->add_option("--reps", o.reps, "number of samples");
  scs->add_option("--sigma", o.sigma, "block involution (default i -> n-1-i)")->delimiter(',');
  CLI::App* conv = add("converge", "sampled densities against the kernel values",
                       [&] { return converge(o, app); });
  conv->add_option("--patterns", o.patterns, "patterns, comma separated")->delimiter(',');
  conv->add_option("--sizes", o.sizes, "tournament sizes, comma separated")->delimiter(',');
  conv->add_option("--reps", o.reps, "samples per size");
  add("perturb", "score-preserving perturbation that changes t(C4)",
      [&] { return perturb(o); })
      ->add_option("--refine", o.refine, "grid halvings to try (0-2)");
  add("fingerprint", "densities of all tournaments up to --order vertices",
      [&] { return fingerprint_cmd(o); });
  add("moments", "Hausdorff check of {\"a\": ...}, or moments of {\"cells\": ...}",
      [&] { return moments(o); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const Entry& c : commands) {
      if (!c.sub->parsed()) continue;
      const Outcome result = c.action();
      write_output(o, result.text, out);
      return result.code;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const CostGuardError& e) {
    err << "too expensive: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace tourlim::cli
