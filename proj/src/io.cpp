#include "tourlim/io.hpp"

#include <charconv>
#include <sstream>

#include "tourlim/error.hpp"

namespace tourlim::io {

namespace {

std::string number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

double real_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError("field '" + where + "' must be a number");
  return j.get<double>();
}

std::vector<double> reals(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError("field '" + where + "' must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(real_at(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

SquareMatrix matrix(const Json& j, const char* name) {
  const Json& n_field = field(j, "n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw FormatError("field 'n' must be a positive integer");
  }
  const auto n = n_field.get<std::size_t>();
  const Json& rows = field(j, name);
  if (!rows.is_array() || rows.size() != n) {
    throw FormatError(std::string("field '") + name + "' must be an array of n rows");
  }
  std::vector<std::vector<double>> data;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
    data.push_back(reals(rows[i], where));
    if (data.back().size() != n) throw FormatError("field '" + where + "' must have n entries");
  }
  return SquareMatrix::from_rows(data);
}

template <typename Fn>
auto wrap(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Json matrix_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) rows.push_back(r);
  return rows;
}

}  // namespace

Json to_json(const ScoreSequence& s) {
  Json values = Json::array();
  for (double v : s.values()) {
    if (s.is_integer()) {
      values.push_back(static_cast<long long>(v));
    } else {
      values.push_back(v);
    }
  }
  return {{"values", values}, {"kind", s.is_integer() ? "integer" : "real"}};
}

Json to_json(const ScoreFunction& f) {
  return {{"cells", std::vector<double>(f.cells().begin(), f.cells().end())}};
}

Json to_json(const GeneralizedTournament& g) {
  return {{"n", g.size()}, {"alpha", matrix_json(g.matrix())}};
}

Json to_json(const StepKernel& w) { return {{"n", w.size()}, {"blocks", matrix_json(w.matrix())}}; }

Json to_json(const MomentSequence& a) { return {{"a", a.a}}; }

Json to_json(const ValidityReport& r) {
  Json out = {{"valid", r.valid}, {"witness", nullptr}};
  if (r.witness) {
    const Witness& w = *r.witness;
    out["witness"] = {{"condition", w.condition},
                      {"at", w.at},
                      {"lhs", w.lhs},
                      {"rhs", w.rhs},
                      {"relation", w.relation == Relation::equal ? "equal" : "at_least"}};
  }
  return out;
}

Json to_json(const DensityFingerprint& fp) {
  Json entries = Json::array();
  for (const auto& [word, density] : fp.entries) {
    entries.push_back({{"pattern", word}, {"density", density}});
  }
  return {{"K", fp.max_size}, {"entries", entries}};
}

Json to_json(const NonUniquenessCertificate& c) {
  return {{"s0", c.s0},
          {"c4_base", c.c4_base},
          {"c4_perturbed", c.c4_perturbed},
          {"c4_difference", c.c4_perturbed - c.c4_base},
          {"score_max_diff", c.score_max_diff},
          {"box", {{"blocks", c.box.blocks}, {"delta", c.box.delta}}},
          {"refinements", c.refinements},
          {"kernel", to_json(c.kernel_s0)}};
}

Json to_json(const DegreeDistribution& d) {
  Json atoms = Json::array();
  for (const Atom& a : d.atoms()) atoms.push_back({{"position", a.position}, {"weight", a.weight}});
  return {{"atoms", atoms}};
}

ScoreSequence score_sequence_from_json(const Json& j) {
  const std::vector<double> values = reals(field(j, "values"), "values");
  ScoreKind kind = ScoreKind::real;
  if (j.contains("kind")) {
    const Json& k = j["kind"];
    if (k == "integer") {
      kind = ScoreKind::integer;
    } else if (k != "real") {
      throw FormatError("field 'kind' must be \"integer\" or \"real\"");
    }
  }
  return wrap("field 'values'", [&] { return ScoreSequence(values, kind); });
}

ScoreFunction score_function_from_json(const Json& j) {
  const std::vector<double> cells = reals(field(j, "cells"), "cells");
  return wrap("field 'cells'", [&] { return ScoreFunction(cells); });
}

GeneralizedTournament tournament_from_json(const Json& j) {
  SquareMatrix m = matrix(j, "alpha");
  return wrap("field 'alpha'", [&] { return GeneralizedTournament(std::move(m)); });
}

StepKernel kernel_from_json(const Json& j) {
  SquareMatrix m = matrix(j, "blocks");
  return wrap("field 'blocks'", [&] { return StepKernel(std::move(m)); });
}

MomentSequence moments_from_json(const Json& j) { return {reals(field(j, "a"), "a")}; }

ValidityReport report_from_json(const Json& j) {
  const Json& valid = field(j, "valid");
  if (!valid.is_boolean()) throw FormatError("field 'valid' must be a boolean");
  ValidityReport r{valid.get<bool>(), std::nullopt};
  const Json& w = field(j, "witness");
  if (!w.is_null()) {
    Witness out;
    const Json& cond = field(w, "condition");
    if (!cond.is_string()) throw FormatError("field 'witness.condition' must be a string");
    out.condition = cond.get<std::string>();
    const Json& at = field(w, "at");
    if (!at.is_array()) throw FormatError("field 'witness.at' must be an array");
    for (const Json& x : at) {
      if (!x.is_number_integer()) throw FormatError("field 'witness.at' must hold integers");
      out.at.push_back(x.get<long long>());
    }
    out.lhs = real_at(field(w, "lhs"), "witness.lhs");
    out.rhs = real_at(field(w, "rhs"), "witness.rhs");
    const Json& rel = field(w, "relation");
    if (rel == "equal") {
      out.relation = Relation::equal;
    } else if (rel == "at_least") {
      out.relation = Relation::at_least;
    } else {
      throw FormatError("field 'witness.relation' must be \"equal\" or \"at_least\"");
    }
    r.witness = std::move(out);
  }
  return r;
}

DensityFingerprint fingerprint_from_json(const Json& j) {
  const Json& k = field(j, "K");
  if (!k.is_number_integer()) throw FormatError("field 'K' must be an integer");
  DensityFingerprint fp{k.get<int>(), {}};
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw FormatError("field 'entries' must be an array");
  for (const Json& e : entries) {
    const Json& p = field(e, "pattern");
    if (!p.is_string()) throw FormatError("field 'entries.pattern' must be a string");
    fp.entries.emplace_back(p.get<std::string>(), real_at(field(e, "density"), "entries.density"));
  }
  return fp;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string degree_distribution_csv(const DegreeDistribution& d) {
  std::string out = "position,weight\n";
  for (const Atom& a : d.atoms()) out += number(a.position) + "," + number(a.weight) + "\n";
  return out;
}

DegreeDistribution degree_distribution_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "position,weight") {
    throw FormatError("degree distribution CSV must start with 'position,weight'");
  }
  std::vector<Atom> atoms;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw FormatError("row " + std::to_string(row) + ": expected 'position,weight'");
    }
    Atom a{};
    const char* begin = line.data();
    const char* mid = begin + comma;
    const char* end = begin + line.size();
    if (std::from_chars(begin, mid, a.position).ptr != mid ||
        std::from_chars(mid + 1, end, a.weight).ptr != end) {
      throw FormatError("row " + std::to_string(row) + ": unreadable number");
    }
    atoms.push_back(a);
  }
  return wrap("degree distribution", [&] { return DegreeDistribution::from_atoms(atoms); });
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "pattern,n,mean,stderr,exact\n";
  for (const ConvergenceRow& r : rows) {
    out += r.pattern + "," + std::to_string(r.n) + "," + number(r.mean) + "," +
           number(r.std_error) + "," + number(r.exact) + "\n";
  }
  return out;
}

}  // namespace tourlim::io
