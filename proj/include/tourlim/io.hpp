#pragma once

// JSON and CSV encodings of the domain types. Readers throw FormatError
// with the offending field in the message.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "tourlim/conditions.hpp"
#include "tourlim/density.hpp"
#include "tourlim/perturb.hpp"
#include "tourlim/sample.hpp"
#include "tourlim/types.hpp"

namespace tourlim::io {

using Json = nlohmann::ordered_json;

Json to_json(const ScoreSequence& s);
Json to_json(const ScoreFunction& f);
Json to_json(const GeneralizedTournament& g);
Json to_json(const StepKernel& w);
Json to_json(const MomentSequence& a);
Json to_json(const ValidityReport& r);
Json to_json(const DensityFingerprint& fp);
Json to_json(const NonUniquenessCertificate& c);
Json to_json(const DegreeDistribution& d);

ScoreSequence score_sequence_from_json(const Json& j);
ScoreFunction score_function_from_json(const Json& j);
GeneralizedTournament tournament_from_json(const Json& j);
StepKernel kernel_from_json(const Json& j);
MomentSequence moments_from_json(const Json& j);
ValidityReport report_from_json(const Json& j);
DensityFingerprint fingerprint_from_json(const Json& j);

/// Parses text; syntax errors become FormatError.
Json parse(const std::string& text);

/// "position,weight" with one atom per line.
std::string degree_distribution_csv(const DegreeDistribution& d);
DegreeDistribution degree_distribution_from_csv(const std::string& text);

/// "pattern,n,mean,stderr,exact".
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace tourlim::io
