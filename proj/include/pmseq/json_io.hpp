#pragma once

#include <json.hpp>

#include <memory>
#include <string>

#include "pmseq/analysis.hpp"
#include "pmseq/pmspace.hpp"
#include "pmseq/sequence.hpp"
#include "pmseq/triangle.hpp"

namespace pmseq {

/// Insertion-ordered JSON keeps serialized reports byte-stable.
using Json = nlohmann::ordered_json;

// Values. Rationals are encoded as binary64 (exact for dyadic rationals,
// which is what generated instances use); extended reals additionally admit
// the strings "inf" and "-inf".
Json ext_real_to_json(const ExtReal& x);
ExtReal ext_real_from_json(const Json& j);

Json to_json(const StepDistFn& f);
StepDistFn step_dist_fn_from_json(const Json& j);

Json to_json(const PMSpace& space);
std::shared_ptr<const PMSpace> pmspace_from_json(const Json& j);

Json to_json(const SetDescription& s);
SetDescription set_description_from_json(const Json& j);

Json to_json(const LambdaSeq& lambda);
LambdaSeq lambda_from_json(const Json& j);

Json to_json(const Pattern& p);
Pattern pattern_from_json(const Json& j);

Json to_json(const SymbolicSequence& seq);
SymbolicSequence sequence_from_json(const Json& j);

// Reports.
Json to_json(const DensityCheckpoint& cp);
Json to_json(const DensityVerdict& v);
Json to_json(const AxiomReport& r);
Json to_json(const LawReport& r);
Json to_json(const ConvergenceReport& r);
Json to_json(const CauchyReport& r);
Json to_json(const PairOffReport& r);
Json to_json(const ExtractionReport& r);
Json to_json(const PointSets& r);
Json to_json(const TriEquivalenceReport& r);

/// Evidence table in CSV form: header n,count,lambda_n,ratio.
std::string checkpoints_to_csv(const std::vector<DensityCheckpoint>& cps);

Json load_json_file(const std::string& path);       // throws std::runtime_error
void write_file(const std::string& path, const std::string& content);

}  // namespace pmseq
