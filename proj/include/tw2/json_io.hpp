#pragma once

#include "json.hpp"
#include "tw2/diameter.hpp"
#include "tw2/embedder.hpp"
#include "tw2/generators.hpp"
#include "tw2/layering.hpp"
#include "tw2/oracles.hpp"
#include "tw2/structure.hpp"

namespace tw2 {

using nlohmann::json;

json layering_to_json(const LayeringPartition& lp);

json branch_trace_to_json(int root, std::span<const ClusterBranch> trace);
std::vector<ClusterBranch> branch_trace_from_json(const json& j);

json witness_to_json(const StructureWitness& w);

json recognition_to_json(const RecognitionReport& r);

json distortion_to_json(const DistortionReport& r);

/// The check-report schema: {max_abs_gap, argmax_pair, root_equality,
/// violations[], treewidth2, triangle_free, theta, wheel}.
json check_report_to_json(const DistortionReport& distortion, bool treewidth2,
                          bool triangle_free, const SearchResult& theta,
                          const SearchResult& wheel);

json diameter_to_json(const DiameterResult& r, bool with_timings);

json gen_spec_to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const json& j);

std::string outcome_name(SearchOutcome o);

void write_json_file(const json& j, const std::string& path);

}  // namespace tw2
