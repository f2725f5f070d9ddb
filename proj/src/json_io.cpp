#include "tw2/json_io.hpp"

#include <fstream>

namespace tw2 {

namespace {

std::string branch_name(BranchKind k) {
  switch (k) {
    case BranchKind::kRoot: return "root";
    case BranchKind::kConnectedParent: return "connected-parent";
    case BranchKind::kDisjointD: return "disjoint-D";
    case BranchKind::kOverlappingD: return "overlapping-D";
  }
  throw Error("unknown branch kind");
}

BranchKind branch_from_name(const std::string& name) {
  for (BranchKind k : {BranchKind::kRoot, BranchKind::kConnectedParent,
                       BranchKind::kDisjointD, BranchKind::kOverlappingD})
    if (branch_name(k) == name) return k;
  throw Error("unknown branch kind: " + name);
}

}  // namespace

std::string outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kAbsent: return "absent";
    case SearchOutcome::kFound: return "found";
    case SearchOutcome::kInconclusive: return "inconclusive";
  }
  throw Error("unknown outcome");
}

json layering_to_json(const LayeringPartition& lp) {
  json clusters = json::array();
  for (const auto& c : lp.clusters) {
    json jc{{"id", c.id},
            {"level", c.level},
            {"members", c.members},
            {"parent_set", c.parent_set}};
    if (c.parent_cluster >= 0)
      jc["parent"] = c.parent_cluster;
    else
      jc["parent"] = nullptr;
    clusters.push_back(std::move(jc));
  }
  return json{{"root", lp.root}, {"clusters", std::move(clusters)}};
}

json branch_trace_to_json(int root, std::span<const ClusterBranch> trace) {
  json clusters = json::array();
  for (const auto& br : trace) {
    json jb{{"cluster", br.cluster_id}, {"branch", branch_name(br.kind)}};
    if (br.w >= 0) jb["w"] = br.w;
    if (br.w1 >= 0) jb["w1"] = br.w1;
    if (br.w2 >= 0) jb["w2"] = br.w2;
    if (br.u_overlap >= 0) jb["u"] = br.u_overlap;
    if (br.kind == BranchKind::kDisjointD) {
      if (br.cross_edge)
        jb["cross_edge"] = {br.cross_edge->first, br.cross_edge->second};
      else
        jb["cross_edge"] = nullptr;
    }
    clusters.push_back(std::move(jb));
  }
  return json{{"root", root}, {"clusters", std::move(clusters)}};
}

std::vector<ClusterBranch> branch_trace_from_json(const json& j) {
  std::vector<ClusterBranch> trace;
  for (const auto& jb : j.at("clusters")) {
    ClusterBranch br;
    br.cluster_id = jb.at("cluster").get<int>();
    br.kind = branch_from_name(jb.at("branch").get<std::string>());
    if (jb.contains("w")) br.w = jb["w"].get<int>();
    if (jb.contains("w1")) br.w1 = jb["w1"].get<int>();
    if (jb.contains("w2")) br.w2 = jb["w2"].get<int>();
    if (jb.contains("u")) br.u_overlap = jb["u"].get<int>();
    if (jb.contains("cross_edge") && !jb["cross_edge"].is_null())
      br.cross_edge = {jb["cross_edge"][0].get<int>(),
                       jb["cross_edge"][1].get<int>()};
    trace.push_back(std::move(br));
  }
  return trace;
}

json witness_to_json(const StructureWitness& w) {
  switch (w.kind) {
    case WitnessKind::kTriangle:
      return json{{"kind", "triangle"}, {"vertices", w.paths.at(0)}};
    case WitnessKind::kTheta:
      return json{{"kind", "theta"}, {"paths", w.paths}};
    case WitnessKind::kPyramid:
      return json{{"kind", "pyramid"}, {"paths", w.paths}};
    case WitnessKind::kPrism:
      return json{{"kind", "prism"},
                  {"paths", w.paths},
                  {"long", w.is_long_prism}};
    case WitnessKind::kWheel:
      return json{{"kind", "wheel"},
                  {"rim", w.rim},
                  {"center", w.center},
                  {"broken", w.is_broken_wheel}};
  }
  throw Error("unknown witness kind");
}

json recognition_to_json(const RecognitionReport& r) {
  json j{{"method", r.method}, {"budget_spent", r.budget_spent}};
  switch (r.verdict) {
    case Verdict::kFree: j["verdict"] = "free"; break;
    case Verdict::kNotFree: j["verdict"] = "not-free"; break;
    case Verdict::kInconclusive: j["verdict"] = "inconclusive"; break;
  }
  j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  return j;
}

json distortion_to_json(const DistortionReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{{"edge", {v.edge.first, v.edge.second}},
                              {"bound", v.bound},
                              {"observed", v.observed}});
  return json{{"max_abs_gap", r.max_abs_gap},
              {"argmax_pair", {r.argmax_pair.first, r.argmax_pair.second}},
              {"root_equality", r.root_equality},
              {"violations", std::move(violations)},
              {"pair_count", r.pair_count}};
}

json check_report_to_json(const DistortionReport& distortion, bool treewidth2,
                          bool triangle_free, const SearchResult& theta,
                          const SearchResult& wheel) {
  json j = distortion_to_json(distortion);
  j["treewidth2"] = treewidth2;
  j["triangle_free"] = triangle_free;
  j["theta"] = outcome_name(theta.outcome);
  j["wheel"] = outcome_name(wheel.outcome);
  return j;
}

json diameter_to_json(const DiameterResult& r, bool with_timings) {
  json j{{"approx", r.approx}};
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["gap"] = r.gap ? json(*r.gap) : json(nullptr);
  if (with_timings)
    j["phase_timings"] = {{"embed_ms", r.timings.embed_ms},
                          {"approx_ms", r.timings.approx_ms},
                          {"exact_ms", r.timings.exact_ms}};
  return j;
}

json gen_spec_to_json(const GenSpec& spec) {
  return json{{"family", family_name(spec.family)},
              {"n", spec.n},
              {"clique_size", spec.clique_size},
              {"independent_size", spec.independent_size},
              {"edge_probability", spec.edge_probability},
              {"extra_edge_density", spec.extra_edge_density},
              {"seed", spec.seed}};
}

GenSpec gen_spec_from_json(const json& j) {
  GenSpec spec;
  spec.family = family_from_name(j.at("family").get<std::string>());
  spec.n = j.value("n", 1);
  spec.clique_size = j.value("clique_size", 0);
  spec.independent_size = j.value("independent_size", 0);
  spec.edge_probability = j.value("edge_probability", 0.25);
  spec.extra_edge_density = j.value("extra_edge_density", 0.3);
  spec.seed = j.value("seed", std::uint64_t{0});
  return spec;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace tw2
