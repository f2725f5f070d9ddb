#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tw2/graph.hpp"
#include "tw2/layering.hpp"

namespace tw2 {

struct BoundViolation {
  std::pair<int, int> edge{-1, -1};
  std::string bound;  // "same_cluster_g_edge_le_5" | "g_edge_le_16" | "h_edge_le_4"
  int observed = 0;
};

/// Exact comparison of the metrics of G and H over all vertex pairs, plus the
/// per-edge stretch bounds the embedding promises.
struct DistortionReport {
  int max_abs_gap = 0;
  std::pair<int, int> argmax_pair{-1, -1};
  bool root_equality = false;  // d_H(root, v) == d_G(root, v) for all v
  std::vector<BoundViolation> violations;
  std::int64_t pair_count = 0;
};

/// All-source BFS on both graphs. Checks: root-distance equality, d_H <= 16
/// across every G-edge, d_G <= 4 across every H-edge, and (when a layering is
/// supplied) d_H <= 5 across same-cluster G-edges.
DistortionReport distortion_report(const Graph& g, const Graph& h, int root,
                                   const LayeringPartition* layering = nullptr);

enum class ReductionOp { kLeafPrune, kDegree2Suppress, kParallelMerge };

struct ReductionStep {
  ReductionOp op = ReductionOp::kLeafPrune;
  int vertex = -1;
  std::pair<int, int> edge{-1, -1};  // edge added (suppress) or already present (merge)
};

/// Verdict plus the reduction sequence that witnesses it. Replaying the steps
/// on the input empties every component iff the verdict is true.
struct TreewidthCertificate {
  bool verdict = false;
  std::vector<ReductionStep> steps;
};

/// Decides tree-width <= 2 (equivalently, no K4 minor) by exhaustive
/// series-parallel reduction: delete degree-<=1 vertices, suppress degree-2
/// vertices, merging the parallel edge when the suppressed vertex's neighbors
/// are already adjacent.
TreewidthCertificate treewidth_at_most_2(const Graph& g);

enum class WitnessKind { kTriangle, kTheta, kPyramid, kPrism, kWheel };

/// A concrete forbidden configuration as explicit vertex lists, checkable in
/// time linear in its size.
struct StructureWitness {
  WitnessKind kind = WitnessKind::kTriangle;
  // kTriangle: one list of three vertices.
  // kTheta: three a..b paths sharing both endpoints.
  // kPyramid: three apex..corner paths sharing the apex; corners a triangle.
  // kPrism: three paths joining two triangles, one corner pair each.
  std::vector<std::vector<int>> paths;
  std::vector<int> rim;  // kWheel: hole in cyclic order
  int center = -1;       // kWheel
  bool is_long_prism = false;
  bool is_broken_wheel = false;
};

/// Independent structural validation: path induced-ness, disjointness,
/// cross-edge absence, triangle/hole conditions, sector lengths.
bool verify_witness(const Graph& g, const StructureWitness& w);

/// First triangle in lexicographic order, or absent. Always exhaustive.
std::optional<StructureWitness> find_triangle(const Graph& g);

enum class SearchOutcome { kAbsent, kFound, kInconclusive };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::kAbsent;
  std::optional<StructureWitness> witness;
  std::uint64_t budget_spent = 0;
};

/// Node-expansion budget shared by the configuration searches: anchors tried
/// and backtracking steps both count. Exhaustion yields kInconclusive, never a
/// false "absent".
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

SearchResult find_theta(const Graph& g,
                        std::uint64_t budget = kDefaultSearchBudget);

SearchResult find_wheel(const Graph& g,
                        std::uint64_t budget = kDefaultSearchBudget,
                        bool require_broken = false);

SearchResult find_prism(const Graph& g,
                        std::uint64_t budget = kDefaultSearchBudget,
                        bool require_long = false);

SearchResult find_pyramid(const Graph& g,
                          std::uint64_t budget = kDefaultSearchBudget);

}  // namespace tw2
