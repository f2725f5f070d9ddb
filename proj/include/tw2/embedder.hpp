#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tw2/graph.hpp"
#include "tw2/layering.hpp"

namespace tw2 {

/// General mode analyses each parent set's components; the fast mode replaces
/// the connectivity test by a constant-time size/edge probe, which is only
/// sound on universally signable inputs (where it provably agrees with the
/// general test).
enum class EmbedMode { kGeneral, kUniversallySignableFast };

enum class BranchKind { kRoot, kConnectedParent, kDisjointD, kOverlappingD };

/// Which branch fired for one cluster, and the anchor choices taken. All
/// "choose arbitrarily" points resolve to the smallest vertex id, so a trace
/// fully determines the output and can be replayed.
struct ClusterBranch {
  int cluster_id = -1;
  BranchKind kind = BranchKind::kRoot;
  int w = -1;           // connected branch: chosen parent-set vertex
  int w1 = -1;          // split branch: anchor in the component holding the smallest parent-set vertex
  int w2 = -1;          // split branch: anchor in the other component
  int u_overlap = -1;   // overlapping branch: the one vertex wired to both anchors
  std::optional<std::pair<int, int>> cross_edge;  // disjoint branch: kept D1-D2 edge, if any

  bool operator==(const ClusterBranch&) const = default;
};

struct EmbedStats {
  int cluster_count = 0;
  std::uint64_t work_units = 0;  // vertices + adjacency entries scanned
};

struct EmbeddingResult {
  Graph h;
  int root = 0;
  std::vector<ClusterBranch> branch_trace;  // indexed by cluster id
  EmbedStats stats;
};

/// Builds H on the same vertex set: per cluster, every vertex is wired to one
/// of at most two anchor vertices of its parent set, plus at most one intra-
/// cluster edge. Root distances are preserved exactly and H has tree-width at
/// most two whenever the input is K_{2,3}-induced-minor-free.
///
/// Throws PreconditionError when the input is disconnected or when a parent
/// set splits into three or more components (proof that the input is not
/// K_{2,3}-induced-minor-free).
EmbeddingResult embed(const Graph& g, int root,
                      EmbedMode mode = EmbedMode::kGeneral);

/// Constant-time stand-in for the parent-set connectivity test: treat as
/// connected when |P| >= 3, |P| == 1, or |P| == 2 with the two vertices
/// adjacent. Sound on universally signable graphs only.
bool fast_parent_connectivity(const Graph& g, std::span<const int> parent_set);

/// Rebuilds H from a recorded branch trace, validating every recorded choice
/// against the graph. Throws TraceError on any inconsistency.
Graph replay_branch_trace(std::span<const ClusterBranch> trace, const Graph& g,
                          int root);

}  // namespace tw2
