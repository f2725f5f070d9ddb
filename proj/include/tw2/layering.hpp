#pragma once

#include <vector>

#include "tw2/graph.hpp"

namespace tw2 {

/// One part of the layering partition: a maximal set of vertices at a common
/// BFS level from the root that stay connected once the smaller-radius ball
/// around the root is removed.
struct Cluster {
  int id = -1;
  int level = 0;
  std::vector<int> members;     // ascending
  int parent_cluster = -1;      // -1 only for the root cluster
  std::vector<int> parent_set;  // vertices of the parent cluster adjacent to members
};

/// Layering partition of a connected graph with respect to a root, plus the
/// tree on clusters induced by adjacency. Cluster ids are assigned by
/// (level, smallest member), so every downstream choice is reproducible.
struct LayeringPartition {
  int root = 0;
  DistanceVector levels;
  std::vector<Cluster> clusters;  // index == cluster id
  std::vector<int> cluster_of;    // vertex -> cluster id
  std::vector<std::pair<int, int>> tree_edges;  // (parent id, child id)
};

/// Flat-storage form of the layering used on the hot paths: cluster members
/// and parent sets live in two shared arrays indexed by offset, so building
/// it costs a handful of allocations regardless of cluster count. Cluster ids
/// and all orderings match LayeringPartition exactly.
struct FlatLayering {
  int root = 0;
  std::vector<int> levels;          // per vertex
  std::vector<int> cluster_of;      // per vertex
  std::vector<int> cluster_level;   // per cluster
  std::vector<int> parent_cluster;  // per cluster, -1 for the root cluster
  std::vector<int> member_begin;    // cluster_count()+1 offsets into members
  std::vector<int> members;         // grouped by cluster id, ascending inside
  std::vector<int> parent_begin;    // cluster_count()+1 offsets into parents
  std::vector<int> parents;         // parent sets, ascending inside

  int cluster_count() const { return static_cast<int>(cluster_level.size()); }
  std::span<const int> cluster_members(int c) const {
    return {members.data() + member_begin[c], members.data() + member_begin[c + 1]};
  }
  std::span<const int> parent_set(int c) const {
    return {parents.data() + parent_begin[c], parents.data() + parent_begin[c + 1]};
  }
};

/// Builds the layering partition. Processes levels deepest-first with a
/// union-find over the active subgraph, so the whole construction is
/// near-linear. Throws on disconnected input.
FlatLayering build_flat_layering(const Graph& g, int root);

/// Per-cluster materialization of build_flat_layering, convenient for the
/// verification paths.
LayeringPartition build_layering(const Graph& g, int root);

/// Shape of a single cluster's parent set inside G.
struct ParentSetStructure {
  int cluster_id = -1;
  int component_count = 0;
  int diameter = -1;  // diameter of G[parent set] when connected, else -1
  bool components_are_cliques = false;  // meaningful when component_count == 2
  bool violation_component_count = false;  // more than two components
  bool violation_diameter = false;         // connected but diameter > 3
  bool violation_clique = false;           // two components, one not a clique

  bool any_violation() const {
    return violation_component_count || violation_diameter || violation_clique;
  }
};

struct ParentStructureReport {
  std::vector<ParentSetStructure> entries;  // one per non-root cluster
  bool any_violation = false;
};

/// Reports, per non-root cluster, the component count of G[parent set], its
/// diameter when connected, and clique status per component when split in
/// two. Any flagged violation certifies the input is not
/// K_{2,3}-induced-minor-free. Violations are report entries, not errors.
ParentStructureReport verify_parent_set_structure(const Graph& g,
                                                  const LayeringPartition& lp);

/// True iff the cluster's parent set is a minimal cutset between the root and
/// the cluster's smallest member: removing it disconnects the two, and
/// dropping any single vertex from it reconnects them.
/// Precondition: the parent set is not {root}.
bool verify_minimal_cutset(const Graph& g, const LayeringPartition& lp,
                           int cluster_id);

/// For two sibling clusters whose parent sets both split into two components:
/// true iff at most one pair of components (one from each side) shares a
/// vertex.
bool verify_cross_children(const Graph& g, const LayeringPartition& lp, int s1,
                           int s2);

}  // namespace tw2
