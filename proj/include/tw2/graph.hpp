#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tw2/errors.hpp"

namespace tw2 {

/// Distance value for vertices not reachable from the source.
inline constexpr int kUnreachable = -1;

/// Immutable simple undirected graph on vertex ids 0..n-1.
///
/// Edges are stored in canonical form (u < v, lexicographically sorted) and
/// adjacency lists are sorted, so every iteration order downstream is
/// deterministic. Construction rejects self-loops and parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(int u, int v) const;

  /// Canonical edge list: pairs with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_;      // concatenated sorted neighbor lists
  std::vector<int> offsets_;  // size n_+1
};

/// BFS distances from a single source; kUnreachable marks other components.
struct DistanceVector {
  int source = 0;
  std::vector<int> dist;

  int operator[](int v) const { return dist[v]; }
};

/// Parses the edge-list text format: first non-comment line is the vertex
/// count, each following line one edge "u v". '#' starts a comment line.
/// Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);

/// Canonical text form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

DistanceVector bfs_distances(const Graph& g, int source);

/// n x n matrix of pairwise distances via one BFS per source.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Components of the whole graph, ordered by smallest contained vertex id;
/// members ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Components of the subgraph induced by `restrict_to`.
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   std::span<const int> restrict_to);

struct SubgraphMap {
  std::vector<int> to_original;  // new id -> original id
  std::vector<int> to_sub;       // original id -> new id, -1 if dropped
};

/// Subgraph induced by `vertices`, relabeled 0..|s|-1 preserving id order.
std::pair<Graph, SubgraphMap> induced_subgraph(const Graph& g,
                                               std::span<const int> vertices);

bool is_connected(const Graph& g);

}  // namespace tw2
