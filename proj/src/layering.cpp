#include "tw2/layering.hpp"

#include <algorithm>
#include <cassert>

#include "tw2/union_find.hpp"

namespace tw2 {

FlatLayering build_flat_layering(const Graph& g, int root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw Error("root vertex out of range");

  FlatLayering fl;
  fl.root = root;
  fl.levels = bfs_distances(g, root).dist;
  int max_level = 0;
  for (int v = 0; v < n; ++v) {
    if (fl.levels[v] == kUnreachable)
      throw PreconditionError("graph must be connected");
    max_level = std::max(max_level, fl.levels[v]);
  }

  // level buckets, flat; vertices ascending within each level
  std::vector<int> level_offset(max_level + 2, 0);
  for (int v = 0; v < n; ++v) level_offset[fl.levels[v] + 1]++;
  for (int k = 0; k <= max_level; ++k) level_offset[k + 1] += level_offset[k];
  std::vector<int> level_vertices(n);
  {
    std::vector<int> cursor(level_offset.begin(), level_offset.end() - 1);
    for (int v = 0; v < n; ++v) level_vertices[cursor[fl.levels[v]]++] = v;
  }

  // Deepest level first: after the unions of step k, the union-find classes
  // restricted to level-k vertices are exactly the components of the subgraph
  // on vertices at distance >= k. Discovery within a level runs ascending by
  // vertex id, so canonical (level, smallest member) order only needs the
  // level blocks reversed afterwards.
  UnionFind uf(n);
  std::vector<int> raw_of(n, -1);
  std::vector<int> rep_cluster(n, -1);
  std::vector<int> rep_stamp(n, -1);
  std::vector<int> raw_begin(max_level + 1, 0);
  int raw_count = 0;
  for (int k = max_level; k >= 0; --k) {
    for (int i = level_offset[k]; i < level_offset[k + 1]; ++i) {
      int v = level_vertices[i];
      for (int u : g.neighbors(v))
        if (fl.levels[u] >= k) uf.unite(v, u);
    }
    raw_begin[k] = raw_count;
    for (int i = level_offset[k]; i < level_offset[k + 1]; ++i) {
      int v = level_vertices[i];
      int key = uf.find(v);
      if (rep_stamp[key] != k) {
        rep_stamp[key] = k;
        rep_cluster[key] = raw_count++;
      }
      raw_of[v] = rep_cluster[key];
    }
  }

  std::vector<int> canon(raw_count);
  fl.cluster_level.resize(raw_count);
  {
    int next = 0;
    for (int k = 0; k <= max_level; ++k) {
      int end = k == 0 ? raw_count : raw_begin[k - 1];
      for (int raw = raw_begin[k]; raw < end; ++raw) {
        canon[raw] = next;
        fl.cluster_level[next] = k;
        ++next;
      }
    }
  }

  fl.cluster_of.resize(n);
  for (int v = 0; v < n; ++v) fl.cluster_of[v] = canon[raw_of[v]];

  // members via counting sort; ascending inside each cluster
  fl.member_begin.assign(raw_count + 1, 0);
  for (int v = 0; v < n; ++v) fl.member_begin[fl.cluster_of[v] + 1]++;
  for (int c = 0; c < raw_count; ++c) fl.member_begin[c + 1] += fl.member_begin[c];
  fl.members.resize(n);
  {
    std::vector<int> cursor(fl.member_begin.begin(), fl.member_begin.end() - 1);
    for (int v = 0; v < n; ++v) fl.members[cursor[fl.cluster_of[v]]++] = v;
  }

  fl.parent_begin.assign(raw_count + 1, 0);
  fl.parent_cluster.assign(raw_count, -1);
  std::vector<int> mark_stamp(n, -1);
  for (int c = 0; c < raw_count; ++c) {
    fl.parent_begin[c] = static_cast<int>(fl.parents.size());
    int k = fl.cluster_level[c];
    if (k == 0) continue;
    for (int v : fl.cluster_members(c))
      for (int u : g.neighbors(v))
        if (fl.levels[u] == k - 1 && mark_stamp[u] != c) {
          mark_stamp[u] = c;
          fl.parents.push_back(u);
        }
    std::sort(fl.parents.begin() + fl.parent_begin[c], fl.parents.end());
    fl.parent_cluster[c] = fl.cluster_of[fl.parents[fl.parent_begin[c]]];
#ifndef NDEBUG
    // The parent set always sits inside a single cluster.
    for (size_t i = fl.parent_begin[c]; i < fl.parents.size(); ++i)
      assert(fl.cluster_of[fl.parents[i]] == fl.parent_cluster[c]);
#endif
  }
  fl.parent_begin[raw_count] = static_cast<int>(fl.parents.size());
  return fl;
}

LayeringPartition build_layering(const Graph& g, int root) {
  FlatLayering fl = build_flat_layering(g, root);
  LayeringPartition lp;
  lp.root = root;
  lp.levels.source = root;
  const int c_count = fl.cluster_count();
  lp.clusters.resize(c_count);
  for (int c = 0; c < c_count; ++c) {
    Cluster& cl = lp.clusters[c];
    cl.id = c;
    cl.level = fl.cluster_level[c];
    auto mem = fl.cluster_members(c);
    cl.members.assign(mem.begin(), mem.end());
    auto par = fl.parent_set(c);
    cl.parent_set.assign(par.begin(), par.end());
    cl.parent_cluster = fl.parent_cluster[c];
    if (cl.parent_cluster >= 0) lp.tree_edges.emplace_back(cl.parent_cluster, c);
  }
  lp.levels.dist = std::move(fl.levels);
  lp.cluster_of = std::move(fl.cluster_of);
  return lp;
}

namespace {

// Diameter of the subgraph induced on `verts`, assuming it is connected.
int induced_diameter(const Graph& g, const std::vector<int>& verts) {
  const int n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (int v : verts) in[v] = 1;
  std::vector<int> dist(n, -1), queue;
  int best = 0;
  for (int s : verts) {
    for (int v : verts) dist[v] = -1;
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      best = std::max(best, dist[v]);
      for (int u : g.neighbors(v))
        if (in[u] && dist[u] == -1) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
  }
  return best;
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

}  // namespace

ParentStructureReport verify_parent_set_structure(const Graph& g,
                                                  const LayeringPartition& lp) {
  ParentStructureReport report;
  for (const auto& c : lp.clusters) {
    if (c.level == 0) continue;
    ParentSetStructure e;
    e.cluster_id = c.id;
    auto comps = connected_components(g, c.parent_set);
    e.component_count = static_cast<int>(comps.size());
    if (e.component_count == 1) {
      e.diameter = induced_diameter(g, comps[0]);
      e.violation_diameter = e.diameter > 3;
    } else if (e.component_count == 2) {
      e.components_are_cliques = is_clique(g, comps[0]) && is_clique(g, comps[1]);
      e.violation_clique = !e.components_are_cliques;
    } else {
      e.violation_component_count = true;
    }
    report.any_violation = report.any_violation || e.any_violation();
    report.entries.push_back(std::move(e));
  }
  return report;
}

namespace {

bool reaches(const Graph& g, int from, int to, const std::vector<char>& removed) {
  if (removed[from] || removed[to]) return false;
  if (from == to) return true;
  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<int> queue{from};
  visited[from] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : g.neighbors(v)) {
      if (removed[u] || visited[u]) continue;
      if (u == to) return true;
      visited[u] = 1;
      queue.push_back(u);
    }
  }
  return false;
}

}  // namespace

bool verify_minimal_cutset(const Graph& g, const LayeringPartition& lp,
                           int cluster_id) {
  if (cluster_id < 0 || cluster_id >= static_cast<int>(lp.clusters.size()))
    throw PreconditionError("cluster id out of range");
  const Cluster& c = lp.clusters[cluster_id];
  if (c.level == 0) throw PreconditionError("root cluster has no parent set");
  if (c.parent_set.size() == 1 && c.parent_set[0] == lp.root)
    throw PreconditionError("parent set is the root itself");

  const int u = c.members.front();
  std::vector<char> removed(g.vertex_count(), 0);
  for (int p : c.parent_set) removed[p] = 1;
  if (reaches(g, lp.root, u, removed)) return false;
  // Dropping any single vertex must reconnect root and u; cutset monotonicity
  // makes these |P| checks sufficient for minimality.
  for (int p : c.parent_set) {
    removed[p] = 0;
    if (!reaches(g, lp.root, u, removed)) return false;
    removed[p] = 1;
  }
  return true;
}

bool verify_cross_children(const Graph& g, const LayeringPartition& lp, int s1,
                           int s2) {
  if (s1 == s2) throw PreconditionError("clusters must be distinct");
  for (int s : {s1, s2})
    if (s < 0 || s >= static_cast<int>(lp.clusters.size()))
      throw PreconditionError("cluster id out of range");
  const Cluster& a = lp.clusters[s1];
  const Cluster& b = lp.clusters[s2];
  if (a.level == 0 || b.level == 0 || a.parent_cluster != b.parent_cluster)
    throw PreconditionError("clusters must be children of the same cluster");
  auto comps_a = connected_components(g, a.parent_set);
  auto comps_b = connected_components(g, b.parent_set);
  if (comps_a.size() != 2 || comps_b.size() != 2)
    throw PreconditionError("both parent sets must have two components");

  int sharing_pairs = 0;
  for (const auto& ca : comps_a)
    for (const auto& cb : comps_b) {
      bool share = false;
      for (size_t i = 0, j = 0; i < ca.size() && j < cb.size();) {
        if (ca[i] == cb[j]) {
          share = true;
          break;
        }
        if (ca[i] < cb[j])
          ++i;
        else
          ++j;
      }
      if (share) ++sharing_pairs;
    }
  return sharing_pairs <= 1;
}

}  // namespace tw2
