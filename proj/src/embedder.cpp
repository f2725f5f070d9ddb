#include "tw2/embedder.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace tw2 {

bool fast_parent_connectivity(const Graph& g, std::span<const int> parent_set) {
  if (parent_set.empty()) throw PreconditionError("parent set must be non-empty");
  if (parent_set.size() != 2) return true;
  return g.has_edge(parent_set[0], parent_set[1]);
}

namespace {

// Scratch buffers reused across clusters; all marks are reset after each use.
struct Scratch {
  std::vector<int> comp_of;  // parent-set vertex -> 0/1 component tag, -1 otherwise
  std::vector<char> in_d2;   // membership mark for cross-edge scans
  std::vector<int> queue;
  std::vector<int> d1, d2;   // members adjacent to C1 / C2 (split branches)
  std::vector<int> overlap;
  explicit Scratch(int n) : comp_of(n, -1), in_d2(n, 0) { queue.reserve(64); }
};

// Components of the subgraph induced on the (sorted) parent set. Fills
// comp_of with 0/1 tags for the first two components found; returns the
// component count and the two smallest representatives. Membership tagging
// stops mattering past the second component, but the count itself is exact.
int split_parent_set(const Graph& g, std::span<const int> parent_set,
                     Scratch& s, int rep[2], std::uint64_t& work) {
  int count = 0;
  std::vector<int>& queue = s.queue;
  for (int seed : parent_set) {
    if (s.comp_of[seed] != -2) continue;  // already tagged by an earlier seed
    if (count < 2) rep[count] = seed;
    int tag = count < 2 ? count : 2;
    ++count;
    queue.clear();
    queue.push_back(seed);
    s.comp_of[seed] = tag;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      ++work;
      for (int u : g.neighbors(v)) {
        ++work;
        if (s.comp_of[u] == -2) {
          s.comp_of[u] = tag;
          queue.push_back(u);
        }
      }
    }
  }
  return count;
}

// D1/D2 for a split parent set: members with a neighbor in C1 / in C2.
// comp_of must hold the 0/1 tags. Members are scanned in ascending order, so
// both sets come out sorted.
void compute_d_sets(const Graph& g, std::span<const int> members, int level,
                    const std::vector<int>& levels, Scratch& s,
                    std::uint64_t& work) {
  s.d1.clear();
  s.d2.clear();
  for (int v : members) {
    bool in1 = false, in2 = false;
    ++work;
    for (int u : g.neighbors(v)) {
      ++work;
      if (levels[u] != level - 1) continue;
      if (s.comp_of[u] == 0)
        in1 = true;
      else if (s.comp_of[u] == 1)
        in2 = true;
    }
    if (in1) s.d1.push_back(v);
    if (in2) s.d2.push_back(v);
  }
}

// Lexicographically smallest G-edge with one endpoint in D1, the other in D2.
std::optional<std::pair<int, int>> smallest_cross_edge(
    const Graph& g, Scratch& s, const std::vector<int>& levels, int level,
    std::uint64_t& work) {
  for (int v : s.d2) s.in_d2[v] = 1;
  std::optional<std::pair<int, int>> best;
  for (int v : s.d1) {
    for (int u : g.neighbors(v)) {
      ++work;
      if (levels[u] != level || !s.in_d2[u]) continue;
      std::pair<int, int> cand{std::min(v, u), std::max(v, u)};
      if (!best || cand < *best) best = cand;
    }
  }
  for (int v : s.d2) s.in_d2[v] = 0;
  return best;
}

std::pair<int, int> ordered(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

EmbeddingResult embed(const Graph& g, int root, EmbedMode mode) {
  FlatLayering fl = build_flat_layering(g, root);
  const int n = g.vertex_count();
  const auto& levels = fl.levels;
  const int c_count = fl.cluster_count();

  EmbeddingResult result;
  result.root = root;
  result.stats.cluster_count = c_count;
  result.branch_trace.resize(c_count);

  std::vector<std::pair<int, int>> h_edges;
  h_edges.reserve(n + c_count);
  Scratch scratch(n);
  std::uint64_t& work = result.stats.work_units;

  for (int c = 0; c < c_count; ++c) {
    ClusterBranch& br = result.branch_trace[c];
    br.cluster_id = c;
    if (fl.cluster_level[c] == 0) {
      br.kind = BranchKind::kRoot;
      continue;
    }
    const int level = fl.cluster_level[c];
    auto members = fl.cluster_members(c);
    auto parent = fl.parent_set(c);

    bool connected;
    int rep[2] = {-1, -1};
    if (mode == EmbedMode::kUniversallySignableFast) {
      ++work;
      connected = fast_parent_connectivity(g, parent);
      if (!connected) {
        rep[0] = parent[0];
        rep[1] = parent[1];
        scratch.comp_of[parent[0]] = 0;
        scratch.comp_of[parent[1]] = 1;
      }
    } else {
      for (int u : parent) scratch.comp_of[u] = -2;  // prime membership
      int count = split_parent_set(g, parent, scratch, rep, work);
      if (count > 2) {
        for (int u : parent) scratch.comp_of[u] = -1;
        throw PreconditionError(
            "parent set of cluster " + std::to_string(c) + " has " +
                std::to_string(count) +
                " connected components; input is not "
                "K_{2,3}-induced-minor-free",
            c);
      }
      connected = count == 1;
    }

    if (connected) {
      br.kind = BranchKind::kConnectedParent;
      br.w = parent.front();
      for (int v : members) h_edges.push_back(ordered(v, br.w));
    } else {
      compute_d_sets(g, members, level, levels, scratch, work);
      assert(scratch.d1.size() + scratch.d2.size() >= members.size());
      br.w1 = rep[0];
      br.w2 = rep[1];

      scratch.overlap.clear();
      std::set_intersection(scratch.d1.begin(), scratch.d1.end(),
                            scratch.d2.begin(), scratch.d2.end(),
                            std::back_inserter(scratch.overlap));
      if (scratch.overlap.empty()) {
        br.kind = BranchKind::kDisjointD;
        for (int v : scratch.d1) h_edges.push_back(ordered(v, br.w1));
        for (int v : scratch.d2) h_edges.push_back(ordered(v, br.w2));
        br.cross_edge = smallest_cross_edge(g, scratch, levels, level, work);
        if (br.cross_edge) h_edges.push_back(*br.cross_edge);
      } else {
        br.kind = BranchKind::kOverlappingD;
        br.u_overlap = scratch.overlap.front();
        for (int v : scratch.d1) h_edges.push_back(ordered(v, br.w1));
        for (int v : scratch.d2)
          if (!std::binary_search(scratch.d1.begin(), scratch.d1.end(), v))
            h_edges.push_back(ordered(v, br.w2));
        h_edges.push_back(ordered(br.u_overlap, br.w2));
      }
    }
    for (int u : parent) scratch.comp_of[u] = -1;
  }

  result.h = Graph(n, std::move(h_edges));
  return result;
}

Graph replay_branch_trace(std::span<const ClusterBranch> trace, const Graph& g,
                          int root) {
  FlatLayering fl = build_flat_layering(g, root);
  const int n = g.vertex_count();
  const auto& levels = fl.levels;
  const int c_count = fl.cluster_count();
  if (static_cast<int>(trace.size()) != c_count)
    throw TraceError("trace cluster count does not match the layering");

  std::vector<std::pair<int, int>> h_edges;
  Scratch scratch(n);
  std::uint64_t work = 0;

  for (int c = 0; c < c_count; ++c) {
    const ClusterBranch& br = trace[c];
    if (br.cluster_id != c) throw TraceError("trace entries out of order");
    if (fl.cluster_level[c] == 0) {
      if (br.kind != BranchKind::kRoot)
        throw TraceError("root cluster must carry the root branch");
      continue;
    }
    if (br.kind == BranchKind::kRoot)
      throw TraceError("non-root cluster carries the root branch");

    const int level = fl.cluster_level[c];
    auto members = fl.cluster_members(c);
    auto parent = fl.parent_set(c);
    auto in_parent = [&](int v) {
      return v >= 0 && std::binary_search(parent.begin(), parent.end(), v);
    };

    for (int u : parent) scratch.comp_of[u] = -2;
    int rep[2] = {-1, -1};
    int count = split_parent_set(g, parent, scratch, rep, work);
    if (count > 2) {
      for (int u : parent) scratch.comp_of[u] = -1;
      throw PreconditionError("parent set of cluster " + std::to_string(c) +
                                  " has more than two components",
                              c);
    }

    if (br.kind == BranchKind::kConnectedParent) {
      if (count != 1)
        throw TraceError("connected branch recorded for a split parent set");
      if (!in_parent(br.w)) throw TraceError("anchor w is not in the parent set");
      for (int v : members) h_edges.push_back(ordered(v, br.w));
    } else {
      if (count != 2)
        throw TraceError("split branch recorded for a connected parent set");
      if (!in_parent(br.w1) || !in_parent(br.w2))
        throw TraceError("split-branch anchor is not in the parent set");
      if (scratch.comp_of[br.w1] == scratch.comp_of[br.w2])
        throw TraceError("split-branch anchors lie in the same component");
      // Honor the trace's component labelling: D1 follows w1's component.
      if (scratch.comp_of[br.w1] == 1)
        for (int u : parent) scratch.comp_of[u] ^= 1;

      compute_d_sets(g, members, level, levels, scratch, work);
      scratch.overlap.clear();
      std::set_intersection(scratch.d1.begin(), scratch.d1.end(),
                            scratch.d2.begin(), scratch.d2.end(),
                            std::back_inserter(scratch.overlap));

      if (br.kind == BranchKind::kDisjointD) {
        if (!scratch.overlap.empty())
          throw TraceError("disjoint branch recorded but D1 and D2 intersect");
        for (int v : scratch.d1) h_edges.push_back(ordered(v, br.w1));
        for (int v : scratch.d2) h_edges.push_back(ordered(v, br.w2));
        auto existing = smallest_cross_edge(g, scratch, levels, level, work);
        if (br.cross_edge) {
          auto [a, b] = *br.cross_edge;
          bool a1 = std::binary_search(scratch.d1.begin(), scratch.d1.end(), a);
          bool b1 = std::binary_search(scratch.d1.begin(), scratch.d1.end(), b);
          bool a2 = std::binary_search(scratch.d2.begin(), scratch.d2.end(), a);
          bool b2 = std::binary_search(scratch.d2.begin(), scratch.d2.end(), b);
          if (!g.has_edge(a, b) || !((a1 && b2) || (a2 && b1)))
            throw TraceError("recorded cross edge does not join D1 and D2 in G");
          h_edges.push_back(ordered(a, b));
        } else if (existing) {
          throw TraceError("trace omits an existing D1-D2 edge");
        }
      } else {
        if (scratch.overlap.empty())
          throw TraceError("overlapping branch recorded but D1 and D2 are disjoint");
        if (br.u_overlap < 0 ||
            !std::binary_search(scratch.overlap.begin(), scratch.overlap.end(),
                                br.u_overlap))
          throw TraceError("recorded overlap vertex is not in D1 and D2");
        for (int v : scratch.d1) h_edges.push_back(ordered(v, br.w1));
        for (int v : scratch.d2)
          if (!std::binary_search(scratch.d1.begin(), scratch.d1.end(), v))
            h_edges.push_back(ordered(v, br.w2));
        h_edges.push_back(ordered(br.u_overlap, br.w2));
      }
    }
    for (int u : parent) scratch.comp_of[u] = -1;
  }
  return Graph(n, std::move(h_edges));
}

}  // namespace tw2
