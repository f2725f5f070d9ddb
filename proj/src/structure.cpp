#include "tw2/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tw2 {

DistortionReport distortion_report(const Graph& g, const Graph& h, int root,
                                   const LayeringPartition* layering) {
  const int n = g.vertex_count();
  if (n != h.vertex_count())
    throw Error("graphs must share the same vertex set");
  if (root < 0 || root >= n) throw Error("root vertex out of range");
  if (!is_connected(g) || !is_connected(h))
    throw PreconditionError("both graphs must be connected");

  auto dg = all_pairs_distances(g);
  auto dh = all_pairs_distances(h);

  DistortionReport report;
  report.pair_count = static_cast<std::int64_t>(n) * (n - 1) / 2;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int gap = std::abs(dg[u][v] - dh[u][v]);
      if (gap > report.max_abs_gap) {
        report.max_abs_gap = gap;
        report.argmax_pair = {u, v};
      }
    }

  report.root_equality = dg[root] == dh[root];

  for (const auto& [u, v] : g.edges()) {
    if (dh[u][v] > 16)
      report.violations.push_back({{u, v}, "g_edge_le_16", dh[u][v]});
    if (layering && layering->cluster_of[u] == layering->cluster_of[v] &&
        dh[u][v] > 5)
      report.violations.push_back({{u, v}, "same_cluster_g_edge_le_5", dh[u][v]});
  }
  for (const auto& [u, v] : h.edges()) {
    if (dg[u][v] > 4)
      report.violations.push_back({{u, v}, "h_edge_le_4", dg[u][v]});
  }
  return report;
}

TreewidthCertificate treewidth_at_most_2(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() <= 2) queue.push_back(v);

  TreewidthCertificate cert;
  int remaining = n;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (!alive[v] || adj[v].size() > 2) continue;
    if (adj[v].size() <= 1) {
      ReductionStep step;
      step.op = ReductionOp::kLeafPrune;
      step.vertex = v;
      if (!adj[v].empty()) {
        int u = *adj[v].begin();
        step.edge = {std::min(u, v), std::max(u, v)};
        adj[u].erase(v);
        if (adj[u].size() <= 2) queue.push_back(u);
      }
      cert.steps.push_back(step);
      adj[v].clear();
      alive[v] = 0;
      --remaining;
      continue;
    }
    int a = *adj[v].begin();
    int b = *std::next(adj[v].begin());
    adj[a].erase(v);
    adj[b].erase(v);
    adj[v].clear();
    alive[v] = 0;
    --remaining;
    ReductionStep step;
    step.vertex = v;
    step.edge = {std::min(a, b), std::max(a, b)};
    if (adj[a].count(b)) {
      step.op = ReductionOp::kParallelMerge;
      if (adj[a].size() <= 2) queue.push_back(a);
      if (adj[b].size() <= 2) queue.push_back(b);
    } else {
      step.op = ReductionOp::kDegree2Suppress;
      adj[a].insert(b);
      adj[b].insert(a);
      if (adj[a].size() <= 2) queue.push_back(a);
      if (adj[b].size() <= 2) queue.push_back(b);
    }
    cert.steps.push_back(step);
  }
  cert.verdict = remaining == 0;
  return cert;
}

std::optional<StructureWitness> find_triangle(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] <= u) continue;
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) {
          StructureWitness w;
          w.kind = WitnessKind::kTriangle;
          w.paths = {{u, nb[i], nb[j]}};
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool distinct_vertices(const std::vector<int>& vs, int n) {
  std::vector<char> seen(n, 0);
  for (int v : vs) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// path is induced: consecutive vertices adjacent, no other adjacency, all
// vertices distinct.
bool induced_path(const Graph& g, const std::vector<int>& path) {
  if (path.empty()) return false;
  if (!distinct_vertices(path, g.vertex_count())) return false;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  for (size_t i = 0; i < path.size(); ++i)
    for (size_t j = i + 2; j < path.size(); ++j)
      if (g.has_edge(path[i], path[j])) return false;
  return true;
}

bool verify_theta(const Graph& g, const StructureWitness& w) {
  if (w.paths.size() != 3) return false;
  int a = w.paths[0].front(), b = w.paths[0].back();
  if (a == b) return false;
  std::vector<char> internal_of(g.vertex_count(), 0);
  for (const auto& p : w.paths) {
    if (p.size() < 3) return false;  // length >= 2
    if (p.front() != a || p.back() != b) return false;
    if (!induced_path(g, p)) return false;
  }
  // internal disjointness and no cross-path edges
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (size_t x = 1; x + 1 < w.paths[i].size(); ++x)
        for (size_t y = 1; y + 1 < w.paths[j].size(); ++y) {
          if (w.paths[i][x] == w.paths[j][y]) return false;
          if (g.has_edge(w.paths[i][x], w.paths[j][y])) return false;
        }
  return true;
}

bool verify_pyramid(const Graph& g, const StructureWitness& w) {
  if (w.paths.size() != 3) return false;
  int apex = w.paths[0].front();
  int corners[3];
  int long_paths = 0;
  for (int i = 0; i < 3; ++i) {
    const auto& p = w.paths[i];
    if (p.size() < 2 || p.front() != apex) return false;
    corners[i] = p.back();
    if (corners[i] == apex) return false;
    if (!induced_path(g, p)) return false;
    if (p.size() >= 3) ++long_paths;
  }
  if (long_paths < 2) return false;
  if (!g.has_edge(corners[0], corners[1]) || !g.has_edge(corners[0], corners[2]) ||
      !g.has_edge(corners[1], corners[2]))
    return false;
  // vertex-disjoint except the apex; cross edges only the triangle
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (size_t x = 1; x < w.paths[i].size(); ++x)
        for (size_t y = 1; y < w.paths[j].size(); ++y) {
          int u = w.paths[i][x], v = w.paths[j][y];
          if (u == v) return false;
          bool triangle_edge = u == corners[i] && v == corners[j];
          if (!triangle_edge && g.has_edge(u, v)) return false;
        }
  return true;
}

bool verify_prism(const Graph& g, const StructureWitness& w, bool require_long) {
  if (w.paths.size() != 3) return false;
  int a[3], b[3];
  bool any_long = false;
  for (int i = 0; i < 3; ++i) {
    const auto& p = w.paths[i];
    if (p.size() < 2) return false;  // length >= 1: the triangles are disjoint
    a[i] = p.front();
    b[i] = p.back();
    if (!induced_path(g, p)) return false;
    if (p.size() >= 3) any_long = true;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!g.has_edge(a[i], a[j]) || !g.has_edge(b[i], b[j])) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (size_t x = 0; x < w.paths[i].size(); ++x)
        for (size_t y = 0; y < w.paths[j].size(); ++y) {
          int u = w.paths[i][x], v = w.paths[j][y];
          if (u == v) return false;
          bool triangle_edge = (u == a[i] && v == a[j]) || (u == b[i] && v == b[j]);
          if (!triangle_edge && g.has_edge(u, v)) return false;
        }
  if (require_long && !any_long) return false;
  return true;
}

bool verify_wheel(const Graph& g, const StructureWitness& w, bool require_broken) {
  const auto& rim = w.rim;
  const int L = static_cast<int>(rim.size());
  if (L < 4) return false;
  if (!distinct_vertices(rim, g.vertex_count())) return false;
  if (w.center < 0 || w.center >= g.vertex_count()) return false;
  for (int v : rim)
    if (v == w.center) return false;
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == L - 1);
      if (consecutive != g.has_edge(rim[i], rim[j])) return false;
    }
  std::vector<int> spokes;
  for (int i = 0; i < L; ++i)
    if (g.has_edge(w.center, rim[i])) spokes.push_back(i);
  if (spokes.size() < 3) return false;
  if (require_broken) {
    int long_sectors = 0;
    for (size_t k = 0; k < spokes.size(); ++k) {
      int gap = (k + 1 < spokes.size()) ? spokes[k + 1] - spokes[k]
                                        : L - spokes.back() + spokes.front();
      if (gap >= 2) ++long_sectors;
    }
    if (long_sectors < 2) return false;
  }
  return true;
}

}  // namespace

bool verify_witness(const Graph& g, const StructureWitness& w) {
  switch (w.kind) {
    case WitnessKind::kTriangle: {
      if (w.paths.size() != 1 || w.paths[0].size() != 3) return false;
      const auto& t = w.paths[0];
      if (!distinct_vertices(t, g.vertex_count())) return false;
      return g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) &&
             g.has_edge(t[1], t[2]);
    }
    case WitnessKind::kTheta:
      return verify_theta(g, w);
    case WitnessKind::kPyramid:
      return verify_pyramid(g, w);
    case WitnessKind::kPrism:
      return verify_prism(g, w, w.is_long_prism);
    case WitnessKind::kWheel:
      return verify_wheel(g, w, w.is_broken_wheel);
  }
  return false;
}

}  // namespace tw2
