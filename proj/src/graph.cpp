#include "tw2/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace tw2 {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw Error("vertex count must be non-negative");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error("edge endpoint out of range: " + std::to_string(u) + " " +
                  std::to_string(v));
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw Error("duplicate edge");
  edges_ = std::move(edge_list);

  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    offsets_[u + 1]++;
    offsets_[v + 1]++;
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adj_.resize(2 * edges_.size());
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v)
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view tok, int& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = (nl == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    auto toks = split_ws(line);
    if (!have_n) {
      int value = 0;
      if (toks.size() != 1 || !parse_int(toks[0], value))
        throw ParseError(line_no, "expected vertex count");
      if (value < 0) throw ParseError(line_no, "vertex count must be non-negative");
      n = value;
      have_n = true;
      continue;
    }

    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError(line_no, "expected edge \"u v\"");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
    int a = std::min(u, v), b = std::max(u, v);
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    if (!seen.insert(key).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    edges.emplace_back(a, b);
  }
  if (!have_n) throw ParseError(line_no, "missing vertex count");
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_graph(g);
}

DistanceVector bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw Error("source vertex out of range");
  DistanceVector dv;
  dv.source = source;
  dv.dist.assign(n, kUnreachable);
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  dv.dist[source] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : g.neighbors(v)) {
      if (dv.dist[u] == kUnreachable) {
        dv.dist[u] = dv.dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dv;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d;
  d.reserve(n);
  for (int s = 0; s < n; ++s) d.push_back(bfs_distances(g, s).dist);
  return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> visited(n, 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    queue.clear();
    queue.push_back(s);
    visited[s] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u : g.neighbors(v)) {
        if (!visited[u]) {
          visited[u] = 1;
          queue.push_back(u);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   std::span<const int> restrict_to) {
  const int n = g.vertex_count();
  std::vector<char> allowed(n, 0);
  for (int v : restrict_to) {
    if (v < 0 || v >= n) throw Error("restricted vertex out of range");
    allowed[v] = 1;
  }
  std::vector<std::vector<int>> comps;
  std::vector<char> visited(n, 0);
  std::vector<int> seeds(restrict_to.begin(), restrict_to.end());
  std::sort(seeds.begin(), seeds.end());
  std::vector<int> queue;
  for (int s : seeds) {
    if (visited[s]) continue;
    queue.clear();
    queue.push_back(s);
    visited[s] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u : g.neighbors(v)) {
        if (allowed[u] && !visited[u]) {
          visited[u] = 1;
          queue.push_back(u);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

std::pair<Graph, SubgraphMap> induced_subgraph(const Graph& g,
                                               std::span<const int> vertices) {
  const int n = g.vertex_count();
  SubgraphMap map;
  map.to_sub.assign(n, -1);
  map.to_original.assign(vertices.begin(), vertices.end());
  std::sort(map.to_original.begin(), map.to_original.end());
  map.to_original.erase(
      std::unique(map.to_original.begin(), map.to_original.end()),
      map.to_original.end());
  for (size_t i = 0; i < map.to_original.size(); ++i) {
    int v = map.to_original[i];
    if (v < 0 || v >= n) throw Error("subgraph vertex out of range");
    map.to_sub[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (map.to_sub[u] >= 0 && map.to_sub[v] >= 0)
      edges.emplace_back(map.to_sub[u], map.to_sub[v]);
  }
  return {Graph(static_cast<int>(map.to_original.size()), std::move(edges)),
          std::move(map)};
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dv = bfs_distances(g, 0);
  for (int d : dv.dist)
    if (d == kUnreachable) return false;
  return true;
}

}  // namespace tw2
