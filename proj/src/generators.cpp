#include "tw2/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace tw2 {

namespace {

Graph make_tree(int n, SplitMix64& rng) {
  if (n < 1) throw Error("tree needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.below(v)), v);
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

// Iterated simplicial-vertex addition: each new vertex's neighborhood is a
// random non-empty subset of an existing clique, so the construction order is
// a reverse perfect elimination ordering. `density` biases how much of the
// chosen clique is kept, trading tree-like against dense regimes.
Graph make_chordal(int n, double density, SplitMix64& rng) {
  if (n < 1) throw Error("chordal needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cliques{{0}};
  for (int v = 1; v < n; ++v) {
    const auto& base = cliques[rng.below(cliques.size())];
    int take = 1;
    while (take < static_cast<int>(base.size()) && rng.chance(density)) ++take;
    std::vector<int> pool = base;
    for (int i = 0; i < take; ++i) {
      int j = i + static_cast<int>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> nbhd(pool.begin(), pool.begin() + take);
    for (int u : nbhd) edges.emplace_back(u, v);
    nbhd.push_back(v);
    std::sort(nbhd.begin(), nbhd.end());
    cliques.push_back(std::move(nbhd));
  }
  return Graph(n, std::move(edges));
}

Graph make_split(int clique, int independent, double p, SplitMix64& rng) {
  if (clique < 1 || independent < 0) throw Error("split needs clique >= 1");
  int n = clique + independent;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  for (int v = clique; v < n; ++v) {
    int forced = static_cast<int>(rng.below(clique));
    edges.emplace_back(forced, v);
    for (int u = 0; u < clique; ++u)
      if (u != forced && rng.chance(p)) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

// Random triangulation of a polygon, then each chord survives with
// probability `keep`. The boundary cycle always stays, so the result is
// connected and outerplanar.
Graph make_outerplanar(int n, double keep, SplitMix64& rng) {
  if (n < 3) throw Error("outerplanar needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  std::vector<std::pair<int, int>> ranges{{0, n - 1}};
  while (!ranges.empty()) {
    auto [lo, hi] = ranges.back();
    ranges.pop_back();
    if (hi - lo < 2) continue;
    int k = lo + 1 + static_cast<int>(rng.below(hi - lo - 1));
    bool chord_lo = k > lo + 1;  // (lo,k) is a chord, not a boundary edge
    bool chord_hi = k < hi - 1;  // (k,hi) likewise
    if (chord_lo && rng.chance(keep)) edges.emplace_back(lo, k);
    if (chord_hi && rng.chance(keep)) edges.emplace_back(k, hi);
    ranges.emplace_back(lo, k);
    ranges.emplace_back(k, hi);
  }
  return Graph(n, std::move(edges));
}

Graph make_k23() {
  return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// Rim cycle on n-1 vertices plus a center adjacent to rim vertices 0, 2, 4;
// for n >= 7 at least two sectors have length two or more.
Graph make_broken_wheel(int n) {
  if (n < 7) throw Error("broken wheel needs n >= 7");
  int rim = n - 1;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < rim; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, rim - 1);
  edges.emplace_back(0, rim);
  edges.emplace_back(2, rim);
  edges.emplace_back(4, rim);
  return Graph(n, std::move(edges));
}

Graph make_erdos_renyi(int n, double p, SplitMix64& rng) {
  if (n < 1) throw Error("random graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace

Graph generate(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  switch (spec.family) {
    case Family::kTree:
      return make_tree(spec.n, rng);
    case Family::kCycle:
      return make_cycle(spec.n);
    case Family::kChordal:
      return make_chordal(spec.n, spec.extra_edge_density, rng);
    case Family::kSplit: {
      int clique = spec.clique_size;
      int indep = spec.independent_size;
      if (clique <= 0 && indep <= 0) {
        clique = std::max(1, spec.n / 3);
        indep = spec.n - clique;
      }
      return make_split(clique, indep, spec.edge_probability, rng);
    }
    case Family::kOuterplanar:
      return make_outerplanar(spec.n, spec.extra_edge_density, rng);
    case Family::kK23:
      return make_k23();
    case Family::kBrokenWheel:
      return make_broken_wheel(spec.n);
    case Family::kErdosRenyi:
      return make_erdos_renyi(spec.n, spec.edge_probability, rng);
  }
  throw Error("unknown family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kTree: return "tree";
    case Family::kCycle: return "cycle";
    case Family::kChordal: return "chordal";
    case Family::kSplit: return "split";
    case Family::kOuterplanar: return "outerplanar";
    case Family::kK23: return "k23";
    case Family::kBrokenWheel: return "broken_wheel";
    case Family::kErdosRenyi: return "erdos_renyi";
  }
  throw Error("unknown family");
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::kTree, Family::kCycle, Family::kChordal,
                   Family::kSplit, Family::kOuterplanar, Family::kK23,
                   Family::kBrokenWheel, Family::kErdosRenyi})
    if (family_name(f) == name) return f;
  throw Error("unknown family: " + name);
}

std::string gen_spec_to_string(const GenSpec& spec) {
  std::ostringstream out;
  out << "family=" << family_name(spec.family) << ",n=" << spec.n;
  if (spec.clique_size > 0) out << ",clique=" << spec.clique_size;
  if (spec.independent_size > 0) out << ",indep=" << spec.independent_size;
  out << ",p=" << spec.edge_probability << ",density=" << spec.extra_edge_density
      << ",seed=" << spec.seed;
  return out.str();
}

GenSpec gen_spec_from_string(const std::string& text) {
  GenSpec spec;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad spec item: " + item);
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (key == "family") spec.family = family_from_name(value);
    else if (key == "n") spec.n = std::stoi(value);
    else if (key == "clique") spec.clique_size = std::stoi(value);
    else if (key == "indep") spec.independent_size = std::stoi(value);
    else if (key == "p") spec.edge_probability = std::stod(value);
    else if (key == "density") spec.extra_edge_density = std::stod(value);
    else if (key == "seed") spec.seed = std::stoull(value);
    else throw Error("unknown spec key: " + key);
  }
  return spec;
}

}  // namespace tw2
