#include "tw2/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>

namespace tw2 {

namespace {

RecognitionReport run_configuration_suite(const Graph& g, std::uint64_t budget,
                                          bool long_prism_only,
                                          bool broken_wheel_only) {
  RecognitionReport report;
  report.method = "truemper";
  bool inconclusive = false;

  const std::array<std::function<SearchResult()>, 4> searches{
      [&] { return find_theta(g, budget); },
      [&] { return find_pyramid(g, budget); },
      [&] { return find_prism(g, budget, long_prism_only); },
      [&] { return find_wheel(g, budget, broken_wheel_only); },
  };
  for (const auto& search : searches) {
    SearchResult r = search();
    report.budget_spent += r.budget_spent;
    if (r.outcome == SearchOutcome::kFound) {
      report.verdict = Verdict::kNotFree;
      report.witness = std::move(r.witness);
      return report;
    }
    if (r.outcome == SearchOutcome::kInconclusive) inconclusive = true;
  }
  report.verdict = inconclusive ? Verdict::kInconclusive : Verdict::kFree;
  return report;
}

}  // namespace

RecognitionReport find_truemper_configuration(const Graph& g,
                                              std::uint64_t budget) {
  return run_configuration_suite(g, budget, /*long_prism_only=*/true,
                                 /*broken_wheel_only=*/true);
}

RecognitionReport is_universally_signable(const Graph& g,
                                          std::uint64_t budget) {
  return run_configuration_suite(g, budget, /*long_prism_only=*/false,
                                 /*broken_wheel_only=*/false);
}

namespace {

constexpr int kMinorCap = 12;

int lowest_bit(std::uint32_t mask) { return std::countr_zero(mask); }

}  // namespace

bool induced_minor_bruteforce(const Graph& g, const Graph& pattern) {
  const int n = g.vertex_count();
  const int h = pattern.vertex_count();
  if (n > kMinorCap)
    throw PreconditionError(
        "induced_minor_bruteforce is capped at 12 vertices; use "
        "find_truemper_configuration for larger graphs");
  if (h == 0) return true;
  if (h > n) return false;

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  // neighborhood of a vertex set, and connectivity of every induced subset
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> nbhood(full + 1, 0);
  std::vector<char> connected(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int v = lowest_bit(mask);
    nbhood[mask] = nbhood[mask & (mask - 1)] | adj[v];
    // grow from the lowest vertex; connected iff the closure covers the mask
    std::uint32_t reach = 1u << v;
    while (true) {
      std::uint32_t grown = reach | (nbhood[reach & mask] & mask);
      grown &= mask;
      if (grown == reach) break;
      reach = grown;
    }
    connected[mask] = reach == mask;
  }
  std::vector<std::uint32_t> conn_sets;
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    if (connected[mask]) conn_sets.push_back(mask);

  std::vector<std::vector<char>> pat(h, std::vector<char>(h, 0));
  for (const auto& [u, v] : pattern.edges()) pat[u][v] = pat[v][u] = 1;

  // interchangeable pattern vertices (identical rows) are ordered by their
  // branch sets' lowest vertex, killing the automorphic duplicates
  std::vector<int> twin_prev(h, -1);
  for (int j = 0; j < h; ++j)
    for (int i = j - 1; i >= 0; --i) {
      bool same = pat[i][j] == 0;
      for (int k = 0; k < h && same; ++k)
        if (k != i && k != j && pat[i][k] != pat[j][k]) same = false;
      if (same) {
        twin_prev[j] = i;
        break;
      }
    }

  std::vector<std::uint32_t> chosen(h, 0);
  std::function<bool(int, std::uint32_t)> place = [&](int c, std::uint32_t used) {
    if (c == h) return true;
    int needed_after = h - c - 1;
    for (std::uint32_t mask : conn_sets) {
      if (mask & used) continue;
      if (std::popcount(full & ~(used | mask)) < needed_after) continue;
      if (twin_prev[c] >= 0 &&
          lowest_bit(mask) < lowest_bit(chosen[twin_prev[c]]))
        continue;
      bool ok = true;
      for (int d = 0; d < c && ok; ++d) {
        bool touch = (nbhood[chosen[d]] & mask) != 0;
        if (touch != static_cast<bool>(pat[c][d])) ok = false;
      }
      if (!ok) continue;
      chosen[c] = mask;
      if (place(c + 1, used | mask)) return true;
    }
    return false;
  };
  return place(0, 0);
}

namespace {

constexpr int kSipcCap = 10;

// Collects the vertex sets of all isometric paths, as bitmasks, plus the
// per-endpoint buckets. Prefix paths are themselves isometric, so every
// enumerated sequence is recorded at each step.
struct IsometricPaths {
  std::vector<std::uint32_t> all;            // deduped
  std::vector<std::vector<std::uint32_t>> rooted;  // per endpoint, deduped
};

void dedupe(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// keep only masks that are not strict subsets of another entry
void keep_maximal(std::vector<std::uint32_t>& v) {
  dedupe(v);
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : v) {
    bool dominated = false;
    for (std::uint32_t other : v)
      if (other != m && (m & other) == m) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  v = std::move(out);
}

IsometricPaths enumerate_isometric_paths(const Graph& g,
                                         const std::vector<std::vector<int>>& d) {
  const int n = g.vertex_count();
  IsometricPaths paths;
  paths.rooted.resize(n);
  for (int s = 0; s < n; ++s) {
    // DFS over the shortest-path DAG from s; every prefix is isometric
    std::function<void(int, std::uint32_t)> grow = [&](int v, std::uint32_t mask) {
      paths.all.push_back(mask);
      paths.rooted[s].push_back(mask);
      paths.rooted[v].push_back(mask);
      for (int u : g.neighbors(v))
        if (d[s][u] == d[s][v] + 1) grow(u, mask | (1u << u));
    };
    grow(s, 1u << s);
  }
  keep_maximal(paths.all);
  for (auto& bucket : paths.rooted) keep_maximal(bucket);
  return paths;
}

// Exact minimum number of candidate masks covering `target` (<= 10 bits):
// breadth-first relaxation over covered subsets.
int min_cover(std::uint32_t target, const std::vector<std::uint32_t>& candidates) {
  std::vector<std::uint32_t> trimmed;
  for (std::uint32_t c : candidates) {
    std::uint32_t clipped = c & target;
    if (clipped) trimmed.push_back(clipped);
  }
  keep_maximal(trimmed);

  // dense DP over subsets of the target's bit positions
  std::vector<int> bits;
  for (int b = 0; b < 32; ++b)
    if (target & (1u << b)) bits.push_back(b);
  const int k = static_cast<int>(bits.size());
  auto compress = [&](std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << bits[i])) out |= 1u << i;
    return out;
  };
  const std::uint32_t goal = (1u << k) - 1;
  std::vector<int> dist(goal + 1, -1);
  std::vector<std::uint32_t> frontier{0};
  dist[0] = 0;
  int rounds = 0;
  while (dist[goal] == -1) {
    ++rounds;
    std::vector<std::uint32_t> next;
    for (std::uint32_t state : frontier)
      for (std::uint32_t c : trimmed) {
        std::uint32_t merged = state | compress(c);
        if (dist[merged] == -1) {
          dist[merged] = rounds;
          next.push_back(merged);
        }
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return dist[goal];
}

}  // namespace

int sipc_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kSipcCap)
    throw PreconditionError("sipc_bruteforce is capped at 10 vertices");
  if (n == 0) throw PreconditionError("graph must be non-empty");
  if (!is_connected(g)) throw PreconditionError("graph must be connected");
  if (n == 1) return 1;

  auto d = all_pairs_distances(g);
  IsometricPaths paths = enumerate_isometric_paths(g, d);

  int answer = 1;
  for (int v = 0; v < n; ++v)
    for (std::uint32_t target : paths.all) {
      int cover = min_cover(target, paths.rooted[v]);
      answer = std::max(answer, cover);
    }
  return answer;
}

}  // namespace tw2
