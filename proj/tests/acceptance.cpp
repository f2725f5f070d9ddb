// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Corpus sizes and every tolerance are pinned here.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "support/fixtures.hpp"
#include "support/test_oracles.hpp"
#include "tw2/diameter.hpp"
#include "tw2/union_find.hpp"
#include "tw2/embedder.hpp"
#include "tw2/generators.hpp"
#include "tw2/oracles.hpp"
#include "tw2/structure.hpp"

using namespace tw2;

namespace {

constexpr int kDistortionCap = 2470;
constexpr int kSeedsPerFamily = 50;
constexpr std::array<int, 3> kSizes{10, 50, 200};
constexpr std::array<Family, 5> kFamilies{Family::kTree, Family::kCycle,
                                          Family::kChordal, Family::kSplit,
                                          Family::kOuterplanar};

struct Criterion {
  std::string label;
  bool pass = true;
  std::string detail;

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first reason
    pass = false;
  }
};

GenSpec corpus_spec(Family fam, int n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = fam;
  spec.n = n;
  spec.seed = seed;
  switch (fam) {
    case Family::kChordal:
      spec.extra_edge_density = 0.35;
      break;
    case Family::kSplit:
      spec.clique_size = std::max(2, n / 4);
      spec.independent_size = n - spec.clique_size;
      spec.edge_probability = 0.3;
      break;
    case Family::kOuterplanar:
      spec.extra_edge_density = 0.5;
      break;
    default:
      break;
  }
  return spec;
}

// Walks a uniformly random parent chain of the BFS DAG from a random far
// vertex back to the root; the result is an r-rooted isometric path.
std::vector<int> sample_rooted_path(const Graph& g, const std::vector<int>& dist_from_root,
                                    int root, SplitMix64& rng) {
  const int n = g.vertex_count();
  int t = static_cast<int>(rng.below(n));
  std::vector<int> path{t};
  int v = t;
  while (v != root) {
    std::vector<int> ups;
    for (int u : g.neighbors(v))
      if (dist_from_root[u] == dist_from_root[v] - 1) ups.push_back(u);
    v = ups[rng.below(ups.size())];
    path.push_back(v);
  }
  return path;  // t .. root
}

struct PathCheckStats {
  long paths = 0;
  long pair_checks = 0;
  bool ok = true;
};

}  // namespace

int main() {
#if defined(__GLIBC__)
  // Keep large scratch buffers on the heap across timing rounds; otherwise
  // they are mmap'd and returned to the OS after every run, and the recurring
  // page-fault cost masquerades as superlinear growth in the ladder fit.
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
#endif
  auto t_start = std::chrono::steady_clock::now();

  Criterion c1{"criterion 1: per-pair and per-edge metric bounds on the corpus"};
  Criterion c2{"criterion 2: structural certificates on every embedding"};
  Criterion c3{"criterion 3: rooted isometric path distortion (+20 / -5)"};
  Criterion c4{"criterion 4: recognizer agreement on all generated graphs with n <= 12"};
  Criterion c5{"criterion 5: layering vs naive reimplementation, cutset and parent-set checks"};
  Criterion c6{"criterion 6: strong isometric path complexity bounds"};
  Criterion c7{"criterion 7: fast path equivalence and near-linear scaling"};
  Criterion c8{"criterion 8: diameter pipeline additive guarantee"};
  Criterion c9{"criterion 9: frozen layered fixture"};

  // ---- criterion 7b/c first: timing runs want a pristine allocator ---------
  double ladder_exponent = 0;
  double big_fast_ms = 0, big_general_ms = 0;
  {
    auto time_one = [](const Graph& g, EmbedMode mode) {
      auto t0 = std::chrono::steady_clock::now();
      auto result = embed(g, 0, mode);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      return result.h.vertex_count() == g.vertex_count() ? ms : 1e18;
    };

    // Interleaved rounds with per-size minima, each sample batched to a
    // uniform wall-clock window: host scheduler steals then hit every size
    // alike instead of sparing the short runs, and load drift cannot
    // masquerade as growth in n.
    const std::vector<int> sizes{12500, 25000, 50000, 100000};
    for (Family fam : {Family::kChordal, Family::kTree}) {
      std::vector<Graph> graphs;
      for (int n : sizes)
        graphs.push_back(
            generate({.family = fam, .n = n, .extra_edge_density = 0.3, .seed = 17}));
      std::vector<int> reps(sizes.size(), 1);
      for (size_t i = 0; i < graphs.size(); ++i) {
        double est = time_one(graphs[i], EmbedMode::kUniversallySignableFast);
        est = std::min(est, time_one(graphs[i], EmbedMode::kUniversallySignableFast));
        reps[i] = std::clamp(static_cast<int>(40.0 / std::max(est, 0.1)), 1, 64);
      }
      std::vector<double> best(sizes.size(), 1e18);
      for (int round = 0; round < 12; ++round)
        for (size_t i = 0; i < graphs.size(); ++i) {
          auto t0 = std::chrono::steady_clock::now();
          for (int rep = 0; rep < reps[i]; ++rep)
            embed(graphs[i], 0, EmbedMode::kUniversallySignableFast);
          double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count() /
                      reps[i];
          best[i] = std::min(best[i], ms);
        }

      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < sizes.size(); ++i) {
        double x = std::log(static_cast<double>(sizes[i]));
        double y = std::log(std::max(best[i], 1e-3));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      double k = static_cast<double>(sizes.size());
      double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
      ladder_exponent = std::max(ladder_exponent, slope);
    }
    if (ladder_exponent > 1.2)
      c7.fail("fitted embed exponent " + std::to_string(ladder_exponent) + " > 1.2");

    Graph big = generate({.family = Family::kChordal, .n = 10000,
                          .extra_edge_density = 0.3, .seed = 23});
    embed(big, 0, EmbedMode::kGeneral);
    big_fast_ms = big_general_ms = 1e18;
    for (int rep = 0; rep < 5; ++rep) {
      big_fast_ms = std::min(big_fast_ms, time_one(big, EmbedMode::kUniversallySignableFast));
      big_general_ms = std::min(big_general_ms, time_one(big, EmbedMode::kGeneral));
    }
    if (big_fast_ms > 10000.0 || big_general_ms > 10000.0)
      c7.fail("embedding 10^4 vertices took more than 10 seconds");
  }

  // ---- main corpus pass: criteria 1, 2, 3, 5b, 6, 7a, 8 -------------------
  int corpus_instances = 0;
  int corpus_max_gap = 0;
  int diam_max_gap = 0;
  std::array<PathCheckStats, kFamilies.size()> fwd_paths{}, rev_paths{};
  int sipc_checked = 0, sipc_max = 0;
  long cutset_checks = 0, cross_checks = 0;

  for (size_t fi = 0; fi < kFamilies.size(); ++fi) {
    Family fam = kFamilies[fi];
    for (int n : kSizes) {
      for (int seed = 1; seed <= kSeedsPerFamily; ++seed) {
        GenSpec spec = corpus_spec(fam, n, seed);
        Graph g = generate(spec);
        ++corpus_instances;

        if (g.vertex_count() <= 30) {
          auto rec = find_truemper_configuration(g);
          if (rec.verdict != Verdict::kFree)
            c1.fail(family_name(fam) + " n=" + std::to_string(n) + " seed=" +
                    std::to_string(seed) + " not certified free");
        }

        EmbeddingResult emb;
        try {
          emb = embed(g, 0, EmbedMode::kGeneral);
        } catch (const Error& e) {
          c1.fail(std::string("embed failed: ") + e.what());
          continue;
        }
        auto lp = build_layering(g, 0);
        auto dg = all_pairs_distances(g);
        auto dh = all_pairs_distances(emb.h);

        // criterion 1: exact root distances and the pinned edge bounds
        for (int v = 0; v < g.vertex_count(); ++v)
          if (dg[0][v] != dh[0][v]) c1.fail("root distance drifted");
        for (const auto& [u, v] : g.edges()) {
          if (dh[u][v] > 16) c1.fail("a G-edge stretched past 16 in H");
          if (lp.cluster_of[u] == lp.cluster_of[v] && dh[u][v] > 5)
            c1.fail("a same-cluster G-edge stretched past 5 in H");
        }
        for (const auto& [u, v] : emb.h.edges())
          if (dg[u][v] > 4) c1.fail("an H-edge spans more than 4 in G");
        int gap = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
          for (int v = u + 1; v < g.vertex_count(); ++v)
            gap = std::max(gap, std::abs(dg[u][v] - dh[u][v]));
        corpus_max_gap = std::max(corpus_max_gap, gap);
        if (gap > kDistortionCap) c1.fail("distortion exceeded the constant");

        // criterion 2: certificates
        if (!treewidth_at_most_2(emb.h).verdict)
          c2.fail("series-parallel reduction failed on an output");
        if (find_triangle(emb.h).has_value()) c2.fail("triangle in an output");
        auto theta = find_theta(emb.h);
        if (theta.outcome != SearchOutcome::kAbsent)
          c2.fail("theta search did not finish absent on an output");
        auto wheel = find_wheel(emb.h);
        if (wheel.outcome != SearchOutcome::kAbsent)
          c2.fail("wheel search did not finish absent on an output");

        // criterion 3: sampled rooted isometric paths, both directions
        SplitMix64 rng(0x9e00 + 1315423911ULL * seed + 7919 * n + fi);
        for (int rep = 0; rep < 7; ++rep) {
          auto pg = sample_rooted_path(g, dg[0], 0, rng);
          fwd_paths[fi].paths++;
          for (size_t i = 0; i < pg.size(); ++i)
            for (size_t j = i + 1; j < pg.size(); ++j) {
              fwd_paths[fi].pair_checks++;
              if (dh[pg[i]][pg[j]] > dg[pg[i]][pg[j]] + 20) fwd_paths[fi].ok = false;
            }
          auto ph = sample_rooted_path(emb.h, dh[0], 0, rng);
          rev_paths[fi].paths++;
          for (size_t i = 0; i < ph.size(); ++i)
            for (size_t j = i + 1; j < ph.size(); ++j) {
              rev_paths[fi].pair_checks++;
              if (dg[ph[i]][ph[j]] - 5 > dh[ph[i]][ph[j]]) rev_paths[fi].ok = false;
            }
        }

        // criterion 5b: cutset minimality, parent-set shape, sibling overlap
        if (n <= 50) {
          if (verify_parent_set_structure(g, lp).any_violation)
            c5.fail("parent-set structure violation on a certified-free graph");
          for (const auto& c : lp.clusters) {
            if (c.level == 0) continue;
            if (c.parent_set.size() == 1 && c.parent_set[0] == 0) continue;
            if (!verify_minimal_cutset(g, lp, c.id))
              c5.fail("a parent set failed the minimal-cutset check");
            ++cutset_checks;
          }
          std::vector<std::vector<int>> split_children(lp.clusters.size());
          for (const auto& c : lp.clusters) {
            if (c.level == 0) continue;
            if (connected_components(g, c.parent_set).size() == 2)
              split_children[c.parent_cluster].push_back(c.id);
          }
          for (const auto& sibs : split_children)
            for (size_t i = 0; i < sibs.size(); ++i)
              for (size_t j = i + 1; j < sibs.size(); ++j) {
                if (!verify_cross_children(g, lp, sibs[i], sibs[j]))
                  c5.fail("sibling parent sets share two component pairs");
                ++cross_checks;
              }
        }

        // criterion 6: sipc stays under the class constant on tiny members
        if (g.vertex_count() <= 10) {
          int s = sipc_bruteforce(g);
          sipc_max = std::max(sipc_max, s);
          ++sipc_checked;
          if (s > 71) c6.fail("sipc exceeded 71 on a corpus member");
        }

        // criterion 7a: the fast path reproduces the general output
        auto fast = embed(g, 0, EmbedMode::kUniversallySignableFast);
        if (serialize_graph(fast.h) != serialize_graph(emb.h))
          c7.fail("fast mode diverged on " + family_name(fam));

        // criterion 8: diameter gap via the matrices, plus the naive check
        int diam_g = 0, diam_h = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
          for (int v = 0; v < g.vertex_count(); ++v) {
            diam_g = std::max(diam_g, dg[u][v]);
            diam_h = std::max(diam_h, dh[u][v]);
          }
        diam_max_gap = std::max(diam_max_gap, std::abs(diam_g - diam_h));
        if (std::abs(diam_g - diam_h) > kDistortionCap)
          c8.fail("diameter drifted past the constant");
        if (n <= 100 && diameter_exact(g) != diam_g)
          c8.fail("eccentricity scan disagreed with the matrix diameter");
      }
    }
  }
  if (corpus_max_gap > kDistortionCap) c1.fail("corpus max gap above the constant");
  c1.detail = c1.pass ? "instances=" + std::to_string(corpus_instances) +
                            ", max |d_G - d_H| observed = " +
                            std::to_string(corpus_max_gap)
                      : c1.detail;
  c2.detail = c2.pass ? "all outputs series-parallel, triangle/theta/wheel-free"
                      : c2.detail;

  for (size_t fi = 0; fi < kFamilies.size(); ++fi) {
    if (fwd_paths[fi].paths < 1000 || rev_paths[fi].paths < 1000)
      c3.fail("fewer than 1000 sampled paths for " + family_name(kFamilies[fi]));
    if (!fwd_paths[fi].ok) c3.fail("+20 bound violated in " + family_name(kFamilies[fi]));
    if (!rev_paths[fi].ok) c3.fail("-5 bound violated in " + family_name(kFamilies[fi]));
  }
  if (c3.pass)
    c3.detail = std::to_string(fwd_paths[0].paths) + " paths per family per direction";

  // ---- criterion 4: tiny-graph recognizer agreement ------------------------
  {
    Graph pattern = generate({.family = Family::kK23, .n = 5});
    int agreed = 0;
    for (Family fam : {Family::kTree, Family::kCycle, Family::kChordal,
                       Family::kSplit, Family::kOuterplanar, Family::kK23,
                       Family::kBrokenWheel, Family::kErdosRenyi}) {
      for (int n = 4; n <= 12; ++n) {
        if (fam == Family::kK23 && n != 5) continue;
        if (fam == Family::kBrokenWheel && n < 7) continue;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
          GenSpec spec{.family = fam, .n = n, .seed = seed};
          if (fam == Family::kErdosRenyi)
            spec.edge_probability = 0.2 + 0.1 * static_cast<double>(seed);
          Graph g = generate(spec);
          if (g.vertex_count() > 12) continue;
          auto rec = find_truemper_configuration(g);
          if (rec.verdict == Verdict::kInconclusive) {
            c4.fail("inconclusive recognition at n <= 12");
            continue;
          }
          bool minor = induced_minor_bruteforce(g, pattern);
          if (minor != (rec.verdict == Verdict::kNotFree))
            c4.fail("disagreement on " + family_name(fam) + " n=" + std::to_string(n));
          else
            ++agreed;
        }
      }
    }
    if (c4.pass) c4.detail = std::to_string(agreed) + " graphs, 100% agreement";
  }

  // ---- criterion 5a: 500 random connected graphs vs the naive layering -----
  {
    SplitMix64 rng(0xACCE5501);
    for (int iter = 0; iter < 500; ++iter) {
      int n = 2 + static_cast<int>(rng.below(49));
      Graph g = testing::random_connected_graph(n, 0.07, rng);
      int root = static_cast<int>(rng.below(n));
      auto lp = build_layering(g, root);
      auto naive = testing::naive_layering(g, root);
      if (lp.clusters.size() != naive.size()) {
        c5.fail("cluster count differs from the naive construction");
        continue;
      }
      for (size_t i = 0; i < naive.size(); ++i)
        if (lp.clusters[i].members != naive[i].members ||
            lp.clusters[i].parent_set != naive[i].parent_set ||
            lp.clusters[i].level != naive[i].level)
          c5.fail("cluster content differs from the naive construction");
      if (lp.tree_edges.size() + 1 != lp.clusters.size())
        c5.fail("layering tree edge count is off");
      UnionFind uf(static_cast<int>(lp.clusters.size()));
      for (const auto& [p, c] : lp.tree_edges)
        if (!uf.unite(p, c)) c5.fail("layering tree has a cycle");
    }
    if (c5.pass)
      c5.detail = "500 random graphs matched; " + std::to_string(cutset_checks) +
                  " cutset and " + std::to_string(cross_checks) +
                  " sibling checks passed";
  }

  // ---- criterion 6: pinned sipc values -------------------------------------
  {
    if (sipc_bruteforce(parse_graph("2\n0 1")) != 1) c6.fail("sipc(edge) != 1");
    if (sipc_bruteforce(parse_graph("5\n0 1\n1 2\n2 3\n3 4")) != 2)
      c6.fail("sipc(P5) != 2");
    if (c6.pass)
      c6.detail = std::to_string(sipc_checked) +
                  " tiny corpus members, max sipc = " + std::to_string(sipc_max);
  }

  // ---- criterion 7 summary (ladder measured up front) ----------------------
  if (c7.pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "identical H on all instances; exponent %.3f; n=10^4 embed "
                  "%.1f ms fast / %.1f ms general",
                  ladder_exponent, big_fast_ms, big_general_ms);
    c7.detail = buf;
  }

  if (c8.pass)
    c8.detail = "max |diam(G) - diam(H)| observed = " + std::to_string(diam_max_gap);

  // ---- criterion 9: the frozen fixture -------------------------------------
  {
    Graph g = testing::layered_fixture();
    auto lp = build_layering(g, 0);
    auto expected = testing::layered_fixture_clusters();
    if (lp.clusters.size() != expected.size())
      c9.fail("fixture cluster count changed");
    else
      for (size_t i = 0; i < expected.size(); ++i)
        if (lp.clusters[i].members != expected[i]) c9.fail("fixture clusters changed");

    auto emb = embed(g, 0);
    if (emb.h.edges() != testing::layered_fixture_h_edges())
      c9.fail("fixture embedding snapshot changed");

    auto report = distortion_report(g, emb.h, 0, &lp);
    if (!report.root_equality || !report.violations.empty() ||
        report.max_abs_gap > kDistortionCap)
      c9.fail("fixture embedding violates a metric bound");
    if (!treewidth_at_most_2(emb.h).verdict || find_triangle(emb.h) ||
        find_theta(emb.h).outcome != SearchOutcome::kAbsent ||
        find_wheel(emb.h).outcome != SearchOutcome::kAbsent)
      c9.fail("fixture embedding fails a certificate");
    if (c9.pass)
      c9.detail = "clusters, snapshot, bounds, and certificates all hold (max gap " +
                  std::to_string(report.max_abs_gap) + ")";
  }

  // ---- report ---------------------------------------------------------------
  int failures = 0;
  for (const Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c9}) {
    std::printf("[%s] %s%s%s\n", c->pass ? "PASS" : "FAIL", c->label.c_str(),
                c->detail.empty() ? "" : " -- ", c->detail.c_str());
    if (!c->pass) ++failures;
  }
  double total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                 t_start)
                       .count();
  std::printf("acceptance: %d/9 criteria passed in %.1f s\n", 9 - failures, total_s);
  return failures == 0 ? 0 : 1;
}
