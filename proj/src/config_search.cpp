#include <algorithm>
#include <array>

#include "tw2/structure.hpp"

// Budgeted backtracking searches for the forbidden configurations. Anchors
// are enumerated first (vertex pairs for thetas, triangles for prisms and
// pyramids, holes for wheels), then internally disjoint induced paths are
// grown with adjacency pruning. Every anchor tried and every vertex pushed
// costs one budget unit; running out yields kInconclusive.

namespace tw2 {

namespace {

struct Budget {
  std::uint64_t limit = 0;
  std::uint64_t spent = 0;
  bool exhausted = false;

  bool tick() {
    if (spent >= limit) {
      exhausted = true;
      return false;
    }
    ++spent;
    return true;
  }
};

// Blocking state shared by the nested path searches of one configuration:
// blocked[v] > 0 bans v as a path internal.
struct SearchCtx {
  const Graph& g;
  Budget budget;
  std::vector<int> blocked;

  SearchCtx(const Graph& g_in, std::uint64_t limit)
      : g(g_in), budget{limit, 0, false}, blocked(g_in.vertex_count(), 0) {}

  void block_closed(int v, int delta) {
    blocked[v] += delta;
    for (int u : g.neighbors(v)) blocked[u] += delta;
  }
  void block_path_internals(const std::vector<int>& path, int delta) {
    for (size_t i = 1; i + 1 < path.size(); ++i) block_closed(path[i], delta);
  }
};

// Enumerates induced start->target paths with at least min_len edges whose
// internal vertices avoid ctx.blocked. adj_count_[v] tracks how many path
// vertices v is adjacent to, which makes both the chord check and the closing
// check O(1). Explicit stack, so path length is not bounded by recursion.
class InducedPathEnum {
 public:
  InducedPathEnum(SearchCtx& ctx, int start, int target, int min_len)
      : ctx_(ctx),
        target_(target),
        min_len_(min_len),
        adj_count_(ctx.g.vertex_count(), 0),
        on_path_(ctx.g.vertex_count(), 0) {
    push(start);
    frames_.push_back(0);
  }

  bool next() {
    if (done_) return false;
    if (pending_close_) {
      pop();
      pending_close_ = false;
    }
    while (!frames_.empty()) {
      int last = path_.back();
      auto nbrs = ctx_.g.neighbors(last);
      if (frames_.back() >= static_cast<int>(nbrs.size())) {
        frames_.pop_back();
        pop();
        continue;
      }
      int w = nbrs[frames_.back()++];
      if (w == target_) {
        // closing edge: target must see only `last` among path vertices
        if (static_cast<int>(path_.size()) >= min_len_ && adj_count_[w] == 1) {
          push(w);
          pending_close_ = true;
          return true;
        }
        continue;
      }
      if (on_path_[w] || ctx_.blocked[w] != 0 || adj_count_[w] != 1) continue;
      if (!ctx_.budget.tick()) {
        done_ = true;
        return false;
      }
      push(w);
      frames_.push_back(0);
    }
    done_ = true;
    return false;
  }

  const std::vector<int>& path() const { return path_; }

 private:
  void push(int v) {
    path_.push_back(v);
    on_path_[v] = 1;
    for (int u : ctx_.g.neighbors(v)) adj_count_[u]++;
  }
  void pop() {
    int v = path_.back();
    path_.pop_back();
    on_path_[v] = 0;
    for (int u : ctx_.g.neighbors(v)) adj_count_[u]--;
  }

  SearchCtx& ctx_;
  int target_;
  int min_len_;
  std::vector<int> adj_count_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  std::vector<int> frames_;  // per path vertex: next neighbor index
  bool pending_close_ = false;
  bool done_ = false;
};

// Enumerates every hole (induced cycle of length >= 4) exactly once: the
// cycle's smallest vertex starts the path, remaining vertices are larger, and
// the second vertex smaller than the closing one kills the reflection.
class InducedCycleEnum {
 public:
  InducedCycleEnum(const Graph& g, Budget& budget)
      : g_(g),
        budget_(budget),
        adj_count_(g.vertex_count(), 0),
        on_path_(g.vertex_count(), 0) {}

  bool next() {
    if (budget_.exhausted) return false;
    if (pending_yield_) {
      pop();
      pending_yield_ = false;
    }
    const int n = g_.vertex_count();
    while (true) {
      if (!in_dfs_) {
        if (start_ >= n) return false;
        push(start_);
        frames_.assign(1, 0);
        in_dfs_ = true;
      }
      while (!frames_.empty()) {
        int last = path_.back();
        auto nbrs = g_.neighbors(last);
        if (frames_.back() >= static_cast<int>(nbrs.size())) {
          frames_.pop_back();
          pop();
          continue;
        }
        int w = nbrs[frames_.back()++];
        if (w <= start_ || on_path_[w]) continue;
        if (adj_count_[w] == 1) {
          if (!budget_.tick()) {
            frames_.clear();
            while (!path_.empty()) pop();
            return false;
          }
          push(w);
          frames_.push_back(0);
          continue;
        }
        // adjacent to exactly {last, start}: a chordless closing vertex
        if (adj_count_[w] == 2 && path_.size() >= 3 && g_.has_edge(w, start_) &&
            path_[1] < w) {
          push(w);
          pending_yield_ = true;
          return true;
        }
      }
      in_dfs_ = false;
      ++start_;
    }
  }

  const std::vector<int>& cycle() const { return path_; }

 private:
  void push(int v) {
    path_.push_back(v);
    on_path_[v] = 1;
    for (int u : g_.neighbors(v)) adj_count_[u]++;
  }
  void pop() {
    int v = path_.back();
    path_.pop_back();
    on_path_[v] = 0;
    for (int u : g_.neighbors(v)) adj_count_[u]--;
  }

  const Graph& g_;
  Budget& budget_;
  std::vector<int> adj_count_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  std::vector<int> frames_;
  int start_ = 0;
  bool in_dfs_ = false;
  bool pending_yield_ = false;
};

SearchResult finish(SearchCtx& ctx, std::optional<StructureWitness> witness) {
  SearchResult r;
  r.budget_spent = ctx.budget.spent;
  if (witness) {
    r.outcome = SearchOutcome::kFound;
    r.witness = std::move(witness);
  } else if (ctx.budget.exhausted) {
    r.outcome = SearchOutcome::kInconclusive;
  } else {
    r.outcome = SearchOutcome::kAbsent;
  }
  return r;
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] <= u) continue;
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) out.push_back({u, nb[i], nb[j]});
    }
  }
  return out;
}

// Grows the three anchored paths slot by slot. `starts`/`targets` give the
// slot endpoints; `anchor_blocks[slot]` lists the vertices whose closed
// neighborhoods are off limits for that slot's internals. `accept` filters
// completed triples (long-prism / pyramid length demands).
template <typename Accept>
bool three_path_search(SearchCtx& ctx, const std::array<int, 3>& starts,
                       const std::array<int, 3>& targets,
                       const std::array<std::vector<int>, 3>& anchor_blocks,
                       int min_len, std::vector<std::vector<int>>& out_paths,
                       const Accept& accept) {
  struct SlotGuard {
    SearchCtx& ctx;
    const std::vector<int>& anchors;
    bool on = false;
    void set(bool want) {
      if (want == on) return;
      for (int v : anchors) ctx.block_closed(v, want ? 1 : -1);
      on = want;
    }
  };

  std::vector<std::vector<int>> paths(3);
  // slot 0
  SlotGuard g0{ctx, anchor_blocks[0]};
  g0.set(true);
  InducedPathEnum e0(ctx, starts[0], targets[0], min_len);
  while (e0.next()) {
    paths[0] = e0.path();
    g0.set(false);
    ctx.block_path_internals(paths[0], 1);

    SlotGuard g1{ctx, anchor_blocks[1]};
    g1.set(true);
    InducedPathEnum e1(ctx, starts[1], targets[1], min_len);
    while (e1.next()) {
      paths[1] = e1.path();
      g1.set(false);
      ctx.block_path_internals(paths[1], 1);

      SlotGuard g2{ctx, anchor_blocks[2]};
      g2.set(true);
      InducedPathEnum e2(ctx, starts[2], targets[2], min_len);
      while (e2.next()) {
        paths[2] = e2.path();
        if (accept(paths)) {
          g2.set(false);
          ctx.block_path_internals(paths[1], -1);
          ctx.block_path_internals(paths[0], -1);
          out_paths = std::move(paths);
          return true;
        }
      }
      g2.set(false);
      ctx.block_path_internals(paths[1], -1);
      g1.set(true);
      if (ctx.budget.exhausted) break;
    }
    g1.set(false);
    ctx.block_path_internals(paths[0], -1);
    g0.set(true);
    if (ctx.budget.exhausted) break;
  }
  g0.set(false);
  return false;
}

}  // namespace

SearchResult find_theta(const Graph& g, std::uint64_t budget) {
  SearchCtx ctx(g, budget);
  const int n = g.vertex_count();
  const std::array<std::vector<int>, 3> no_blocks{};
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) < 3) continue;
    for (int b = a + 1; b < n; ++b) {
      if (g.degree(b) < 3 || g.has_edge(a, b)) continue;
      if (!ctx.budget.tick()) return finish(ctx, std::nullopt);
      std::vector<std::vector<int>> paths;
      if (three_path_search(ctx, {a, a, a}, {b, b, b}, no_blocks, 2, paths,
                            [](const auto&) { return true; })) {
        StructureWitness w;
        w.kind = WitnessKind::kTheta;
        w.paths = std::move(paths);
        if (verify_witness(g, w)) return finish(ctx, std::move(w));
      }
      if (ctx.budget.exhausted) return finish(ctx, std::nullopt);
    }
  }
  return finish(ctx, std::nullopt);
}

SearchResult find_pyramid(const Graph& g, std::uint64_t budget) {
  SearchCtx ctx(g, budget);
  const int n = g.vertex_count();
  auto triangles = list_triangles(g);
  for (const auto& tri : triangles) {
    for (int apex = 0; apex < n; ++apex) {
      if (apex == tri[0] || apex == tri[1] || apex == tri[2]) continue;
      if (g.degree(apex) < 3) continue;
      int direct = 0;
      for (int c : tri)
        if (g.has_edge(apex, c)) ++direct;
      if (direct >= 2) continue;  // two length-1 paths cannot happen
      if (!ctx.budget.tick()) return finish(ctx, std::nullopt);

      std::array<std::vector<int>, 3> blocks;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (j != i) blocks[i].push_back(tri[j]);
      std::vector<std::vector<int>> paths;
      bool ok = three_path_search(
          ctx, {apex, apex, apex}, {tri[0], tri[1], tri[2]}, blocks, 1, paths,
          [](const std::vector<std::vector<int>>& ps) {
            int long_paths = 0;
            for (const auto& p : ps)
              if (p.size() >= 3) ++long_paths;
            return long_paths >= 2;
          });
      if (ok) {
        StructureWitness w;
        w.kind = WitnessKind::kPyramid;
        w.paths = std::move(paths);
        if (verify_witness(g, w)) return finish(ctx, std::move(w));
      }
      if (ctx.budget.exhausted) return finish(ctx, std::nullopt);
    }
  }
  return finish(ctx, std::nullopt);
}

SearchResult find_prism(const Graph& g, std::uint64_t budget, bool require_long) {
  SearchCtx ctx(g, budget);
  auto triangles = list_triangles(g);
  const size_t t = triangles.size();
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = i + 1; j < t; ++j) {
      const auto& ta = triangles[i];
      std::array<int, 3> tb = triangles[j];
      bool disjoint = true;
      for (int x : ta)
        for (int y : tb)
          if (x == y) disjoint = false;
      if (!disjoint) continue;
      if (!ctx.budget.tick()) return finish(ctx, std::nullopt);

      std::sort(tb.begin(), tb.end());
      do {
        // cross edges between the triangles are only allowed on matched pairs
        bool feasible = true;
        for (int x = 0; x < 3 && feasible; ++x)
          for (int y = 0; y < 3; ++y)
            if (x != y && g.has_edge(ta[x], tb[y])) {
              feasible = false;
              break;
            }
        if (!feasible) continue;

        std::array<std::vector<int>, 3> blocks;
        for (int s = 0; s < 3; ++s)
          for (int o = 0; o < 3; ++o)
            if (o != s) {
              blocks[s].push_back(ta[o]);
              blocks[s].push_back(tb[o]);
            }
        std::vector<std::vector<int>> paths;
        bool ok = three_path_search(
            ctx, {ta[0], ta[1], ta[2]}, {tb[0], tb[1], tb[2]}, blocks, 1, paths,
            [&](const std::vector<std::vector<int>>& ps) {
              if (!require_long) return true;
              for (const auto& p : ps)
                if (p.size() >= 3) return true;
              return false;
            });
        if (ok) {
          StructureWitness w;
          w.kind = WitnessKind::kPrism;
          w.paths = std::move(paths);
          w.is_long_prism = require_long;
          if (verify_witness(g, w)) return finish(ctx, std::move(w));
        }
        if (ctx.budget.exhausted) return finish(ctx, std::nullopt);
      } while (std::next_permutation(tb.begin(), tb.end()));
    }
  }
  return finish(ctx, std::nullopt);
}

SearchResult find_wheel(const Graph& g, std::uint64_t budget, bool require_broken) {
  SearchCtx ctx(g, budget);
  const int n = g.vertex_count();
  InducedCycleEnum cycles(g, ctx.budget);
  std::vector<int> hit_count(n, 0);
  std::vector<char> on_rim(n, 0);
  while (cycles.next()) {
    const auto& rim = cycles.cycle();
    if (!ctx.budget.tick()) return finish(ctx, std::nullopt);
    std::vector<int> touched;
    for (int v : rim) on_rim[v] = 1;
    for (int v : rim)
      for (int u : g.neighbors(v))
        if (!on_rim[u]) {
          if (hit_count[u] == 0) touched.push_back(u);
          hit_count[u]++;
        }
    std::sort(touched.begin(), touched.end());
    std::optional<StructureWitness> found;
    for (int center : touched) {
      if (hit_count[center] < 3) continue;
      StructureWitness w;
      w.kind = WitnessKind::kWheel;
      w.rim = rim;
      w.center = center;
      w.is_broken_wheel = require_broken;
      if (verify_witness(g, w)) {
        found = std::move(w);
        break;
      }
    }
    for (int v : touched) hit_count[v] = 0;
    for (int v : rim) on_rim[v] = 0;
    if (found) return finish(ctx, std::move(found));
  }
  return finish(ctx, std::nullopt);
}

}  // namespace tw2
