#include "tw2/diameter.hpp"

#include <algorithm>
#include <chrono>

namespace tw2 {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int diameter_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("graph must be non-empty");
  int best = 0;
  for (int s = 0; s < n; ++s) {
    auto dv = bfs_distances(g, s);
    for (int d : dv.dist) {
      if (d == kUnreachable) throw PreconditionError("graph must be connected");
      best = std::max(best, d);
    }
  }
  return best;
}

DiameterResult diameter_via_embedding(const Graph& g, int root, EmbedMode mode,
                                      bool with_exact) {
  DiameterResult result;

  auto t0 = std::chrono::steady_clock::now();
  EmbeddingResult emb = embed(g, root, mode);
  result.timings.embed_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  result.approx = diameter_exact(emb.h);
  result.timings.approx_ms = ms_since(t0);

  if (with_exact) {
    t0 = std::chrono::steady_clock::now();
    result.exact = diameter_exact(g);
    result.timings.exact_ms = ms_since(t0);
    result.gap = *result.exact - result.approx;
  }
  return result;
}

}  // namespace tw2
