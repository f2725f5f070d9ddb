#pragma once

#include <optional>

#include "tw2/embedder.hpp"

namespace tw2 {

struct PhaseTimings {
  double embed_ms = 0.0;
  double approx_ms = 0.0;
  double exact_ms = 0.0;
};

struct DiameterResult {
  std::optional<int> exact;  // diameter of G, when requested
  int approx = 0;            // diameter of H
  std::optional<int> gap;    // exact - approx, when both known
  PhaseTimings timings;
};

/// Max eccentricity over all-source BFS; no distance matrix is materialized.
int diameter_exact(const Graph& g);

/// The additive-approximation pipeline: embed G, measure the diameter on the
/// sparse output H (at most 2n-3 edges), optionally also compute the exact
/// diameter of G for the gap.
DiameterResult diameter_via_embedding(const Graph& g, int root, EmbedMode mode,
                                      bool with_exact);

}  // namespace tw2
