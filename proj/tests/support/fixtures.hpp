#pragma once

#include <utility>
#include <vector>

#include "tw2/graph.hpp"

namespace tw2::testing {

// Frozen 21-vertex fixture with a rich layering: ten clusters across four
// levels exercising every branch of the embedding (connected parent sets of
// sizes 1-3, overlapping D-sets, multi-vertex clusters). Vertex 0 is the
// intended root.
inline Graph layered_fixture() {
  std::vector<std::pair<int, int>> edges{
      {0, 1},   {0, 2},  {0, 3},  {0, 4},   {0, 5},   {6, 7},   {7, 8},
      {2, 6},   {2, 7},  {2, 8},  {3, 9},   {3, 8},   {8, 9},   {1, 10},
      {3, 10},  {3, 11}, {4, 11}, {3, 12},  {5, 12},  {5, 13},  {14, 15},
      {13, 14}, {5, 15}, {13, 16}, {14, 16}, {15, 16}, {13, 17}, {12, 17},
      {12, 18}, {17, 18}, {9, 19}, {8, 19},  {8, 20},  {6, 20},  {5, 14},
  };
  return Graph(21, std::move(edges));
}

// The expected clusters of layered_fixture() rooted at 0, ordered by
// (level, smallest member).
inline std::vector<std::vector<int>> layered_fixture_clusters() {
  return {
      {0},
      {1, 2, 3, 4, 5},
      {6, 7, 8, 9},
      {10},
      {11},
      {12, 13, 14, 15},
      {16},
      {17, 18},
      {19},
      {20},
  };
}

// Regression snapshot: the embedding of layered_fixture() rooted at 0 under
// the smallest-id tie-break rules. Derived once by hand-tracing the branch
// rules cluster by cluster, then frozen.
inline std::vector<std::pair<int, int>> layered_fixture_h_edges() {
  return {
      {0, 1},  {0, 2},  {0, 3},  {0, 4},   {0, 5},   {1, 10},  {2, 6},
      {2, 7},  {2, 8},  {3, 8},  {3, 9},   {3, 10},  {3, 11},  {3, 12},
      {4, 11}, {5, 12}, {5, 13}, {5, 14},  {5, 15},  {6, 20},  {8, 19},
      {8, 20}, {12, 17}, {12, 18}, {13, 16}, {13, 17},
  };
}

}  // namespace tw2::testing
