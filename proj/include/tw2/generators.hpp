#pragma once

#include <cstdint>
#include <string>

#include "tw2/graph.hpp"

namespace tw2 {

/// Fixed, platform-independent 64-bit generator (SplitMix64). All corpus
/// randomness flows through this; identical seeds give identical graphs on
/// every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class Family {
  kTree,
  kCycle,
  kChordal,
  kSplit,
  kOuterplanar,
  kK23,
  kBrokenWheel,
  kErdosRenyi,
};

struct GenSpec {
  Family family = Family::kTree;
  int n = 1;
  int clique_size = 0;       // split: clique side (0 = derive from n)
  int independent_size = 0;  // split: independent side
  double edge_probability = 0.25;  // split cross edges / Erdos-Renyi
  double extra_edge_density = 0.3;  // chordal neighborhood growth / kept chords
  std::uint64_t seed = 0;

  bool operator==(const GenSpec&) const = default;
};

/// Deterministic family generator: identical specs produce identical graphs.
Graph generate(const GenSpec& spec);

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Compact flag form, e.g. "family=split,n=20,clique=8,indep=12,p=0.3,seed=7".
std::string gen_spec_to_string(const GenSpec& spec);
GenSpec gen_spec_from_string(const std::string& text);

}  // namespace tw2
