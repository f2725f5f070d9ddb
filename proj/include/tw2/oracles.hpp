#pragma once

#include <string>

#include "tw2/structure.hpp"

namespace tw2 {

enum class Verdict { kFree, kNotFree, kInconclusive };

struct RecognitionReport {
  Verdict verdict = Verdict::kInconclusive;
  std::optional<StructureWitness> witness;
  std::string method;  // "truemper" or "direct-minor"
  std::uint64_t budget_spent = 0;
};

/// K_{2,3}-induced-minor-freeness via the forbidden-configuration
/// characterization: searches for a theta, pyramid, long prism, or broken
/// wheel, in that priority order. Verdict kFree only when all four searches
/// ran to exhaustion.
RecognitionReport find_truemper_configuration(
    const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Same machinery with the stricter family: any prism and any wheel count.
RecognitionReport is_universally_signable(
    const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Exhaustive induced-minor test for tiny graphs (n <= 12): searches for
/// disjoint connected branch sets whose mutual adjacency matches the pattern
/// exactly. Throws beyond the cap.
bool induced_minor_bruteforce(const Graph& g, const Graph& pattern);

/// Exact strong isometric path complexity by full enumeration (n <= 10): the
/// maximum over vertices v and isometric paths P of the minimum number of
/// v-rooted isometric paths covering V(P).
int sipc_bruteforce(const Graph& g);

}  // namespace tw2
