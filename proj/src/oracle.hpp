#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "model.hpp"
#include "sources.hpp"

namespace icfd {

// NoWitnessFound is reserved for Monte Carlo solvers; the exhaustive
// oracle only ever returns Yes or No.
enum class Answer { Yes = 0, No = 1, NoWitnessFound = 2 };

const char* answer_name(Answer a);

struct SolveStats {
  uint64_t nodes = 0;
  double elapsed_sec = 0.0;
};

struct SolveOutcome {
  Answer answer = Answer::No;
  std::optional<Allocation> witness;
  SolveStats stats;
};

struct SolveLimits {
  uint64_t node_budget = 200000000;  // search nodes before BudgetError
  bool aggressive = false;           // prune bundles that already violate
                                     // PROP / pairwise EF; off by default so
                                     // the oracle stays obviously correct
};

// Exhaustive decision over the canonical enumeration order; the witness is
// the first satisfying allocation. Requires a connected item graph. More
// agents than slots is an immediate No.
SolveOutcome solve_exhaustive(const Instance& inst, FairnessNotion notion,
                              const SolveLimits& limits = {});

// Visits every valid allocation exactly once: agents in index order, each
// bundle grown from its lowest vertex. Return false from the callback to
// stop early. Returns the number of allocations visited.
uint64_t enumerate_allocations(const Instance& inst,
                               const std::function<bool(const Allocation&)>& visit,
                               const SolveLimits& limits = {});

struct WeightedSubset {
  std::vector<int> vertices;  // ascending
  Value weight;
};

// Maximum-weight connected subgraph on exactly k vertices; ties resolve to
// the lexicographically smallest vertex list. Absent when no connected
// k-vertex subgraph exists.
std::optional<WeightedSubset> max_weight_connected_subgraph_exact(
    const Graph& g, const std::vector<Value>& weights, int k);

// Lexicographically first index subset of size k summing to the target.
std::optional<std::vector<int>> solve_ksum_brute(const KSumInstance& ks);

// Smallest, then lexicographically first, subset of the N side of size at
// most k dominating every T vertex.
std::optional<std::vector<int>> solve_rbds_brute(const RbdsInstance& rb);

}  // namespace icfd
