#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "model.hpp"
#include "oracle.hpp"
#include "rng.hpp"

namespace icfd {

// Color subsets are tracked in 32-bit masks; 25 keeps the tables sane.
inline constexpr int kMaxPalette = 25;

// All ways to split p into n positive ordered parts, lexicographically
// ascending; C(p-1, n-1) of them. Return false from the callback to stop.
// Returns the number of compositions visited.
uint64_t enumerate_compositions(int p, int n,
                                const std::function<bool(const std::vector<int>&)>& visit);

struct DpTable {
  int k = 0;
  // best[v][mask]: maximum weight of a connected set containing v whose
  // colors are pairwise distinct and exactly mask; absent when none exists
  std::vector<std::vector<std::optional<Value>>> best;
  // (neighbor, its color submask) achieving best, (-1, 0) for singletons
  std::vector<std::vector<std::pair<int, uint32_t>>> choice;
};

// Bottom-up over color subsets: a colorful set splits, at any of its
// vertices, into a neighbor-anchored colorful part and the remainder.
DpTable colorful_dp(const Graph& g, const std::vector<Value>& weights,
                    const std::vector<int>& coloring, int k);

// Reconstructs the vertex set behind a defined table entry.
std::vector<int> dp_extract(const DpTable& table, int v, uint32_t mask);

enum class InnerMode { Exact = 0, Colorcode = 1 };

// ceil(e^k * ln(den/num)): colorings needed so a fixed k-set, colorful with
// probability >= e^-k per draw, is missed with probability at most num/den.
uint64_t cc_inner_repetitions(int k, uint64_t delta_num, uint64_t delta_den);

// Monte Carlo connected-subgraph search: random k-colorings + colorful_dp
// until some full-palette entry reaches the threshold. One-sided: a returned
// witness is genuine; absence only means no witness was found.
std::optional<WeightedSubset> max_weight_connected_subgraph_cc(
    const Graph& g, const std::vector<Value>& weights, int k,
    const Value& threshold, Rng& rng, uint64_t delta_num = 1,
    uint64_t delta_den = 100);

// A coloring with one color per agent is suitable when, for some split
// (p_1,...,p_n) of p, every agent i can carve a connected p_i-subset of its
// own color class worth at least ceil(total_i / n). Returns the assembled
// allocation for the first suitable split, in composition order.
std::optional<Allocation> is_suitable(const Instance& inst,
                                      const std::vector<int>& coloring,
                                      InnerMode mode, Rng& inner_rng,
                                      uint64_t delta_num = 1,
                                      uint64_t delta_den = 100);

struct MonteCarloConfig {
  uint64_t seed = 0;
  std::optional<uint64_t> repetitions;  // default n^p, subject to the cap
  uint64_t repetition_cap = 1000000;
  InnerMode inner = InnerMode::Exact;
  uint64_t delta_num = 1;  // inner-search miss budget (colorcode mode)
  uint64_t delta_den = 100;
};

// Randomized threshold-fairness solver: repetition r draws a uniform
// n-coloring from substream 2r and tests suitability (inner randomness from
// substream 2r+1). Yes carries a checked witness from the lowest successful
// repetition; otherwise NoWitnessFound, never a definitive No (except the
// n > p pigeonhole, which is a certain No). stats.nodes counts colorings.
SolveOutcome solve_prop_cc(const Instance& inst, const MonteCarloConfig& mc);

}  // namespace icfd
