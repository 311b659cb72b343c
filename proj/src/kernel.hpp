#pragma once

#include <optional>
#include <string>
#include <vector>

#include "model.hpp"

namespace icfd {

struct VertexCoverResult {
  std::vector<int> cover;  // ascending
  bool exact = false;
};

// Largest cover size the exact search will attempt before falling back to
// the matching approximation.
inline constexpr int kExactCoverBudget = 12;

// Both endpoints of every edge of a greedy maximal matching; at most twice
// the optimum.
VertexCoverResult vertex_cover_approx(const Graph& g);

// Minimum vertex cover via bounded branching on uncovered edges; absent when
// the optimum exceeds the budget.
std::optional<VertexCoverResult> vertex_cover_exact(const Graph& g, int budget);

VertexCoverResult choose_cover(const Graph& g, VcMode mode);

std::vector<int> cover_complement(int m, const std::vector<int>& cover);

// Distinct valuation entries / distinct valuation rows, optionally restricted
// to the first agent_limit agents and first vertex_limit vertices (-1 = all).
int distinct_value_count(const Instance& inst, int agent_limit = -1,
                         int vertex_limit = -1);
int agent_type_count(const Instance& inst, int agent_limit = -1,
                     int vertex_limit = -1);

// 2^t * val^types * p  (+ t, + n for the threshold pipeline's dummies).
Value envy_kernel_bound(int t, int val, int types, int p);
Value prop_kernel_bound(int t, int val, int types, int p, int n);

struct EquivalenceClass {
  std::vector<int> cover_neighbors;  // ascending; the full neighborhood
  std::vector<Value> column;         // one entry per classifying agent
  std::vector<int> members;          // ascending, outside the cover
};

// Partition of the non-cover vertices by (neighborhood, valuation column),
// ordered lexicographically by signature. agent_limit / vertex_limit restrict
// which agents key the column and which part of the graph is classified
// (-1 = all); the dummy-aware pipeline classifies only the original part.
std::vector<EquivalenceClass> equivalence_classes(const Instance& inst,
                                                  const std::vector<int>& cover,
                                                  int agent_limit = -1,
                                                  int vertex_limit = -1);

struct Transfer {
  int agent = 0;  // receiving agent
  int dummy = 0;  // its personal dummy vertex, pre-rule numbering
  Value amount;
};

struct RuleEvent {
  std::string rule;  // "preprocess", "rr1", "rr2", "rr3"
  std::vector<int> removed;
  std::vector<Transfer> transfers;
  std::string note;
};

// Threshold-notion augmentation: one dummy agent and one dummy clique vertex
// per original agent, original values doubled, dummy agent n+i wants only
// d_i (value 1), d_1 attached to the lowest cover vertex, p raised by n.
// Original agent i values d_{(i+1) mod n} at its doubled total: the dummies
// double every threshold numerator just as the agent count doubles every
// denominator, so proportionality over the augmentation is exactly
// proportionality over the source.
struct PropAugmented {
  Instance inst;
  int source_n = 0;  // original agents; dummy agents are the last source_n
  int source_m = 0;  // original vertices; dummies are ids source_m and up
  int anchor = 0;    // original vertex the first dummy attaches to
};

PropAugmented preprocess_prop(const Instance& inst, const std::vector<int>& cover);

struct KernelReport {
  Instance kernel;
  std::vector<int> vertex_origin;  // kernel id -> source id, -1 for dummies
  std::vector<RuleEvent> log;
  VertexCoverResult cover;  // cover of the source graph that was used
  Value size_bound;         // guaranteed vertex-count bound for this cover
  bool definitive_no = false;  // the final rule proved the answer is No
  int dummy_count = 0;         // trailing dummy vertices and agents
  int source_n = 0;
  int source_m = 0;
  int source_p = 0;
};

// Keep the p lowest-indexed members of each oversized equivalence class.
// Safe for the three envy notions.
KernelReport rr1(const Instance& inst, const VertexCoverResult& cover);

// Same deletion on the original part of an augmented instance, but each
// deleted vertex's value is credited to the owning agent's dummy. The cover
// must cover the original part.
KernelReport rr2(const PropAugmented& aug, const VertexCoverResult& cover);

// Definitive No when some original agent values its dummy strictly above
// everything outside the dummy block.
bool rr3_fires(const Instance& kernelized, int source_n, int dummy_count);

// Full pipeline: rr1 for the envy notions; preprocess + rr2 + rr3 for the
// threshold notion.
KernelReport kernelize(const Instance& inst, FairnessNotion notion,
                       VcMode mode = VcMode::ExactIfSmall);

std::string render_rule_log(const KernelReport& rep);

}  // namespace icfd
