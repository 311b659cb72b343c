#pragma once

#include <string>
#include <utility>
#include <vector>

#include "model.hpp"

namespace icfd {

// Subset-sum source: does some k-subset of values sum to target?
struct KSumInstance {
  int k = 0;
  Value target;
  std::vector<Value> values;
  int n_values() const { return static_cast<int>(values.size()); }
};

// Red-blue dominating set source: bipartite sides T (to dominate) and N
// (candidates); is there S within N, |S| <= k, dominating every T vertex?
struct RbdsInstance {
  int t_count = 0;
  int n_count = 0;
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // (index in T, index in N)
};

// One line: "k t a1 a2 ...".
KSumInstance parse_ksum(const std::string& text);
// First line "|T| |N| k", then one "ti nj" pair per line.
RbdsInstance parse_rbds(const std::string& text);

void validate_rbds(const RbdsInstance& rb);

}  // namespace icfd
