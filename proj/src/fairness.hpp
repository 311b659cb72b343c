#pragma once

#include <array>
#include <optional>

#include "model.hpp"

namespace icfd {

// Vertices of a bundle whose removal keeps the induced subgraph connected.
// Singletons keep their vertex: the empty graph counts as connected.
// Throws for empty or disconnected bundles.
std::vector<int> tau(const Graph& g, const std::vector<int>& bundle);

struct Violation {
  int agent = -1;            // the dissatisfied agent
  int other = -1;            // envied agent; -1 for the threshold notion
  std::optional<int> pivot;  // removed vertex, set for the up-to-one notions
  Value lhs;                 // violated comparison lhs < rhs, exact integers
  Value rhs;
};

struct CheckResult {
  bool holds = true;
  std::optional<Violation> violation;
};

CheckResult check(const Instance& inst, const Allocation& alloc, FairnessNotion notion);

// All four notions with one tau computation per bundle; indexed by
// the FairnessNotion enumerator values.
std::array<CheckResult, 4> check_all(const Instance& inst, const Allocation& alloc);

}  // namespace icfd
