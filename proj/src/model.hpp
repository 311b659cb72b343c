#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace icfd {

// Valuations are arbitrary-precision: generated instances can carry values
// exponential in the source size, so fixed width would silently overflow.
using Value = boost::multiprecision::cpp_int;

enum class FairnessNotion { Prop = 0, Ef = 1, Ef1 = 2, Efx = 3 };

const char* notion_name(FairnessNotion n);
std::optional<FairnessNotion> notion_from_name(const std::string& s);

// Immutable after construction: item graph, one valuation row per agent,
// and the exact number p of vertices that must be allocated.
struct Instance {
  Graph graph;
  std::vector<std::vector<Value>> valuations;  // n rows of m non-negative entries
  int p = 0;

  int m() const { return graph.vertex_count(); }
  int n() const { return static_cast<int>(valuations.size()); }
  Value agent_total(int i) const;
  Value bundle_value(int i, const std::vector<int>& bundle) const;
};

// Shape and range constraints; graph connectivity is deliberately not
// required here (solver entry points check it, the checker does not).
void validate_instance(const Instance& inst);

struct Allocation {
  std::vector<std::vector<int>> bundles;  // per agent, ascending vertex lists
  int n() const { return static_cast<int>(bundles.size()); }
};

// Non-empty, ascending, disjoint, in range, connected, sizes sum to p.
void validate_allocation(const Instance& inst, const Allocation& alloc);

enum class VcMode { ExactIfSmall = 0, ApproxOnly = 1 };

struct StatsReport {
  int m = 0;
  int edge_count = 0;
  int n = 0;
  int p = 0;
  bool connected = false;
  std::optional<int> vcn_exact;
  int vcn_approx = 0;
  int distinct_value_count = 0;
  int agent_type_count = 0;
  std::vector<int> agents_without_positive;
};

StatsReport compute_stats(const Instance& inst, VcMode mode = VcMode::ExactIfSmall);

}  // namespace icfd
