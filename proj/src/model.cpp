#include "model.hpp"

#include "errors.hpp"

namespace icfd {

const char* notion_name(FairnessNotion n) {
  switch (n) {
    case FairnessNotion::Prop: return "prop";
    case FairnessNotion::Ef: return "ef";
    case FairnessNotion::Ef1: return "ef1";
    case FairnessNotion::Efx: return "efx";
  }
  return "?";
}

std::optional<FairnessNotion> notion_from_name(const std::string& s) {
  if (s == "prop") return FairnessNotion::Prop;
  if (s == "ef") return FairnessNotion::Ef;
  if (s == "ef1") return FairnessNotion::Ef1;
  if (s == "efx") return FairnessNotion::Efx;
  return std::nullopt;
}

Value Instance::agent_total(int i) const {
  Value s = 0;
  for (const Value& v : valuations[i]) s += v;
  return s;
}

Value Instance::bundle_value(int i, const std::vector<int>& bundle) const {
  Value s = 0;
  for (int v : bundle) s += valuations[i][v];
  return s;
}

void validate_instance(const Instance& inst) {
  const int m = inst.m();
  const int n = inst.n();
  if (m < 1) throw ValidationError("instance needs at least one vertex");
  if (n < 1) throw ValidationError("instance needs at least one agent");
  if (inst.p < 1 || inst.p > m)
    throw ValidationError("p must be between 1 and the vertex count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(inst.valuations[i].size()) != m)
      throw ValidationError("valuation row " + std::to_string(i) + " has wrong length");
    for (const Value& v : inst.valuations[i])
      if (v < 0) throw ValidationError("valuations must be non-negative");
  }
}

void validate_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.n() != inst.n())
    throw ValidationError("allocation has " + std::to_string(alloc.n()) +
                          " bundles, instance has " + std::to_string(inst.n()) + " agents");
  std::vector<char> used(inst.m(), 0);
  int total = 0;
  for (int i = 0; i < alloc.n(); ++i) {
    const auto& b = alloc.bundles[i];
    if (b.empty())
      throw ValidationError("bundle of agent " + std::to_string(i) + " is empty");
    for (size_t j = 0; j < b.size(); ++j) {
      int v = b[j];
      if (v < 0 || v >= inst.m())
        throw ValidationError("bundle of agent " + std::to_string(i) +
                              " mentions vertex " + std::to_string(v) + " out of range");
      if (j > 0 && b[j - 1] >= v)
        throw ValidationError("bundle of agent " + std::to_string(i) +
                              " is not strictly ascending");
      if (used[v])
        throw ValidationError("vertex " + std::to_string(v) + " appears in two bundles");
      used[v] = 1;
    }
    total += static_cast<int>(b.size());
    if (!inst.graph.connected_subset(b))
      throw ValidationError("bundle of agent " + std::to_string(i) + " is not connected");
  }
  if (total != inst.p)
    throw ValidationError("bundle sizes sum to " + std::to_string(total) +
                          ", expected p=" + std::to_string(inst.p));
}

}  // namespace icfd
