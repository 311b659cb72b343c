#include "kernel.hpp"
#include "model.hpp"

namespace icfd {

StatsReport compute_stats(const Instance& inst, VcMode mode) {
  validate_instance(inst);
  StatsReport rep;
  rep.m = inst.m();
  rep.edge_count = inst.graph.edge_count();
  rep.n = inst.n();
  rep.p = inst.p;
  rep.connected = inst.graph.connected();
  if (mode == VcMode::ExactIfSmall)
    if (auto exact = vertex_cover_exact(inst.graph, kExactCoverBudget))
      rep.vcn_exact = static_cast<int>(exact->cover.size());
  rep.vcn_approx = static_cast<int>(vertex_cover_approx(inst.graph).cover.size());
  rep.distinct_value_count = distinct_value_count(inst);
  rep.agent_type_count = agent_type_count(inst);
  for (int i = 0; i < inst.n(); ++i)
    if (inst.agent_total(i) == 0) rep.agents_without_positive.push_back(i);
  return rep;
}

}  // namespace icfd
