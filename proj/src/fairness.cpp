#include "fairness.hpp"

#include <algorithm>

#include "errors.hpp"

namespace icfd {

std::vector<int> tau(const Graph& g, const std::vector<int>& bundle) {
  if (bundle.empty()) throw ValidationError("tau of an empty bundle");
  if (!g.connected_subset(bundle)) throw ValidationError("tau of a disconnected bundle");
  std::vector<int> out;
  std::vector<int> rest;
  rest.reserve(bundle.size() - 1);
  for (int v : bundle) {
    rest.clear();
    for (int u : bundle)
      if (u != v) rest.push_back(u);
    if (g.connected_subset(rest)) out.push_back(v);
  }
  return out;
}

namespace {

struct Prepared {
  int n = 0;
  std::vector<std::vector<Value>> matrix;  // matrix[i][j] = u_i(pi_j)
  std::vector<Value> totals;
  std::vector<std::vector<int>> taus;
};

Prepared prepare(const Instance& inst, const Allocation& alloc, bool need_tau) {
  validate_allocation(inst, alloc);
  Prepared pr;
  pr.n = inst.n();
  pr.matrix.assign(pr.n, std::vector<Value>(pr.n, 0));
  pr.totals.resize(pr.n);
  for (int i = 0; i < pr.n; ++i) {
    pr.totals[i] = inst.agent_total(i);
    for (int j = 0; j < pr.n; ++j) pr.matrix[i][j] = inst.bundle_value(i, alloc.bundles[j]);
  }
  if (need_tau) {
    pr.taus.reserve(pr.n);
    for (int j = 0; j < pr.n; ++j) pr.taus.push_back(tau(inst.graph, alloc.bundles[j]));
  }
  return pr;
}

CheckResult eval_prop(const Instance& inst, const Prepared& pr) {
  for (int i = 0; i < pr.n; ++i) {
    Value lhs = Value(inst.n()) * pr.matrix[i][i];  // cleared denominator, exact
    if (lhs < pr.totals[i]) {
      Violation v;
      v.agent = i;
      v.lhs = lhs;
      v.rhs = pr.totals[i];
      return {false, v};
    }
  }
  return {true, std::nullopt};
}

CheckResult eval_ef(const Prepared& pr) {
  for (int i = 0; i < pr.n; ++i)
    for (int j = 0; j < pr.n; ++j) {
      if (i == j) continue;
      if (pr.matrix[i][i] < pr.matrix[i][j]) {
        Violation v;
        v.agent = i;
        v.other = j;
        v.lhs = pr.matrix[i][i];
        v.rhs = pr.matrix[i][j];
        return {false, v};
      }
    }
  return {true, std::nullopt};
}

// up_to_max: drop the most valuable removable vertex; otherwise the least.
CheckResult eval_up_to_one(const Instance& inst, const Prepared& pr, bool up_to_max) {
  for (int i = 0; i < pr.n; ++i)
    for (int j = 0; j < pr.n; ++j) {
      if (i == j) continue;
      const auto& tj = pr.taus[j];
      int pivot = tj[0];
      Value best = inst.valuations[i][tj[0]];
      for (size_t idx = 1; idx < tj.size(); ++idx) {
        const Value& val = inst.valuations[i][tj[idx]];
        if (up_to_max ? (val > best) : (val < best)) {
          best = val;
          pivot = tj[idx];
        }
      }
      Value rhs = pr.matrix[i][j] - best;  // may be negative, exact signed
      if (pr.matrix[i][i] < rhs) {
        Violation v;
        v.agent = i;
        v.other = j;
        v.pivot = pivot;
        v.lhs = pr.matrix[i][i];
        v.rhs = rhs;
        return {false, v};
      }
    }
  return {true, std::nullopt};
}

}  // namespace

CheckResult check(const Instance& inst, const Allocation& alloc, FairnessNotion notion) {
  Prepared pr = prepare(inst, alloc, notion == FairnessNotion::Ef1 || notion == FairnessNotion::Efx);
  switch (notion) {
    case FairnessNotion::Prop: return eval_prop(inst, pr);
    case FairnessNotion::Ef: return eval_ef(pr);
    case FairnessNotion::Ef1: return eval_up_to_one(inst, pr, true);
    case FairnessNotion::Efx: return eval_up_to_one(inst, pr, false);
  }
  throw ParamError("unknown fairness notion");
}

std::array<CheckResult, 4> check_all(const Instance& inst, const Allocation& alloc) {
  Prepared pr = prepare(inst, alloc, true);
  return {eval_prop(inst, pr), eval_ef(pr), eval_up_to_one(inst, pr, true),
          eval_up_to_one(inst, pr, false)};
}

}  // namespace icfd
