#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "errors.hpp"
#include "fairness.hpp"

namespace icfd {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::NoWitnessFound: return "NoWitnessFound";
  }
  return "?";
}

namespace {

constexpr int kMaskLimit = 64;

std::vector<int> mask_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

// Prune hook: called after fixing one more bundle; true skips the branch.
using Pruner = std::function<bool(int agent, const std::vector<std::vector<int>>&)>;

struct Enumerator {
  const Instance& inst;
  const std::function<bool(const Allocation&)>& visit;
  const Pruner* prune;
  uint64_t budget;

  int m, n, p;
  std::vector<uint64_t> nbr;  // per-vertex neighborhood bitmask
  uint64_t nodes = 0;
  uint64_t complete = 0;
  bool stopped = false;
  std::vector<std::vector<int>> bundles;

  Enumerator(const Instance& inst_, const std::function<bool(const Allocation&)>& visit_,
             const Pruner* prune_, uint64_t budget_)
      : inst(inst_), visit(visit_), prune(prune_), budget(budget_) {
    m = inst.m();
    n = inst.n();
    p = inst.p;
    nbr.assign(m, 0);
    for (int v = 0; v < m; ++v)
      for (int w : inst.graph.neighbors(v)) nbr[v] |= uint64_t{1} << w;
  }

  void bump() {
    if (++nodes > budget) throw BudgetError("node budget exceeded");
  }

  uint64_t neighborhood(uint64_t set) const {
    uint64_t out = 0;
    uint64_t rest = set;
    while (rest != 0) {
      out |= nbr[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    return out & ~set;
  }

  void run() {
    if (n > p) return;  // some bundle would be empty
    assign(0, (m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1), p);
  }

  void assign(int agent, uint64_t free, int slots) {
    if (stopped) return;
    if (agent == n) {
      Allocation alloc{bundles};
      ++complete;
      if (!visit(alloc)) stopped = true;
      return;
    }
    if (std::popcount(free) < slots) return;
    int max_sz = slots - (n - agent - 1);
    if (max_sz <= 0) return;
    int need = (agent == n - 1) ? slots : 0;  // last bundle takes the rest
    uint64_t anchors = free;
    while (anchors != 0 && !stopped) {
      int a = std::countr_zero(anchors);
      anchors &= anchors - 1;
      // a is the lowest vertex of the bundle, so only higher free vertices
      // may extend it
      uint64_t allowed = free & ~((uint64_t{1} << a) - 1);
      grow(agent, uint64_t{1} << a, 1, 0, allowed, free, slots, max_sz, need);
    }
  }

  void grow(int agent, uint64_t set, int size, uint64_t banned, uint64_t allowed,
            uint64_t free, int slots, int max_sz, int need) {
    bump();
    if (need == 0 || size == need) {
      bundles.push_back(mask_vertices(set));
      if (prune == nullptr || !(*prune)(agent, bundles))
        assign(agent + 1, free & ~set, slots - size);
      bundles.pop_back();
      if (stopped) return;
    }
    if (size == max_sz) return;
    uint64_t ext = neighborhood(set) & allowed & ~banned;
    while (ext != 0 && !stopped) {
      int v = std::countr_zero(ext);
      ext &= ext - 1;
      grow(agent, set | (uint64_t{1} << v), size + 1, banned, allowed, free,
           slots, max_sz, need);
      banned |= uint64_t{1} << v;  // later branches must avoid v
    }
  }
};

void require_mask_width(int m) {
  if (m > kMaskLimit)
    throw ValidationError("exhaustive search supports at most 64 vertices");
}

}  // namespace

uint64_t enumerate_allocations(const Instance& inst,
                               const std::function<bool(const Allocation&)>& visit,
                               const SolveLimits& limits) {
  validate_instance(inst);
  require_mask_width(inst.m());
  Enumerator en(inst, visit, nullptr, limits.node_budget);
  en.run();
  return en.complete;
}

SolveOutcome solve_exhaustive(const Instance& inst, FairnessNotion notion,
                              const SolveLimits& limits) {
  validate_instance(inst);
  if (!inst.graph.connected())
    throw ValidationError("exhaustive solver requires a connected item graph");
  require_mask_width(inst.m());

  auto start = std::chrono::steady_clock::now();
  SolveOutcome out;

  std::vector<Value> totals(inst.n());
  for (int i = 0; i < inst.n(); ++i) totals[i] = inst.agent_total(i);

  Pruner pruner;
  if (limits.aggressive && notion == FairnessNotion::Prop) {
    pruner = [&](int agent, const std::vector<std::vector<int>>& bundles) {
      // an underfed bundle can never be fixed by later assignments
      return Value(inst.bundle_value(agent, bundles[agent]) * inst.n()) <
             totals[agent];
    };
  } else if (limits.aggressive && notion == FairnessNotion::Ef) {
    pruner = [&](int agent, const std::vector<std::vector<int>>& bundles) {
      const Value own = inst.bundle_value(agent, bundles[agent]);
      for (int j = 0; j < agent; ++j) {
        if (own < inst.bundle_value(agent, bundles[j])) return true;
        if (inst.bundle_value(j, bundles[j]) <
            inst.bundle_value(j, bundles[agent]))
          return true;
      }
      return false;
    };
  }

  std::function<bool(const Allocation&)> visit = [&](const Allocation& alloc) {
    if (check(inst, alloc, notion).holds) {
      out.answer = Answer::Yes;
      out.witness = alloc;
      return false;
    }
    return true;
  };

  Enumerator en(inst, visit, pruner ? &pruner : nullptr, limits.node_budget);
  en.run();
  out.stats.nodes = en.nodes;
  out.stats.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!out.witness) out.answer = Answer::No;
  return out;
}

std::optional<WeightedSubset> max_weight_connected_subgraph_exact(
    const Graph& g, const std::vector<Value>& weights, int k) {
  if (static_cast<int>(weights.size()) != g.vertex_count())
    throw ValidationError("one weight per vertex required");
  for (const Value& w : weights)
    if (w < 0) throw ValidationError("vertex weights must be non-negative");
  if (k < 1 || k > g.vertex_count())
    throw ParamError("subgraph size out of range");
  require_mask_width(g.vertex_count());

  const int m = g.vertex_count();
  std::vector<uint64_t> nbr(m, 0);
  for (int v = 0; v < m; ++v)
    for (int w : g.neighbors(v)) nbr[v] |= uint64_t{1} << w;

  std::optional<WeightedSubset> best;
  auto consider = [&](uint64_t set) {
    std::vector<int> vs = mask_vertices(set);
    Value total = 0;
    for (int v : vs) total += weights[v];
    if (!best || total > best->weight ||
        (total == best->weight && vs < best->vertices))
      best = WeightedSubset{std::move(vs), std::move(total)};
  };

  // anchored growth: each connected k-set is reached once, anchored at its
  // lowest vertex
  std::function<void(uint64_t, int, uint64_t, uint64_t)> grow =
      [&](uint64_t set, int size, uint64_t banned, uint64_t allowed) {
        if (size == k) {
          consider(set);
          return;
        }
        uint64_t ext = 0;
        uint64_t rest = set;
        while (rest != 0) {
          ext |= nbr[std::countr_zero(rest)];
          rest &= rest - 1;
        }
        ext &= allowed & ~set & ~banned;
        while (ext != 0) {
          int v = std::countr_zero(ext);
          ext &= ext - 1;
          grow(set | (uint64_t{1} << v), size + 1, banned, allowed);
          banned |= uint64_t{1} << v;
        }
      };
  for (int a = 0; a <= m - k; ++a) {
    uint64_t allowed = (m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1) &
                       ~((uint64_t{1} << a) - 1);
    grow(uint64_t{1} << a, 1, 0, allowed);
  }
  return best;
}

std::optional<std::vector<int>> solve_ksum_brute(const KSumInstance& ks) {
  const int n = ks.n_values();
  if (ks.k < 0) throw ParamError("subset size must be non-negative");
  if (ks.k == 0) {
    if (ks.target == 0) return std::vector<int>{};
    return std::nullopt;
  }
  if (ks.k > n) return std::nullopt;

  std::vector<int> idx(ks.k);
  for (int i = 0; i < ks.k; ++i) idx[i] = i;
  while (true) {
    Value sum = 0;
    for (int i : idx) sum += ks.values[i];
    if (sum == ks.target) return idx;
    // advance to the lexicographically next combination
    int i = ks.k - 1;
    while (i >= 0 && idx[i] == n - ks.k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < ks.k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> solve_rbds_brute(const RbdsInstance& rb) {
  validate_rbds(rb);
  std::vector<uint64_t> dominators(rb.t_count, 0);  // N-sets seen per T vertex
  if (rb.n_count > kMaskLimit)
    throw ValidationError("dominating-set search supports at most 64 candidates");
  for (auto [t, nv] : rb.edges) dominators[t] |= uint64_t{1} << nv;

  if (rb.t_count == 0) return std::vector<int>{};
  for (const uint64_t d : dominators)
    if (d == 0) return std::nullopt;  // an isolated T vertex is undominated

  const int cap = std::min(rb.k, rb.n_count);
  for (int s = 1; s <= cap; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      uint64_t set = 0;
      for (int i : idx) set |= uint64_t{1} << i;
      bool ok = true;
      for (const uint64_t d : dominators)
        if ((d & set) == 0) {
          ok = false;
          break;
        }
      if (ok) return idx;
      int i = s - 1;
      while (i >= 0 && idx[i] == rb.n_count - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace icfd
