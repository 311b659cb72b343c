#include "colorcode.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "fairness.hpp"

namespace icfd {

uint64_t enumerate_compositions(int p, int n,
                                const std::function<bool(const std::vector<int>&)>& visit) {
  if (n < 1 || p < n) throw ParamError("need 1 <= part count <= total");
  std::vector<int> parts(n, 0);
  uint64_t count = 0;
  bool stop = false;
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (stop) return;
    if (i == n - 1) {
      parts[i] = remaining;
      ++count;
      if (!visit(parts)) stop = true;
      return;
    }
    const int hi = remaining - (n - 1 - i);
    for (int v = 1; v <= hi && !stop; ++v) {
      parts[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, p);
  return count;
}

DpTable colorful_dp(const Graph& g, const std::vector<Value>& weights,
                    const std::vector<int>& coloring, int k) {
  const int m = g.vertex_count();
  if (k < 1 || k > kMaxPalette)
    throw ParamError("palette size must be between 1 and 25");
  if (static_cast<int>(weights.size()) != m)
    throw ValidationError("one weight per vertex required");
  for (const Value& w : weights)
    if (w < 0) throw ValidationError("vertex weights must be non-negative");
  if (static_cast<int>(coloring.size()) != m)
    throw ValidationError("one color per vertex required");
  for (int c : coloring)
    if (c < 0 || c >= k) throw ValidationError("color outside the palette");

  const uint32_t limit = uint32_t{1} << k;
  DpTable t;
  t.k = k;
  t.best.assign(m, std::vector<std::optional<Value>>(limit));
  t.choice.assign(m, std::vector<std::pair<int, uint32_t>>(limit, {-1, 0}));
  // ascending masks visit every strict subset before its superset
  for (uint32_t mask = 1; mask < limit; ++mask) {
    for (int v = 0; v < m; ++v) {
      const uint32_t cb = uint32_t{1} << coloring[v];
      if (!(mask & cb)) continue;
      if (mask == cb) {
        t.best[v][mask] = weights[v];
        continue;
      }
      const uint32_t rest = mask ^ cb;
      std::optional<Value> best;
      std::pair<int, uint32_t> pick{-1, 0};
      for (uint32_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
        const auto& own = t.best[v][mask ^ sub];
        if (!own) continue;
        for (int u : g.neighbors(v)) {
          const auto& other = t.best[u][sub];
          if (!other) continue;
          Value cand = *own + *other;
          if (!best || cand > *best) {
            best = std::move(cand);
            pick = {u, sub};
          }
        }
      }
      if (best) {
        t.best[v][mask] = std::move(*best);
        t.choice[v][mask] = pick;
      }
    }
  }
  return t;
}

std::vector<int> dp_extract(const DpTable& t, int v, uint32_t mask) {
  if (v < 0 || v >= static_cast<int>(t.best.size()) || mask == 0 ||
      mask >= (uint32_t{1} << t.k) || !t.best[v][mask])
    throw ParamError("undefined table entry");
  const auto [u, sub] = t.choice[v][mask];
  if (u < 0) return {v};
  std::vector<int> out = dp_extract(t, u, sub);
  std::vector<int> rest = dp_extract(t, v, mask ^ sub);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t cc_inner_repetitions(int k, uint64_t delta_num, uint64_t delta_den) {
  if (delta_num < 1 || delta_num >= delta_den)
    throw ParamError("failure budget must lie strictly between 0 and 1");
  const long double reps =
      std::ceil(std::exp(static_cast<long double>(k)) *
                std::log(static_cast<long double>(delta_den) /
                         static_cast<long double>(delta_num)));
  if (reps > 9.0e18L) throw BudgetError("inner repetition count overflows");
  return reps < 1 ? 1 : static_cast<uint64_t>(reps);
}

std::optional<WeightedSubset> max_weight_connected_subgraph_cc(
    const Graph& g, const std::vector<Value>& weights, int k,
    const Value& threshold, Rng& rng, uint64_t delta_num, uint64_t delta_den) {
  const int m = g.vertex_count();
  if (k < 1 || k > m) throw ParamError("subgraph size out of range");
  if (k > kMaxPalette) throw ParamError("palette size must be between 1 and 25");
  // one color is exhaustive, so a single run decides exactly
  const uint64_t reps = k == 1 ? 1 : cc_inner_repetitions(k, delta_num, delta_den);
  const uint32_t full = (uint32_t{1} << k) - 1;
  std::vector<int> coloring(m, 0);
  for (uint64_t r = 0; r < reps; ++r) {
    if (k > 1)
      for (int v = 0; v < m; ++v)
        coloring[v] = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
    const DpTable t = colorful_dp(g, weights, coloring, k);
    for (int v = 0; v < m; ++v) {
      if (!t.best[v][full] || *t.best[v][full] < threshold) continue;
      std::vector<int> set = dp_extract(t, v, full);
      if (static_cast<int>(set.size()) != k || !g.connected_subset(set))
        throw std::logic_error("table reconstruction produced a bogus set");
      Value w = 0;
      for (int x : set) w += weights[x];
      return WeightedSubset{std::move(set), std::move(w)};
    }
  }
  return std::nullopt;
}

namespace {

std::vector<int> bits_to_list(uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Best connected subset of each size 1..cap, one anchored-growth pass.
void best_per_size(const Graph& g, const std::vector<Value>& w, int cap,
                   std::vector<std::optional<Value>>& bw,
                   std::vector<std::vector<int>>& bs) {
  const int m = g.vertex_count();
  bw.assign(cap + 1, std::nullopt);
  bs.assign(cap + 1, {});
  if (cap == 0 || m == 0) return;
  if (m > 64)
    throw ValidationError(
        "exhaustive inner search supports at most 64 vertices per color class");
  std::vector<uint64_t> nbr(m, 0);
  for (int v = 0; v < m; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= uint64_t{1} << u;
  std::function<void(uint64_t, int, const Value&, uint64_t, uint64_t)> grow =
      [&](uint64_t set, int size, const Value& weight, uint64_t banned,
          uint64_t allowed) {
        if (!bw[size] || weight > *bw[size]) {
          bw[size] = weight;
          bs[size] = bits_to_list(set);
        }
        if (size == cap) return;
        uint64_t ext = 0;
        uint64_t rest = set;
        while (rest != 0) {
          ext |= nbr[std::countr_zero(rest)];
          rest &= rest - 1;
        }
        ext &= allowed & ~set & ~banned;
        while (ext != 0) {
          const int v = std::countr_zero(ext);
          ext &= ext - 1;
          grow(set | (uint64_t{1} << v), size + 1, Value(weight + w[v]), banned,
               allowed);
          banned |= uint64_t{1} << v;
        }
      };
  for (int a = 0; a < m; ++a) {
    const uint64_t allowed =
        (m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1) &
        ~((uint64_t{1} << a) - 1);
    grow(uint64_t{1} << a, 1, w[a], 0, allowed);
  }
}

}  // namespace

std::optional<Allocation> is_suitable(const Instance& inst,
                                      const std::vector<int>& coloring,
                                      InnerMode mode, Rng& inner_rng,
                                      uint64_t delta_num, uint64_t delta_den) {
  validate_instance(inst);
  const int m = inst.m();
  const int n = inst.n();
  const int p = inst.p;
  if (n > kMaxPalette) throw ParamError("palette size must be between 1 and 25");
  if (static_cast<int>(coloring.size()) != m)
    throw ValidationError("one color per vertex required");
  for (int c : coloring)
    if (c < 0 || c >= n) throw ValidationError("color outside the palette");
  if (n > p) return std::nullopt;

  std::vector<std::vector<int>> klass(n);
  for (int v = 0; v < m; ++v) klass[coloring[v]].push_back(v);
  std::vector<Graph> sub(n);
  std::vector<std::vector<Value>> wts(n);
  std::vector<Value> need(n);
  for (int i = 0; i < n; ++i) {
    sub[i] = inst.graph.induced(klass[i]);
    for (int v : klass[i]) wts[i].push_back(inst.valuations[i][v]);
    need[i] = (inst.agent_total(i) + n - 1) / n;  // smallest proportional share
  }

  const int smax = p - (n - 1);
  std::vector<std::vector<std::optional<Value>>> bw(n);
  std::vector<std::vector<std::vector<int>>> bs(n);
  if (mode == InnerMode::Exact)
    for (int i = 0; i < n; ++i)
      best_per_size(sub[i], wts[i], std::min(smax, static_cast<int>(klass[i].size())),
                    bw[i], bs[i]);

  std::vector<std::map<int, std::optional<std::vector<int>>>> memo(n);
  std::optional<Allocation> result;
  enumerate_compositions(p, n, [&](const std::vector<int>& parts) {
    std::vector<std::vector<int>> bundles(n);
    for (int i = 0; i < n; ++i) {
      const int s = parts[i];
      if (s > static_cast<int>(klass[i].size())) return true;
      const std::vector<int>* local = nullptr;
      if (mode == InnerMode::Exact) {
        if (!bw[i][s] || *bw[i][s] < need[i]) return true;
        local = &bs[i][s];
      } else {
        auto it = memo[i].find(s);
        if (it == memo[i].end()) {
          auto got = max_weight_connected_subgraph_cc(
              sub[i], wts[i], s, need[i], inner_rng, delta_num, delta_den);
          std::optional<std::vector<int>> loc;
          if (got) loc = std::move(got->vertices);
          it = memo[i].emplace(s, std::move(loc)).first;
        }
        if (!it->second) return true;
        local = &*it->second;
      }
      for (const int lv : *local) bundles[i].push_back(klass[i][lv]);
    }
    result = Allocation{std::move(bundles)};
    return false;
  });
  return result;
}

SolveOutcome solve_prop_cc(const Instance& inst, const MonteCarloConfig& mc) {
  validate_instance(inst);
  if (!inst.graph.connected())
    throw ValidationError("randomized solver requires a connected item graph");
  const int n = inst.n();
  if (n > kMaxPalette) throw ParamError("palette size must be between 1 and 25");

  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  if (n > inst.p) {
    out.answer = Answer::No;  // pigeonhole, certain without any search
    out.stats.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
  }

  uint64_t reps = 0;
  if (mc.repetitions) {
    reps = *mc.repetitions;
    if (reps < 1) throw ParamError("repetition count must be positive");
  } else {
    const Value def = boost::multiprecision::pow(Value(n),
                                                 static_cast<unsigned>(inst.p));
    if (def > mc.repetition_cap) {
      std::ostringstream os;
      os << "default repetition count n^p = " << def << " exceeds the cap of "
         << mc.repetition_cap << "; pass an explicit repetition count";
      throw BudgetError(os.str());
    }
    reps = def.convert_to<uint64_t>();
  }

  std::vector<int> coloring(inst.m());
  for (uint64_t r = 0; r < reps; ++r) {
    Rng col = substream(mc.seed, 2 * r);
    for (int v = 0; v < inst.m(); ++v)
      coloring[v] = static_cast<int>(col.below(static_cast<uint64_t>(n)));
    Rng inner = substream(mc.seed, 2 * r + 1);
    auto alloc =
        is_suitable(inst, coloring, mc.inner, inner, mc.delta_num, mc.delta_den);
    out.stats.nodes = r + 1;
    if (alloc) {
      if (!check(inst, *alloc, FairnessNotion::Prop).holds)
        throw std::logic_error("assembled witness failed the fairness check");
      out.answer = Answer::Yes;
      out.witness = std::move(alloc);
      break;
    }
  }
  if (!out.witness) {
    out.answer = Answer::NoWitnessFound;
    out.stats.nodes = reps;
  }
  out.stats.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace icfd
