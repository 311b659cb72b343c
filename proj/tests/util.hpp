#pragma once
// Shared test helpers. The oracles here deliberately use different
// algorithms than the library: allocations come from p-subset selection
// plus agent labeling (not anchored bundle growth), connectivity from a
// local BFS, and fairness from literal exists/forall scans over removable
// vertices. Agreement between the two stacks is the point of the tests.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fairness.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "rng.hpp"

namespace testutil {

using icfd::Allocation;
using icfd::FairnessNotion;
using icfd::Graph;
using icfd::Instance;
using icfd::Value;

inline bool bfs_connected(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int v : verts) in[v] = 1;
  std::vector<int> stack{verts[0]};
  seen[verts[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == verts.size();
}

inline std::vector<Allocation> naive_allocations(const Instance& inst) {
  std::vector<Allocation> out;
  const int m = inst.m(), n = inst.n(), p = inst.p;
  if (n > p || p > m) return out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> label(p, 0);
    for (;;) {
      Allocation a;
      a.bundles.assign(n, {});
      for (int i = 0; i < p; ++i) a.bundles[label[i]].push_back(idx[i]);
      bool ok = true;
      for (int g = 0; g < n && ok; ++g)
        ok = !a.bundles[g].empty() && bfs_connected(inst.graph, a.bundles[g]);
      if (ok) out.push_back(std::move(a));
      int d = p - 1;
      while (d >= 0 && label[d] == n - 1) label[d--] = 0;
      if (d < 0) break;
      ++label[d];
    }
    int i = p - 1;
    while (i >= 0 && idx[i] == m - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline Value sum_without(const Instance& inst, int agent, const std::vector<int>& bundle,
                         int skip = -1) {
  Value s = 0;
  for (int v : bundle)
    if (v != skip) s += inst.valuations[agent][v];
  return s;
}

inline std::vector<int> naive_tau(const Graph& g, const std::vector<int>& bundle) {
  if (bundle.size() == 1) return bundle;
  std::vector<int> out;
  for (int v : bundle) {
    std::vector<int> rest;
    for (int u : bundle)
      if (u != v) rest.push_back(u);
    if (bfs_connected(g, rest)) out.push_back(v);
  }
  return out;
}

inline bool naive_fair(const Instance& inst, const Allocation& a, FairnessNotion notion) {
  const int n = inst.n();
  if (notion == FairnessNotion::Prop) {
    for (int i = 0; i < n; ++i)
      if (sum_without(inst, i, a.bundles[i]) * n < inst.agent_total(i)) return false;
    return true;
  }
  for (int i = 0; i < n; ++i) {
    const Value mine = sum_without(inst, i, a.bundles[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (notion == FairnessNotion::Ef) {
        if (mine < sum_without(inst, i, a.bundles[j])) return false;
        continue;
      }
      const auto tau = naive_tau(inst.graph, a.bundles[j]);
      if (notion == FairnessNotion::Ef1) {
        bool some = false;
        for (int v : tau)
          if (mine >= sum_without(inst, i, a.bundles[j], v)) {
            some = true;
            break;
          }
        if (!some) return false;
      } else {
        for (int v : tau)
          if (mine < sum_without(inst, i, a.bundles[j], v)) return false;
      }
    }
  }
  return true;
}

inline icfd::Answer naive_solve(const Instance& inst, FairnessNotion notion) {
  for (const auto& a : naive_allocations(inst))
    if (naive_fair(inst, a, notion)) return icfd::Answer::Yes;
  return icfd::Answer::No;
}

// Connected graph whose vertex cover is at most cover_size: the cover
// vertices form a path, every other vertex attaches only to cover vertices.
inline Graph random_low_vc_graph(icfd::Rng& rng, int m, int cover_size) {
  if (cover_size > m) cover_size = m;
  std::vector<std::pair<int, int>> edges;
  for (int c = 1; c < cover_size; ++c) edges.emplace_back(c - 1, c);
  for (int v = cover_size; v < m; ++v) {
    const int deg = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(cover_size)));
    std::vector<int> picks;
    for (int c = 0; c < cover_size; ++c) picks.push_back(c);
    for (int i = 0; i < deg; ++i) {
      const int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(picks.size() - i)));
      std::swap(picks[i], picks[j]);
      edges.emplace_back(picks[i], v);
    }
  }
  return Graph(m, std::move(edges));
}

// Instance over a low-cover graph with values drawn from a palette of at
// most `palette` distinct numbers, so both kernel parameters stay small.
inline Instance random_low_vc_instance(icfd::Rng& rng, int m, int cover_size, int n, int p,
                                       int palette) {
  Instance inst;
  inst.graph = random_low_vc_graph(rng, m, cover_size);
  inst.p = p;
  std::vector<Value> values;
  for (int i = 0; i < palette; ++i) values.push_back(Value(i));
  inst.valuations.assign(n, std::vector<Value>(m));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < m; ++v)
      inst.valuations[i][v] = values[rng.below(values.size())];
  return inst;
}

// Random connected graph: random attachment tree plus extra edges.
inline Graph random_connected_graph(icfd::Rng& rng, int m, int extra_edges) {
  std::vector<std::pair<int, int>> edges;
  auto add_once = [&edges](int u, int v) {
    const std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  for (int v = 1; v < m; ++v)
    add_once(static_cast<int>(rng.below(static_cast<uint64_t>(v))), v);
  for (int e = 0; e < extra_edges && m >= 2; ++e) {
    int u = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
    int v = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
    if (u != v) add_once(u, v);
  }
  return Graph(m, std::move(edges));
}

inline Instance random_instance(icfd::Rng& rng, int m, int n, int p, int max_val,
                                int extra_edges, bool identical = false) {
  Instance inst;
  inst.graph = random_connected_graph(rng, m, extra_edges);
  inst.p = p;
  inst.valuations.assign(n, std::vector<Value>(m));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < m; ++v)
      inst.valuations[i][v] =
          identical && i > 0 ? inst.valuations[0][v]
                             : Value(rng.below(static_cast<uint64_t>(max_val) + 1));
  return inst;
}

inline Instance with_p(const Instance& inst, int p) {
  Instance out = inst;
  out.p = p;
  return out;
}

}  // namespace testutil
