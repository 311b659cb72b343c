#include "kernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace icfd {

VertexCoverResult vertex_cover_approx(const Graph& g) {
  std::vector<char> matched(g.vertex_count(), 0);
  std::vector<int> cover;
  for (auto [u, v] : g.edges()) {
    if (!matched[u] && !matched[v]) {
      matched[u] = 1;
      matched[v] = 1;
      cover.push_back(u);
      cover.push_back(v);
    }
  }
  std::sort(cover.begin(), cover.end());
  return VertexCoverResult{std::move(cover), false};
}

namespace {

bool vc_search(const std::vector<std::pair<int, int>>& edges,
               std::vector<char>& in, int remaining, std::vector<int>& chosen) {
  const std::pair<int, int>* pick = nullptr;
  for (const auto& e : edges)
    if (!in[e.first] && !in[e.second]) {
      pick = &e;
      break;
    }
  if (pick == nullptr) return true;
  if (remaining == 0) return false;
  for (int w : {pick->first, pick->second}) {
    in[w] = 1;
    chosen.push_back(w);
    if (vc_search(edges, in, remaining - 1, chosen)) return true;
    chosen.pop_back();
    in[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<VertexCoverResult> vertex_cover_exact(const Graph& g, int budget) {
  if (budget < 0) throw ParamError("cover budget must be non-negative");
  for (int k = 0; k <= budget; ++k) {
    std::vector<char> in(g.vertex_count(), 0);
    std::vector<int> chosen;
    if (vc_search(g.edges(), in, k, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return VertexCoverResult{std::move(chosen), true};
    }
  }
  return std::nullopt;
}

VertexCoverResult choose_cover(const Graph& g, VcMode mode) {
  if (mode == VcMode::ExactIfSmall)
    if (auto exact = vertex_cover_exact(g, kExactCoverBudget)) return *exact;
  return vertex_cover_approx(g);
}

std::vector<int> cover_complement(int m, const std::vector<int>& cover) {
  std::vector<char> in(m, 0);
  for (int v : cover) in[v] = 1;
  std::vector<int> rest;
  for (int v = 0; v < m; ++v)
    if (!in[v]) rest.push_back(v);
  return rest;
}

int distinct_value_count(const Instance& inst, int agent_limit, int vertex_limit) {
  const int an = agent_limit < 0 ? inst.n() : agent_limit;
  const int vm = vertex_limit < 0 ? inst.m() : vertex_limit;
  std::set<Value> seen;
  for (int i = 0; i < an; ++i)
    for (int v = 0; v < vm; ++v) seen.insert(inst.valuations[i][v]);
  return static_cast<int>(seen.size());
}

int agent_type_count(const Instance& inst, int agent_limit, int vertex_limit) {
  const int an = agent_limit < 0 ? inst.n() : agent_limit;
  const int vm = vertex_limit < 0 ? inst.m() : vertex_limit;
  std::set<std::vector<Value>> rows;
  for (int i = 0; i < an; ++i)
    rows.insert(std::vector<Value>(inst.valuations[i].begin(),
                                   inst.valuations[i].begin() + vm));
  return static_cast<int>(rows.size());
}

Value envy_kernel_bound(int t, int val, int types, int p) {
  Value bound = Value(1) << t;
  bound *= boost::multiprecision::pow(Value(val), static_cast<unsigned>(types));
  bound *= p;
  return bound + t;
}

Value prop_kernel_bound(int t, int val, int types, int p, int n) {
  return envy_kernel_bound(t, val, types, p) + n;
}

std::vector<EquivalenceClass> equivalence_classes(const Instance& inst,
                                                  const std::vector<int>& cover,
                                                  int agent_limit,
                                                  int vertex_limit) {
  const int an = agent_limit < 0 ? inst.n() : agent_limit;
  const int vm = vertex_limit < 0 ? inst.m() : vertex_limit;
  std::vector<char> in_cover(vm, 0);
  for (int v : cover) {
    if (v < 0 || v >= vm) throw ValidationError("cover vertex out of range");
    in_cover[v] = 1;
  }
  for (auto [u, v] : inst.graph.edges())
    if (u < vm && v < vm && !in_cover[u] && !in_cover[v])
      throw ValidationError("not a vertex cover of the classified part");

  std::map<std::pair<std::vector<int>, std::vector<Value>>, std::vector<int>> bins;
  for (int v = 0; v < vm; ++v) {
    if (in_cover[v]) continue;
    std::vector<int> nbrs;
    for (int w : inst.graph.neighbors(v))
      if (w < vm) nbrs.push_back(w);
    std::vector<Value> column;
    column.reserve(an);
    for (int i = 0; i < an; ++i) column.push_back(inst.valuations[i][v]);
    bins[{std::move(nbrs), std::move(column)}].push_back(v);
  }

  std::vector<EquivalenceClass> out;
  out.reserve(bins.size());
  for (auto& [sig, members] : bins)
    out.push_back(EquivalenceClass{sig.first, sig.second, std::move(members)});
  return out;
}

namespace {

std::vector<int> oversize_removals(const std::vector<EquivalenceClass>& classes,
                                   int keep) {
  std::vector<int> removed;
  for (const auto& cl : classes)
    for (size_t i = keep; i < cl.members.size(); ++i)
      removed.push_back(cl.members[i]);
  std::sort(removed.begin(), removed.end());
  return removed;
}

std::vector<int> keep_after(int m, const std::vector<int>& removed) {
  std::vector<char> gone(m, 0);
  for (int v : removed) gone[v] = 1;
  std::vector<int> kept;
  for (int v = 0; v < m; ++v)
    if (!gone[v]) kept.push_back(v);
  return kept;
}

void check_bound(const KernelReport& rep) {
  if (rep.kernel.m() > rep.size_bound)
    throw std::logic_error("kernel exceeds its guaranteed size bound");
}

}  // namespace

KernelReport rr1(const Instance& inst, const VertexCoverResult& cover) {
  validate_instance(inst);
  auto classes = equivalence_classes(inst, cover.cover);
  std::vector<int> removed = oversize_removals(classes, inst.p);
  std::vector<int> kept = keep_after(inst.m(), removed);

  KernelReport rep;
  rep.kernel.graph = inst.graph.induced(kept);
  rep.kernel.p = inst.p;
  rep.kernel.valuations.assign(inst.n(), {});
  for (int i = 0; i < inst.n(); ++i) {
    rep.kernel.valuations[i].reserve(kept.size());
    for (int v : kept) rep.kernel.valuations[i].push_back(inst.valuations[i][v]);
  }
  validate_instance(rep.kernel);
  rep.vertex_origin = kept;
  std::ostringstream note;
  note << "kept the " << inst.p
       << " lowest-indexed members of each oversized class; removed "
       << removed.size() << " of " << inst.m() << " vertices";
  rep.log.push_back(RuleEvent{"rr1", std::move(removed), {}, note.str()});
  rep.cover = cover;
  rep.size_bound =
      envy_kernel_bound(static_cast<int>(cover.cover.size()),
                        distinct_value_count(inst), agent_type_count(inst), inst.p);
  rep.source_n = inst.n();
  rep.source_m = inst.m();
  rep.source_p = inst.p;
  check_bound(rep);
  return rep;
}

PropAugmented preprocess_prop(const Instance& inst, const std::vector<int>& cover) {
  validate_instance(inst);
  if (!inst.graph.connected())
    throw ValidationError("threshold preprocessing requires a connected item graph");
  const int n = inst.n();
  const int m = inst.m();
  const int anchor =
      cover.empty() ? 0 : *std::min_element(cover.begin(), cover.end());

  std::vector<std::pair<int, int>> edges = inst.graph.edges();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(m + i, m + j);
  edges.emplace_back(anchor, m);

  PropAugmented aug;
  aug.inst.graph = Graph(m + n, std::move(edges));
  aug.inst.p = inst.p + n;
  aug.inst.valuations.assign(2 * n, std::vector<Value>(m + n, 0));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < m; ++v)
      aug.inst.valuations[i][v] = inst.valuations[i][v] * 2;
  // Each agent counterweights one dummy it can never receive with its whole
  // doubled total. That doubles the agent's threshold numerator exactly as
  // the agent count doubles, so the proportionality test over the augmented
  // instance is the original test, verbatim.
  for (int i = 0; i < n; ++i)
    aug.inst.valuations[i][m + (i + 1) % n] = inst.agent_total(i) * 2;
  for (int i = 0; i < n; ++i) aug.inst.valuations[n + i][m + i] = 1;
  aug.source_n = n;
  aug.source_m = m;
  aug.anchor = anchor;
  validate_instance(aug.inst);
  return aug;
}

namespace {

void validate_prop_augmented(const PropAugmented& aug) {
  const Instance& in = aug.inst;
  const int n = aug.source_n;
  const int m = aug.source_m;
  if (n < 1 || m < 1 || in.n() != 2 * n || in.m() != m + n || in.p <= n)
    throw ValidationError("augmented instance shape mismatch");
  if (aug.anchor < 0 || aug.anchor >= m)
    throw ValidationError("anchor outside the original part");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!in.graph.has_edge(m + i, m + j))
        throw ValidationError("dummy block is not a clique");
  if (!in.graph.has_edge(aug.anchor, m))
    throw ValidationError("first dummy must attach to the anchor");
  for (int i = 0; i < n; ++i)
    for (int v : in.graph.neighbors(m + i))
      if (v < m && (i != 0 || v != aug.anchor))
        throw ValidationError("unexpected dummy attachment");
  for (int i = 0; i < n; ++i) {
    Value part = 0;
    for (int v = 0; v < m; ++v) part += in.valuations[i][v];
    for (int d = 0; d < n; ++d) {
      const Value expect = (d == (i + 1) % n) ? part : 0;
      if (in.valuations[i][m + d] != expect)
        throw ValidationError("counterweight dummy values out of balance");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < m + n; ++v) {
      const Value expect = (v == m + i) ? 1 : 0;
      if (in.valuations[n + i][v] != expect)
        throw ValidationError("dummy agent valuation pattern mismatch");
    }
}

}  // namespace

KernelReport rr2(const PropAugmented& aug, const VertexCoverResult& cover) {
  validate_prop_augmented(aug);
  const int n = aug.source_n;
  const int m = aug.source_m;
  const int p = aug.inst.p - n;
  for (int v : cover.cover)
    if (v < 0 || v >= m)
      throw ValidationError("cover must lie in the original part");

  auto classes = equivalence_classes(aug.inst, cover.cover, n, m);
  std::vector<int> removed = oversize_removals(classes, p);
  std::vector<Value> credit(n, Value(0));
  for (int v : removed)
    for (int i = 0; i < n; ++i) credit[i] += aug.inst.valuations[i][v];

  std::vector<int> kept_orig = keep_after(m, removed);
  std::vector<int> kept = kept_orig;
  for (int i = 0; i < n; ++i) kept.push_back(m + i);

  KernelReport rep;
  rep.kernel.graph = aug.inst.graph.induced(kept);
  rep.kernel.p = aug.inst.p;
  rep.kernel.valuations.assign(2 * n, {});
  for (int i = 0; i < 2 * n; ++i) {
    rep.kernel.valuations[i].reserve(kept.size());
    for (int v : kept)
      rep.kernel.valuations[i].push_back(aug.inst.valuations[i][v]);
  }
  const int kept_m = static_cast<int>(kept_orig.size());
  std::vector<Transfer> transfers;
  for (int i = 0; i < n; ++i) {
    if (credit[i] == 0) continue;
    rep.kernel.valuations[i][kept_m + i] += credit[i];
    transfers.push_back(Transfer{i, m + i, credit[i]});
  }
  validate_instance(rep.kernel);

  rep.vertex_origin = kept_orig;
  rep.vertex_origin.insert(rep.vertex_origin.end(), n, -1);
  std::ostringstream note;
  note << "kept the " << p
       << " lowest-indexed members of each oversized class; removed "
       << removed.size() << " of " << m
       << " original vertices, crediting their values to the owners' dummies";
  rep.log.push_back(
      RuleEvent{"rr2", std::move(removed), std::move(transfers), note.str()});
  rep.cover = cover;
  rep.size_bound =
      prop_kernel_bound(static_cast<int>(cover.cover.size()),
                        distinct_value_count(aug.inst, n, m),
                        agent_type_count(aug.inst, n, m), p, n);
  rep.dummy_count = n;
  rep.source_n = n;
  rep.source_m = m;
  rep.source_p = p;
  check_bound(rep);
  return rep;
}

bool rr3_fires(const Instance& kernelized, int source_n, int dummy_count) {
  const int m = kernelized.m();
  if (dummy_count < 0 || dummy_count > m || source_n < 0 ||
      source_n > dummy_count || source_n > kernelized.n())
    throw ValidationError("dummy-block metadata mismatch");
  const int orig_m = m - dummy_count;
  for (int i = 0; i < source_n; ++i) {
    Value rest = 0;
    for (int v = 0; v < orig_m; ++v) rest += kernelized.valuations[i][v];
    if (kernelized.valuations[i][orig_m + i] > rest) return true;
  }
  return false;
}

KernelReport kernelize(const Instance& inst, FairnessNotion notion, VcMode mode) {
  validate_instance(inst);
  VertexCoverResult cover = choose_cover(inst.graph, mode);
  if (notion != FairnessNotion::Prop) return rr1(inst, cover);

  PropAugmented aug = preprocess_prop(inst, cover.cover);
  KernelReport rep = rr2(aug, cover);
  std::ostringstream note;
  note << "added " << aug.source_n << " dummy agents and " << aug.source_n
       << " dummy clique vertices (first attached to vertex " << aug.anchor
       << "); doubled original values and counterweighted each agent's next "
          "dummy with its doubled total; p "
       << inst.p << " -> " << aug.inst.p;
  rep.log.insert(rep.log.begin(), RuleEvent{"preprocess", {}, {}, note.str()});
  const bool fired = rr3_fires(rep.kernel, rep.source_n, rep.dummy_count);
  rep.log.push_back(RuleEvent{
      "rr3", {}, {},
      fired ? "definitive No: an agent's dummy outweighs everything else"
            : "pass"});
  rep.definitive_no = fired;
  return rep;
}

std::string render_rule_log(const KernelReport& rep) {
  std::ostringstream os;
  os << "cover: size " << rep.cover.cover.size()
     << (rep.cover.exact ? " (exact)" : " (approximate)") << "\n";
  for (const RuleEvent& ev : rep.log) {
    os << ev.rule << ": " << ev.note << "\n";
    if (!ev.removed.empty()) {
      os << ev.rule << " removed:";
      for (int v : ev.removed) os << ' ' << v;
      os << "\n";
    }
    for (const Transfer& tr : ev.transfers)
      os << ev.rule << " transfer: agent " << tr.agent << " dummy " << tr.dummy
         << " amount " << tr.amount << "\n";
  }
  os << "kernel: m=" << rep.kernel.m() << " n=" << rep.kernel.n()
     << " p=" << rep.kernel.p << " bound=" << rep.size_bound << "\n";
  if (rep.definitive_no) os << "verdict: No\n";
  return os.str();
}

}  // namespace icfd
