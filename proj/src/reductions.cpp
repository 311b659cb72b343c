#include "reductions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "fairness.hpp"
#include "format.hpp"
#include "oracle.hpp"
#include "rng.hpp"

namespace icfd {

namespace {

void require_ksum_values(const KSumInstance& ks) {
  if (ks.target < 0) throw ParamError("target must be non-negative");
  for (const Value& a : ks.values)
    if (a < 0) throw ParamError("source values must be non-negative");
}

std::vector<std::vector<Value>> identical_rows(int n, std::vector<Value> row) {
  std::vector<std::vector<Value>> rows(n, row);
  return rows;
}

void attach_witness(GeneratedInstance& g, std::optional<Allocation> w) {
  if (!w) return;
  for (auto& b : w->bundles) std::sort(b.begin(), b.end());
  validate_allocation(g.inst, *w);
  if (!check(g.inst, *w, g.notion).holds)
    throw std::logic_error("constructed witness fails its fairness target");
  g.witness = std::move(w);
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

// Pads a dominating set to exactly k candidates, lowest indices first.
std::vector<int> pad_to_k(const std::vector<int>& base, int k, int n_count) {
  std::vector<char> in(n_count, 0);
  for (int v : base) in[v] = 1;
  std::vector<int> out = base;
  for (int v = 0; v < n_count && static_cast<int>(out.size()) < k; ++v) {
    if (in[v]) continue;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GeneratedInstance gen_ksum_ef(const KSumInstance& ks) {
  require_ksum_values(ks);
  const int N = ks.n_values();
  if (ks.k < 2) throw ParamError("subset size must be at least 2");
  if (N < ks.k) throw ParamError("need at least k source values");

  Value C = 0;
  for (const Value& a : ks.values) C += a;

  const int d1 = N;
  const int d2 = N + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i) edges.emplace_back(i, d1);
  edges.emplace_back(d1, d2);

  std::vector<Value> row(N + 2);
  for (int i = 0; i < N; ++i) row[i] = ks.values[i];
  row[d1] = C + 1;
  row[d2] = C + 1 + ks.target;

  GeneratedInstance g;
  g.inst.graph = Graph(N + 2, std::move(edges));
  g.inst.valuations = identical_rows(2, std::move(row));
  g.inst.p = ks.k + 2;
  g.notion = FairnessNotion::Ef;
  for (int i = 0; i < N; ++i) g.names.push_back("v" + std::to_string(i + 1));
  g.names.push_back("d1");
  g.names.push_back("d2");
  validate_instance(g.inst);

  auto S = solve_ksum_brute(ks);
  std::ostringstream meta;
  meta << "family=ksum-ef k=" << ks.k << " target=" << ks.target
       << " values=" << N << " source=" << yes_no(S.has_value());
  g.meta = meta.str();
  if (S) {
    std::vector<int> b1 = *S;
    b1.push_back(d1);
    attach_witness(g, Allocation{{std::move(b1), {d2}}});
  }
  return g;
}

GeneratedInstance gen_ksum_envy(const KSumInstance& ks, FairnessNotion notion) {
  if (notion != FairnessNotion::Ef1 && notion != FairnessNotion::Efx)
    throw ParamError("gadget targets only the up-to-one notions");
  require_ksum_values(ks);
  const int N = ks.n_values();
  if (ks.k < 2) throw ParamError("subset size must be at least 2");
  if (N < ks.k + 2) throw ParamError("need at least k + 2 source values");

  Value C = 0;
  for (const Value& a : ks.values) C += a;
  const Value NC = C * N;
  const Value spine = NC * 3 + C * ks.k + ks.target;   // x4 for agents 1, 2
  const Value claim = NC * 2 + C * ks.k + ks.target;   // x3 for agent 3

  // x1..x6 occupy 0..5, value vertices follow
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
  for (int j = 0; j < N; ++j) edges.emplace_back(1, 6 + j);

  std::vector<std::vector<Value>> rows(3, std::vector<Value>(6 + N, 0));
  for (int i = 0; i < 3; ++i) {
    rows[i][0] = NC;
    rows[i][1] = NC * 2;
    for (int j = 0; j < N; ++j) rows[i][6 + j] = C + ks.values[j];
  }
  rows[0][3] = spine;
  rows[1][3] = spine;
  rows[2][2] = claim;
  if (notion == FairnessNotion::Efx) rows[2][0] = 0;

  GeneratedInstance g;
  g.inst.graph = Graph(6 + N, std::move(edges));
  g.inst.valuations = std::move(rows);
  g.inst.p = ks.k + 6;
  g.notion = notion;
  for (int i = 0; i < 6; ++i) g.names.push_back("x" + std::to_string(i + 1));
  for (int j = 0; j < N; ++j) g.names.push_back("v" + std::to_string(j + 1));
  validate_instance(g.inst);

  auto S = solve_ksum_brute(ks);
  std::ostringstream meta;
  meta << "family=ksum-" << notion_name(notion) << " k=" << ks.k
       << " target=" << ks.target << " values=" << N
       << " source=" << yes_no(S.has_value());
  g.meta = meta.str();
  if (S) {
    std::vector<int> b1 = {0, 1};
    for (int s : *S) b1.push_back(6 + s);
    attach_witness(g, Allocation{{std::move(b1), {3, 4, 5}, {2}}});
  }
  return g;
}

namespace {

struct RbdsLayout {
  int t = 0;   // dominated side, ids 0..t-1
  int nc = 0;  // candidate side, ids t..t+nc-1
  int d1 = 0;
  int d2 = 0;
};

void require_rbds(const RbdsInstance& rb) {
  validate_rbds(rb);
  if (rb.t_count < 1 || rb.n_count < 1)
    throw ParamError("both sides must be non-empty");
  if (rb.k < 1 || rb.k > rb.n_count)
    throw ParamError("budget must lie between 1 and the candidate count");
}

}  // namespace

GeneratedInstance gen_rbds_prop(const RbdsInstance& rb) {
  require_rbds(rb);
  const int t = rb.t_count;
  const int nc = rb.n_count;
  const int d1 = t + nc;
  const int d2 = t + nc + 1;

  std::vector<std::pair<int, int>> edges;
  for (auto [ti, ni] : rb.edges) edges.emplace_back(ti, t + ni);
  for (int j = 0; j < nc; ++j) {
    edges.emplace_back(t + j, d1);
    edges.emplace_back(t + j, d2);
  }

  std::vector<Value> row(t + nc + 2, 0);
  for (int i = 0; i < t; ++i) row[i] = 1;
  row[d1] = t + 1;
  row[d2] = 1;

  GeneratedInstance g;
  g.inst.graph = Graph(t + nc + 2, std::move(edges));
  g.inst.valuations = identical_rows(2, std::move(row));
  g.inst.p = t + rb.k + 2;
  g.notion = FairnessNotion::Prop;
  for (int i = 0; i < t; ++i) g.names.push_back("t" + std::to_string(i + 1));
  for (int j = 0; j < nc; ++j) g.names.push_back("n" + std::to_string(j + 1));
  g.names.push_back("d1");
  g.names.push_back("d2");
  validate_instance(g.inst);

  auto S = solve_rbds_brute(rb);
  std::ostringstream meta;
  meta << "family=rbds-prop t-side=" << t << " candidates=" << nc
       << " budget=" << rb.k << " source=" << yes_no(S.has_value());
  g.meta = meta.str();
  if (S) {
    std::vector<int> b2;
    for (int i = 0; i < t; ++i) b2.push_back(i);
    for (int v : pad_to_k(*S, rb.k, nc)) b2.push_back(t + v);
    b2.push_back(d2);
    attach_witness(g, Allocation{{{d1}, std::move(b2)}});
  }
  return g;
}

GeneratedInstance gen_rbds_ef(const RbdsInstance& rb) {
  require_rbds(rb);
  const int t = rb.t_count;
  const int nc = rb.n_count;
  const int d1 = t + nc;
  const int d2 = t + nc + 1;
  const bool even = (t + rb.k + 2) % 2 == 0;
  const int d3 = even ? t + nc + 2 : -1;
  const int m = t + nc + 2 + (even ? 1 : 0);

  std::vector<std::pair<int, int>> edges;
  for (auto [ti, ni] : rb.edges) edges.emplace_back(ti, t + ni);
  for (int j = 0; j < nc; ++j) {
    edges.emplace_back(t + j, d1);
    edges.emplace_back(t + j, d2);
  }
  if (even) edges.emplace_back(d1, d3);

  std::vector<Value> row(m, 0);
  for (int i = 0; i < t; ++i) row[i] = 1;
  for (int j = 0; j < nc; ++j) row[t + j] = Value(5) * t;
  row[d2] = 1;
  // either variant's intended bundles weigh 5kt + t + 1 each; the even
  // variant parks 2 of that on the pendant, so a balanced split spends an
  // odd size budget there and cannot trade the pendant for loose units
  row[d1] = even ? Value(5) * rb.k * t + t - 1 : Value(5) * rb.k * t + t + 1;
  if (even) row[d3] = 2;

  GeneratedInstance g;
  g.inst.graph = Graph(m, std::move(edges));
  g.inst.valuations = identical_rows(2, std::move(row));
  g.inst.p = t + rb.k + 2 + (even ? 1 : 0);
  g.notion = FairnessNotion::Ef;
  for (int i = 0; i < t; ++i) g.names.push_back("t" + std::to_string(i + 1));
  for (int j = 0; j < nc; ++j) g.names.push_back("n" + std::to_string(j + 1));
  g.names.push_back("d1");
  g.names.push_back("d2");
  if (even) g.names.push_back("d3");
  validate_instance(g.inst);

  auto S = solve_rbds_brute(rb);
  std::ostringstream meta;
  meta << "family=rbds-ef variant=" << (even ? "even" : "odd")
       << " t-side=" << t << " candidates=" << nc << " budget=" << rb.k
       << " source=" << yes_no(S.has_value());
  g.meta = meta.str();
  if (S) {
    std::vector<int> b1 = {d1};
    if (even) b1.push_back(d3);
    std::vector<int> b2;
    for (int i = 0; i < t; ++i) b2.push_back(i);
    for (int v : pad_to_k(*S, rb.k, nc)) b2.push_back(t + v);
    b2.push_back(d2);
    attach_witness(g, Allocation{{std::move(b1), std::move(b2)}});
  }
  return g;
}

GeneratedInstance gen_rbds_envy(const RbdsInstance& rb, FairnessNotion notion) {
  if (notion != FairnessNotion::Ef1 && notion != FairnessNotion::Efx)
    throw ParamError("gadget targets only the up-to-one notions");
  require_rbds(rb);
  if (rb.k < 2 || rb.t_count < 2)
    throw ParamError("gadget needs budget >= 2 and at least 2 dominated vertices");
  const int t = rb.t_count;
  const int nc = rb.n_count;
  const int k = rb.k;
  const int zs = 32 * k * t;  // pendant fan per y vertex
  const int d1 = t + nc;
  const int d2 = t + nc + 1;
  const int base_x = t + nc + 2;
  const int base_y = base_x + (t + 3);
  const int base_z = base_y + (t + 1);
  const int base_w = base_z + (t + 1) * zs;
  const int m = base_w + nc;

  std::vector<std::pair<int, int>> edges;
  for (auto [ti, ni] : rb.edges) edges.emplace_back(ti, t + ni);
  for (int j = 0; j < nc; ++j) edges.emplace_back(t + j, d1);
  edges.emplace_back(d1, d2);
  for (int i = 0; i < t + 3; ++i) edges.emplace_back(d2, base_x + i);
  for (int j = 0; j < t + 1; ++j) {
    edges.emplace_back(d2, base_y + j);
    for (int l = 0; l < zs; ++l)
      edges.emplace_back(base_y + j, base_z + j * zs + l);
  }
  for (int i = 0; i < nc; ++i) edges.emplace_back(t + i, base_w + i);

  const Value five_t = Value(5) * t;
  const Value big = Value(5) * k * t + t + 1;  // x for II, y for I
  const Value anchor = Value(10) * k * t;      // d2 for both types
  std::vector<Value> row1(m, 0);               // first agent type
  std::vector<Value> row2(m, 0);               // second agent type
  for (int i = 0; i < t; ++i) row1[i] = row2[i] = 1;
  row1[d1] = row2[d1] = 1;
  row1[d2] = row2[d2] = anchor;
  for (int j = 0; j < nc; ++j) {
    row2[t + j] = five_t;
    row1[base_w + j] = five_t;
  }
  for (int i = 0; i < t + 3; ++i) row2[base_x + i] = big;
  for (int j = 0; j < t + 1; ++j) row1[base_y + j] = big;

  GeneratedInstance g;
  g.inst.graph = Graph(m, std::move(edges));
  const int n = 2 * t + 6;
  g.inst.valuations.reserve(n);
  for (int i = 0; i < t + 3; ++i) g.inst.valuations.push_back(row1);
  for (int i = 0; i < t + 3; ++i) g.inst.valuations.push_back(row2);
  g.inst.p = 8 * k * t + 24 * k;
  g.notion = notion;
  for (int i = 0; i < t; ++i) g.names.push_back("t" + std::to_string(i + 1));
  for (int j = 0; j < nc; ++j) g.names.push_back("n" + std::to_string(j + 1));
  g.names.push_back("d1");
  g.names.push_back("d2");
  for (int i = 0; i < t + 3; ++i) g.names.push_back("x" + std::to_string(i + 1));
  for (int j = 0; j < t + 1; ++j) g.names.push_back("y" + std::to_string(j + 1));
  for (int j = 0; j < t + 1; ++j)
    for (int l = 0; l < zs; ++l)
      g.names.push_back("z^" + std::to_string(j + 1) + "_" + std::to_string(l + 1));
  for (int i = 0; i < nc; ++i) g.names.push_back("w" + std::to_string(i + 1));
  validate_instance(g.inst);

  auto S = solve_rbds_brute(rb);
  const int zl = g.inst.p - (2 * k + 3 * t + 6);  // bundle sizes must sum to p
  std::ostringstream meta;
  meta << "family=rbds-" << notion_name(notion) << " t-side=" << t
       << " candidates=" << nc << " budget=" << k
       << " source=" << yes_no(S.has_value());
  if (S) meta << " z-prefix=" << zl;
  g.meta = meta.str();
  if (S) {
    std::vector<std::vector<int>> bundles(n);
    for (int i = 0; i < t; ++i) bundles[0].push_back(i);
    for (int v : pad_to_k(*S, k, nc)) {
      bundles[0].push_back(t + v);
      bundles[0].push_back(base_w + v);
    }
    bundles[0].push_back(d1);
    bundles[1] = {d2};
    bundles[2].push_back(base_y);
    for (int l = 0; l < zl; ++l) bundles[2].push_back(base_z + l);
    for (int a = 3; a < t + 3; ++a) bundles[a] = {base_y + a - 2};
    for (int a = t + 3; a < n; ++a) bundles[a] = {base_x + (a - t - 3)};
    attach_witness(g, Allocation{std::move(bundles)});
  }
  return g;
}

Instance gen_random(int m, int n, int p, const Value& max_val, double density,
                    uint64_t seed) {
  if (m < 1 || n < 1 || p < 1 || p > m)
    throw ParamError("need m >= 1, n >= 1, 1 <= p <= m");
  if (max_val < 0 || max_val > Value("1000000000000000000"))
    throw ParamError("maximum value must lie in [0, 10^18]");
  if (!(density >= 0.0 && density <= 1.0))
    throw ParamError("density must lie in [0, 1]");

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> present(m, std::vector<char>(m, 0));
  for (int v = 1; v < m; ++v) {
    const int parent = static_cast<int>(rng.below(static_cast<uint64_t>(v)));
    edges.emplace_back(parent, v);
    present[parent][v] = 1;
  }
  const uint64_t threshold =
      static_cast<uint64_t>(std::llround(density * 4294967296.0));
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      if (present[u][v]) continue;
      if ((rng.next_u64() >> 32) < threshold) edges.emplace_back(u, v);
    }

  Instance inst;
  inst.graph = Graph(m, std::move(edges));
  inst.p = p;
  const uint64_t bound = max_val.convert_to<uint64_t>() + 1;
  inst.valuations.assign(n, std::vector<Value>(m));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < m; ++v) inst.valuations[i][v] = rng.below(bound);
  validate_instance(inst);
  return inst;
}

std::string render_generated(const GeneratedInstance& g) {
  const std::string body = serialize_instance(g.inst);
  const size_t first = body.find('\n');
  const size_t second = body.find('\n', first + 1);
  std::ostringstream extra;
  extra << "# " << g.meta << "\n";
  for (size_t i = 0; i < g.names.size(); ++i)
    extra << "# name " << i << ' ' << g.names[i] << "\n";
  return body.substr(0, second + 1) + extra.str() + body.substr(second + 1);
}

}  // namespace icfd
