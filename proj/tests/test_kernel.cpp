#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "errors.hpp"
#include "kernel.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "util.hpp"

using namespace icfd;

namespace {

Instance make(Graph g, std::vector<std::vector<Value>> vals, int p) {
  Instance inst;
  inst.graph = std::move(g);
  inst.valuations = std::move(vals);
  inst.p = p;
  return inst;
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int l = 1; l <= leaves; ++l) edges.emplace_back(0, l);
  return Graph(leaves + 1, std::move(edges));
}

bool covers(const Graph& g, const std::vector<int>& cover) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : cover) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

}  // namespace

TEST_CASE("matching cover: frozen small graphs") {
  CHECK(vertex_cover_approx(star(4)).cover.size() == 2);
  CHECK(vertex_cover_approx(Graph(3, {})).cover.empty());
  CHECK(vertex_cover_approx(Graph(3, {{0, 1}, {0, 2}, {1, 2}})).cover.size() == 2);
  CHECK(!vertex_cover_approx(star(4)).exact);
}

TEST_CASE("exact cover: frozen small graphs") {
  auto one = vertex_cover_exact(star(4), 1);
  REQUIRE(one.has_value());
  CHECK(one->cover == std::vector<int>{0});
  CHECK(one->exact);
  CHECK(!vertex_cover_exact(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 1).has_value());
  auto p4 = vertex_cover_exact(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), 2);
  REQUIRE(p4.has_value());
  CHECK(p4->cover.size() == 2);
}

TEST_CASE("exact cover is minimum and the approximation at most doubles it") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(8));
    Graph g = testutil::random_connected_graph(rng, m, 3);
    auto approx = vertex_cover_approx(g);
    CHECK(covers(g, approx.cover));
    auto exact = vertex_cover_exact(g, m);
    REQUIRE(exact.has_value());
    CHECK(covers(g, exact->cover));
    CHECK(exact->cover.size() <= approx.cover.size());
    CHECK(approx.cover.size() <= 2 * exact->cover.size());
    // no cover smaller than the exact one exists
    CHECK(!vertex_cover_exact(g, static_cast<int>(exact->cover.size()) - 1).has_value());
  }
}

TEST_CASE("choose_cover honors the mode") {
  Graph g = star(4);
  CHECK(choose_cover(g, VcMode::ExactIfSmall).exact);
  CHECK(choose_cover(g, VcMode::ExactIfSmall).cover.size() == 1);
  CHECK(!choose_cover(g, VcMode::ApproxOnly).exact);
}

TEST_CASE("equivalence classes: star leaves split by value") {
  Instance inst = make(star(5), {{0, 1, 1, 1, 1, 1}}, 2);
  auto classes = equivalence_classes(inst, {0});
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members == std::vector<int>{1, 2, 3, 4, 5});
  inst.valuations[0][3] = 2;
  classes = equivalence_classes(inst, {0});
  CHECK(classes.size() == 2);
}

TEST_CASE("equivalence classes partition the complement and respect signatures") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng.below(8));
    const int n = 1 + static_cast<int>(rng.below(3));
    Instance inst = testutil::random_low_vc_instance(rng, m, 3, n, 2, 3);
    auto cover = choose_cover(inst.graph, VcMode::ExactIfSmall);
    auto classes = equivalence_classes(inst, cover.cover);
    std::set<int> seen;
    for (const auto& c : classes) {
      REQUIRE(!c.members.empty());
      for (int v : c.members) {
        CHECK(!seen.count(v));
        seen.insert(v);
        CHECK(std::find(cover.cover.begin(), cover.cover.end(), v) == cover.cover.end());
        std::vector<int> nbrs = inst.graph.neighbors(v);
        std::sort(nbrs.begin(), nbrs.end());
        CHECK(nbrs == c.cover_neighbors);
        for (int i = 0; i < n; ++i) CHECK(inst.valuations[i][v] == c.column[i]);
      }
    }
    CHECK(seen.size() == static_cast<size_t>(m - cover.cover.size()));
    // class count bound from the kernel-size argument
    const int t = static_cast<int>(cover.cover.size());
    const int val = distinct_value_count(inst);
    Value limit = Value(1) << t;
    for (int i = 0; i < n; ++i) limit *= val;
    CHECK(Value(static_cast<int>(classes.size())) <= limit);
  }
}

TEST_CASE("rr1 trims a fat star class to p members") {
  Instance inst = make(star(7), {{0, 1, 1, 1, 1, 1, 1, 1}}, 3);
  auto cover = choose_cover(inst.graph, VcMode::ExactIfSmall);
  KernelReport rep = rr1(inst, cover);
  CHECK(rep.kernel.m() == 4);  // center + 3 leaves
  CHECK(rep.vertex_origin == std::vector<int>{0, 1, 2, 3});
  CHECK(solve_exhaustive(inst, FairnessNotion::Ef).answer ==
        solve_exhaustive(rep.kernel, FairnessNotion::Ef).answer);
  CHECK(Value(rep.kernel.m()) <= rep.size_bound);
}

TEST_CASE("rr1 leaves classes of size p untouched") {
  Instance inst = make(star(3), {{0, 1, 1, 1}}, 3);
  auto rep = rr1(inst, choose_cover(inst.graph, VcMode::ExactIfSmall));
  CHECK(rep.kernel.m() == 4);
}

TEST_CASE("rr1 with everything in the cover is the identity") {
  Instance inst = make(Graph(3, {{0, 1}, {1, 2}, {0, 2}}), {{1, 2, 3}}, 2);
  VertexCoverResult cover;
  cover.cover = {0, 1, 2};
  cover.exact = false;
  auto rep = rr1(inst, cover);
  CHECK(rep.kernel.m() == 3);
  CHECK(rep.vertex_origin == std::vector<int>{0, 1, 2});
}

TEST_CASE("rr1 kernel preserves values and adjacency through vertex_origin") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 4 + static_cast<int>(rng.below(8));
    const int n = 1 + static_cast<int>(rng.below(3));
    const int p = 1 + static_cast<int>(rng.below(4));
    Instance inst = testutil::random_low_vc_instance(rng, m, 3, n, std::min(p, m), 3);
    auto rep = rr1(inst, choose_cover(inst.graph, VcMode::ExactIfSmall));
    const int km = rep.kernel.m();
    REQUIRE(static_cast<int>(rep.vertex_origin.size()) == km);
    for (int a = 0; a < km; ++a) {
      for (int i = 0; i < n; ++i)
        CHECK(rep.kernel.valuations[i][a] == inst.valuations[i][rep.vertex_origin[a]]);
      for (int b = a + 1; b < km; ++b)
        CHECK(rep.kernel.graph.has_edge(a, b) ==
              inst.graph.has_edge(rep.vertex_origin[a], rep.vertex_origin[b]));
    }
  }
}

TEST_CASE("preprocess: dummy clique, anchor edge, doubled and counterweighted values") {
  Instance inst = make(Graph(3, {{0, 1}, {1, 2}}), {{1, 2, 3}, {4, 0, 1}}, 2);
  auto cover = choose_cover(inst.graph, VcMode::ExactIfSmall);
  PropAugmented aug = preprocess_prop(inst, cover.cover);
  CHECK(aug.source_m == 3);
  CHECK(aug.source_n == 2);
  CHECK(aug.inst.m() == 5);
  CHECK(aug.inst.n() == 4);
  CHECK(aug.inst.p == 4);
  CHECK(aug.inst.graph.has_edge(3, 4));           // dummy clique
  CHECK(aug.inst.graph.has_edge(aug.anchor, 3));  // d_1 attached to the cover
  CHECK(aug.anchor == 1);                         // lowest cover vertex of the path
  for (int v = 0; v < 3; ++v) {
    CHECK(aug.inst.valuations[0][v] == inst.valuations[0][v] * 2);
    CHECK(aug.inst.valuations[1][v] == inst.valuations[1][v] * 2);
  }
  // agent 0 counterweights d_2, agent 1 counterweights d_1
  CHECK(aug.inst.valuations[0][3] == Value(0));
  CHECK(aug.inst.valuations[0][4] == Value(12));
  CHECK(aug.inst.valuations[1][3] == Value(10));
  CHECK(aug.inst.valuations[1][4] == Value(0));
  // dummy agents want exactly their own dummy
  CHECK(aug.inst.valuations[2][3] == Value(1));
  CHECK(aug.inst.valuations[2][4] == Value(0));
  CHECK(aug.inst.valuations[3][4] == Value(1));
}

TEST_CASE("preprocess preserves the brute-force answer") {
  Rng rng(14);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(4));  // up to 5
    const int n = 1 + static_cast<int>(rng.below(2));
    const int p = std::min(m, n + static_cast<int>(rng.below(3)));
    Instance inst = testutil::random_instance(rng, m, n, p, 3, 2);
    auto cover = choose_cover(inst.graph, VcMode::ExactIfSmall);
    PropAugmented aug = preprocess_prop(inst, cover.cover);
    auto before = solve_exhaustive(inst, FairnessNotion::Prop).answer;
    auto after = solve_exhaustive(aug.inst, FairnessNotion::Prop).answer;
    CHECK(before == after);
    (before == Answer::Yes ? yes : no) += 1;
  }
  CHECK(yes >= 10);
  CHECK(no >= 10);
}

TEST_CASE("rr2: two deletions from a fat class credit the owner's dummy") {
  // Augmented star, one source agent: center plus p+2 leaves worth 5 each,
  // dummy value balancing the 20-point original part. Deleting two leaves
  // must move exactly 10 points onto the dummy.
  PropAugmented aug;
  aug.source_n = 1;
  aug.source_m = 5;
  aug.anchor = 0;
  aug.inst = make(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}),
                  {{0, 5, 5, 5, 5, 20}, {0, 0, 0, 0, 0, 1}}, 3);
  VertexCoverResult cover;
  cover.cover = {0};
  cover.exact = true;

  KernelReport rep = rr2(aug, cover);
  CHECK(rep.kernel.m() == 4);  // center, two leaves, dummy
  REQUIRE(rep.log.size() == 1);
  CHECK(rep.log[0].rule == "rr2");
  CHECK(rep.log[0].removed == std::vector<int>{3, 4});
  REQUIRE(rep.log[0].transfers.size() == 1);
  CHECK(rep.log[0].transfers[0].agent == 0);
  CHECK(rep.log[0].transfers[0].dummy == 5);
  CHECK(rep.log[0].transfers[0].amount == Value(10));
  CHECK(rep.kernel.valuations[0].back() == Value(30));
  // conservation: agent 0 total unchanged
  Value total = 0;
  for (const auto& v : rep.kernel.valuations[0]) total += v;
  CHECK(total == Value(40));
  CHECK(rep.vertex_origin == std::vector<int>{0, 1, 2, -1});
}

TEST_CASE("rr2 without fat classes only passes through") {
  PropAugmented aug;
  aug.source_n = 1;
  aug.source_m = 2;
  aug.anchor = 0;
  aug.inst = make(Graph(3, {{0, 1}, {0, 2}}), {{3, 4, 7}, {0, 0, 1}}, 2);
  VertexCoverResult cover;
  cover.cover = {0};
  cover.exact = true;
  KernelReport rep = rr2(aug, cover);
  CHECK(rep.kernel.m() == 3);
  for (const auto& e : rep.log) CHECK(e.transfers.empty());
}

TEST_CASE("rr3 needs a strict majority on the dummy") {
  // u(d) equal to the rest: pass-through
  Instance boundary = make(Graph(3, {{0, 1}, {1, 2}}), {{5, 5, 10}, {0, 0, 1}}, 2);
  CHECK(!rr3_fires(boundary, 1, 1));
  // one more point on the dummy: fires
  Instance over = make(Graph(3, {{0, 1}, {1, 2}}), {{5, 4, 10}, {0, 0, 1}}, 2);
  CHECK(rr3_fires(over, 1, 1));
}

TEST_CASE("prop pipeline: fat identical star forces the shortcut") {
  Instance inst = make(star(4), {{0, 5, 5, 5, 5}}, 2);
  KernelReport rep = kernelize(inst, FairnessNotion::Prop);
  CHECK(rep.definitive_no);
  CHECK(solve_exhaustive(inst, FairnessNotion::Prop).answer == Answer::No);
}

TEST_CASE("prop pipeline preserves brute answers end to end") {
  Rng rng(15);
  int yes = 0, no = 0, shortcut = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(5));  // up to 6
    const int n = 1 + static_cast<int>(rng.below(2));
    const int p = std::min(m, n + static_cast<int>(rng.below(3)));  // up to 4
    Instance inst = testutil::random_instance(rng, m, n, p, 3, 2);
    auto before = solve_exhaustive(inst, FairnessNotion::Prop).answer;
    KernelReport rep = kernelize(inst, FairnessNotion::Prop);
    CHECK(Value(rep.kernel.m()) <= rep.size_bound);
    Answer after;
    if (rep.definitive_no) {
      after = Answer::No;
      ++shortcut;
    } else {
      after = solve_exhaustive(rep.kernel, FairnessNotion::Prop).answer;
    }
    CHECK(before == after);
    (before == Answer::Yes ? yes : no) += 1;
    // conservation: each original agent's kernel total is four times the
    // source total (doubling plus the equal counterweight)
    for (int i = 0; i < n; ++i) {
      Value total = 0;
      for (const auto& v : rep.kernel.valuations[i]) total += v;
      CHECK(total == inst.agent_total(i) * 4);
    }
  }
  CHECK(yes >= 10);
  CHECK(no >= 10);
}

TEST_CASE("envy kernels preserve brute answers on low-cover instances") {
  Rng rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 4 + static_cast<int>(rng.below(9));  // up to 12
    const int n = 1 + static_cast<int>(rng.below(3));
    const int p = std::min(m, 1 + static_cast<int>(rng.below(5)));
    if (n > p) continue;
    Instance inst = testutil::random_low_vc_instance(rng, m, 3, n, p, 3);
    for (auto notion : {FairnessNotion::Ef, FairnessNotion::Ef1, FairnessNotion::Efx}) {
      KernelReport rep = kernelize(inst, notion);
      CHECK(Value(rep.kernel.m()) <= rep.size_bound);
      CHECK(solve_exhaustive(inst, notion).answer ==
            solve_exhaustive(rep.kernel, notion).answer);
    }
  }
}

TEST_CASE("envy kernelization is idempotent") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 4 + static_cast<int>(rng.below(9));
    Instance inst = testutil::random_low_vc_instance(rng, m, 3, 2, 3, 3);
    KernelReport once = kernelize(inst, FairnessNotion::Ef1);
    KernelReport twice = kernelize(once.kernel, FairnessNotion::Ef1);
    CHECK(twice.kernel.m() == once.kernel.m());
  }
}

TEST_CASE("size bounds: frozen formulas") {
  CHECK(envy_kernel_bound(2, 3, 2, 4) == Value(4 * 9 * 4 + 2));
  CHECK(prop_kernel_bound(2, 3, 2, 4, 3) == Value(4 * 9 * 4 + 2 + 3));
  CHECK(envy_kernel_bound(0, 1, 1, 1) == Value(1));
}

TEST_CASE("rule log renders cover, rules and kernel shape") {
  Instance inst = make(star(7), {{0, 1, 1, 1, 1, 1, 1, 1}}, 3);
  KernelReport rep = kernelize(inst, FairnessNotion::Efx);
  std::string log = render_rule_log(rep);
  CHECK(log.find("cover: size 1 (exact)") != std::string::npos);
  CHECK(log.find("rr1 removed:") != std::string::npos);
  CHECK(log.find("kernel: m=4") != std::string::npos);
}

TEST_CASE("synthesized augmented instances are validated") {
  PropAugmented aug;
  aug.source_n = 1;
  aug.source_m = 2;
  aug.anchor = 0;
  // counterweight out of balance: dummy worth 99, part worth 7
  aug.inst = make(Graph(3, {{0, 1}, {0, 2}}), {{3, 4, 99}, {0, 0, 1}}, 2);
  VertexCoverResult cover;
  cover.cover = {0};
  cover.exact = true;
  CHECK_THROWS_AS(rr2(aug, cover), ValidationError);
}
