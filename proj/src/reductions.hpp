#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "model.hpp"
#include "sources.hpp"

namespace icfd {

struct GeneratedInstance {
  Instance inst;
  std::vector<std::string> names;     // one label per vertex
  FairnessNotion notion;              // the notion the gadget targets
  std::optional<Allocation> witness;  // present iff the source is solvable
  std::string meta;                   // one-line generator summary
};

// Star gadget for the subset-sum source: center d1 (worth 1 + sum of all
// values), leaf d2 (worth 1 + sum + target), one leaf per source value, two
// agents with identical valuations, p = k + 2. The star is envy-free
// partitionable exactly when some k values hit the target.
GeneratedInstance gen_ksum_ef(const KSumInstance& ks);

// Six-vertex spine with pendant value vertices for the up-to-one notions,
// three agents, p = k + 6. The two notions share the matrix except that the
// relaxed-minimum variant zeroes agent 3's value of x1. Needs k >= 2 and
// at least k + 2 source values.
GeneratedInstance gen_ksum_envy(const KSumInstance& ks, FairnessNotion notion);

// Dominating-set gadgets: d1 and d2 join the dominated side, both adjacent
// to every candidate. Two identical agents.
GeneratedInstance gen_rbds_prop(const RbdsInstance& rb);  // p = |T| + k + 2

// Dispatches on the parity of |T| + k + 2; the even case adds a pendant d3
// on d1 and raises p by one.
GeneratedInstance gen_rbds_ef(const RbdsInstance& rb);

// The large two-type gadget for the up-to-one notions: X/Y fans on d2,
// 32k|T| pendants per Y vertex, one pendant per candidate, 2|T| + 6 agents,
// p = 8k|T| + 24k. Needs k >= 2 and |T| >= 2.
GeneratedInstance gen_rbds_envy(const RbdsInstance& rb, FairnessNotion notion);

// Seeded random connected instance: attachment tree plus density-controlled
// extra edges, values uniform in [0, max_val].
Instance gen_random(int m, int n, int p, const Value& max_val, double density,
                    uint64_t seed);

// Instance text with a "# name <index> <label>" comment per vertex.
std::string render_generated(const GeneratedInstance& g);

}  // namespace icfd
