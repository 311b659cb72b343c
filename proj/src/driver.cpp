#include "driver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "fairness.hpp"

namespace icfd {

const char* method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Brute: return "brute";
    case SolveMethod::Colorcode: return "colorcode";
    case SolveMethod::Auto: return "auto";
  }
  return "?";
}

std::optional<SolveMethod> method_from_name(const std::string& s) {
  if (s == "brute") return SolveMethod::Brute;
  if (s == "colorcode") return SolveMethod::Colorcode;
  if (s == "auto") return SolveMethod::Auto;
  return std::nullopt;
}

namespace {

// Kernel bundles consist of source vertices; dummies live only in dummy
// agents' bundles, which the threshold lift drops.
std::vector<int> map_bundle(const KernelReport& rep, const std::vector<int>& bundle) {
  std::vector<int> out;
  out.reserve(bundle.size());
  for (int v : bundle) {
    const int orig = rep.vertex_origin.at(v);
    if (orig < 0) throw std::logic_error("a lifted bundle contains a dummy vertex");
    out.push_back(orig);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Adds unallocated vertices adjacent to existing bundles until exactly p
// vertices are allocated; lowest vertex joins its lowest-indexed neighbor
// bundle. Extending a bundle never lowers its value, so the threshold
// notion survives padding.
void pad_allocation(const Instance& inst, Allocation& alloc) {
  std::vector<char> used(inst.m(), 0);
  int total = 0;
  for (const auto& b : alloc.bundles) {
    total += static_cast<int>(b.size());
    for (int v : b) used[v] = 1;
  }
  while (total < inst.p) {
    bool grown = false;
    for (int v = 0; v < inst.m() && !grown; ++v) {
      if (used[v]) continue;
      for (size_t i = 0; i < alloc.bundles.size() && !grown; ++i)
        for (int w : alloc.bundles[i]) {
          if (!inst.graph.has_edge(v, w)) continue;
          alloc.bundles[i].push_back(v);
          used[v] = 1;
          grown = true;
          break;
        }
    }
    if (!grown)
      throw std::logic_error("padding stalled; the item graph must be connected");
    ++total;
  }
  for (auto& b : alloc.bundles) std::sort(b.begin(), b.end());
}

Allocation lift_witness(const Instance& original, FairnessNotion notion,
                        const KernelReport& rep, const Allocation& kernel_witness) {
  Allocation lifted;
  if (notion == FairnessNotion::Prop) {
    // source agents come first; dummy agents keep only dummy-block vertices
    lifted.bundles.reserve(rep.source_n);
    for (int i = 0; i < rep.source_n; ++i)
      lifted.bundles.push_back(map_bundle(rep, kernel_witness.bundles[i]));
    pad_allocation(original, lifted);
  } else {
    lifted.bundles.reserve(kernel_witness.bundles.size());
    for (const auto& b : kernel_witness.bundles)
      lifted.bundles.push_back(map_bundle(rep, b));
  }
  validate_allocation(original, lifted);
  if (!check(original, lifted, notion).holds)
    throw std::logic_error("lifted witness fails the fairness check");
  return lifted;
}

SolveResponse brute_on_kernel(const Instance& inst, const SolveRequest& req,
                              KernelReport rep) {
  SolveResponse resp;
  SolveOutcome out = solve_exhaustive(rep.kernel, req.notion, req.limits);
  resp.answer = out.answer;
  resp.stats = out.stats;
  if (out.witness)
    resp.witness = lift_witness(inst, req.notion, rep, *out.witness);
  resp.kernel = std::move(rep);
  resp.strategy = "kernel+brute";
  return resp;
}

SolveResponse colorcode_after_kernel(const Instance& inst, const SolveRequest& req,
                                     KernelReport rep) {
  SolveResponse resp;
  SolveOutcome out = solve_prop_cc(inst, req.mc);
  resp.answer = out.answer;
  resp.witness = std::move(out.witness);
  resp.stats = out.stats;
  resp.kernel = std::move(rep);
  resp.strategy = "kernel+colorcode";
  return resp;
}

SolveResponse definitive_no(KernelReport rep) {
  SolveResponse resp;
  resp.answer = Answer::No;
  resp.kernel = std::move(rep);
  resp.strategy = "kernel+rr3";
  return resp;
}

}  // namespace

SolveResponse run_solve(const Instance& inst, const SolveRequest& req) {
  validate_instance(inst);
  if (req.method == SolveMethod::Colorcode && req.notion != FairnessNotion::Prop)
    throw ParamError("the randomized method covers only the threshold notion");

  if (inst.n() > inst.p) {
    SolveResponse resp;
    resp.answer = Answer::No;
    resp.strategy = "trivial";
    return resp;
  }

  switch (req.method) {
    case SolveMethod::Brute: {
      if (!req.kernelize_first) {
        SolveOutcome out = solve_exhaustive(inst, req.notion, req.limits);
        SolveResponse resp;
        resp.answer = out.answer;
        resp.witness = std::move(out.witness);
        resp.stats = out.stats;
        resp.strategy = "brute";
        return resp;
      }
      KernelReport rep = kernelize(inst, req.notion, req.vc_mode);
      if (rep.definitive_no) return definitive_no(std::move(rep));
      return brute_on_kernel(inst, req, std::move(rep));
    }
    case SolveMethod::Colorcode: {
      if (!req.kernelize_first) {
        SolveOutcome out = solve_prop_cc(inst, req.mc);
        SolveResponse resp;
        resp.answer = out.answer;
        resp.witness = std::move(out.witness);
        resp.stats = out.stats;
        resp.strategy = "colorcode";
        return resp;
      }
      KernelReport rep = kernelize(inst, req.notion, req.vc_mode);
      if (rep.definitive_no) return definitive_no(std::move(rep));
      return colorcode_after_kernel(inst, req, std::move(rep));
    }
    case SolveMethod::Auto: {
      KernelReport rep = kernelize(inst, req.notion, req.vc_mode);
      if (rep.definitive_no) return definitive_no(std::move(rep));
      if (rep.kernel.m() <= kAutoBruteVertexLimit)
        return brute_on_kernel(inst, req, std::move(rep));
      if (req.notion == FairnessNotion::Prop)
        return colorcode_after_kernel(inst, req, std::move(rep));
      std::ostringstream msg;
      msg << "kernel keeps " << rep.kernel.m()
          << " vertices, above the exhaustive limit of " << kAutoBruteVertexLimit
          << ", and no randomized method covers this notion";
      throw BudgetError(msg.str());
    }
  }
  throw ParamError("unknown solve method");
}

}  // namespace icfd
