#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "colorcode.hpp"
#include "kernel.hpp"
#include "model.hpp"
#include "oracle.hpp"

namespace icfd {

enum class SolveMethod { Brute = 0, Colorcode = 1, Auto = 2 };

const char* method_name(SolveMethod m);
std::optional<SolveMethod> method_from_name(const std::string& s);

// Kernels above this size are not brute-forced by the automatic strategy.
inline constexpr int kAutoBruteVertexLimit = 18;

struct SolveRequest {
  FairnessNotion notion = FairnessNotion::Prop;
  SolveMethod method = SolveMethod::Auto;
  bool kernelize_first = false;  // explicit methods only; Auto always kernelizes
  SolveLimits limits;
  MonteCarloConfig mc;
  VcMode vc_mode = VcMode::ExactIfSmall;
};

struct SolveResponse {
  Answer answer = Answer::No;
  std::optional<Allocation> witness;  // always on the caller's instance
  SolveStats stats;
  std::string strategy;               // the plan that produced the answer
  std::optional<KernelReport> kernel;
};

// Strategy resolution over the solvers:
//   brute         exhaustive search, optionally on the kernel (witness lifted)
//   colorcode     threshold notion only; the kernel pipeline contributes only
//                 its definitive-No shortcut (its agent doubling would inflate
//                 the repetition count), sampling runs on the given instance
//   auto          kernelize, brute the kernel when it is small enough, else
//                 fall back to color coding (threshold notion) or report the
//                 kernel as beyond budget (envy notions)
// n > p is answered No immediately regardless of method.
SolveResponse run_solve(const Instance& inst, const SolveRequest& req);

}  // namespace icfd
