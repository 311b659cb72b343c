// C binding. Exceptions stop here: every entry point funnels through
// guarded(), which turns the error taxonomy into status codes and stashes
// the message in a thread-local slot for icfd_last_error().

#include "icfd/icfd.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "colorcode.hpp"
#include "driver.hpp"
#include "errors.hpp"
#include "fairness.hpp"
#include "format.hpp"
#include "kernel.hpp"
#include "model.hpp"
#include "reductions.hpp"
#include "sources.hpp"

struct icfd_instance {
  icfd::Instance v;
};

struct icfd_allocation {
  icfd::Allocation v;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
icfd_status guarded(F&& body) {
  try {
    body();
    g_error.clear();
    return ICFD_OK;
  } catch (const icfd::ParseError& e) {
    g_error = e.what();
    return ICFD_ERR_PARSE;
  } catch (const icfd::ValidationError& e) {
    g_error = e.what();
    return ICFD_ERR_VALIDATION;
  } catch (const icfd::ParamError& e) {
    g_error = e.what();
    return ICFD_ERR_PARAM;
  } catch (const icfd::BudgetError& e) {
    g_error = e.what();
    return ICFD_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_error = e.what();
    return ICFD_ERR_INTERNAL;
  }
}

void require(bool ok, const char* msg) {
  if (!ok) throw icfd::ParamError(msg);
}

icfd::FairnessNotion to_notion(icfd_notion n) {
  switch (n) {
    case ICFD_NOTION_PROP: return icfd::FairnessNotion::Prop;
    case ICFD_NOTION_EF: return icfd::FairnessNotion::Ef;
    case ICFD_NOTION_EF1: return icfd::FairnessNotion::Ef1;
    case ICFD_NOTION_EFX: return icfd::FairnessNotion::Efx;
  }
  throw icfd::ParamError("unknown fairness notion code");
}

icfd::SolveMethod to_method(icfd_method m) {
  switch (m) {
    case ICFD_METHOD_BRUTE: return icfd::SolveMethod::Brute;
    case ICFD_METHOD_COLORCODE: return icfd::SolveMethod::Colorcode;
    case ICFD_METHOD_AUTO: return icfd::SolveMethod::Auto;
  }
  throw icfd::ParamError("unknown solve method code");
}

icfd::VcMode to_vc_mode(icfd_vc_mode m) {
  switch (m) {
    case ICFD_VC_EXACT_IF_SMALL: return icfd::VcMode::ExactIfSmall;
    case ICFD_VC_APPROX_ONLY: return icfd::VcMode::ApproxOnly;
  }
  throw icfd::ParamError("unknown vertex cover mode code");
}

icfd::InnerMode to_inner_mode(icfd_inner_mode m) {
  switch (m) {
    case ICFD_INNER_EXACT: return icfd::InnerMode::Exact;
    case ICFD_INNER_COLORCODE: return icfd::InnerMode::Colorcode;
  }
  throw icfd::ParamError("unknown inner search mode code");
}

}  // namespace

extern "C" {

const char* icfd_version(void) { return "1.0.0"; }

const char* icfd_last_error(void) { return g_error.c_str(); }

void icfd_string_free(char* s) { std::free(s); }

icfd_status icfd_instance_parse(const char* text, icfd_instance** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text and out must not be NULL");
    *out = new icfd_instance{icfd::parse_instance(text)};
  });
}

icfd_status icfd_instance_serialize(const icfd_instance* inst, char** out_text) {
  return guarded([&] {
    require(inst != nullptr && out_text != nullptr, "instance and out must not be NULL");
    *out_text = dup_string(icfd::serialize_instance(inst->v));
  });
}

void icfd_instance_free(icfd_instance* inst) { delete inst; }

int icfd_instance_m(const icfd_instance* inst) { return inst ? inst->v.m() : -1; }
int icfd_instance_n(const icfd_instance* inst) { return inst ? inst->v.n() : -1; }
int icfd_instance_p(const icfd_instance* inst) { return inst ? inst->v.p : -1; }

icfd_status icfd_allocation_parse(const char* text, const icfd_instance* inst,
                                  icfd_allocation** out) {
  return guarded([&] {
    require(text != nullptr && inst != nullptr && out != nullptr,
            "text, instance and out must not be NULL");
    auto alloc = icfd::parse_allocation(text, inst->v);
    icfd::validate_allocation(inst->v, alloc);
    *out = new icfd_allocation{std::move(alloc)};
  });
}

icfd_status icfd_allocation_serialize(const icfd_allocation* alloc, char** out_text) {
  return guarded([&] {
    require(alloc != nullptr && out_text != nullptr, "allocation and out must not be NULL");
    *out_text = dup_string(icfd::serialize_allocation(alloc->v));
  });
}

void icfd_allocation_free(icfd_allocation* alloc) { delete alloc; }

icfd_status icfd_verify(const icfd_instance* inst, const icfd_allocation* alloc,
                        icfd_notion notion, int* out_fair, char** out_violation) {
  return guarded([&] {
    require(inst != nullptr && alloc != nullptr && out_fair != nullptr,
            "instance, allocation and out must not be NULL");
    if (out_violation) *out_violation = nullptr;
    auto res = icfd::check(inst->v, alloc->v, to_notion(notion));
    *out_fair = res.holds ? 1 : 0;
    if (!res.holds && res.violation && out_violation) {
      const auto& v = *res.violation;
      std::ostringstream os;
      os << "agent=" << v.agent;
      if (v.other >= 0) os << " other=" << v.other;
      if (v.pivot) os << " pivot=" << *v.pivot;
      os << " lhs=" << v.lhs << " rhs=" << v.rhs;
      *out_violation = dup_string(os.str());
    }
  });
}

void icfd_solve_options_init(icfd_solve_options* opts) {
  if (!opts) return;
  std::memset(opts, 0, sizeof(*opts));
  const icfd::SolveLimits limits;
  const icfd::MonteCarloConfig mc;
  opts->struct_size = sizeof(*opts);
  opts->notion = ICFD_NOTION_PROP;
  opts->method = ICFD_METHOD_AUTO;
  opts->node_budget = limits.node_budget;
  opts->repetitions = 0;  // default count
  opts->repetition_cap = static_cast<int64_t>(mc.repetition_cap);
  opts->inner = ICFD_INNER_EXACT;
  opts->inner_delta_num = mc.delta_num;
  opts->inner_delta_den = mc.delta_den;
  opts->vc_mode = ICFD_VC_EXACT_IF_SMALL;
}

icfd_status icfd_solve(const icfd_instance* inst, const icfd_solve_options* opts,
                       icfd_solve_result* out) {
  if (out) std::memset(out, 0, sizeof(*out));
  icfd_status st = guarded([&] {
    require(inst != nullptr && opts != nullptr && out != nullptr,
            "instance, options and out must not be NULL");
    require(opts->struct_size == sizeof(icfd_solve_options),
            "options size mismatch; initialize with icfd_solve_options_init");
    require(opts->node_budget > 0, "node budget must be positive");
    require(opts->repetition_cap > 0, "repetition cap must be positive");
    require(opts->inner_delta_num >= 1 && opts->inner_delta_num < opts->inner_delta_den,
            "inner miss budget must satisfy 1 <= num < den");

    icfd::SolveRequest req;
    req.notion = to_notion(opts->notion);
    req.method = to_method(opts->method);
    req.kernelize_first = opts->kernelize != 0;
    req.limits.node_budget = opts->node_budget;
    req.limits.aggressive = opts->aggressive != 0;
    req.mc.seed = opts->seed;
    if (opts->repetitions > 0)
      req.mc.repetitions = static_cast<uint64_t>(opts->repetitions);
    req.mc.repetition_cap = static_cast<uint64_t>(opts->repetition_cap);
    req.mc.inner = to_inner_mode(opts->inner);
    req.mc.delta_num = opts->inner_delta_num;
    req.mc.delta_den = opts->inner_delta_den;
    req.vc_mode = to_vc_mode(opts->vc_mode);

    auto resp = icfd::run_solve(inst->v, req);
    out->answer = static_cast<icfd_answer>(static_cast<int>(resp.answer));
    if (resp.witness) out->witness = new icfd_allocation{std::move(*resp.witness)};
    out->nodes = resp.stats.nodes;
    out->elapsed_sec = resp.stats.elapsed_sec;
    out->strategy = dup_string(resp.strategy);
    if (resp.kernel) {
      out->kernelized = 1;
      out->kernel_m = resp.kernel->kernel.m();
      out->kernel_bound = dup_string(resp.kernel->size_bound.str());
      out->kernel_definitive_no = resp.kernel->definitive_no ? 1 : 0;
    }
  });
  if (st != ICFD_OK) icfd_solve_result_dispose(out);
  return st;
}

void icfd_solve_result_dispose(icfd_solve_result* result) {
  if (!result) return;
  icfd_allocation_free(result->witness);
  std::free(result->strategy);
  std::free(result->kernel_bound);
  std::memset(result, 0, sizeof(*result));
}

icfd_status icfd_kernelize(const icfd_instance* inst, icfd_notion notion,
                           icfd_vc_mode vc_mode, icfd_kernel_result* out) {
  if (out) std::memset(out, 0, sizeof(*out));
  icfd_status st = guarded([&] {
    require(inst != nullptr && out != nullptr, "instance and out must not be NULL");
    auto rep = icfd::kernelize(inst->v, to_notion(notion), to_vc_mode(vc_mode));
    out->rule_log = dup_string(icfd::render_rule_log(rep));
    out->definitive_no = rep.definitive_no ? 1 : 0;
    out->size_bound = dup_string(rep.size_bound.str());
    out->cover_size = static_cast<int>(rep.cover.cover.size());
    out->cover_exact = rep.cover.exact ? 1 : 0;
    out->vertex_origin_len = static_cast<int>(rep.vertex_origin.size());
    out->vertex_origin =
        static_cast<int*>(std::malloc(sizeof(int) * rep.vertex_origin.size()));
    if (!out->vertex_origin) throw std::bad_alloc();
    std::copy(rep.vertex_origin.begin(), rep.vertex_origin.end(), out->vertex_origin);
    out->kernel = new icfd_instance{std::move(rep.kernel)};
  });
  if (st != ICFD_OK) icfd_kernel_result_dispose(out);
  return st;
}

void icfd_kernel_result_dispose(icfd_kernel_result* result) {
  if (!result) return;
  icfd_instance_free(result->kernel);
  std::free(result->rule_log);
  std::free(result->size_bound);
  std::free(result->vertex_origin);
  std::memset(result, 0, sizeof(*result));
}

icfd_status icfd_stats(const icfd_instance* inst, icfd_vc_mode vc_mode,
                       icfd_stats_result* out) {
  if (out) std::memset(out, 0, sizeof(*out));
  icfd_status st = guarded([&] {
    require(inst != nullptr && out != nullptr, "instance and out must not be NULL");
    auto rep = icfd::compute_stats(inst->v, to_vc_mode(vc_mode));
    out->m = rep.m;
    out->edge_count = rep.edge_count;
    out->n = rep.n;
    out->p = rep.p;
    out->connected = rep.connected ? 1 : 0;
    out->vcn_exact = rep.vcn_exact ? *rep.vcn_exact : -1;
    out->vcn_approx = rep.vcn_approx;
    out->distinct_values = rep.distinct_value_count;
    out->agent_types = rep.agent_type_count;
    std::ostringstream os;
    for (size_t i = 0; i < rep.agents_without_positive.size(); ++i) {
      if (i) os << ' ';
      os << rep.agents_without_positive[i];
    }
    out->agents_without_positive = dup_string(os.str());
  });
  if (st != ICFD_OK) icfd_stats_result_dispose(out);
  return st;
}

void icfd_stats_result_dispose(icfd_stats_result* result) {
  if (!result) return;
  std::free(result->agents_without_positive);
  std::memset(result, 0, sizeof(*result));
}

icfd_status icfd_generate(const char* family, const char* source_text,
                          icfd_generated* out) {
  if (out) std::memset(out, 0, sizeof(*out));
  icfd_status st = guarded([&] {
    require(family != nullptr && source_text != nullptr && out != nullptr,
            "family, source and out must not be NULL");
    const std::string f = family;
    icfd::GeneratedInstance g;
    if (f == "ksum-ef") {
      g = icfd::gen_ksum_ef(icfd::parse_ksum(source_text));
    } else if (f == "ksum-ef1") {
      g = icfd::gen_ksum_envy(icfd::parse_ksum(source_text), icfd::FairnessNotion::Ef1);
    } else if (f == "ksum-efx") {
      g = icfd::gen_ksum_envy(icfd::parse_ksum(source_text), icfd::FairnessNotion::Efx);
    } else if (f == "rbds-prop") {
      g = icfd::gen_rbds_prop(icfd::parse_rbds(source_text));
    } else if (f == "rbds-ef") {
      g = icfd::gen_rbds_ef(icfd::parse_rbds(source_text));
    } else if (f == "rbds-ef1") {
      g = icfd::gen_rbds_envy(icfd::parse_rbds(source_text), icfd::FairnessNotion::Ef1);
    } else if (f == "rbds-efx") {
      g = icfd::gen_rbds_envy(icfd::parse_rbds(source_text), icfd::FairnessNotion::Efx);
    } else {
      throw icfd::ParamError(
          "unknown family; expected ksum-ef, ksum-ef1, ksum-efx, rbds-prop, "
          "rbds-ef, rbds-ef1 or rbds-efx");
    }
    out->text = dup_string(icfd::render_generated(g));
    out->meta = dup_string(g.meta);
    if (g.witness) out->witness = new icfd_allocation{std::move(*g.witness)};
    out->instance = new icfd_instance{std::move(g.inst)};
  });
  if (st != ICFD_OK) icfd_generated_dispose(out);
  return st;
}

void icfd_generated_dispose(icfd_generated* result) {
  if (!result) return;
  icfd_instance_free(result->instance);
  icfd_allocation_free(result->witness);
  std::free(result->text);
  std::free(result->meta);
  std::memset(result, 0, sizeof(*result));
}

icfd_status icfd_generate_random(int m, int n, int p, const char* max_val,
                                 double density, uint64_t seed,
                                 icfd_instance** out) {
  return guarded([&] {
    require(max_val != nullptr && out != nullptr, "max value and out must not be NULL");
    const std::string text = max_val;
    require(!text.empty() && text.find_first_not_of("0123456789") == std::string::npos,
            "max value must be a non-negative decimal integer");
    *out = new icfd_instance{
        icfd::gen_random(m, n, p, icfd::Value(text), density, seed)};
  });
}

}  // extern "C"
