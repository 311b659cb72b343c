// Command line front end. Talks to the toolkit exclusively through the C
// interface; everything crosses as text, plain structs and status codes.
//
// Exit codes: 0 Yes/fair, 3 No/unfair, 4 witness search exhausted,
// 1 usage/parse/validation errors, 2 budget/internal errors.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "icfd/icfd.h"
#include "json.hpp"

namespace {

// Key=value report with timing segregated so runs with equal seeds stay
// byte-comparable. Text mode prints the fields, then "timing.<k>" lines;
// JSON mode nests the timing under its own key.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::pair<std::string, double>> timing;

  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  void add(const std::string& key, T value) {
    add(key, std::to_string(value));
  }
  void time(const std::string& key, double seconds) { timing.emplace_back(key, seconds); }

  void print(bool as_json) const {
    if (as_json) {
      nlohmann::json j;
      for (const auto& [k, v] : fields) j[k] = v;
      for (const auto& [k, v] : timing) j["timing"][k] = v;
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      for (const auto& [k, v] : fields) std::printf("%s=%s\n", k.c_str(), v.c_str());
      for (const auto& [k, v] : timing) std::printf("timing.%s=%.6f\n", k.c_str(), v);
    }
  }
};

template <typename T, void (*F)(T*)>
struct Owned {
  T* p = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() {
    if (p) F(p);
  }
};

using InstancePtr = Owned<icfd_instance, icfd_instance_free>;
using AllocationPtr = Owned<icfd_allocation, icfd_allocation_free>;
using StringPtr = Owned<char, icfd_string_free>;

struct SolveGuard {
  icfd_solve_result r{};
  ~SolveGuard() { icfd_solve_result_dispose(&r); }
};
struct KernelGuard {
  icfd_kernel_result r{};
  ~KernelGuard() { icfd_kernel_result_dispose(&r); }
};
struct StatsGuard {
  icfd_stats_result r{};
  ~StatsGuard() { icfd_stats_result_dispose(&r); }
};
struct GenGuard {
  icfd_generated r{};
  ~GenGuard() { icfd_generated_dispose(&r); }
};

int exit_for(icfd_status st) {
  return (st == ICFD_ERR_BUDGET || st == ICFD_ERR_INTERNAL) ? 2 : 1;
}

int fail(icfd_status st) {
  std::fprintf(stderr, "error: %s\n", icfd_last_error());
  return exit_for(st);
}

int fail_usage(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.flush();
  return out.good();
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

bool parse_positive(const std::string& s, int64_t& out) {
  if (!all_digits(s)) return false;
  try {
    out = std::stoll(s);
  } catch (...) {
    return false;
  }
  return out >= 1;
}

bool parse_ratio(const std::string& s, uint64_t& num, uint64_t& den) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return false;
  const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!all_digits(a) || !all_digits(b)) return false;
  try {
    num = std::stoull(a);
    den = std::stoull(b);
  } catch (...) {
    return false;
  }
  return num >= 1 && num < den;
}

icfd_notion notion_code(const std::string& s) {
  if (s == "prop") return ICFD_NOTION_PROP;
  if (s == "ef") return ICFD_NOTION_EF;
  if (s == "ef1") return ICFD_NOTION_EF1;
  return ICFD_NOTION_EFX;
}

icfd_method method_code(const std::string& s) {
  if (s == "brute") return ICFD_METHOD_BRUTE;
  if (s == "colorcode") return ICFD_METHOD_COLORCODE;
  return ICFD_METHOD_AUTO;
}

icfd_vc_mode vc_code(const std::string& s) {
  return s == "approx" ? ICFD_VC_APPROX_ONLY : ICFD_VC_EXACT_IF_SMALL;
}

icfd_inner_mode inner_code(const std::string& s) {
  return s == "colorcode" ? ICFD_INNER_COLORCODE : ICFD_INNER_EXACT;
}

const char* answer_text(icfd_answer a) {
  switch (a) {
    case ICFD_ANSWER_YES: return "Yes";
    case ICFD_ANSWER_NO: return "No";
    default: return "NoWitnessFound";
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int load_instance(const std::string& path, InstancePtr& inst, int& rc) {
  std::string text;
  if (!read_file(path, text)) {
    rc = fail_usage("cannot read " + path);
    return 0;
  }
  icfd_status st = icfd_instance_parse(text.c_str(), &inst.p);
  if (st != ICFD_OK) {
    rc = fail(st);
    return 0;
  }
  return 1;
}

struct SolveArgs {
  std::string notion, input, method = "auto", repetitions = "auto", witness_out,
      inner = "exact", inner_delta = "1/100", vc_mode = "exact";
  uint64_t seed = 0, node_budget = 0;
  bool kernelize = false, aggressive = false, json = false;
};

int cmd_solve(const SolveArgs& a) {
  int rc = 0;
  InstancePtr inst;
  if (!load_instance(a.input, inst, rc)) return rc;

  icfd_solve_options opts;
  icfd_solve_options_init(&opts);
  opts.notion = notion_code(a.notion);
  opts.method = method_code(a.method);
  opts.kernelize = a.kernelize ? 1 : 0;
  opts.aggressive = a.aggressive ? 1 : 0;
  opts.seed = a.seed;
  if (a.node_budget > 0) opts.node_budget = a.node_budget;
  int64_t reps = 0;
  if (a.repetitions != "auto" && !parse_positive(a.repetitions, reps))
    return fail_usage("--repetitions expects 'auto' or a positive integer");
  opts.repetitions = reps;
  opts.inner = inner_code(a.inner);
  if (!parse_ratio(a.inner_delta, opts.inner_delta_num, opts.inner_delta_den))
    return fail_usage("--inner-delta expects <num>/<den> with 1 <= num < den");
  opts.vc_mode = vc_code(a.vc_mode);

  SolveGuard res;
  icfd_status st = icfd_solve(inst.p, &opts, &res.r);
  if (st != ICFD_OK) return fail(st);

  Report rep;
  rep.add("command", "solve");
  rep.add("input", a.input);
  rep.add("notion", a.notion);
  rep.add("method", a.method);
  rep.add("kernelize", a.kernelize ? 1 : 0);
  rep.add("seed", opts.seed);
  rep.add("repetitions", a.repetitions == "auto" ? std::string("auto") : std::to_string(reps));
  rep.add("inner", a.inner);
  rep.add("inner_delta",
          std::to_string(opts.inner_delta_num) + "/" + std::to_string(opts.inner_delta_den));
  rep.add("vc_mode", a.vc_mode);
  rep.add("node_budget", opts.node_budget);
  rep.add("aggressive", a.aggressive ? 1 : 0);
  rep.add("strategy", res.r.strategy);
  rep.add("answer", answer_text(res.r.answer));
  rep.add("nodes", res.r.nodes);
  rep.add("kernelized", res.r.kernelized);
  if (res.r.kernelized) {
    rep.add("kernel_m", res.r.kernel_m);
    rep.add("kernel_bound", res.r.kernel_bound);
    rep.add("kernel_definitive_no", res.r.kernel_definitive_no);
  }
  if (res.r.answer == ICFD_ANSWER_YES && !a.witness_out.empty()) {
    StringPtr text;
    st = icfd_allocation_serialize(res.r.witness, &text.p);
    if (st != ICFD_OK) return fail(st);
    if (!write_file(a.witness_out, text.p)) return fail_usage("cannot write " + a.witness_out);
    rep.add("witness", a.witness_out);
  }
  rep.time("elapsed_sec", res.r.elapsed_sec);
  rep.print(a.json);
  switch (res.r.answer) {
    case ICFD_ANSWER_YES: return 0;
    case ICFD_ANSWER_NO: return 3;
    default: return 4;
  }
}

struct VerifyArgs {
  std::string notion, input, allocation;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  InstancePtr inst;
  if (!load_instance(a.input, inst, rc)) return rc;
  std::string alloc_text;
  if (!read_file(a.allocation, alloc_text)) return fail_usage("cannot read " + a.allocation);
  AllocationPtr alloc;
  icfd_status st = icfd_allocation_parse(alloc_text.c_str(), inst.p, &alloc.p);
  if (st != ICFD_OK) return fail(st);

  int fair = 0;
  StringPtr violation;
  st = icfd_verify(inst.p, alloc.p, notion_code(a.notion), &fair, &violation.p);
  if (st != ICFD_OK) return fail(st);

  Report rep;
  rep.add("command", "verify");
  rep.add("input", a.input);
  rep.add("allocation", a.allocation);
  rep.add("notion", a.notion);
  rep.add("fair", fair);
  if (!fair && violation.p) rep.add("violation", violation.p);
  rep.time("elapsed_sec", seconds_since(start));
  rep.print(a.json);
  return fair ? 0 : 3;
}

struct KernelizeArgs {
  std::string notion, input, out, rule_log, vc_mode = "exact";
  bool json = false;
};

int cmd_kernelize(const KernelizeArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  InstancePtr inst;
  if (!load_instance(a.input, inst, rc)) return rc;

  KernelGuard k;
  icfd_status st = icfd_kernelize(inst.p, notion_code(a.notion), vc_code(a.vc_mode), &k.r);
  if (st != ICFD_OK) return fail(st);

  StringPtr text;
  st = icfd_instance_serialize(k.r.kernel, &text.p);
  if (st != ICFD_OK) return fail(st);
  if (!write_file(a.out, text.p)) return fail_usage("cannot write " + a.out);
  const std::string log_path = a.rule_log.empty() ? a.out + ".rules" : a.rule_log;
  if (!write_file(log_path, k.r.rule_log)) return fail_usage("cannot write " + log_path);

  Report rep;
  rep.add("command", "kernelize");
  rep.add("input", a.input);
  rep.add("notion", a.notion);
  rep.add("vc_mode", a.vc_mode);
  rep.add("m_before", icfd_instance_m(inst.p));
  rep.add("m_after", icfd_instance_m(k.r.kernel));
  rep.add("n_after", icfd_instance_n(k.r.kernel));
  rep.add("p_after", icfd_instance_p(k.r.kernel));
  rep.add("bound", k.r.size_bound);
  rep.add("cover_size", k.r.cover_size);
  rep.add("cover_exact", k.r.cover_exact);
  rep.add("definitive_no", k.r.definitive_no);
  rep.add("out", a.out);
  rep.add("rule_log", log_path);
  rep.time("elapsed_sec", seconds_since(start));
  rep.print(a.json);
  return k.r.definitive_no ? 3 : 0;
}

struct GenerateArgs {
  std::string family, source, out, witness_out, max_val = "10";
  double density = 0.5;
  uint64_t seed = 0;
  int m = -1, n = -1, p = -1;
  bool json = false;
};

int cmd_generate(const GenerateArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.add("command", "generate");
  rep.add("family", a.family);

  if (a.family == "random") {
    if (a.m < 0 || a.n < 0 || a.p < 0)
      return fail_usage("family random requires --m, --n and --p");
    InstancePtr inst;
    icfd_status st = icfd_generate_random(a.m, a.n, a.p, a.max_val.c_str(), a.density,
                                          a.seed, &inst.p);
    if (st != ICFD_OK) return fail(st);
    StringPtr text;
    st = icfd_instance_serialize(inst.p, &text.p);
    if (st != ICFD_OK) return fail(st);
    if (!write_file(a.out, text.p)) return fail_usage("cannot write " + a.out);
    rep.add("m", a.m);
    rep.add("n", a.n);
    rep.add("p", a.p);
    rep.add("max_val", a.max_val);
    std::ostringstream dens;
    dens << a.density;
    rep.add("density", dens.str());
    rep.add("seed", a.seed);
    rep.add("out", a.out);
    if (!a.witness_out.empty()) rep.add("witness_written", 0);
  } else {
    if (a.source.empty()) return fail_usage("family " + a.family + " requires --source");
    std::string source_text;
    if (!read_file(a.source, source_text)) return fail_usage("cannot read " + a.source);
    GenGuard g;
    icfd_status st = icfd_generate(a.family.c_str(), source_text.c_str(), &g.r);
    if (st != ICFD_OK) return fail(st);
    if (!write_file(a.out, g.r.text)) return fail_usage("cannot write " + a.out);
    rep.add("source", a.source);
    rep.add("m", icfd_instance_m(g.r.instance));
    rep.add("n", icfd_instance_n(g.r.instance));
    rep.add("p", icfd_instance_p(g.r.instance));
    rep.add("meta", g.r.meta);
    rep.add("out", a.out);
    if (!a.witness_out.empty()) {
      if (g.r.witness) {
        StringPtr wtext;
        st = icfd_allocation_serialize(g.r.witness, &wtext.p);
        if (st != ICFD_OK) return fail(st);
        if (!write_file(a.witness_out, wtext.p))
          return fail_usage("cannot write " + a.witness_out);
        rep.add("witness_written", 1);
        rep.add("witness", a.witness_out);
      } else {
        rep.add("witness_written", 0);
      }
    }
  }
  rep.time("elapsed_sec", seconds_since(start));
  rep.print(a.json);
  return 0;
}

struct StatsArgs {
  std::string input, vc_mode = "exact";
  bool json = false;
};

int cmd_stats(const StatsArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  InstancePtr inst;
  if (!load_instance(a.input, inst, rc)) return rc;
  StatsGuard s;
  icfd_status st = icfd_stats(inst.p, vc_code(a.vc_mode), &s.r);
  if (st != ICFD_OK) return fail(st);

  Report rep;
  rep.add("command", "stats");
  rep.add("input", a.input);
  rep.add("vc_mode", a.vc_mode);
  rep.add("m", s.r.m);
  rep.add("edges", s.r.edge_count);
  rep.add("n", s.r.n);
  rep.add("p", s.r.p);
  rep.add("connected", s.r.connected);
  if (s.r.vcn_exact >= 0) rep.add("vcn_exact", s.r.vcn_exact);
  rep.add("vcn_approx", s.r.vcn_approx);
  rep.add("distinct_values", s.r.distinct_values);
  rep.add("agent_types", s.r.agent_types);
  rep.add("agents_without_positive", s.r.agents_without_positive);
  rep.time("elapsed_sec", seconds_since(start));
  rep.print(a.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incomplete connected fair division toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> notions{"prop", "ef", "ef1", "efx"};

  SolveArgs sa;
  {
    icfd_solve_options d;
    icfd_solve_options_init(&d);
    sa.inner_delta =
        std::to_string(d.inner_delta_num) + "/" + std::to_string(d.inner_delta_den);
  }
  auto* solve = app.add_subcommand("solve", "decide fairness for an instance");
  solve->add_option("--notion", sa.notion, "fairness notion")
      ->required()
      ->check(CLI::IsMember(notions));
  solve->add_option("--input", sa.input, "instance file")->required();
  solve->add_option("--method", sa.method, "search method")
      ->check(CLI::IsMember({"brute", "colorcode", "auto"}))
      ->capture_default_str();
  solve->add_flag("--kernelize", sa.kernelize, "reduce before an explicit method");
  solve->add_option("--seed", sa.seed, "random seed")->capture_default_str();
  solve->add_option("--repetitions", sa.repetitions, "'auto' or a positive count")
      ->capture_default_str();
  solve->add_option("--witness", sa.witness_out, "write the Yes witness to this file");
  solve->add_option("--inner", sa.inner, "per-coloring bundle search")
      ->check(CLI::IsMember({"exact", "colorcode"}))
      ->capture_default_str();
  solve->add_option("--inner-delta", sa.inner_delta, "inner miss budget <num>/<den>")
      ->capture_default_str();
  solve->add_option("--vc-mode", sa.vc_mode, "vertex cover computation")
      ->check(CLI::IsMember({"exact", "approx"}))
      ->capture_default_str();
  solve->add_option("--node-budget", sa.node_budget, "search node limit (0 keeps the default)");
  solve->add_flag("--aggressive", sa.aggressive, "prune hopeless partial bundles");
  solve->add_flag("--json", sa.json, "emit the report as JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check an allocation against a notion");
  verify->add_option("--notion", va.notion, "fairness notion")
      ->required()
      ->check(CLI::IsMember(notions));
  verify->add_option("--input", va.input, "instance file")->required();
  verify->add_option("--allocation", va.allocation, "allocation file")->required();
  verify->add_flag("--json", va.json, "emit the report as JSON");

  KernelizeArgs ka;
  auto* kernelize = app.add_subcommand("kernelize", "apply the reduction rules");
  kernelize->add_option("--notion", ka.notion, "fairness notion")
      ->required()
      ->check(CLI::IsMember(notions));
  kernelize->add_option("--input", ka.input, "instance file")->required();
  kernelize->add_option("--out", ka.out, "kernel instance file")->required();
  kernelize->add_option("--rule-log", ka.rule_log, "rule log file (default <out>.rules)");
  kernelize->add_option("--vc-mode", ka.vc_mode, "vertex cover computation")
      ->check(CLI::IsMember({"exact", "approx"}))
      ->capture_default_str();
  kernelize->add_flag("--json", ka.json, "emit the report as JSON");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "build an instance from a source problem");
  generate
      ->add_option("family", ga.family,
                   "ksum-ef | ksum-ef1 | ksum-efx | rbds-prop | rbds-ef | rbds-ef1 | "
                   "rbds-efx | random")
      ->required()
      ->check(CLI::IsMember({"ksum-ef", "ksum-ef1", "ksum-efx", "rbds-prop", "rbds-ef",
                             "rbds-ef1", "rbds-efx", "random"}));
  generate->add_option("--source", ga.source, "source problem file (gadget families)");
  generate->add_option("--out", ga.out, "instance output file")->required();
  generate->add_option("--witness-out", ga.witness_out, "allocation output file");
  generate->add_option("--m", ga.m, "vertex count (random)");
  generate->add_option("--n", ga.n, "agent count (random)");
  generate->add_option("--p", ga.p, "allocated vertex count (random)");
  generate->add_option("--max-val", ga.max_val, "largest value (random)")
      ->capture_default_str();
  generate->add_option("--density", ga.density, "extra edge density in [0,1] (random)")
      ->capture_default_str();
  generate->add_option("--seed", ga.seed, "random seed")->capture_default_str();
  generate->add_flag("--json", ga.json, "emit the report as JSON");

  StatsArgs ta;
  auto* stats = app.add_subcommand("stats", "summarize an instance");
  stats->add_option("--input", ta.input, "instance file")->required();
  stats->add_option("--vc-mode", ta.vc_mode, "vertex cover computation")
      ->check(CLI::IsMember({"exact", "approx"}))
      ->capture_default_str();
  stats->add_flag("--json", ta.json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (app.got_subcommand(solve)) return cmd_solve(sa);
  if (app.got_subcommand(verify)) return cmd_verify(va);
  if (app.got_subcommand(kernelize)) return cmd_kernelize(ka);
  if (app.got_subcommand(generate)) return cmd_generate(ga);
  return cmd_stats(ta);
}
