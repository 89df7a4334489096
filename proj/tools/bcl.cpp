// Command-line driver: run, simulate, crossvalidate, bench, encode, speedup.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcl/acceptors.hpp"
#include "bcl/crossval.hpp"
#include "bcl/machine_io.hpp"
#include "bcl/speedup.hpp"
#include "bcl/transforms.hpp"
#include "json.hpp"

using namespace bcl;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 3;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return 0;
    case Verdict::kReject: return 1;
    case Verdict::kTimeout: return 2;
    case Verdict::kFault: return 3;
  }
  return kExitError;
}

struct Common {
  std::string machine;
  std::string input;
  std::optional<Index> n;
  Index limit = RunOptions{}.limit;
  bool trace = false;
  bool no_loop_detection = false;

  RunOptions options() const {
    RunOptions o;
    o.limit = limit;
    o.detect_loops = !no_loop_detection;
    return o;
  }
  // Register machines and the register simulation take n; a given input
  // stands for its length.
  Index length() const { return n ? *n : static_cast<Index>(input.size()); }
};

void add_run_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--limit", c.limit, "Step limit")->check(CLI::PositiveNumber);
  cmd->add_flag("--trace", c.trace, "Add resource audit fields");
  cmd->add_flag("--no-loop-detection", c.no_loop_detection, "Run until halt or limit");
}

int cmd_run(const Common& c) {
  const AnyMachine m = load_machine_file(c.machine);
  const RunResult r = std::visit(
      [&](const auto& x) -> RunResult {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiHeadAutomaton>) return run_mha(x, c.input, c.options());
        else if constexpr (std::is_same_v<T, CounterMachine>) return run_cm(x, c.input, c.options());
        else return run_rm(x, c.length(), c.options());
      },
      m);
  std::cout << run_result_json(r, c.trace) << "\n";
  return exit_code(r.verdict);
}

ojson audit_json(const SimulationAudit& a) {
  ojson j;
  j["counters_used"] = a.counters_used;
  j["max_counters"] = a.max_counters;
  j["pointer_moves"] = a.pointer_moves;
  j["counter_ops"] = a.counter_ops;
  j["intervals"] = a.intervals;
  j["simulated_steps"] = a.simulated_steps;
  j["max_configurations_examined"] = a.max_configurations_examined;
  j["finite_control_ok"] = a.finite_control_ok;
  j["interval_soundness_failures"] = a.interval_soundness_failures;
  j["shadow_mismatches"] = a.shadow_mismatches;
  j["violations"] = a.violations;
  return j;
}

int cmd_simulate(const Common& c, const std::string& mode_name, const std::string& bound) {
  const AnyMachine m = load_machine_file(c.machine);
  const CrossMode mode = parse_cross_mode(mode_name);
  RunResult run;
  ojson extra;
  if (mode == CrossMode::kHeadsToCounters) {
    const auto* mha = std::get_if<MultiHeadAutomaton>(&m);
    if (!mha) throw std::invalid_argument("heads_to_counters needs a multi_head machine");
    const SimulationResult s = heads_to_counters_run(*mha, parse_strict_bound(bound), c.input,
                                                     c.options());
    run = s.run;
    extra["audit"] = audit_json(s.audit);
  } else if (mode == CrossMode::kCountersToHeads) {
    const auto* cm = std::get_if<CounterMachine>(&m);
    if (!cm) throw std::invalid_argument("counters_to_heads needs a counter machine");
    run = run_mha(counters_to_heads(*cm), c.input, c.options());
  } else if (mode == CrossMode::kRegisters) {
    const auto* mha = std::get_if<MultiHeadAutomaton>(&m);
    if (!mha) throw std::invalid_argument("registers needs a multi_head machine");
    const RegisterSimulationResult s = heads_to_registers_run(*mha, c.length(), c.options());
    run = s.run;
    extra["audit"] = {{"register_steps", s.register_steps},
                      {"max_register", s.max_register},
                      {"order_violations", s.order_violations}};
  } else if (mode == CrossMode::kEncoding) {
    const auto* cm = std::get_if<CounterMachine>(&m);
    if (!cm) throw std::invalid_argument("encoding needs a counter machine");
    const EncodedRunResult s =
        run_on_encoding(*cm, encode_bounded_input(c.input, parse_bound(bound)), c.options());
    run = s.run;
    extra["audit"] = {{"pool_counters", s.pool_counters},
                      {"pool_ops", s.pool_ops},
                      {"max_pool_value", s.max_pool_value},
                      {"shadow_mismatches", s.shadow_mismatches}};
  } else {
    throw std::invalid_argument("use the speedup command for speed-up runs");
  }
  ojson j = ojson::parse(run_result_json(run, c.trace));
  if (c.trace) j.update(extra);
  std::cout << j.dump(2) << "\n";
  return exit_code(run.verdict);
}

int cmd_crossvalidate(const Common& c, const std::string& mode, const std::string& bound,
                      Index max_len, double speedup_c) {
  CrossOptions o;
  o.run = c.options();
  o.speedup_c = speedup_c;
  const CrossReport r = crossvalidate(load_machine_file(c.machine), bound, max_len,
                                      parse_cross_mode(mode), o);
  ojson j;
  j["mode"] = mode;
  j["checked"] = r.checked;
  j["agreed"] = r.agreed;
  if (r.ok()) {
    j["result"] = "agree: all";
  } else {
    j["result"] = "disagree";
    if (r.first) {
      j["input"] = r.first->input;
      j["original"] = ojson::parse(run_result_json(r.first->original, false));
      j["transformed"] = ojson::parse(run_result_json(r.first->transformed, false));
    }
    j["audit_failures"] = r.audit_failures;
  }
  std::cout << j.dump(2) << "\n";
  return r.ok() ? 0 : 1;
}

std::vector<Index> bench_sizes(const std::vector<Index>& list, Index from, Index to) {
  if (!list.empty()) return list;
  std::vector<Index> out;
  if (from <= 0) return out;
  for (Index n = from; n <= to; n *= 2) out.push_back(n);
  return out;
}

int cmd_bench(const std::string& acceptor, int m, const std::vector<Index>& sizes,
              const std::string& csv, Index limit) {
  const CounterProgram p = program_by_name(acceptor, m);
  std::ofstream file;
  if (!csv.empty()) {
    file.open(csv);
    if (!file) throw std::runtime_error("cannot write " + csv);
  }
  std::ostream& out = csv.empty() ? std::cout : file;
  out << "n,steps,verdict,max_counter\n";
  RunOptions o;
  o.limit = limit;
  o.detect_loops = false;
  for (Index n : sizes) {
    const std::string x = canonical_member(acceptor, m, n);
    const RunResult r = run_counter_program(p, x, o);
    out << x.size() << ',' << r.steps << ',' << to_string(r.verdict) << ',' << r.max_counter()
        << '\n';
  }
  return 0;
}

int cmd_speedup(const Common& c, const std::string& bound, double target) {
  const AnyMachine m = load_machine_file(c.machine);
  const auto* cm = std::get_if<CounterMachine>(&m);
  if (!cm) throw std::invalid_argument("speedup needs a counter machine");
  const SpeedupResult r =
      speedup_run(*cm, parse_bound(bound), c.input, SpeedupConfig{target, 1.0}, c.options());
  std::cout << speedup_result_json(r, c.trace) << "\n";
  return exit_code(r.run.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded counter language machines: run, transform, measure"};
  app.require_subcommand(1);
  Common c;

  auto* run = app.add_subcommand("run", "Run a machine file on an input");
  run->add_option("--machine", c.machine, "Machine JSON file")->required();
  run->add_option("--input", c.input, "Input word");
  run->add_option("--n", c.n, "Input length for register machines");
  add_run_flags(run, c);

  std::string mode;
  std::string bound;
  auto* sim = app.add_subcommand("simulate", "Run a machine through a transformation");
  sim->add_option("--machine", c.machine, "Machine JSON file")->required();
  sim->add_option("--mode", mode, "heads_to_counters, counters_to_heads, registers or encoding")
      ->required();
  sim->add_option("--bound", bound, "Comma-separated bound words");
  sim->add_option("--input", c.input, "Input word");
  sim->add_option("--n", c.n, "Input length for the register simulation");
  add_run_flags(sim, c);

  Index max_len = 8;
  double speedup_c = 0.5;
  auto* cross = app.add_subcommand("crossvalidate", "Compare a machine with its transformation");
  cross->add_option("--machine", c.machine, "Machine JSON file")->required();
  cross->add_option("--mode", mode, "heads_to_counters, counters_to_heads, registers, encoding or speedup")
      ->required();
  cross->add_option("--bound", bound, "Comma-separated bound words");
  cross->add_option("--max-len", max_len, "Longest input checked")->check(CLI::NonNegativeNumber);
  cross->add_option("--c", speedup_c, "Target factor for speedup mode");
  add_run_flags(cross, c);

  std::string acceptor;
  int m = 1;
  std::vector<Index> sizes;
  Index from = 0;
  Index to = 0;
  std::string csv;
  Index bench_limit = 4'000'000'000;
  auto* bench = app.add_subcommand("bench", "Measure acceptor steps on canonical members (CSV)");
  bench->add_option("--acceptor", acceptor, "ww, palindrome2c or lm")->required();
  bench->add_option("--m", m, "Parameter of lm")->check(CLI::PositiveNumber);
  bench->add_option("--n", sizes, "Input lengths")->delimiter(',');
  bench->add_option("--from", from, "Smallest length of a doubling range");
  bench->add_option("--to", to, "Largest length of a doubling range");
  bench->add_option("--csv", csv, "Output file (default: standard output)");
  bench->add_option("--limit", bench_limit, "Step limit per run");

  auto* encode = app.add_subcommand("encode", "Encode a bounded input (JSON)");
  encode->add_option("--bound", bound, "Comma-separated bound words")->required();
  encode->add_option("--input", c.input, "Input word");

  auto* speed = app.add_subcommand("speedup", "Run a counter machine with compressed counters");
  speed->add_option("--machine", c.machine, "Counter machine JSON file")->required();
  speed->add_option("--bound", bound, "Comma-separated bound words")->required();
  speed->add_option("--input", c.input, "Input word");
  speed->add_option("--c", speedup_c, "Target factor")->check(CLI::PositiveNumber);
  add_run_flags(speed, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(c);
    if (*sim) return cmd_simulate(c, mode, bound);
    if (*cross) return cmd_crossvalidate(c, mode, bound, max_len, speedup_c);
    if (*bench) return cmd_bench(acceptor, m, bench_sizes(sizes, from, to), csv, bench_limit);
    if (*encode) {
      std::cout << encoded_input_json(encode_bounded_input(c.input, parse_bound(bound))) << "\n";
      return 0;
    }
    if (*speed) return cmd_speedup(c, bound, speedup_c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
