#include <benchmark/benchmark.h>

#include <string>

#include "bcl/acceptors.hpp"
#include "bcl/bounded.hpp"
#include "bcl/counter_machine.hpp"
#include "bcl/machine_io.hpp"
#include "bcl/speedup.hpp"
#include "bcl/transforms.hpp"

using namespace bcl;

namespace {

template <typename T>
T load(const std::string& name) {
  return std::get<T>(load_machine_file(std::string(BCL_MACHINES_DIR) + "/" + name));
}

MultiHeadAutomaton anbn_2head() { return load<MultiHeadAutomaton>("anbn_2head.json"); }
// One counter, a full walk to the left end-marker and back per symbol.
CounterMachine zigzag() { return load<CounterMachine>("zigzag_1counter.json"); }

std::string anbn(Index n) {
  return std::string(static_cast<std::size_t>(n / 2), 'a') +
         std::string(static_cast<std::size_t>(n / 2), 'b');
}

RunOptions unlimited() {
  RunOptions o;
  o.limit = 4'000'000'000;
  o.detect_loops = false;
  return o;
}

void report_steps(benchmark::State& state, Index steps) {
  state.counters["steps"] = static_cast<double>(steps);
  state.counters["steps_per_sec"] =
      benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_MultiHeadRun(benchmark::State& state) {
  const auto m = anbn_2head();
  const std::string x = anbn(state.range(0));
  Index steps = 0;
  for (auto _ : state) steps = run_mha(m, x, unlimited()).steps;
  report_steps(state, steps);
}
BENCHMARK(BM_MultiHeadRun)->RangeMultiplier(4)->Range(64, 1 << 16);

void BM_CounterRun(benchmark::State& state) {
  const auto c = zigzag();
  const std::string x = anbn(state.range(0));
  Index steps = 0;
  for (auto _ : state) steps = run_cm(c, x, unlimited()).steps;
  report_steps(state, steps);
}
BENCHMARK(BM_CounterRun)->RangeMultiplier(4)->Range(16, 1 << 10);

void BM_HeadsToCounters(benchmark::State& state) {
  const auto m = anbn_2head();
  const StrictBound ab("ab");
  const std::string x = anbn(state.range(0));
  Index steps = 0;
  for (auto _ : state) steps = heads_to_counters_run(m, ab, x, unlimited()).run.steps;
  report_steps(state, steps);
}
BENCHMARK(BM_HeadsToCounters)->RangeMultiplier(4)->Range(16, 1 << 12);

void BM_Acceptor(benchmark::State& state, const char* name, int m) {
  const CounterProgram p = program_by_name(name, m);
  const std::string x = canonical_member(name, m, state.range(0));
  Index steps = 0;
  for (auto _ : state) steps = run_counter_program(p, x, unlimited()).steps;
  report_steps(state, steps);
}
BENCHMARK_CAPTURE(BM_Acceptor, ww, "ww", 1)->RangeMultiplier(4)->Range(64, 1 << 12);
BENCHMARK_CAPTURE(BM_Acceptor, palindrome2c, "palindrome2c", 1)
    ->RangeMultiplier(4)
    ->Range(128, 1 << 13);
BENCHMARK_CAPTURE(BM_Acceptor, lm1, "lm", 1)->RangeMultiplier(4)->Range(64, 1 << 16);

void BM_Encode(benchmark::State& state) {
  const BoundDescriptor b = parse_bound("ab,c,ba");
  std::string x;
  for (Index i = 0; i < state.range(0) / 6; ++i) x += "ab";
  x += std::string(static_cast<std::size_t>(state.range(0) / 6), 'c');
  for (Index i = 0; i < state.range(0) / 6; ++i) x += "ba";
  for (auto _ : state) benchmark::DoNotOptimize(encode_bounded_input(x, b));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Encode)->RangeMultiplier(8)->Range(64, 1 << 18);

void BM_Speedup(benchmark::State& state) {
  const auto c = zigzag();
  const BoundDescriptor ab = parse_bound("a,b");
  const std::string x = anbn(state.range(0));
  Index units = 0;
  for (auto _ : state) units = speedup_run(c, ab, x, {0.5, 1.0}, unlimited()).accounting_steps;
  state.counters["accounting_steps"] = static_cast<double>(units);
}
BENCHMARK(BM_Speedup)->RangeMultiplier(4)->Range(16, 1 << 10);

}  // namespace

BENCHMARK_MAIN();
