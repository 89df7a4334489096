#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bcl/counter_vm.hpp"
#include "bcl/run_result.hpp"

namespace bcl {

// A one-pointer counter-machine procedure with a declared counter budget.
struct CounterProgram {
  std::string name;
  int counters = 0;
  std::function<bool(CounterVm&)> body;
};

RunResult run_counter_program(const CounterProgram& p, std::string_view input,
                              const RunOptions& options = {});

// {ww : w in {0,1}*} with one counter, O(n^2) steps.
CounterProgram ww_program();
// {x$x^R : x in {0,1}*} with two counters, O(n^2 / log n) steps.
CounterProgram palindrome_2c_program();
// {x 0^(2^(|x|/m) - |x|) $ (x 0^...)^R} with four counters, (2m+3)n + o(n)
// steps on members. Requires m >= 1.
CounterProgram lm_program(int m);

RunResult ww_accept(std::string_view x, const RunOptions& options = {});
RunResult palindrome_2c_accept(std::string_view x, const RunOptions& options = {});
RunResult lm_accept(int m, std::string_view x, const RunOptions& options = {});

struct StepSample {
  Index n = 0;
  Index steps = 0;
  Verdict verdict = Verdict::kReject;
  Index max_counter = 0;
};
using StepSeries = std::vector<StepSample>;

// Runs the program on each input in turn. Inputs must have strictly
// increasing length. A step-limit hit is recorded as a timeout sample.
StepSeries measure_steps(const CounterProgram& p, const std::vector<std::string>& inputs,
                         const RunOptions& options = {});

// Prefix of the Thue-Morse word over {0,1}.
std::string thue_morse(std::size_t length);

// Deterministic accepted input for benchmarking, of length at most n (the
// largest member the family has at or below n; empty if none).
//   ww:           w w with w a Thue-Morse prefix
//   palindrome2c: x $ x^R with x a Thue-Morse prefix
//   lm:           the member of length 2^(t+1)+1 with x a Thue-Morse prefix
std::string canonical_member(std::string_view acceptor, int m, Index n);

// Program by CLI name: "ww", "palindrome2c" or "lm" (which uses m).
CounterProgram program_by_name(std::string_view acceptor, int m);

}  // namespace bcl
