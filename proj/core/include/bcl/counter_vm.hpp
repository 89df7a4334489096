#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bcl/run_result.hpp"
#include "bcl/tape.hpp"

namespace bcl {

struct CounterUpdate {
  int counter;
  int delta;  // +1 or -1
};

constexpr CounterUpdate inc(int counter) { return {counter, +1}; }
constexpr CounterUpdate dec(int counter) { return {counter, -1}; }

// Thrown out of a program when the VM's step budget is exhausted.
class StepLimitReached : public std::runtime_error {
 public:
  StepLimitReached() : std::runtime_error("step limit reached") {}
};

// Thrown out of a program on a machine-level fault (decrement of a zero
// counter, pointer leaving the tape).
class MachineFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Restricted counter-machine VM for programs written as procedures: one
// two-way pointer over the end-marked tape and a fixed number of counters.
// Programs observe the machine only through read() and zero(); everything
// else they keep must live in bounded local variables. One step may move
// the pointer and update each counter by one. Counter values are audited
// against the input length.
class CounterVm {
 public:
  CounterVm(std::string_view input, int counters, Index limit);

  Symbol read() const { return tape_.at(pos_); }
  bool zero(int counter) const { return values_.at(static_cast<std::size_t>(counter)) == 0; }

  void step(int dir, std::initializer_list<CounterUpdate> updates = {});
  void move(int dir) { step(dir); }
  void increment(int counter) { step(0, {inc(counter)}); }
  void decrement(int counter) { step(0, {dec(counter)}); }

  int counters() const { return static_cast<int>(values_.size()); }
  Index steps() const { return steps_; }
  Index input_length() const { return tape_.length(); }
  const Trace& trace() const { return trace_; }

  // Host-side inspection for audits and tests; programs must not branch on
  // these.
  Index audit_position() const { return pos_; }
  Index audit_value(int counter) const { return values_.at(static_cast<std::size_t>(counter)); }
  const Tape& audit_tape() const { return tape_; }
  void record_violation(std::string what) { trace_.violations.push_back(std::move(what)); }

 private:
  Tape tape_;
  Index pos_ = 1;
  std::vector<Index> values_;
  Index steps_ = 0;
  Index limit_;
  Trace trace_;
};

// Runs `program` against a fresh VM and converts its outcome into a
// RunResult. The program returns true to accept, false to reject.
template <typename Program>
RunResult run_program(std::string_view input, int counters, Index limit, Program&& program) {
  CounterVm vm(input, counters, limit);
  RunResult result;
  try {
    bool accepted = program(vm);
    result.verdict = accepted ? Verdict::kAccept : Verdict::kReject;
    result.reason = accepted ? "accept" : "reject";
  } catch (const StepLimitReached&) {
    result.verdict = Verdict::kTimeout;
    result.reason = std::string(reason::kStepLimit);
  } catch (const MachineFault& f) {
    result.verdict = Verdict::kFault;
    result.reason = f.what();
  }
  result.steps = vm.steps();
  result.trace = vm.trace();
  return result;
}

}  // namespace bcl
