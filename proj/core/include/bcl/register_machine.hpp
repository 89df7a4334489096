#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bcl/counter_machine.hpp"
#include "bcl/run_result.hpp"

namespace bcl {

struct RegisterAction {
  StateId next = 0;
  std::vector<CounterOp> ops;
  bool operator==(const RegisterAction&) const = default;
};

struct RegisterTransition {
  StateId state = 0;
  CounterMask zeros = 0;
  RegisterAction action;
};

// Deterministic machine with k registers and no tape. The input number is
// loaded into register 0 (the "first register"); all others start at zero.
class RegisterMachine {
 public:
  RegisterMachine(int num_states, StateId start, std::vector<StateId> accepting, int registers);

  void add_transition(StateId state, CounterMask zeros, RegisterAction action);
  const RegisterAction* find(StateId state, CounterMask zeros) const;

  int num_states() const { return num_states_; }
  StateId start() const { return start_; }
  bool is_accepting(StateId q) const { return accepting_[static_cast<std::size_t>(q)]; }
  std::vector<StateId> accepting_states() const;
  int registers() const { return registers_; }
  const std::vector<RegisterTransition>& transitions() const { return transitions_; }

  const std::vector<std::string>& state_names() const { return names_; }
  void set_state_names(std::vector<std::string> names);

 private:
  int num_states_;
  StateId start_;
  std::vector<bool> accepting_;
  int registers_;
  std::vector<std::string> names_;
  std::vector<RegisterTransition> transitions_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Registers are audited against the input number: a value above it is
// recorded as a violation (the run continues).
RunResult run_rm(const RegisterMachine& r, Index input_number, const RunOptions& options = {});

}  // namespace bcl
