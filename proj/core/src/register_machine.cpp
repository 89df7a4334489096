#include "bcl/register_machine.hpp"

#include <algorithm>

#include "bcl/detail/loop_detector.hpp"

namespace bcl {

RegisterMachine::RegisterMachine(int num_states, StateId start, std::vector<StateId> accepting,
                                 int registers)
    : num_states_(num_states),
      start_(start),
      accepting_(static_cast<std::size_t>(std::max(num_states, 0)), false),
      registers_(registers) {
  if (num_states < 1) throw MachineError("machine needs at least one state");
  if (registers < 1 || registers > 16) throw MachineError("register count must be in [1, 16]");
  if (start < 0 || start >= num_states) throw MachineError("start state out of range");
  for (StateId q : accepting) {
    if (q < 0 || q >= num_states) throw MachineError("accepting state out of range");
    accepting_[static_cast<std::size_t>(q)] = true;
  }
  for (int q = 0; q < num_states; ++q) names_.push_back("q" + std::to_string(q));
}

void RegisterMachine::set_state_names(std::vector<std::string> names) {
  if (names.size() != static_cast<std::size_t>(num_states_)) {
    throw MachineError("state name count does not match state count");
  }
  names_ = std::move(names);
}

std::vector<StateId> RegisterMachine::accepting_states() const {
  std::vector<StateId> out;
  for (int q = 0; q < num_states_; ++q) {
    if (accepting_[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

void RegisterMachine::add_transition(StateId state, CounterMask zeros, RegisterAction action) {
  if (state < 0 || state >= num_states_) throw MachineError("transition state out of range");
  if (action.next < 0 || action.next >= num_states_) {
    throw MachineError("transition target out of range");
  }
  if (action.ops.size() != static_cast<std::size_t>(registers_)) {
    throw MachineError("transition must give one op per register");
  }
  if ((zeros >> registers_) != 0) throw MachineError("zero mask refers to a missing register");
  auto k = (static_cast<std::uint64_t>(state) << 32) | zeros;
  auto [it, inserted] = index_.emplace(k, transitions_.size());
  if (!inserted) throw MachineError("nondeterministic: duplicate transition key");
  transitions_.push_back({state, zeros, std::move(action)});
}

const RegisterAction* RegisterMachine::find(StateId state, CounterMask zeros) const {
  auto it = index_.find((static_cast<std::uint64_t>(state) << 32) | zeros);
  return it == index_.end() ? nullptr : &transitions_[it->second].action;
}

namespace {

struct RegisterConfig {
  StateId state = 0;
  std::vector<Index> values;
  bool operator==(const RegisterConfig&) const = default;
};

}  // namespace

RunResult run_rm(const RegisterMachine& r, Index input_number, const RunOptions& options) {
  if (input_number < 0) throw std::invalid_argument("input number must be nonnegative");
  if (options.limit <= 0) throw std::invalid_argument("step limit must be positive");
  const auto k = static_cast<std::size_t>(r.registers());
  RunResult result;
  RegisterConfig cfg{r.start(), std::vector<Index>(k, 0)};
  cfg.values[0] = input_number;
  result.trace.max_counters = cfg.values;
  // Registers are only audited, not clamped, so the bounded configuration
  // count is an under-approximation; Brent detection stays exact anyway.
  detail::LoopDetector<RegisterConfig> loops(
      detail::loop_detection_armed(options, r.num_states(), input_number, 0, r.registers()));

  auto finish = [&](Verdict v, std::string_view why) {
    result.verdict = v;
    result.reason = why;
    return result;
  };

  while (true) {
    if (r.is_accepting(cfg.state)) return finish(Verdict::kAccept, reason::kAcceptingState);
    if (result.steps >= options.limit) return finish(Verdict::kTimeout, reason::kStepLimit);
    if (loops.observe(cfg)) return finish(Verdict::kReject, reason::kLoop);
    const RegisterAction* action = r.find(cfg.state, zero_mask(cfg.values));
    if (action == nullptr) return finish(Verdict::kReject, reason::kNoTransition);
    ++result.steps;
    for (std::size_t i = 0; i < k; ++i) {
      Index& v = cfg.values[i];
      if (action->ops[i] == CounterOp::kDec) {
        if (v == 0) {
          result.trace.violations.push_back("decrement of zero register " + std::to_string(i));
          return finish(Verdict::kFault, reason::kDecOnZero);
        }
        --v;
        ++result.trace.counter_ops;
      } else if (action->ops[i] == CounterOp::kInc) {
        ++v;
        ++result.trace.counter_ops;
        if (v > input_number) {
          result.trace.violations.push_back("register " + std::to_string(i) +
                                            " exceeds the input number");
        }
      }
      result.trace.max_counters[i] = std::max(result.trace.max_counters[i], v);
    }
    cfg.state = action->next;
  }
}

}  // namespace bcl
