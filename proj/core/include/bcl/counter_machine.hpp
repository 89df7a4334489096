#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bcl/run_result.hpp"
#include "bcl/tape.hpp"

namespace bcl {

enum class CounterOp : std::int8_t { kDec = -1, kNop = 0, kInc = 1 };

// What happens when a counter at value n (the input length) is incremented.
enum class OverflowPolicy {
  kSimple,  // the counter keeps its value
  kBlock,   // the run ends with a fault verdict
  kSignal,  // the counter keeps its value and an overflow flag is visible
            // to the next transition lookup
};

std::string_view to_string(OverflowPolicy p);
OverflowPolicy parse_overflow_policy(std::string_view s);

// Bit i of a mask refers to counter i.
using CounterMask = std::uint32_t;

struct CounterAction {
  StateId next = 0;
  int dir = 0;
  std::vector<CounterOp> ops;
  bool operator==(const CounterAction&) const = default;
};

struct CounterTransition {
  StateId state = 0;
  Symbol read = kLeftMarker;
  CounterMask zeros = 0;
  CounterMask overflow = 0;  // only used under OverflowPolicy::kSignal
  CounterAction action;
};

// Deterministic one-head two-way machine with k counters bounded by the
// input length.
class CounterMachine {
 public:
  CounterMachine(std::string alphabet, int num_states, StateId start,
                 std::vector<StateId> accepting, int counters,
                 OverflowPolicy policy = OverflowPolicy::kSimple);

  void add_transition(StateId state, Symbol read, CounterMask zeros,
                      CounterAction action, CounterMask overflow = 0);
  const CounterAction* find(StateId state, Symbol read, CounterMask zeros,
                            CounterMask overflow = 0) const;

  const std::string& alphabet() const { return alphabet_; }
  int num_states() const { return num_states_; }
  StateId start() const { return start_; }
  bool is_accepting(StateId q) const { return accepting_[static_cast<std::size_t>(q)]; }
  std::vector<StateId> accepting_states() const;
  int counters() const { return counters_; }
  OverflowPolicy policy() const { return policy_; }
  const std::vector<CounterTransition>& transitions() const { return transitions_; }

  const std::vector<std::string>& state_names() const { return names_; }
  void set_state_names(std::vector<std::string> names);

 private:
  static std::uint64_t key(StateId state, Symbol read, CounterMask zeros, CounterMask overflow);

  std::string alphabet_;
  int num_states_;
  StateId start_;
  std::vector<bool> accepting_;
  int counters_;
  OverflowPolicy policy_;
  std::vector<std::string> names_;
  std::vector<CounterTransition> transitions_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Zero-flag mask of a counter vector.
CounterMask zero_mask(const std::vector<Index>& values);

RunResult run_cm(const CounterMachine& c, std::string_view input,
                 const RunOptions& options = {});

}  // namespace bcl
