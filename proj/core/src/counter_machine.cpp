#include "bcl/counter_machine.hpp"

#include <algorithm>

#include "bcl/detail/loop_detector.hpp"

namespace bcl {

std::string_view to_string(OverflowPolicy p) {
  switch (p) {
    case OverflowPolicy::kSimple: return "simple";
    case OverflowPolicy::kBlock: return "block";
    case OverflowPolicy::kSignal: return "signal";
  }
  return "simple";
}

OverflowPolicy parse_overflow_policy(std::string_view s) {
  if (s == "simple") return OverflowPolicy::kSimple;
  if (s == "block") return OverflowPolicy::kBlock;
  if (s == "signal") return OverflowPolicy::kSignal;
  throw MachineError("unknown overflow policy '" + std::string(s) + "'");
}

CounterMachine::CounterMachine(std::string alphabet, int num_states, StateId start,
                               std::vector<StateId> accepting, int counters,
                               OverflowPolicy policy)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      start_(start),
      accepting_(static_cast<std::size_t>(std::max(num_states, 0)), false),
      counters_(counters),
      policy_(policy) {
  if (num_states < 1) throw MachineError("machine needs at least one state");
  if (counters < 0 || counters > 16) throw MachineError("counter count must be in [0, 16]");
  if (start < 0 || start >= num_states) throw MachineError("start state out of range");
  for (Symbol s : alphabet_) {
    if (is_marker(s)) throw MachineError("alphabet contains a reserved end-marker");
  }
  for (StateId q : accepting) {
    if (q < 0 || q >= num_states) throw MachineError("accepting state out of range");
    accepting_[static_cast<std::size_t>(q)] = true;
  }
  for (int q = 0; q < num_states; ++q) names_.push_back("q" + std::to_string(q));
}

void CounterMachine::set_state_names(std::vector<std::string> names) {
  if (names.size() != static_cast<std::size_t>(num_states_)) {
    throw MachineError("state name count does not match state count");
  }
  names_ = std::move(names);
}

std::vector<StateId> CounterMachine::accepting_states() const {
  std::vector<StateId> out;
  for (int q = 0; q < num_states_; ++q) {
    if (accepting_[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

std::uint64_t CounterMachine::key(StateId state, Symbol read, CounterMask zeros,
                                  CounterMask overflow) {
  return (static_cast<std::uint64_t>(state) << 40) ^
         (static_cast<std::uint64_t>(static_cast<unsigned char>(read)) << 32) ^
         (static_cast<std::uint64_t>(overflow) << 16) ^ zeros;
}

void CounterMachine::add_transition(StateId state, Symbol read, CounterMask zeros,
                                    CounterAction action, CounterMask overflow) {
  if (state < 0 || state >= num_states_) throw MachineError("transition state out of range");
  if (action.next < 0 || action.next >= num_states_) {
    throw MachineError("transition target out of range");
  }
  if (!is_marker(read) && alphabet_.find(read) == std::string::npos) {
    throw MachineError(std::string("transition reads unknown symbol '") + read + "'");
  }
  const CounterMask all = counters_ == 0 ? 0 : (CounterMask{1} << counters_) - 1;
  if ((zeros & ~all) != 0 || (overflow & ~all) != 0) {
    throw MachineError("zero/overflow mask refers to a missing counter");
  }
  if (overflow != 0 && policy_ != OverflowPolicy::kSignal) {
    throw MachineError("overflow flags only exist under the signal policy");
  }
  if (action.dir < -1 || action.dir > 1) throw MachineError("head direction must be -1, 0 or +1");
  if (action.ops.size() != static_cast<std::size_t>(counters_)) {
    throw MachineError("transition must give one op per counter");
  }
  auto [it, inserted] = index_.emplace(key(state, read, zeros, overflow), transitions_.size());
  if (!inserted) throw MachineError("nondeterministic: duplicate transition key");
  transitions_.push_back({state, read, zeros, overflow, std::move(action)});
}

const CounterAction* CounterMachine::find(StateId state, Symbol read, CounterMask zeros,
                                          CounterMask overflow) const {
  auto it = index_.find(key(state, read, zeros, overflow));
  return it == index_.end() ? nullptr : &transitions_[it->second].action;
}

CounterMask zero_mask(const std::vector<Index>& values) {
  CounterMask mask = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) mask |= CounterMask{1} << i;
  }
  return mask;
}

namespace {

struct CounterConfig {
  StateId state = 0;
  Index pos = 0;
  std::vector<Index> values;
  CounterMask overflow = 0;
  bool operator==(const CounterConfig&) const = default;
};

}  // namespace

RunResult run_cm(const CounterMachine& c, std::string_view input, const RunOptions& options) {
  if (options.limit <= 0) throw std::invalid_argument("step limit must be positive");
  check_word(input, c.alphabet());
  const Tape tape(input);
  const Index n = tape.length();
  const auto k = static_cast<std::size_t>(c.counters());

  RunResult result;
  result.trace.max_counters.assign(k, 0);
  result.trace.max_positions.assign(1, 1);
  CounterConfig cfg{c.start(), 1, std::vector<Index>(k, 0), 0};
  // Overflow flags add a factor 2^k under the signal policy.
  double states = static_cast<double>(c.num_states()) *
                  (c.policy() == OverflowPolicy::kSignal ? std::pow(2.0, c.counters()) : 1.0);
  detail::LoopDetector<CounterConfig> loops(
      detail::loop_detection_armed(options, states, n, 1, c.counters()));

  auto finish = [&](Verdict v, std::string_view why) {
    result.verdict = v;
    result.reason = why;
    return result;
  };

  while (true) {
    if (c.is_accepting(cfg.state)) return finish(Verdict::kAccept, reason::kAcceptingState);
    if (result.steps >= options.limit) return finish(Verdict::kTimeout, reason::kStepLimit);
    if (loops.observe(cfg)) return finish(Verdict::kReject, reason::kLoop);

    const CounterAction* action =
        c.find(cfg.state, tape.at(cfg.pos), zero_mask(cfg.values), cfg.overflow);
    if (action == nullptr) return finish(Verdict::kReject, reason::kNoTransition);

    const Index next_pos = cfg.pos + action->dir;
    if (!tape.in_bounds(next_pos)) {
      result.trace.violations.emplace_back("input head left the tape");
      return finish(Verdict::kFault, reason::kOutOfBounds);
    }
    if (action->dir != 0) ++result.trace.head_moves;
    cfg.pos = next_pos;
    result.trace.max_positions[0] = std::max(result.trace.max_positions[0], next_pos);
    cfg.overflow = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Index& v = cfg.values[i];
      switch (action->ops[i]) {
        case CounterOp::kNop:
          break;
        case CounterOp::kDec:
          if (v == 0) {
            result.trace.violations.push_back("decrement of zero counter " + std::to_string(i));
            ++result.steps;
            return finish(Verdict::kFault, reason::kDecOnZero);
          }
          --v;
          ++result.trace.counter_ops;
          break;
        case CounterOp::kInc:
          ++result.trace.counter_ops;
          if (v < n) {
            ++v;
            break;
          }
          switch (c.policy()) {
            case OverflowPolicy::kSimple:
              break;
            case OverflowPolicy::kBlock:
              result.trace.violations.push_back("overflow of counter " + std::to_string(i));
              ++result.steps;
              return finish(Verdict::kFault, reason::kOverflow);
            case OverflowPolicy::kSignal:
              cfg.overflow |= CounterMask{1} << i;
              break;
          }
          break;
      }
      result.trace.max_counters[i] = std::max(result.trace.max_counters[i], v);
    }
    cfg.state = action->next;
    ++result.steps;
  }
}

}  // namespace bcl
