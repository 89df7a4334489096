#include <vector>

#include "bcl/transforms.hpp"

namespace bcl {
namespace {

// Every tuple over `choices[i]` for each position i.
void for_each_tuple(const std::vector<std::string>& choices,
                    const std::function<void(const std::string&)>& fn) {
  std::string cur(choices.size(), ' ');
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      fn(cur);
      return;
    }
    for (Symbol s : choices[i]) {
      cur[i] = s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

MultiHeadAutomaton counters_to_heads(const CounterMachine& c) {
  if (c.policy() != OverflowPolicy::kSimple) {
    throw MachineError("counters_to_heads supports only the simple overflow policy");
  }
  const int counters = c.counters();
  const int heads = counters + 1;
  const int r = c.num_states();
  const StateId initial = r;  // copy of the start state used for step one
  const StateId fault = r + 1;
  const std::string alphabet = c.alphabet();
  const std::string all_symbols = tape_symbols(alphabet);

  auto accepting = c.accepting_states();
  if (c.is_accepting(c.start())) accepting.push_back(initial);
  MultiHeadAutomaton m(alphabet, r + 2, initial, accepting, heads);
  auto names = c.state_names();
  names.push_back(names[static_cast<std::size_t>(c.start())] + "~init");
  names.push_back("fault~");
  m.set_state_names(names);

  const CounterMask all_zero = counters == 0 ? 0 : (CounterMask{1} << counters) - 1;

  for (const auto& t : c.transitions()) {
    const auto& a = t.action;
    // Regular copy: counter head i reads '<' exactly when counter i is zero.
    std::vector<std::string> choices{std::string(1, t.read)};
    for (int i = 0; i < counters; ++i) {
      choices.push_back((t.zeros >> i & 1U) ? std::string(1, kLeftMarker) : alphabet);
    }
    HeadAction regular{a.next, std::vector<int>(static_cast<std::size_t>(heads), 0)};
    regular.moves[0] = a.dir;
    for (int i = 0; i < counters; ++i) {
      regular.moves[static_cast<std::size_t>(i + 1)] = static_cast<int>(a.ops[static_cast<std::size_t>(i)]);
    }
    for_each_tuple(choices, [&](const std::string& reads) {
      m.add_transition(t.state, reads, "", regular);
    });

    // First step: every head stands on square 1 and all counters are zero.
    // A counter head that should hold 0 steps onto the left end-marker, one
    // that is incremented stays on square 1.
    if (t.state == c.start() && t.zeros == all_zero && t.read != kLeftMarker) {
      HeadAction first{a.next, std::vector<int>(static_cast<std::size_t>(heads), 0)};
      first.moves[0] = a.dir;
      for (int i = 0; i < counters; ++i) {
        CounterOp op = a.ops[static_cast<std::size_t>(i)];
        first.moves[static_cast<std::size_t>(i + 1)] = op == CounterOp::kInc ? 0 : -1;
        if (op == CounterOp::kDec) first.next = fault;
      }
      m.add_transition(initial, std::string(static_cast<std::size_t>(heads), t.read), "",
                       std::move(first));
    }
  }

  std::vector<std::string> any(static_cast<std::size_t>(heads), all_symbols);
  for_each_tuple(any, [&](const std::string& reads) {
    // A counter head on the right end-marker holds value n after an
    // overflow; move it back to square n without consuming a counter step.
    for (int i = 1; i < heads; ++i) {
      if (reads[static_cast<std::size_t>(i)] != kRightMarker) continue;
      for (StateId q = 0; q < r; ++q) {
        if (c.is_accepting(q)) continue;
        HeadAction fix{q, std::vector<int>(static_cast<std::size_t>(heads), 0)};
        fix.moves[static_cast<std::size_t>(i)] = -1;
        m.add_transition(q, reads, "", fix);
      }
      break;
    }
    // The fault state drives a head off the tape.
    HeadAction crash{fault, std::vector<int>(static_cast<std::size_t>(heads), 0)};
    auto left = reads.find(kLeftMarker);
    if (left != std::string::npos) {
      crash.moves[left] = -1;
    } else {
      crash.moves[reads.find(kRightMarker) != std::string::npos ? reads.find(kRightMarker) : 0] = 1;
    }
    m.add_transition(fault, reads, "", crash);
  });
  return m;
}

}  // namespace bcl
