#include "bcl/multi_head.hpp"

#include <algorithm>

#include "bcl/detail/loop_detector.hpp"

namespace bcl {

int HeadAction::moved_heads() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(),
                                        [](int d) { return d != 0; }));
}

MultiHeadAutomaton::MultiHeadAutomaton(std::string alphabet, int num_states,
                                       StateId start,
                                       std::vector<StateId> accepting,
                                       int heads, bool sensing)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      start_(start),
      accepting_(static_cast<std::size_t>(std::max(num_states, 0)), false),
      heads_(heads),
      sensing_(sensing) {
  if (num_states < 1) throw MachineError("machine needs at least one state");
  if (heads < 1) throw MachineError("machine needs at least one head");
  if (start < 0 || start >= num_states) throw MachineError("start state out of range");
  for (Symbol s : alphabet_) {
    if (is_marker(s)) throw MachineError("alphabet contains a reserved end-marker");
    if (std::count(alphabet_.begin(), alphabet_.end(), s) > 1) {
      throw MachineError("duplicate alphabet symbol");
    }
  }
  for (StateId q : accepting) {
    if (q < 0 || q >= num_states) throw MachineError("accepting state out of range");
    accepting_[static_cast<std::size_t>(q)] = true;
  }
  names_.reserve(static_cast<std::size_t>(num_states));
  for (int q = 0; q < num_states; ++q) names_.push_back("q" + std::to_string(q));
}

void MultiHeadAutomaton::set_state_names(std::vector<std::string> names) {
  if (names.size() != static_cast<std::size_t>(num_states_)) {
    throw MachineError("state name count does not match state count");
  }
  names_ = std::move(names);
}

std::vector<StateId> MultiHeadAutomaton::accepting_states() const {
  std::vector<StateId> out;
  for (int q = 0; q < num_states_; ++q) {
    if (accepting_[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

std::string MultiHeadAutomaton::key(StateId state, std::string_view reads,
                                    std::string_view coincidence) {
  std::string k = std::to_string(state);
  k += '|';
  k += reads;
  k += '|';
  k += coincidence;
  return k;
}

namespace {

bool is_restricted_growth(std::string_view s) {
  char next = '0';
  for (char c : s) {
    if (c < '0' || c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

}  // namespace

void MultiHeadAutomaton::add_transition(StateId state, std::string_view reads,
                                        std::string_view coincidence,
                                        HeadAction action) {
  if (state < 0 || state >= num_states_) throw MachineError("transition state out of range");
  if (action.next < 0 || action.next >= num_states_) {
    throw MachineError("transition target out of range");
  }
  if (reads.size() != static_cast<std::size_t>(heads_)) {
    throw MachineError("transition reads must have one symbol per head");
  }
  for (Symbol s : reads) {
    if (!is_marker(s) && alphabet_.find(s) == std::string::npos) {
      throw MachineError(std::string("transition reads unknown symbol '") + s + "'");
    }
  }
  if (action.moves.size() != static_cast<std::size_t>(heads_)) {
    throw MachineError("transition must give one direction per head");
  }
  for (int d : action.moves) {
    if (d < -1 || d > 1) throw MachineError("head direction must be -1, 0 or +1");
  }
  if (sensing_) {
    if (coincidence.size() != static_cast<std::size_t>(heads_) ||
        !is_restricted_growth(coincidence)) {
      throw MachineError("sensing transition needs a canonical coincidence pattern");
    }
    for (std::size_t i = 0; i < reads.size(); ++i) {
      for (std::size_t j = i + 1; j < reads.size(); ++j) {
        if (coincidence[i] == coincidence[j] && reads[i] != reads[j]) {
          throw MachineError("coincident heads must read the same symbol");
        }
      }
    }
  } else if (!coincidence.empty()) {
    throw MachineError("coincidence pattern given for a non-sensing machine");
  }
  auto [it, inserted] = index_.emplace(key(state, reads, coincidence), transitions_.size());
  if (!inserted) throw MachineError("nondeterministic: duplicate transition key");
  transitions_.push_back(HeadTransition{state, std::string(reads),
                                        std::string(coincidence), std::move(action)});
}

void MultiHeadAutomaton::add_transition(StateId state, std::string_view reads,
                                        StateId next, int head, int dir) {
  HeadAction action{next, std::vector<int>(static_cast<std::size_t>(heads_), 0)};
  if (head < 0 || head >= heads_) throw MachineError("head index out of range");
  action.moves[static_cast<std::size_t>(head)] = dir;
  if (sensing_) {
    for (const auto& pattern : coincidence_patterns(reads)) {
      add_transition(state, reads, pattern, action);
    }
  } else {
    add_transition(state, reads, "", std::move(action));
  }
}

const HeadAction* MultiHeadAutomaton::find(StateId state, std::string_view reads,
                                           std::string_view coincidence) const {
  auto it = index_.find(key(state, reads, coincidence));
  return it == index_.end() ? nullptr : &transitions_[it->second].action;
}

bool MultiHeadAutomaton::is_one_move() const {
  return std::all_of(transitions_.begin(), transitions_.end(),
                     [](const HeadTransition& t) { return t.action.moved_heads() == 1; });
}

std::string coincidence_of(const std::vector<Index>& positions) {
  std::string out(positions.size(), '0');
  char next = '0';
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::size_t j = 0;
    while (j < i && positions[j] != positions[i]) ++j;
    out[i] = j < i ? out[j] : next++;
  }
  return out;
}

std::vector<std::string> coincidence_patterns(std::string_view reads) {
  std::vector<std::string> out;
  std::string cur(reads.size(), '0');
  // Depth-first enumeration of restricted-growth strings.
  auto rec = [&](auto&& self, std::size_t i, char max_label) -> void {
    if (i == reads.size()) {
      out.push_back(cur);
      return;
    }
    for (char c = '0'; c <= max_label + 1 && c <= '9'; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (cur[j] == c && reads[j] != reads[i]) ok = false;
      }
      if (!ok) continue;
      cur[i] = c;
      self(self, i + 1, std::max(max_label, c));
    }
  };
  if (reads.empty()) return {""};
  cur[0] = '0';
  rec(rec, 1, '0');
  return out;
}

std::string tape_symbols(std::string_view alphabet) {
  std::string out(alphabet);
  out += kLeftMarker;
  out += kRightMarker;
  return out;
}

namespace {

struct HeadConfig {
  StateId state = 0;
  std::vector<Index> positions;
  bool operator==(const HeadConfig&) const = default;
};

}  // namespace

RunResult run_mha(const MultiHeadAutomaton& m, std::string_view input,
                  const RunOptions& options) {
  return run_mha(m, input, options, nullptr);
}

RunResult run_mha(const MultiHeadAutomaton& m, std::string_view input,
                  const RunOptions& options, const HeadObserver& observer) {
  if (options.limit <= 0) throw std::invalid_argument("step limit must be positive");
  check_word(input, m.alphabet());
  const Tape tape(input);
  const auto k = static_cast<std::size_t>(m.heads());

  RunResult result;
  result.trace.max_positions.assign(k, 1);
  HeadConfig cfg{m.start(), std::vector<Index>(k, 1)};
  detail::LoopDetector<HeadConfig> loops(
      detail::loop_detection_armed(options, m.num_states(), tape.length(), m.heads(), 0));
  std::string reads(k, ' ');

  while (true) {
    if (m.is_accepting(cfg.state)) {
      result.verdict = Verdict::kAccept;
      result.reason = reason::kAcceptingState;
      return result;
    }
    if (result.steps >= options.limit) {
      result.verdict = Verdict::kTimeout;
      result.reason = reason::kStepLimit;
      return result;
    }
    if (loops.observe(cfg)) {
      result.verdict = Verdict::kReject;
      result.reason = reason::kLoop;
      return result;
    }
    for (std::size_t i = 0; i < k; ++i) reads[i] = tape.at(cfg.positions[i]);
    const HeadAction* action =
        m.find(cfg.state, reads, m.sensing() ? coincidence_of(cfg.positions) : "");
    if (action == nullptr) {
      result.verdict = Verdict::kReject;
      result.reason = reason::kNoTransition;
      return result;
    }
    for (std::size_t i = 0; i < k; ++i) {
      Index p = cfg.positions[i] + action->moves[i];
      if (!tape.in_bounds(p)) {
        result.verdict = Verdict::kFault;
        result.reason = reason::kOutOfBounds;
        result.trace.violations.push_back("head " + std::to_string(i) + " left the tape");
        return result;
      }
      if (action->moves[i] != 0) ++result.trace.head_moves;
      cfg.positions[i] = p;
      result.trace.max_positions[i] = std::max(result.trace.max_positions[i], p);
    }
    cfg.state = action->next;
    ++result.steps;
    if (observer) observer(cfg.positions);
  }
}

}  // namespace bcl
