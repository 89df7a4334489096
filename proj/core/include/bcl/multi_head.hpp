#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bcl/run_result.hpp"
#include "bcl/tape.hpp"

namespace bcl {

// Next state plus one direction per head (-1, 0, +1).
struct HeadAction {
  StateId next = 0;
  std::vector<int> moves;

  int moved_heads() const;
  bool operator==(const HeadAction&) const = default;
};

// Lookup key: control state, one read symbol per head and, for sensing
// machines, the coincidence partition of the heads as a restricted-growth
// string ("001" = heads 0 and 1 share a square, head 2 elsewhere).
struct HeadTransition {
  StateId state = 0;
  std::string reads;
  std::string coincidence;
  HeadAction action;
};

// Deterministic two-way k-head finite automaton over an end-marked tape.
class MultiHeadAutomaton {
 public:
  MultiHeadAutomaton(std::string alphabet, int num_states, StateId start,
                     std::vector<StateId> accepting, int heads,
                     bool sensing = false);

  // Throws MachineError on nondeterminism, unknown symbols/states or an
  // inconsistent coincidence pattern.
  void add_transition(StateId state, std::string_view reads,
                      std::string_view coincidence, HeadAction action);
  // Convenience form for machines that move a single head.
  void add_transition(StateId state, std::string_view reads, StateId next,
                      int head, int dir);

  const HeadAction* find(StateId state, std::string_view reads,
                         std::string_view coincidence) const;

  const std::string& alphabet() const { return alphabet_; }
  int num_states() const { return num_states_; }
  StateId start() const { return start_; }
  bool is_accepting(StateId q) const { return accepting_[static_cast<std::size_t>(q)]; }
  std::vector<StateId> accepting_states() const;
  int heads() const { return heads_; }
  bool sensing() const { return sensing_; }
  const std::vector<HeadTransition>& transitions() const { return transitions_; }

  const std::vector<std::string>& state_names() const { return names_; }
  void set_state_names(std::vector<std::string> names);

  // Every transition moves exactly one head by one square.
  bool is_one_move() const;

 private:
  static std::string key(StateId state, std::string_view reads,
                         std::string_view coincidence);

  std::string alphabet_;
  int num_states_;
  StateId start_;
  std::vector<bool> accepting_;
  int heads_;
  bool sensing_;
  std::vector<std::string> names_;
  std::vector<HeadTransition> transitions_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Canonical coincidence partition (restricted-growth string) of positions.
std::string coincidence_of(const std::vector<Index>& positions);

// All restricted-growth strings of length k whose blocks are consistent with
// `reads` (heads in one block read the same symbol).
std::vector<std::string> coincidence_patterns(std::string_view reads);

// Tape alphabet of a machine: its input alphabet plus both end-markers.
std::string tape_symbols(std::string_view alphabet);

RunResult run_mha(const MultiHeadAutomaton& m, std::string_view input,
                  const RunOptions& options = {});

// Observer invoked after every step with the head positions; used by tests
// to check positional invariants on live runs.
using HeadObserver = std::function<void(const std::vector<Index>& positions)>;
RunResult run_mha(const MultiHeadAutomaton& m, std::string_view input,
                  const RunOptions& options, const HeadObserver& observer);

// Equivalent machine that moves exactly one head per step. Stationary chains
// are resolved statically, multi-head moves are serialized through
// intermediate states.
MultiHeadAutomaton normalize_one_move(const MultiHeadAutomaton& m);

// Equivalent sensing machine whose head positions are non-decreasing in head
// index at every step. The result is also one-move normalized. Throws
// MachineError for non-sensing input.
MultiHeadAutomaton normalize_head_order(const MultiHeadAutomaton& m);

// Sensing machine that ignores coincidence information.
MultiHeadAutomaton as_sensing(const MultiHeadAutomaton& m);

}  // namespace bcl
