#pragma once

// Hand-written machines shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "bcl/counter_machine.hpp"
#include "bcl/multi_head.hpp"
#include "bcl/register_machine.hpp"

namespace fixtures {

using bcl::CounterAction;
using bcl::CounterMachine;
using bcl::CounterMask;
using bcl::CounterOp;
using bcl::HeadAction;
using bcl::MultiHeadAutomaton;
using bcl::StateId;

// Adds a transition for every read tuple matching `pattern`, where '*'
// stands for any tape symbol. Sensing machines get every consistent
// coincidence pattern.
inline void add(MultiHeadAutomaton& m, StateId q, const std::string& pattern, StateId next,
                std::vector<int> moves) {
  const std::string symbols = bcl::tape_symbols(m.alphabet());
  std::vector<std::string> tuples{""};
  for (char c : pattern) {
    std::vector<std::string> grown;
    for (const auto& t : tuples) {
      if (c == '*') {
        for (char s : symbols) grown.push_back(t + s);
      } else {
        grown.push_back(t + c);
      }
    }
    tuples = std::move(grown);
  }
  for (const auto& reads : tuples) {
    if (m.sensing()) {
      for (const auto& pat : bcl::coincidence_patterns(reads)) {
        if (!m.find(q, reads, pat)) m.add_transition(q, reads, pat, HeadAction{next, moves});
      }
    } else if (!m.find(q, reads, "")) {
      m.add_transition(q, reads, "", HeadAction{next, moves});
    }
  }
}

// {a^n b^n}, two heads. Head 1 finds the first b, then both advance.
inline MultiHeadAutomaton anbn_2head() {
  MultiHeadAutomaton m("ab", 3, 0, {2}, 2, false);
  add(m, 0, "*a", 0, {0, 1});
  add(m, 0, "*b", 1, {0, 0});
  add(m, 0, "*>", 1, {0, 0});
  add(m, 1, "ab", 1, {1, 1});
  add(m, 1, "b>", 2, {0, 0});
  add(m, 1, ">>", 2, {0, 0});
  return m;
}

// {a^n b^n c^n}, three heads.
inline MultiHeadAutomaton anbncn_3head() {
  MultiHeadAutomaton m("abc", 4, 0, {3}, 3, false);
  add(m, 0, "*a*", 0, {0, 1, 0});
  add(m, 0, "*b*", 1, {0, 0, 0});
  add(m, 0, "*c*", 1, {0, 0, 0});
  add(m, 0, "*>*", 1, {0, 0, 0});
  add(m, 1, "**a", 1, {0, 0, 1});
  add(m, 1, "**b", 1, {0, 0, 1});
  add(m, 1, "**c", 2, {0, 0, 0});
  add(m, 1, "**>", 2, {0, 0, 0});
  add(m, 2, "abc", 2, {1, 1, 1});
  add(m, 2, "bc>", 3, {0, 0, 0});
  add(m, 2, ">>>", 3, {0, 0, 0});
  return m;
}

// {a^i b^j : i >= 1, i divides j}, two heads; head 0 rewinds once per
// round of i b's.
inline MultiHeadAutomaton divides_2head() {
  // 0 find b's, 1 round start, 2 inside a round, 3 rewind, 4 accept
  MultiHeadAutomaton m("ab", 5, 0, {4}, 2, false);
  add(m, 0, "*a", 0, {0, 1});
  add(m, 0, "*b", 1, {0, 0});
  add(m, 0, "*>", 1, {0, 0});
  add(m, 1, "a>", 4, {0, 0});
  add(m, 1, "ab", 2, {1, 1});
  add(m, 2, "ab", 2, {1, 1});
  add(m, 2, "bb", 3, {-1, 0});
  add(m, 2, "b>", 4, {0, 0});
  add(m, 3, "a*", 3, {-1, 0});
  add(m, 3, "<*", 1, {1, 0});
  return m;
}

// {a^i b^j c^k : i = k}, two heads over three symbols.
inline MultiHeadAutomaton ends_equal_2head() {
  MultiHeadAutomaton m("abc", 3, 0, {2}, 2, false);
  add(m, 0, "*a", 0, {0, 1});
  add(m, 0, "*b", 0, {0, 1});
  add(m, 0, "*c", 1, {0, 0});
  add(m, 0, "*>", 1, {0, 0});
  add(m, 1, "ac", 1, {1, 1});
  add(m, 1, "b>", 2, {0, 0});
  add(m, 1, ">>", 2, {0, 0});
  return m;
}

// Unary, sensing: {a^n : n even}; head 1 never moves.
inline MultiHeadAutomaton unary_even_2head() {
  MultiHeadAutomaton m("a", 3, 0, {2}, 2, true);
  add(m, 0, "a*", 1, {1, 0});
  add(m, 0, ">*", 2, {0, 0});
  add(m, 1, "a*", 0, {1, 0});
  return m;
}

// Unary, sensing: {a^n : n odd}. Head 1 goes to the right end-marker, then
// the heads approach each other alternately; n is odd iff they meet on a
// move of head 0. Head 0 then crosses head 1 and runs to the end.
inline MultiHeadAutomaton unary_odd_meet_2head() {
  // 0 head 1 to the end, 1 head 0's turn, 2 head 1's turn, 3 cross, 4 accept
  MultiHeadAutomaton m("a", 5, 0, {4}, 2, true);
  add(m, 0, "*a", 0, {0, 1});
  add(m, 0, "*>", 1, {0, 0});
  for (const std::string reads : {"aa", "a>"}) {
    m.add_transition(1, reads, "01", HeadAction{2, {1, 0}});
    m.add_transition(2, reads, "01", HeadAction{1, {0, -1}});
  }
  m.add_transition(2, "aa", "00", HeadAction{3, {0, 0}});
  m.add_transition(2, ">>", "00", HeadAction{3, {0, 0}});
  add(m, 3, "a*", 3, {1, 0});
  add(m, 3, ">*", 4, {0, 0});
  return m;
}

// Adds a counter transition for every zero mask in `masks`.
inline void add(CounterMachine& c, StateId q, char read, std::vector<CounterMask> masks,
                StateId next, int dir, std::vector<CounterOp> ops) {
  for (CounterMask z : masks) c.add_transition(q, read, z, CounterAction{next, dir, ops});
}

constexpr CounterOp I = CounterOp::kInc;
constexpr CounterOp D = CounterOp::kDec;
constexpr CounterOp N = CounterOp::kNop;

// {a^n b^n}, one counter.
inline CounterMachine anbn_1counter() {
  CounterMachine c("ab", 3, 0, {2}, 1);
  add(c, 0, 'a', {0, 1}, 0, 1, {I});
  add(c, 0, 'b', {0}, 1, 1, {D});
  add(c, 0, '>', {1}, 2, 0, {N});
  add(c, 1, 'b', {0}, 1, 1, {D});
  add(c, 1, '>', {1}, 2, 0, {N});
  return c;
}

// {a^n b^n c^n}, two counters.
inline CounterMachine anbncn_2counter() {
  CounterMachine c("abc", 4, 0, {3}, 2);
  add(c, 0, 'a', {0, 1, 2, 3}, 0, 1, {I, I});
  add(c, 0, 'b', {0, 2}, 1, 1, {D, N});
  add(c, 0, '>', {3}, 3, 0, {N, N});
  add(c, 1, 'b', {0, 2}, 1, 1, {D, N});
  add(c, 1, 'c', {1}, 2, 1, {N, D});
  add(c, 2, 'c', {1}, 2, 1, {N, D});
  add(c, 2, '>', {3}, 3, 0, {N, N});
  return c;
}

// Zero counters: even length over the alphabet.
inline CounterMachine even_length_0counter(const std::string& alphabet = "ab") {
  CounterMachine c(alphabet, 3, 0, {2}, 0);
  for (char s : alphabet) {
    add(c, 0, s, {0}, 1, 1, {});
    add(c, 1, s, {0}, 0, 1, {});
  }
  add(c, 0, '>', {0}, 2, 0, {});
  return c;
}

// Quadratic-time machine: before handling each symbol the head walks to the
// left end-marker counting and comes back. Accepts iff the number of b's is
// even. One counter, never above n.
inline CounterMachine zigzag_1counter(const std::string& alphabet = "ab") {
  // states: 0/1 handle (parity), 2/3 go left, 4/5 come back, 6 accept
  CounterMachine c(alphabet, 7, 0, {6}, 1);
  for (int p = 0; p < 2; ++p) {
    for (char s : alphabet) {
      const int q = s == 'b' ? 1 - p : p;
      add(c, p, s, {0, 1}, 2 + q, -1, {I});
      add(c, 2 + p, s, {0, 1}, 2 + p, -1, {I});
      add(c, 4 + p, s, {0}, 4 + p, 1, {D});
      add(c, 4 + p, s, {1}, p, 1, {N});
    }
    add(c, 2 + p, '<', {0}, 4 + p, 1, {D});
  }
  add(c, 0, '>', {0, 1}, 6, 0, {N});
  return c;
}

// {n : n even} on a register machine: register 0 counted down by two.
inline bcl::RegisterMachine even_register() {
  bcl::RegisterMachine r(3, 0, {2}, 2);
  r.add_transition(0, 1u | 2u, bcl::RegisterAction{2, {N, N}});
  r.add_transition(0, 2u, bcl::RegisterAction{1, {D, N}});
  r.add_transition(1, 2u, bcl::RegisterAction{0, {D, N}});
  return r;
}

}  // namespace fixtures
