#pragma once

// Naive reference interpreters used as test oracles. They keep every
// configuration seen in a set instead of the library's cycle detector and
// look transitions up by scanning the table.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bcl/counter_machine.hpp"
#include "bcl/multi_head.hpp"

namespace reference {

enum class Outcome { kAccept, kReject, kFault };

inline char at(const std::string& x, bcl::Index p) {
  if (p == 0) return '<';
  if (p == static_cast<bcl::Index>(x.size()) + 1) return '>';
  return x[static_cast<std::size_t>(p - 1)];
}

inline std::string partition(const std::vector<bcl::Index>& pos) {
  std::map<bcl::Index, char> label;
  std::string out;
  for (bcl::Index p : pos) {
    auto it = label.find(p);
    if (it == label.end()) it = label.emplace(p, static_cast<char>('0' + label.size())).first;
    out += it->second;
  }
  return out;
}

inline Outcome run_mha(const bcl::MultiHeadAutomaton& m, const std::string& x) {
  std::vector<bcl::Index> pos(static_cast<std::size_t>(m.heads()), 1);
  bcl::StateId q = m.start();
  std::set<std::pair<bcl::StateId, std::vector<bcl::Index>>> seen;
  const bcl::Index right = static_cast<bcl::Index>(x.size()) + 1;
  while (true) {
    if (m.is_accepting(q)) return Outcome::kAccept;
    if (!seen.emplace(q, pos).second) return Outcome::kReject;
    std::string reads;
    for (bcl::Index p : pos) reads += at(x, p);
    const std::string coin = m.sensing() ? partition(pos) : "";
    const bcl::HeadTransition* hit = nullptr;
    for (const auto& t : m.transitions()) {
      if (t.state == q && t.reads == reads && t.coincidence == coin) hit = &t;
    }
    if (hit == nullptr) return Outcome::kReject;
    for (std::size_t h = 0; h < pos.size(); ++h) {
      pos[h] += hit->action.moves[h];
      if (pos[h] < 0 || pos[h] > right) return Outcome::kFault;
    }
    q = hit->action.next;
  }
}

inline Outcome run_cm(const bcl::CounterMachine& c, const std::string& x) {
  const auto n = static_cast<bcl::Index>(x.size());
  bcl::Index pos = 1;
  std::vector<bcl::Index> v(static_cast<std::size_t>(c.counters()), 0);
  bcl::StateId q = c.start();
  std::set<std::tuple<bcl::StateId, bcl::Index, std::vector<bcl::Index>>> seen;
  while (true) {
    if (c.is_accepting(q)) return Outcome::kAccept;
    if (!seen.emplace(q, pos, v).second) return Outcome::kReject;
    bcl::CounterMask zeros = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) zeros |= bcl::CounterMask{1} << i;
    }
    const bcl::CounterTransition* hit = nullptr;
    for (const auto& t : c.transitions()) {
      if (t.state == q && t.read == at(x, pos) && t.zeros == zeros && t.overflow == 0) hit = &t;
    }
    if (hit == nullptr) return Outcome::kReject;
    pos += hit->action.dir;
    if (pos < 0 || pos > n + 1) return Outcome::kFault;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (hit->action.ops[i] == bcl::CounterOp::kDec) {
        if (v[i] == 0) return Outcome::kFault;
        --v[i];
      } else if (hit->action.ops[i] == bcl::CounterOp::kInc && v[i] < n) {
        ++v[i];
      }
    }
    q = hit->action.next;
  }
}

inline Outcome outcome_of(const bcl::RunResult& r) {
  switch (r.verdict) {
    case bcl::Verdict::kAccept: return Outcome::kAccept;
    case bcl::Verdict::kFault: return Outcome::kFault;
    default: return Outcome::kReject;
  }
}

}  // namespace reference
