#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "bcl/multi_head.hpp"

namespace bcl {
namespace {

// All words of length k over `symbols`, in lexicographic order of indices.
std::vector<std::string> all_read_tuples(std::string_view symbols, int k) {
  std::vector<std::string> out{""};
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * symbols.size());
    for (const auto& prefix : out) {
      for (Symbol s : symbols) next.push_back(prefix + s);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::string> patterns_for(const MultiHeadAutomaton& m, std::string_view reads) {
  if (!m.sensing()) return {""};
  return coincidence_patterns(reads);
}

struct Resolved {
  enum class Kind { kReject, kAccept, kMove } kind = Kind::kReject;
  StateId next = 0;
  std::vector<int> moves;
};

// Follows stationary transitions from `q` under fixed reads until a moving
// transition, an accepting state or a repeat.
Resolved resolve(const MultiHeadAutomaton& m, StateId q, std::string_view reads,
                 std::string_view coincidence) {
  std::set<StateId> seen{q};
  StateId cur = q;
  while (true) {
    const HeadAction* a = m.find(cur, reads, coincidence);
    if (a == nullptr) return {};
    if (a->moved_heads() > 0) return {Resolved::Kind::kMove, a->next, a->moves};
    if (m.is_accepting(a->next)) return {Resolved::Kind::kAccept, a->next, {}};
    if (!seen.insert(a->next).second) return {};
    cur = a->next;
  }
}

int first_moved(const std::vector<int>& moves) {
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

std::string moves_tag(const std::vector<int>& moves) {
  std::string tag;
  for (int d : moves) tag += d > 0 ? '+' : d < 0 ? '-' : '0';
  return tag;
}

struct PendingTransition {
  StateId state;
  std::string reads;
  std::string coincidence;
  HeadAction action;
};

}  // namespace

MultiHeadAutomaton normalize_one_move(const MultiHeadAutomaton& m) {
  const int k = m.heads();
  std::vector<std::string> names = m.state_names();
  std::optional<StateId> accept_sink;
  std::map<std::pair<StateId, std::string>, StateId> intermediates;
  struct Intermediate {
    StateId id;
    StateId target;
    std::vector<int> rest;
  };
  std::vector<Intermediate> intermediate_work;
  std::vector<PendingTransition> out;

  auto intermediate = [&](StateId target, const std::vector<int>& rest) {
    auto key = std::make_pair(target, moves_tag(rest));
    auto it = intermediates.find(key);
    if (it != intermediates.end()) return it->second;
    auto id = static_cast<StateId>(names.size());
    names.push_back(names[static_cast<std::size_t>(target)] + "~" + key.second);
    intermediates.emplace(key, id);
    intermediate_work.push_back({id, target, rest});
    return id;
  };

  // Emits one single-head move toward `target` that still owes `moves`.
  auto emit_move = [&](StateId from, const std::string& reads, const std::string& coin,
                       StateId target, std::vector<int> moves) {
    int head = first_moved(moves);
    HeadAction action{target, std::vector<int>(static_cast<std::size_t>(k), 0)};
    action.moves[static_cast<std::size_t>(head)] = moves[static_cast<std::size_t>(head)];
    moves[static_cast<std::size_t>(head)] = 0;
    if (first_moved(moves) >= 0) action.next = intermediate(target, moves);
    out.push_back({from, reads, coin, std::move(action)});
  };

  for (const auto& t : m.transitions()) {
    if (t.action.moved_heads() == 1) {
      out.push_back({t.state, t.reads, t.coincidence, t.action});
      continue;
    }
    Resolved r = resolve(m, t.state, t.reads, t.coincidence);
    switch (r.kind) {
      case Resolved::Kind::kReject:
        break;
      case Resolved::Kind::kAccept: {
        if (!accept_sink) {
          accept_sink = static_cast<StateId>(names.size());
          names.push_back("accept~");
        }
        HeadAction action{*accept_sink, std::vector<int>(static_cast<std::size_t>(k), 0)};
        action.moves[0] = t.reads[0] == kLeftMarker ? 1 : -1;
        out.push_back({t.state, t.reads, t.coincidence, std::move(action)});
        break;
      }
      case Resolved::Kind::kMove:
        emit_move(t.state, t.reads, t.coincidence, r.next, r.moves);
        break;
    }
  }

  const std::string symbols = tape_symbols(m.alphabet());
  const auto tuples = all_read_tuples(symbols, k);
  for (std::size_t w = 0; w < intermediate_work.size(); ++w) {
    // Copy: emit_move may grow intermediate_work.
    const Intermediate item = intermediate_work[w];
    for (const auto& reads : tuples) {
      for (const auto& coin : patterns_for(m, reads)) {
        emit_move(item.id, reads, coin, item.target, item.rest);
      }
    }
  }

  auto accepting = m.accepting_states();
  if (accept_sink) accepting.push_back(*accept_sink);
  MultiHeadAutomaton result(m.alphabet(), static_cast<int>(names.size()), m.start(),
                            accepting, k, m.sensing());
  for (auto& t : out) result.add_transition(t.state, t.reads, t.coincidence, std::move(t.action));
  result.set_state_names(std::move(names));
  return result;
}

MultiHeadAutomaton as_sensing(const MultiHeadAutomaton& m) {
  if (m.sensing()) return m;
  MultiHeadAutomaton out(m.alphabet(), m.num_states(), m.start(), m.accepting_states(),
                         m.heads(), true);
  for (const auto& t : m.transitions()) {
    for (const auto& coin : coincidence_patterns(t.reads)) {
      out.add_transition(t.state, t.reads, coin, t.action);
    }
  }
  out.set_state_names(m.state_names());
  return out;
}

namespace {

// Canonical restricted-growth string for a labelling.
std::string canonical(const std::string& labels) {
  std::map<char, char> relabel;
  std::string out(labels.size(), '0');
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = relabel.find(labels[i]);
    if (it == relabel.end()) {
      char fresh = static_cast<char>('0' + relabel.size());
      it = relabel.emplace(labels[i], fresh).first;
    }
    out[i] = it->second;
  }
  return out;
}

}  // namespace

MultiHeadAutomaton normalize_head_order(const MultiHeadAutomaton& m) {
  if (!m.sensing()) {
    throw MachineError("head-order normalization needs a sensing machine");
  }
  const MultiHeadAutomaton base = normalize_one_move(m);
  const int k = base.heads();
  const auto uk = static_cast<std::size_t>(k);

  // Product state: base state plus the role permutation physical -> logical.
  using Product = std::pair<StateId, std::vector<int>>;
  std::map<Product, StateId> ids;
  std::vector<Product> states;
  std::queue<StateId> work;
  auto intern = [&](const Product& p) {
    auto [it, inserted] = ids.emplace(p, static_cast<StateId>(states.size()));
    if (inserted) {
      states.push_back(p);
      work.push(it->second);
    }
    return it->second;
  };
  std::vector<int> identity(uk);
  std::iota(identity.begin(), identity.end(), 0);
  intern({base.start(), identity});

  const auto tuples = all_read_tuples(tape_symbols(base.alphabet()), k);
  std::vector<PendingTransition> out;
  while (!work.empty()) {
    StateId id = work.front();
    work.pop();
    const auto [q, perm] = states[static_cast<std::size_t>(id)];
    if (base.is_accepting(q)) continue;
    for (const auto& reads : tuples) {
      for (const auto& coin : coincidence_patterns(reads)) {
        std::string logical_reads(uk, ' ');
        std::string logical_labels(uk, ' ');
        for (std::size_t j = 0; j < uk; ++j) {
          logical_reads[static_cast<std::size_t>(perm[j])] = reads[j];
          logical_labels[static_cast<std::size_t>(perm[j])] = coin[j];
        }
        const HeadAction* a = base.find(q, logical_reads, canonical(logical_labels));
        if (a == nullptr) continue;
        int logical = first_moved(a->moves);
        int dir = a->moves[static_cast<std::size_t>(logical)];
        auto holder = static_cast<std::size_t>(
            std::find(perm.begin(), perm.end(), logical) - perm.begin());
        // Among heads sharing the square, the outermost one in the move
        // direction moves and takes over the role.
        std::size_t mover = holder;
        for (std::size_t j = 0; j < uk; ++j) {
          if (coin[j] != coin[holder]) continue;
          if (dir > 0 ? j > mover : j < mover) mover = j;
        }
        std::vector<int> next_perm = perm;
        std::swap(next_perm[holder], next_perm[mover]);
        HeadAction action{intern({a->next, next_perm}), std::vector<int>(uk, 0)};
        action.moves[mover] = dir;
        out.push_back({id, reads, coin, std::move(action)});
      }
    }
  }

  std::vector<StateId> accepting;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& [q, perm] = states[i];
    if (base.is_accepting(q)) accepting.push_back(static_cast<StateId>(i));
    std::string name = base.state_names()[static_cast<std::size_t>(q)] + "/";
    for (int p : perm) name += static_cast<char>('0' + p);
    names.push_back(std::move(name));
  }
  MultiHeadAutomaton result(base.alphabet(), static_cast<int>(states.size()), 0,
                            accepting, k, true);
  for (auto& t : out) result.add_transition(t.state, t.reads, t.coincidence, std::move(t.action));
  result.set_state_names(std::move(names));
  return result;
}

}  // namespace bcl
