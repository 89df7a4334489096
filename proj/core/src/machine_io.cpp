#include "bcl/machine_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bcl {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at_index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) throw MachineFileError(path.empty() ? "<root>" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw MachineFileError(join(path, key), "missing field");
  return *it;
}

long long as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw MachineFileError(path, "expected an integer");
  return v.get<long long>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw MachineFileError(path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw MachineFileError(path, "expected a list");
  return v;
}

Symbol as_symbol(const json& v, const std::string& path) {
  const std::string s = as_string(v, path);
  if (s.size() != 1) throw MachineFileError(path, "expected a single symbol");
  return s[0];
}

// State names and lookup shared by all kinds.
struct States {
  std::vector<std::string> names;
  std::map<std::string, StateId> ids;

  StateId resolve(const json& v, const std::string& path) const {
    if (v.is_number_integer()) {
      const long long q = v.get<long long>();
      if (q < 0 || q >= static_cast<long long>(names.size())) {
        throw MachineFileError(path, "state index " + std::to_string(q) + " out of range");
      }
      return static_cast<StateId>(q);
    }
    const std::string name = as_string(v, path);
    auto it = ids.find(name);
    if (it == ids.end()) throw MachineFileError(path, "unknown state '" + name + "'");
    return it->second;
  }
};

States read_states(const json& root) {
  const json& v = require(root, "", "states");
  States s;
  if (v.is_number_integer()) {
    const long long count = v.get<long long>();
    if (count < 1) throw MachineFileError("states", "need at least one state");
    for (long long q = 0; q < count; ++q) s.names.push_back("q" + std::to_string(q));
  } else {
    as_array(v, "states");
    for (std::size_t i = 0; i < v.size(); ++i) s.names.push_back(as_string(v[i], at_index("states", i)));
    if (s.names.empty()) throw MachineFileError("states", "need at least one state");
  }
  for (std::size_t i = 0; i < s.names.size(); ++i) {
    if (!s.ids.emplace(s.names[i], static_cast<StateId>(i)).second) {
      throw MachineFileError(at_index("states", i), "duplicate state '" + s.names[i] + "'");
    }
  }
  return s;
}

std::vector<StateId> read_accept(const json& root, const States& s) {
  std::vector<StateId> out;
  auto it = root.find("accept");
  if (it == root.end()) return out;
  as_array(*it, "accept");
  for (std::size_t i = 0; i < it->size(); ++i) out.push_back(s.resolve((*it)[i], at_index("accept", i)));
  return out;
}

int read_count(const json& root, const std::string& key, int lo, int hi) {
  const long long v = as_int(require(root, "", key), key);
  if (v < lo || v > hi) {
    throw MachineFileError(key, "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  }
  return static_cast<int>(v);
}

CounterMask read_mask(const json& t, const std::string& path, const std::string& key, int size) {
  auto it = t.find(key);
  if (it == t.end()) return 0;
  const std::string p = join(path, key);
  as_array(*it, p);
  CounterMask mask = 0;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const long long c = as_int((*it)[i], at_index(p, i));
    if (c < 0 || c >= size) throw MachineFileError(at_index(p, i), "no counter " + std::to_string(c));
    mask |= CounterMask{1} << c;
  }
  return mask;
}

std::vector<CounterOp> read_ops(const json& t, const std::string& path, int size) {
  std::vector<CounterOp> ops(static_cast<std::size_t>(size), CounterOp::kNop);
  auto it = t.find("ops");
  if (it == t.end()) return ops;
  const std::string p = join(path, "ops");
  as_array(*it, p);
  if (it->size() != ops.size()) {
    throw MachineFileError(p, "expected " + std::to_string(size) + " operations");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string op = as_string((*it)[i], at_index(p, i));
    if (op == "inc") ops[i] = CounterOp::kInc;
    else if (op == "dec") ops[i] = CounterOp::kDec;
    else if (op == "nop") ops[i] = CounterOp::kNop;
    else throw MachineFileError(at_index(p, i), "unknown operation '" + op + "'");
  }
  return ops;
}

int read_dir(const json& v, const std::string& path) {
  const long long d = as_int(v, path);
  if (d < -1 || d > 1) throw MachineFileError(path, "direction must be -1, 0 or 1");
  return static_cast<int>(d);
}

const json& transitions_of(const json& root) {
  static const json empty = json::array();
  auto it = root.find("transitions");
  if (it == root.end()) return empty;
  return as_array(*it, "transitions");
}

std::string read_alphabet(const json& root) {
  const std::string a = as_string(require(root, "", "alphabet"), "alphabet");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_marker(a[i])) throw MachineFileError("alphabet", "end-markers are reserved");
    if (a.find(a[i], i + 1) != std::string::npos) {
      throw MachineFileError("alphabet", std::string("duplicate symbol '") + a[i] + "'");
    }
  }
  return a;
}

void check_symbols(std::string_view symbols, const std::string& alphabet, const std::string& path) {
  for (Symbol c : symbols) {
    if (!is_marker(c) && alphabet.find(c) == std::string::npos) {
      throw MachineFileError(path, std::string("symbol '") + c + "' not in alphabet");
    }
  }
}

template <typename F>
void with_path(const std::string& path, F&& f) {
  try {
    f();
  } catch (const MachineError& e) {
    throw MachineFileError(path, e.what());
  } catch (const std::invalid_argument& e) {
    throw MachineFileError(path, e.what());
  }
}

MultiHeadAutomaton parse_multi_head(const json& root) {
  const std::string alphabet = read_alphabet(root);
  const States s = read_states(root);
  const StateId start = s.resolve(require(root, "", "start"), "start");
  const std::vector<StateId> accept = read_accept(root, s);
  const int heads = read_count(root, "heads", 1, 16);
  bool sensing = false;
  if (auto it = root.find("sensing"); it != root.end()) {
    if (!it->is_boolean()) throw MachineFileError("sensing", "expected true or false");
    sensing = it->get<bool>();
  }
  std::optional<MultiHeadAutomaton> m;
  with_path("<root>", [&] {
    m.emplace(alphabet, static_cast<int>(s.names.size()), start, accept, heads, sensing);
  });
  m->set_state_names(s.names);
  const json& ts = transitions_of(root);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string p = at_index("transitions", i);
    const json& t = ts[i];
    const StateId q = s.resolve(require(t, p, "state"), join(p, "state"));
    const std::string reads = as_string(require(t, p, "reads"), join(p, "reads"));
    check_symbols(reads, alphabet, join(p, "reads"));
    HeadAction action;
    action.next = s.resolve(require(t, p, "next"), join(p, "next"));
    action.moves.assign(static_cast<std::size_t>(heads), 0);
    if (auto mv = t.find("moves"); mv != t.end()) {
      as_array(*mv, join(p, "moves"));
      if (mv->size() != action.moves.size()) {
        throw MachineFileError(join(p, "moves"), "expected one move per head");
      }
      for (std::size_t h = 0; h < mv->size(); ++h) {
        action.moves[h] = read_dir((*mv)[h], at_index(join(p, "moves"), h));
      }
    } else if (t.contains("move_head")) {
      const long long h = as_int(t["move_head"], join(p, "move_head"));
      if (h < 0 || h >= heads) throw MachineFileError(join(p, "move_head"), "no such head");
      action.moves[static_cast<std::size_t>(h)] = read_dir(require(t, p, "dir"), join(p, "dir"));
    }
    std::vector<std::string> patterns;
    if (auto c = t.find("coincidence"); c != t.end()) {
      patterns.push_back(as_string(*c, join(p, "coincidence")));
    } else if (sensing) {
      with_path(join(p, "reads"), [&] { patterns = coincidence_patterns(reads); });
    } else {
      patterns.emplace_back();
    }
    with_path(p, [&] {
      for (const auto& pat : patterns) m->add_transition(q, reads, pat, action);
    });
  }
  return std::move(*m);
}

CounterMachine parse_counter(const json& root) {
  const std::string alphabet = read_alphabet(root);
  const States s = read_states(root);
  const StateId start = s.resolve(require(root, "", "start"), "start");
  const std::vector<StateId> accept = read_accept(root, s);
  const int k = read_count(root, "counters", 0, 16);
  OverflowPolicy policy = OverflowPolicy::kSimple;
  if (auto it = root.find("overflow"); it != root.end()) {
    with_path("overflow", [&] { policy = parse_overflow_policy(as_string(*it, "overflow")); });
  }
  std::optional<CounterMachine> m;
  with_path("<root>", [&] {
    m.emplace(alphabet, static_cast<int>(s.names.size()), start, accept, k, policy);
  });
  m->set_state_names(s.names);
  const json& ts = transitions_of(root);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string p = at_index("transitions", i);
    const json& t = ts[i];
    const StateId q = s.resolve(require(t, p, "state"), join(p, "state"));
    const Symbol read = as_symbol(require(t, p, "read"), join(p, "read"));
    check_symbols(std::string_view(&read, 1), alphabet, join(p, "read"));
    const CounterMask zeros = read_mask(t, p, "zeros", k);
    const CounterMask overflow = read_mask(t, p, "overflow", k);
    CounterAction action;
    action.next = s.resolve(require(t, p, "next"), join(p, "next"));
    action.dir = t.contains("dir") ? read_dir(t["dir"], join(p, "dir")) : 0;
    action.ops = read_ops(t, p, k);
    with_path(p, [&] { m->add_transition(q, read, zeros, action, overflow); });
  }
  return std::move(*m);
}

RegisterMachine parse_register(const json& root) {
  const States s = read_states(root);
  const StateId start = s.resolve(require(root, "", "start"), "start");
  const std::vector<StateId> accept = read_accept(root, s);
  const int k = read_count(root, "registers", 1, 16);
  std::optional<RegisterMachine> m;
  with_path("<root>", [&] { m.emplace(static_cast<int>(s.names.size()), start, accept, k); });
  m->set_state_names(s.names);
  const json& ts = transitions_of(root);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string p = at_index("transitions", i);
    const json& t = ts[i];
    const StateId q = s.resolve(require(t, p, "state"), join(p, "state"));
    RegisterAction action;
    action.next = s.resolve(require(t, p, "next"), join(p, "next"));
    action.ops = read_ops(t, p, k);
    const CounterMask zeros = read_mask(t, p, "zeros", k);
    with_path(p, [&] { m->add_transition(q, zeros, action); });
  }
  return std::move(*m);
}

}  // namespace

AnyMachine parse_machine(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MachineFileError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  const std::string kind = as_string(require(root, "", "kind"), "kind");
  if (kind == "multi_head") return parse_multi_head(root);
  if (kind == "counter") return parse_counter(root);
  if (kind == "register") return parse_register(root);
  throw MachineFileError("kind", "unknown machine kind '" + kind + "'");
}

AnyMachine load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MachineFileError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_machine(ss.str());
}

namespace {

// State references are written as names when those are unique, otherwise
// as indices.
struct StateWriter {
  const std::vector<std::string>& names;
  bool by_name;

  explicit StateWriter(const std::vector<std::string>& n)
      : names(n), by_name(std::set<std::string>(n.begin(), n.end()).size() == n.size()) {}

  ojson states() const {
    if (by_name) return ojson(names);
    return ojson(names.size());
  }
  ojson ref(StateId q) const {
    if (by_name) return ojson(names[static_cast<std::size_t>(q)]);
    return ojson(q);
  }
  ojson refs(const std::vector<StateId>& qs) const {
    ojson out = ojson::array();
    for (StateId q : qs) out.push_back(ref(q));
    return out;
  }
};

ojson mask_json(CounterMask mask, int size) {
  ojson out = ojson::array();
  for (int i = 0; i < size; ++i) {
    if (mask & (CounterMask{1} << i)) out.push_back(i);
  }
  return out;
}

ojson ops_json(const std::vector<CounterOp>& ops) {
  ojson out = ojson::array();
  for (CounterOp op : ops) {
    out.push_back(op == CounterOp::kInc ? "inc" : op == CounterOp::kDec ? "dec" : "nop");
  }
  return out;
}

ojson to_ojson(const MultiHeadAutomaton& m) {
  StateWriter w(m.state_names());
  ojson j;
  j["kind"] = "multi_head";
  j["alphabet"] = m.alphabet();
  j["states"] = w.states();
  j["start"] = w.ref(m.start());
  j["accept"] = w.refs(m.accepting_states());
  j["heads"] = m.heads();
  j["sensing"] = m.sensing();
  ojson ts = ojson::array();
  for (const auto& t : m.transitions()) {
    ojson r;
    r["state"] = w.ref(t.state);
    r["reads"] = t.reads;
    if (m.sensing()) r["coincidence"] = t.coincidence;
    r["next"] = w.ref(t.action.next);
    r["moves"] = t.action.moves;
    ts.push_back(std::move(r));
  }
  j["transitions"] = std::move(ts);
  return j;
}

ojson to_ojson(const CounterMachine& m) {
  StateWriter w(m.state_names());
  ojson j;
  j["kind"] = "counter";
  j["alphabet"] = m.alphabet();
  j["states"] = w.states();
  j["start"] = w.ref(m.start());
  j["accept"] = w.refs(m.accepting_states());
  j["counters"] = m.counters();
  j["overflow"] = std::string(to_string(m.policy()));
  ojson ts = ojson::array();
  for (const auto& t : m.transitions()) {
    ojson r;
    r["state"] = w.ref(t.state);
    r["read"] = std::string(1, t.read);
    r["zeros"] = mask_json(t.zeros, m.counters());
    if (t.overflow != 0) r["overflow"] = mask_json(t.overflow, m.counters());
    r["next"] = w.ref(t.action.next);
    r["dir"] = t.action.dir;
    r["ops"] = ops_json(t.action.ops);
    ts.push_back(std::move(r));
  }
  j["transitions"] = std::move(ts);
  return j;
}

ojson to_ojson(const RegisterMachine& m) {
  StateWriter w(m.state_names());
  ojson j;
  j["kind"] = "register";
  j["states"] = w.states();
  j["start"] = w.ref(m.start());
  j["accept"] = w.refs(m.accepting_states());
  j["registers"] = m.registers();
  ojson ts = ojson::array();
  for (const auto& t : m.transitions()) {
    ojson r;
    r["state"] = w.ref(t.state);
    r["zeros"] = mask_json(t.zeros, m.registers());
    r["next"] = w.ref(t.action.next);
    r["ops"] = ops_json(t.action.ops);
    ts.push_back(std::move(r));
  }
  j["transitions"] = std::move(ts);
  return j;
}

ojson run_ojson(const RunResult& r, bool trace) {
  ojson j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["reason"] = r.reason;
  j["steps"] = r.steps;
  if (trace) {
    j["max_counters"] = r.trace.max_counters;
    j["max_positions"] = r.trace.max_positions;
    j["head_moves"] = r.trace.head_moves;
    j["counter_ops"] = r.trace.counter_ops;
    j["violations"] = r.trace.violations;
  }
  return j;
}

ojson encoded_ojson(const EncodedInput& e) {
  ojson j;
  j["bound"] = e.bound.words();
  ojson items = ojson::array();
  for (const auto& it : e.items) {
    ojson i;
    i["kind"] = it.kind == EncodedItem::Kind::kRun ? "run" : "literal";
    i["word"] = it.word;
    if (it.kind == EncodedItem::Kind::kRun) i["count"] = it.count;
    items.push_back(std::move(i));
  }
  j["items"] = std::move(items);
  ojson stages = ojson::array();
  for (const auto& s : e.stages) {
    ojson st;
    st["stage"] = s.stage;
    st["start"] = s.start;
    st["end"] = s.end;
    st["probe"] = s.probe;
    st["matched"] = s.matched;
    if (s.matched) st["conjugate"] = s.conjugate;
    stages.push_back(std::move(st));
  }
  j["stages"] = std::move(stages);
  j["length"] = e.length();
  j["steps"] = e.steps;
  return j;
}

}  // namespace

std::string serialize_machine(const AnyMachine& m) {
  return std::visit([](const auto& x) { return to_ojson(x).dump(2); }, m);
}

std::string_view kind_name(const AnyMachine& m) {
  switch (m.index()) {
    case 0: return "multi_head";
    case 1: return "counter";
    default: return "register";
  }
}

std::string run_result_json(const RunResult& r, bool trace) { return run_ojson(r, trace).dump(2); }

std::string encoded_input_json(const EncodedInput& e) { return encoded_ojson(e).dump(2); }

std::string speedup_result_json(const SpeedupResult& r, bool trace) {
  ojson j = run_ojson(r.run, trace);
  j["steps"] = r.accounting_steps;
  j["raw_steps"] = r.encoding_steps + r.simulated_steps;
  j["d"] = r.d;
  j["encoding_steps"] = r.encoding_steps;
  j["simulated_steps"] = r.simulated_steps;
  j["units"] = r.units;
  if (trace) {
    j["quotient_ops"] = r.quotient_ops;
    j["shadow_mismatches"] = r.shadow_mismatches;
    j["encoding"] = encoded_ojson(r.encoding);
  }
  return j.dump(2);
}

}  // namespace bcl
