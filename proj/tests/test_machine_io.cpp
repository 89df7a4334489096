#include <string>

#include "bcl/crossval.hpp"
#include "bcl/machine_io.hpp"
#include "bcl/transforms.hpp"
#include "doctest.h"
#include "json.hpp"
#include "fixtures.hpp"

using namespace bcl;

namespace {

std::string machine_path(const std::string& name) {
  return std::string(BCL_MACHINES_DIR) + "/" + name;
}

std::string error_where(std::string_view text) {
  try {
    parse_machine(text);
  } catch (const MachineFileError& e) {
    return e.where();
  }
  return "no error";
}

std::string error_what(std::string_view text) {
  try {
    parse_machine(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("minimal counter machine file") {
  const AnyMachine m = parse_machine(
      R"({"kind": "counter", "alphabet": "a", "counters": 0, "states": 1,
          "start": 0, "accept": []})");
  REQUIRE(std::holds_alternative<CounterMachine>(m));
  for (const Word& x : enumerate_words("a", 4)) {
    const RunResult r = run_cm(std::get<CounterMachine>(m), x);
    CHECK(r.verdict == Verdict::kReject);
    CHECK(r.steps == 0);
  }
  CHECK(kind_name(m) == "counter");
}

TEST_CASE("machine files in the repository load and run") {
  const AnyMachine anbn = load_machine_file(machine_path("anbn_2head.json"));
  const auto& mha = std::get<MultiHeadAutomaton>(anbn);
  for (const Word& x : enumerate_words("ab", 8)) {
    CHECK(run_mha(mha, x).verdict == run_mha(fixtures::anbn_2head(), x).verdict);
  }
  const auto cm = std::get<CounterMachine>(load_machine_file(machine_path("anbn_1counter.json")));
  const auto zz = std::get<CounterMachine>(load_machine_file(machine_path("zigzag_1counter.json")));
  for (const Word& x : enumerate_words("ab", 8)) {
    const RunResult a = run_cm(cm, x);
    CHECK(a.verdict == run_cm(fixtures::anbn_1counter(), x).verdict);
    const RunResult z = run_cm(zz, x);
    const RunResult want = run_cm(fixtures::zigzag_1counter(), x);
    CHECK(z.verdict == want.verdict);
    CHECK(z.steps == want.steps);
  }
  const auto rm = std::get<RegisterMachine>(load_machine_file(machine_path("even_register.json")));
  for (Index n = 0; n < 10; ++n) CHECK(run_rm(rm, n).accepted() == (n % 2 == 0));
  const auto sensing =
      std::get<MultiHeadAutomaton>(load_machine_file(machine_path("unary_even_2head.json")));
  CHECK(sensing.sensing());
  for (Index n = 0; n < 10; ++n) {
    CHECK(run_mha(sensing, Word(static_cast<std::size_t>(n), 'a')).accepted() == (n % 2 == 0));
  }
  CHECK_THROWS_AS(load_machine_file(machine_path("missing.json")), MachineFileError);
}

TEST_CASE("load errors name their location") {
  CHECK(error_where("{\"kind\": \"counter\",\n  \"alphabet\": }").rfind("line 2", 0) == 0);
  CHECK(error_where(R"({"kind": "tape"})") == "kind");
  CHECK(error_where(R"({"kind": "counter", "alphabet": "a", "counters": 1, "states": 2,
      "start": 0, "accept": [],
      "transitions": [{"state": 0, "read": "a", "zeros": [], "next": 5, "dir": 1,
                       "ops": ["inc"]}]})") == "transitions[0].next");
  CHECK(error_where(R"({"kind": "counter", "alphabet": "a", "counters": 1, "states": ["p"],
      "start": "q", "accept": []})") == "start");
  CHECK(error_where(R"({"kind": "counter", "alphabet": "a", "counters": 1, "states": 1,
      "start": 0, "accept": [],
      "transitions": [{"state": 0, "read": "z", "zeros": [], "next": 0, "dir": 1,
                       "ops": ["inc"]}]})") == "transitions[0].read");
  CHECK(error_where(R"({"kind": "counter", "alphabet": "a<", "counters": 0, "states": 1,
      "start": 0, "accept": []})") == "alphabet");
  const std::string dup = error_what(R"({"kind": "counter", "alphabet": "a", "counters": 1,
      "states": 1, "start": 0, "accept": [],
      "transitions": [
        {"state": 0, "read": "a", "zeros": [], "next": 0, "dir": 1, "ops": ["inc"]},
        {"state": 0, "read": "a", "zeros": [], "next": 0, "dir": 0, "ops": ["nop"]}]})");
  CHECK(dup.find("nondeterministic") != std::string::npos);
  CHECK(dup.find("transitions[1]") != std::string::npos);
}

TEST_CASE("serialization round trip") {
  const std::vector<AnyMachine> machines{
      fixtures::anbn_2head(),          fixtures::divides_2head(),
      fixtures::unary_odd_meet_2head(), fixtures::anbncn_2counter(),
      fixtures::zigzag_1counter(),      fixtures::even_register()};
  for (const auto& m : machines) {
    const std::string text = serialize_machine(m);
    const AnyMachine back = parse_machine(text);
    CHECK(kind_name(back) == kind_name(m));
    CHECK(serialize_machine(back) == text);
  }
  const auto back = std::get<MultiHeadAutomaton>(parse_machine(serialize_machine(
      AnyMachine{fixtures::unary_odd_meet_2head()})));
  for (Index n = 0; n < 12; ++n) {
    const Word x(static_cast<std::size_t>(n), 'a');
    CHECK(run_mha(back, x).verdict == run_mha(fixtures::unary_odd_meet_2head(), x).verdict);
  }
  CounterMachine named("ab", 2, 0, {1}, 0);
  named.set_state_names({"go", "done"});
  named.add_transition(0, '>', 0, CounterAction{1, 0, {}});
  const std::string text = serialize_machine(named);
  CHECK(text.find("\"go\"") != std::string::npos);
  CHECK(serialize_machine(parse_machine(text)) == text);
}

TEST_CASE("run result rendering") {
  const RunResult r = run_cm(fixtures::anbn_1counter(), "aabb");
  const auto plain = nlohmann::json::parse(run_result_json(r, false));
  CHECK(plain["verdict"] == "accept");
  CHECK(plain["steps"] == r.steps);
  CHECK_FALSE(plain.contains("max_counters"));
  const auto traced = nlohmann::json::parse(run_result_json(r, true));
  CHECK(traced["max_counters"] == std::vector<Index>{2});
}

TEST_CASE("cross-validation modes agree on fixtures") {
  CHECK(crossvalidate(fixtures::anbn_2head(), "a,b", 12, CrossMode::kHeadsToCounters).ok());
  CHECK(crossvalidate(fixtures::zigzag_1counter(), "", 8, CrossMode::kCountersToHeads).ok());
  CHECK(crossvalidate(fixtures::unary_odd_meet_2head(), "", 20, CrossMode::kRegisters).ok());
  CHECK(crossvalidate(fixtures::zigzag_1counter(), "a,b", 12, CrossMode::kEncoding).ok());
  CHECK(crossvalidate(fixtures::zigzag_1counter(), "a,b", 12, CrossMode::kSpeedup).ok());

  const CrossReport empty =
      crossvalidate(fixtures::anbn_2head(), "a,b", 0, CrossMode::kHeadsToCounters);
  CHECK(empty.checked == 1);
  CHECK(empty.agreed == 1);

  CHECK_THROWS_AS(crossvalidate(fixtures::anbn_1counter(), "a,b", 4, CrossMode::kHeadsToCounters),
                  std::invalid_argument);
  CHECK(parse_cross_mode("speedup") == CrossMode::kSpeedup);
  CHECK(to_string(CrossMode::kRegisters) == "registers");
  CHECK_THROWS(parse_cross_mode("nope"));
}

TEST_CASE("cross-validation reports a corrupted transform") {
  // The transformed path runs a copy whose accepting transition was dropped.
  const auto original = fixtures::anbn_1counter();
  CounterMachine broken("ab", 3, 0, {2}, 1);
  for (const auto& t : original.transitions()) {
    if (t.state == 1 && t.read == '>') continue;
    broken.add_transition(t.state, t.read, t.zeros, t.action);
  }
  const auto heads = counters_to_heads(broken);
  const CrossReport r = crossvalidate_paths(
      enumerate_words("ab", 6),
      [&](std::string_view x, std::vector<std::string>&) { return run_cm(original, x); },
      [&](std::string_view x, std::vector<std::string>&) { return run_mha(heads, x); }, true);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first.has_value());
  CHECK(r.first->input == "ab");
  CHECK(r.first->original.accepted());
  CHECK_FALSE(r.first->transformed.accepted());
}
