#include <random>

#include "bcl/bounded.hpp"
#include "bcl/counter_vm.hpp"
#include "bcl/multi_head.hpp"
#include "bcl/register_machine.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace bcl;

TEST_CASE("tape positions and markers") {
  const Tape t("ab");
  CHECK(t.at(0) == kLeftMarker);
  CHECK(t.at(1) == 'a');
  CHECK(t.at(3) == kRightMarker);
  CHECK(t.in_bounds(3));
  CHECK_FALSE(t.in_bounds(4));
  CHECK_THROWS_AS(check_word("a<b", "ab"), MachineError);
  CHECK_THROWS_AS(check_word("abc", "ab"), MachineError);
}

TEST_CASE("accepting start state accepts in zero steps") {
  MultiHeadAutomaton m("a", 1, 0, {0}, 1, false);
  const RunResult r = run_mha(m, "a");
  CHECK(r.verdict == Verdict::kAccept);
  CHECK(r.steps == 0);
}

TEST_CASE("two-head a^n b^n") {
  const auto m = fixtures::anbn_2head();
  CHECK(run_mha(m, "aabb").accepted());
  CHECK_FALSE(run_mha(m, "aab").accepted());
  CHECK(run_mha(m, "").accepted());
  for (const Word& x : enumerate_words("ab", 10)) {
    std::size_t a = x.find_first_not_of('a');
    if (a == std::string::npos) a = x.size();
    const bool member = x.size() % 2 == 0 && a == x.size() / 2 &&
                        x.find('a', a) == std::string::npos;
    CHECK_MESSAGE(run_mha(m, x).accepted() == member, x);
  }
}

TEST_CASE("library interpreter matches the reference interpreter") {
  const std::vector<MultiHeadAutomaton> machines{
      fixtures::anbn_2head(), fixtures::divides_2head(), fixtures::anbncn_3head(),
      fixtures::ends_equal_2head()};
  for (const auto& m : machines) {
    for (const Word& x : enumerate_words(m.alphabet(), 7)) {
      CHECK(reference::outcome_of(run_mha(m, x)) == reference::run_mha(m, x));
    }
  }
}

TEST_CASE("head positions stay on the tape") {
  const auto m = fixtures::divides_2head();
  for (const Word& x : enumerate_words("ab", 8)) {
    const auto right = static_cast<Index>(x.size()) + 1;
    run_mha(m, x, {}, [&](const std::vector<Index>& pos) {
      for (Index p : pos) REQUIRE((p >= 0 && p <= right));
    });
  }
}

TEST_CASE("runs are reproducible") {
  const auto m = fixtures::divides_2head();
  const RunResult a = run_mha(m, "aabbbb");
  const RunResult b = run_mha(m, "aabbbb");
  CHECK(a.verdict == b.verdict);
  CHECK(a.steps == b.steps);
  CHECK(a.trace.max_positions == b.trace.max_positions);
}

TEST_CASE("duplicate transition is rejected as nondeterministic") {
  MultiHeadAutomaton m("a", 2, 0, {1}, 1, false);
  m.add_transition(0, "a", 1, 0, 1);
  CHECK_THROWS_WITH_AS(m.add_transition(0, "a", 0, 0, 1), doctest::Contains("nondeterministic"),
                       MachineError);
}

TEST_CASE("repeated configuration is a loop") {
  MultiHeadAutomaton m("a", 2, 0, {}, 1, false);
  m.add_transition(0, "a", 1, 0, 1);
  m.add_transition(1, ">", 0, 0, -1);
  const RunResult r = run_mha(m, "a");
  CHECK(r.verdict == Verdict::kReject);
  CHECK(r.reason == reason::kLoop);

  RunOptions no_loops;
  no_loops.detect_loops = false;
  no_loops.limit = 50;
  CHECK(run_mha(m, "a", no_loops).verdict == Verdict::kTimeout);
}

TEST_CASE("moving off the tape is a fault") {
  MultiHeadAutomaton m("a", 1, 0, {}, 1, false);
  m.add_transition(0, "<", 0, 0, -1);
  m.add_transition(0, "a", 0, 0, -1);
  CHECK(run_mha(m, "a").verdict == Verdict::kFault);
}

TEST_CASE("counter machine basics") {
  const auto c = fixtures::anbn_1counter();
  const RunResult r = run_cm(c, "aabb");
  CHECK(r.accepted());
  CHECK(r.max_counter() == 2);
  CHECK_FALSE(run_cm(c, "aab").accepted());

  SUBCASE("counting to n and back") {
    // Increment per right move, then accept iff the counter empties on the
    // way back.
    using fixtures::D;
    using fixtures::I;
    using fixtures::N;
    CounterMachine m("a", 3, 0, {2}, 1);
    fixtures::add(m, 0, 'a', {0, 1}, 0, 1, {I});
    fixtures::add(m, 0, '>', {0, 1}, 1, -1, {N});
    fixtures::add(m, 1, 'a', {0}, 1, -1, {D});
    fixtures::add(m, 1, '<', {1}, 2, 0, {N});
    const RunResult rr = run_cm(m, "aa");
    CHECK(rr.accepted());
    CHECK(rr.max_counter() == 2);
    CHECK(rr.trace.violations.empty());
  }
  SUBCASE("missing transition rejects") {
    CounterMachine m("a", 1, 0, {}, 1);
    const RunResult rr = run_cm(m, "a");
    CHECK(rr.verdict == Verdict::kReject);
    CHECK(rr.steps == 0);
  }
  SUBCASE("decrement on zero is a fault") {
    CounterMachine m("a", 2, 0, {1}, 1);
    m.add_transition(0, 'a', 1, CounterAction{1, 0, {CounterOp::kDec}});
    const RunResult rr = run_cm(m, "a");
    CHECK(rr.verdict == Verdict::kFault);
    CHECK(rr.reason == reason::kDecOnZero);
  }
}

namespace {

// Increments once per step while reading the first square; accepts when
// the overflow flag shows up.
CounterMachine overflow_probe(OverflowPolicy policy) {
  CounterMachine m("a", 2, 0, {1}, 1, policy);
  m.add_transition(0, 'a', 1, CounterAction{0, 0, {CounterOp::kInc}});
  m.add_transition(0, 'a', 0, CounterAction{0, 0, {CounterOp::kInc}});
  if (policy == OverflowPolicy::kSignal) {
    m.add_transition(0, 'a', 0, CounterAction{1, 0, {CounterOp::kNop}}, 1);
  }
  return m;
}

}  // namespace

TEST_CASE("overflow policies") {
  RunOptions o;
  o.detect_loops = false;
  o.limit = 20;
  SUBCASE("simple keeps the value") {
    const RunResult r = run_cm(overflow_probe(OverflowPolicy::kSimple), "aaa", o);
    CHECK(r.verdict == Verdict::kTimeout);
    CHECK(r.max_counter() == 3);
  }
  SUBCASE("block faults") {
    const RunResult r = run_cm(overflow_probe(OverflowPolicy::kBlock), "aaa", o);
    CHECK(r.verdict == Verdict::kFault);
    CHECK(r.reason == reason::kOverflow);
    CHECK(r.steps == 4);
  }
  SUBCASE("signal exposes a flag on the next step") {
    const RunResult r = run_cm(overflow_probe(OverflowPolicy::kSignal), "aaa", o);
    CHECK(r.accepted());
    CHECK(r.steps == 5);
  }
}

TEST_CASE("counter interpreter matches the reference interpreter") {
  for (const auto& c : {fixtures::anbn_1counter(), fixtures::zigzag_1counter()}) {
    for (const Word& x : enumerate_words("ab", 8)) {
      CHECK(reference::outcome_of(run_cm(c, x)) == reference::run_cm(c, x));
    }
  }
}

TEST_CASE("register machine even tester") {
  const auto r = fixtures::even_register();
  CHECK(run_rm(r, 4).accepted());
  CHECK_FALSE(run_rm(r, 5).accepted());
  const RunResult zero = run_rm(r, 0);
  CHECK(zero.accepted());
  CHECK(zero.steps == 1);
  RegisterMachine start_accepts(1, 0, {0}, 1);
  CHECK(run_rm(start_accepts, 0).steps == 0);
  for (Index n = 0; n < 30; ++n) CHECK(run_rm(r, n).accepted() == (n % 2 == 0));
}

TEST_CASE("counter VM audits values against n") {
  const RunResult r = run_program("ab", 1, 100, [](CounterVm& vm) {
    for (int i = 0; i < 3; ++i) vm.increment(0);
    return true;
  });
  CHECK(r.accepted());
  CHECK_FALSE(r.trace.violations.empty());
  const RunResult off = run_program("", 1, 100, [](CounterVm& vm) {
    vm.move(1);
    return true;
  });
  CHECK(off.verdict == Verdict::kFault);
  const RunResult limit = run_program("a", 1, 3, [](CounterVm& vm) {
    while (true) vm.step(0);
    return true;
  });
  CHECK(limit.verdict == Verdict::kTimeout);
}

TEST_CASE("one-move normalization") {
  SUBCASE("already one-move machines keep their behaviour and shape") {
    MultiHeadAutomaton one("ab", 2, 0, {1}, 1, false);
    one.add_transition(0, "a", 0, 0, 1);
    one.add_transition(0, ">", 1, 0, -1);
    REQUIRE(one.is_one_move());
    const auto n = normalize_one_move(one);
    CHECK(n.transitions().size() == one.transitions().size());
    CHECK(n.num_states() == one.num_states());
  }
  SUBCASE("stationary and multi-move steps disappear, behaviour is kept") {
    for (const auto& m : {fixtures::anbn_2head(), fixtures::anbncn_3head(),
                          fixtures::divides_2head(), fixtures::ends_equal_2head()}) {
      const auto n = normalize_one_move(m);
      CHECK(n.is_one_move());
      for (const Word& x : enumerate_words(m.alphabet(), m.alphabet().size() > 2 ? 7 : 10)) {
        CHECK_MESSAGE(run_mha(n, x).verdict == run_mha(m, x).verdict, x);
      }
    }
  }
}

TEST_CASE("head-order normalization") {
  CHECK_THROWS_AS(normalize_head_order(fixtures::anbn_2head()), MachineError);
  for (const auto& m : {fixtures::unary_even_2head(), fixtures::unary_odd_meet_2head()}) {
    const auto n = normalize_head_order(m);
    CHECK(n.is_one_move());
    for (Index len = 0; len <= 20; ++len) {
      const Word x(static_cast<std::size_t>(len), 'a');
      CHECK(run_mha(n, x).verdict == run_mha(m, x).verdict);
      run_mha(n, x, {}, [](const std::vector<Index>& pos) {
        REQUIRE(std::is_sorted(pos.begin(), pos.end()));
      });
    }
  }
  // The crossing machine really transposes its heads before normalization.
  bool crossed = false;
  run_mha(fixtures::unary_odd_meet_2head(), "aaa", {}, [&](const std::vector<Index>& pos) {
    crossed = crossed || pos[0] > pos[1];
  });
  CHECK(crossed);
}
