#include <random>
#include <set>

#include "bcl/bounded.hpp"
#include "bcl/transforms.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "reference.hpp"

using namespace bcl;

TEST_CASE("counters to heads: zero counters gives a one-head copy") {
  const auto c = fixtures::even_length_0counter();
  const auto m = counters_to_heads(c);
  CHECK(m.heads() == 1);
  for (const Word& x : enumerate_words("ab", 8)) {
    const RunResult a = run_cm(c, x);
    const RunResult b = run_mha(m, x);
    CHECK(a.verdict == b.verdict);
    CHECK(a.steps == b.steps);
  }
}

TEST_CASE("counters to heads: verdicts and step counts agree") {
  for (const auto& c : {fixtures::anbn_1counter(), fixtures::zigzag_1counter()}) {
    const auto m = counters_to_heads(c);
    CHECK(m.heads() == c.counters() + 1);
    for (const Word& x : enumerate_words("ab", 10)) {
      const RunResult a = run_cm(c, x);
      const RunResult b = run_mha(m, x);
      CHECK_MESSAGE(a.verdict == b.verdict, x);
      CHECK_MESSAGE(a.steps == b.steps, x);
    }
  }
}

TEST_CASE("counters to heads: unsupported overflow policies") {
  CounterMachine c("a", 1, 0, {}, 1, OverflowPolicy::kSignal);
  CHECK_THROWS_AS(counters_to_heads(c), MachineError);
}

TEST_CASE("counters to heads: overflow costs one correction step") {
  // Counts the input, then increments once more at the right end-marker.
  using fixtures::I;
  using fixtures::N;
  CounterMachine c("a", 3, 0, {2}, 1);
  fixtures::add(c, 0, 'a', {0, 1}, 0, 1, {I});
  fixtures::add(c, 0, '>', {0}, 1, 0, {I});
  fixtures::add(c, 1, '>', {0}, 2, 0, {N});
  const auto m = counters_to_heads(c);
  const RunResult a = run_cm(c, "aa");
  const RunResult b = run_mha(m, "aa");
  CHECK(a.accepted());
  CHECK(b.accepted());
  CHECK(b.steps == a.steps + 1);
}


TEST_CASE("event prediction: hand cases") {
  SUBCASE("always right, mid-block") {
    MultiHeadAutomaton m("a", 1, 0, {}, 1, false);
    m.add_transition(0, "a", 0, 0, 1);
    const EventPrediction p = can_cause_next_event(m, 0, 0, Segment{"a", 0}, "a");
    CHECK(p.causes);
    CHECK(p.side == Side::kRight);
  }
  SUBCASE("next to the left boundary, moving left") {
    MultiHeadAutomaton m("ab", 2, 0, {}, 1, false);
    m.add_transition(0, "b", 0, 0, -1);
    const EventPrediction p = can_cause_next_event(m, 0, 0, Segment{"abb", 1}, "b");
    CHECK(p.causes);
    CHECK(p.side == Side::kLeft);
  }
  SUBCASE("oscillator far from both boundaries") {
    MultiHeadAutomaton m("a", 2, 0, {}, 1, false);
    m.add_transition(0, "a", 1, 0, 1);
    m.add_transition(1, "a", 0, 0, -1);
    const EventPrediction p = can_cause_next_event(m, 0, 0, Segment{"aaa", 1}, "a");
    CHECK_FALSE(p.causes);
    CHECK(p.configurations_examined <= 2 * 2 * 2 - 2);
  }
  SUBCASE("precondition errors") {
    MultiHeadAutomaton m("a", 1, 0, {}, 1, false);
    CHECK_THROWS(can_cause_next_event(m, 0, 0, Segment{"aaa", 1}, "a"));
    CHECK_THROWS(can_cause_next_event(m, 0, 0, Segment{"a", 1}, "a"));
  }
}

TEST_CASE("event prediction agrees with the frozen-heads oracle") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto c = oracles::random_prediction_case(rng);
    const int r = c.m.num_states();
    const EventPrediction want =
        oracles::frozen_prediction(c.m, c.state, c.head, c.x, c.pos, c.reads);
    const EventPrediction got = can_cause_next_event(
        c.m, c.state, c.head, oracles::cut_segment(c.x, c.pos, r), c.reads);
    CHECK(got.causes == want.causes);
    if (want.causes) CHECK(got.side == want.side);
    CHECK(got.configurations_examined <= 2 * r * r - r);
  }
}

TEST_CASE("heads to counters: examples and exhaustive agreement") {
  const StrictBound ab = parse_strict_bound("a,b");
  const auto m = fixtures::anbn_2head();
  CHECK(heads_to_counters_run(m, ab, "aabb").run.accepted());
  CHECK_FALSE(heads_to_counters_run(m, ab, "aab").run.accepted());
  CHECK_THROWS_AS(heads_to_counters_run(m, ab, "ba"), std::invalid_argument);

  struct Case {
    MultiHeadAutomaton m;
    StrictBound bound;
    Index max_len;
  };
  const std::vector<Case> cases{{fixtures::anbn_2head(), ab, 16},
                                {fixtures::divides_2head(), ab, 16},
                                {fixtures::anbncn_3head(), parse_strict_bound("a,b,c"), 12},
                                {fixtures::ends_equal_2head(), parse_strict_bound("a,b,c"), 12}};
  for (const auto& c : cases) {
    for (const Word& x : enumerate_bounded_inputs(c.bound, c.max_len)) {
      const SimulationResult s = heads_to_counters_run(c.m, c.bound, x);
      const auto n = static_cast<Index>(x.size());
      CHECK_MESSAGE(s.run.verdict == run_mha(c.m, x).verdict, x);
      CHECK(s.audit.counters_used == c.m.heads() - 1);
      for (Index v : s.audit.max_counters) CHECK(v <= n);
      CHECK(s.audit.finite_control_ok);
      CHECK(s.audit.interval_soundness_failures == 0);
      CHECK(s.audit.shadow_mismatches == 0);
      CHECK(s.audit.violations.empty());
    }
  }
}

TEST_CASE("heads to counters: one head needs no counters") {
  MultiHeadAutomaton m("ab", 3, 0, {2}, 1, false);
  m.add_transition(0, "a", 0, 0, 1);
  m.add_transition(0, "b", 1, 0, 1);
  m.add_transition(1, "b", 1, 0, 1);
  m.add_transition(1, ">", 2, 0, 0);
  m.add_transition(0, ">", 2, 0, 0);
  const StrictBound ab = parse_strict_bound("a,b");
  for (const Word& x : enumerate_bounded_inputs(ab, 10)) {
    const SimulationResult s = heads_to_counters_run(m, ab, x);
    CHECK(s.run.verdict == run_mha(m, x).verdict);
    CHECK(s.audit.counters_used == 0);
  }
}

TEST_CASE("register encoding of head positions") {
  // All heads start on square 1: the whole input lies right of them.
  CHECK(encode_head_positions({1, 1}, 5) == RegisterEncoding{{5, 0, 0}, 0});
  CHECK(encode_head_positions({1, 1}, 0) == RegisterEncoding{{0, 0, 0}, 0});
  CHECK(encode_head_positions({0, 3}, 5) == RegisterEncoding{{3, 2, 0}, 1});
  CHECK(encode_head_positions({2, 6}, 5) == RegisterEncoding{{0, 4, 1}, 0});
  for (Index n = 0; n < 6; ++n) {
    for (Index p = 0; p <= n + 1; ++p) {
      for (Index q = p; q <= n + 1; ++q) {
        const RegisterEncoding e = encode_head_positions({p, q}, n);
        Index sum = 0;
        for (Index v : e.registers) {
          CHECK(v >= 0);
          sum += v;
        }
        CHECK(sum == n);
      }
    }
  }
}

TEST_CASE("heads to registers agrees with direct runs") {
  for (const auto& m : {fixtures::unary_even_2head(), fixtures::unary_odd_meet_2head()}) {
    for (Index n = 0; n <= 40; ++n) {
      const RegisterSimulationResult r = heads_to_registers_run(m, n);
      CHECK_MESSAGE(r.run.verdict == run_mha(m, Word(static_cast<std::size_t>(n), 'a')).verdict, n);
      CHECK(r.max_register <= n);
      CHECK(r.order_violations == 0);
      CHECK(r.run.trace.violations.empty());
    }
  }
  CHECK_THROWS_AS(heads_to_registers_run(fixtures::anbn_2head(), 3), MachineError);
}
