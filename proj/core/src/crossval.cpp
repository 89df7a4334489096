#include "bcl/crossval.hpp"

#include <stdexcept>

#include "bcl/bounded.hpp"
#include "bcl/speedup.hpp"
#include "bcl/transforms.hpp"

namespace bcl {

std::string_view to_string(CrossMode m) {
  switch (m) {
    case CrossMode::kHeadsToCounters: return "heads_to_counters";
    case CrossMode::kCountersToHeads: return "counters_to_heads";
    case CrossMode::kRegisters: return "registers";
    case CrossMode::kEncoding: return "encoding";
    case CrossMode::kSpeedup: return "speedup";
  }
  return "heads_to_counters";
}

CrossMode parse_cross_mode(std::string_view s) {
  for (CrossMode m : {CrossMode::kHeadsToCounters, CrossMode::kCountersToHeads,
                      CrossMode::kRegisters, CrossMode::kEncoding, CrossMode::kSpeedup}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

CrossReport crossvalidate_paths(const std::vector<Word>& inputs, const RunPath& original,
                                const RunPath& transformed, bool compare_steps) {
  CrossReport report;
  for (const Word& x : inputs) {
    std::vector<std::string> audit;
    RunResult a = original(x, audit);
    RunResult b = transformed(x, audit);
    ++report.checked;
    for (auto& f : audit) report.audit_failures.push_back("'" + x + "': " + f);
    if (a.verdict != b.verdict || (compare_steps && a.steps != b.steps)) {
      report.first = Disagreement{x, std::move(a), std::move(b)};
      return report;
    }
    ++report.agreed;
  }
  return report;
}

namespace {

template <typename T>
const T& expect_kind(const AnyMachine& m, std::string_view what, CrossMode mode) {
  const T* p = std::get_if<T>(&m);
  if (p == nullptr) {
    throw std::invalid_argument("mode " + std::string(to_string(mode)) + " needs a " +
                                std::string(what));
  }
  return *p;
}

std::vector<Word> bound_inputs(std::string_view bound, std::string_view alphabet, Index max_len) {
  if (bound.empty()) return enumerate_words(alphabet, max_len);
  return enumerate_bounded_inputs(parse_bound(bound), max_len);
}

}  // namespace

CrossReport crossvalidate(const AnyMachine& m, std::string_view bound, Index max_len,
                          CrossMode mode, const CrossOptions& options) {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  const RunOptions& ro = options.run;
  switch (mode) {
    case CrossMode::kHeadsToCounters: {
      const auto& mh = expect_kind<MultiHeadAutomaton>(m, "multi-head machine", mode);
      if (bound.empty()) throw std::invalid_argument("mode heads_to_counters needs a bound");
      const StrictBound sb = parse_strict_bound(bound);
      const int k = mh.heads();
      return crossvalidate_paths(
          enumerate_bounded_inputs(sb, max_len),
          [&](std::string_view x, std::vector<std::string>&) { return run_mha(mh, x, ro); },
          [&](std::string_view x, std::vector<std::string>& audit) {
            SimulationResult r = heads_to_counters_run(mh, sb, x, ro);
            const auto n = static_cast<Index>(x.size());
            if (r.audit.counters_used > k - 1) audit.push_back("more than k-1 counters");
            for (Index v : r.audit.max_counters) {
              if (v > n) audit.push_back("counter above n");
            }
            if (!r.audit.finite_control_ok) audit.push_back("finite control out of range");
            if (r.audit.interval_soundness_failures > 0) audit.push_back("interval soundness");
            if (r.audit.shadow_mismatches > 0) audit.push_back("shadow mismatch");
            return r.run;
          },
          false);
    }
    case CrossMode::kCountersToHeads: {
      const auto& cm = expect_kind<CounterMachine>(m, "counter machine", mode);
      const MultiHeadAutomaton mh = counters_to_heads(cm);
      return crossvalidate_paths(
          bound_inputs(bound, cm.alphabet(), max_len),
          [&](std::string_view x, std::vector<std::string>&) { return run_cm(cm, x, ro); },
          [&](std::string_view x, std::vector<std::string>&) { return run_mha(mh, x, ro); },
          true);
    }
    case CrossMode::kRegisters: {
      const auto& mh = expect_kind<MultiHeadAutomaton>(m, "multi-head machine", mode);
      if (mh.alphabet().size() != 1) {
        throw std::invalid_argument("mode registers needs a one-letter alphabet");
      }
      std::vector<Word> inputs;
      for (Index n = 0; n <= max_len; ++n) inputs.emplace_back(static_cast<std::size_t>(n), mh.alphabet()[0]);
      return crossvalidate_paths(
          inputs,
          [&](std::string_view x, std::vector<std::string>&) { return run_mha(mh, x, ro); },
          [&](std::string_view x, std::vector<std::string>& audit) {
            const auto n = static_cast<Index>(x.size());
            RegisterSimulationResult r = heads_to_registers_run(mh, n, ro);
            if (r.max_register > n) audit.push_back("register above n");
            if (r.order_violations > 0) audit.push_back("head order violated");
            return r.run;
          },
          false);
    }
    case CrossMode::kEncoding: {
      const auto& cm = expect_kind<CounterMachine>(m, "counter machine", mode);
      if (bound.empty()) throw std::invalid_argument("mode encoding needs a bound");
      const BoundDescriptor b = parse_bound(bound);
      return crossvalidate_paths(
          enumerate_bounded_inputs(b, max_len),
          [&](std::string_view x, std::vector<std::string>&) { return run_cm(cm, x, ro); },
          [&](std::string_view x, std::vector<std::string>& audit) {
            const EncodedInput e = encode_bounded_input(x, b);
            if (decode_encoded_input(e) != x) audit.push_back("decode differs from input");
            if (e.run_count() > static_cast<int>(b.size())) audit.push_back("too many runs");
            if (!stage_coverage_holds(e)) audit.push_back("stage coverage");
            EncodedRunResult r = run_on_encoding(cm, e, ro);
            if (r.shadow_mismatches > 0) audit.push_back("shadow mismatch");
            return r.run;
          },
          true);
    }
    case CrossMode::kSpeedup: {
      const auto& cm = expect_kind<CounterMachine>(m, "counter machine", mode);
      if (bound.empty()) throw std::invalid_argument("mode speedup needs a bound");
      const BoundDescriptor b = parse_bound(bound);
      const SpeedupConfig cfg{options.speedup_c};
      return crossvalidate_paths(
          enumerate_bounded_inputs(b, max_len),
          [&](std::string_view x, std::vector<std::string>&) { return run_cm(cm, x, ro); },
          [&](std::string_view x, std::vector<std::string>& audit) {
            SpeedupResult r = speedup_run(cm, b, x, cfg, ro);
            const double bound_steps = static_cast<double>(x.size()) +
                                       cfg.c * static_cast<double>(r.simulated_steps) +
                                       static_cast<double>(kSpeedupSlack);
            if (static_cast<double>(r.accounting_steps) > bound_steps) {
              audit.push_back("accounting steps above n + c t(n) + K");
            }
            if (r.shadow_mismatches > 0) audit.push_back("shadow mismatch");
            return r.run;
          },
          false);
    }
  }
  throw std::invalid_argument("unknown mode");
}

}  // namespace bcl
