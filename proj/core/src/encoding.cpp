#include <stdexcept>

#include "bcl/speedup.hpp"

namespace bcl {

EncodedItem literal(Word w) { return {EncodedItem::Kind::kLiteral, std::move(w), 1}; }
EncodedItem run(Word w, Index count) { return {EncodedItem::Kind::kRun, std::move(w), count}; }

Index EncodedInput::length() const {
  Index n = 0;
  for (const auto& it : items) n += static_cast<Index>(it.word.size()) * it.count;
  return n;
}

int EncodedInput::run_count() const {
  int runs = 0;
  for (const auto& it : items) runs += it.kind == EncodedItem::Kind::kRun ? 1 : 0;
  return runs;
}

namespace {

bool is_power_prefix(std::string_view y, std::string_view z) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != z[i % z.size()]) return false;
  }
  return true;
}

}  // namespace

EncodedInput encode_bounded_input(std::string_view input, const BoundDescriptor& bound) {
  if (!matches_bound(input, bound)) throw std::invalid_argument("input violates the bound");
  EncodedInput e{{}, bound, {}, static_cast<Index>(input.size()) + 1};
  const std::size_t n = input.size();
  const std::size_t probe_len = 2 * bound.mu();
  std::size_t pos = 0;
  for (std::size_t i = 0; i < bound.size() && pos < n; ++i) {
    EncoderStage stage;
    stage.stage = static_cast<int>(i);
    stage.start = static_cast<Index>(pos);
    const std::string_view y = input.substr(pos, probe_len);
    stage.probe = Word(y);
    if (y.size() < probe_len) {
      e.items.push_back(literal(Word(y)));
      pos = n;
    } else {
      for (const Word& vu : conjugates(bound.words()[i])) {
        if (!is_power_prefix(y, vu)) continue;
        stage.matched = true;
        stage.conjugate = vu;
        const std::size_t len = vu.size();
        std::size_t copies = probe_len / len;
        while (pos + (copies + 1) * len <= n && input.substr(pos + copies * len, len) == vu) {
          ++copies;
        }
        e.items.push_back(run(vu, static_cast<Index>(copies)));
        pos += copies * len;
        const std::string_view rest = input.substr(pos, len);
        if (!rest.empty()) e.items.push_back(literal(Word(rest)));
        pos += rest.size();
        break;
      }
      if (!stage.matched) {
        e.items.push_back(literal(Word(y)));
        pos += probe_len;
      }
    }
    stage.end = static_cast<Index>(pos);
    e.stages.push_back(std::move(stage));
  }
  if (pos != n) throw std::logic_error("encoding did not cover the input");
  return e;
}

Word decode_encoded_input(const EncodedInput& e) {
  Word out;
  for (const auto& it : e.items) {
    for (Index c = 0; c < it.count; ++c) out += it.word;
  }
  return out;
}

bool stage_coverage_holds(const EncodedInput& e) {
  const Word x = decode_encoded_input(e);
  const auto& words = e.bound.words();
  const std::size_t n = x.size();
  // reach[p]: the first j blocks can end at offset p while every stage so
  // far covers its blocks.
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const Word& w = words[j];
    std::vector<bool> next(n + 1, false);
    for (std::size_t p = 0; p <= n; ++p) {
      if (!reach[p]) continue;
      for (std::size_t q = p; q <= n; q += w.size()) {
        if (q > p && x.compare(q - w.size(), w.size(), w) != 0) break;
        next[q] = true;
      }
    }
    // Stages that never ran (input exhausted) cover everything.
    const Index limit = j < e.stages.size() ? e.stages[j].end : static_cast<Index>(n);
    for (std::size_t q = 0; q <= n; ++q) {
      if (static_cast<Index>(q) > limit) next[q] = false;
    }
    reach = std::move(next);
  }
  return reach[n];
}

}  // namespace bcl
