#include "bcl/bounded.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bcl {

BoundDescriptor::BoundDescriptor(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("bound needs at least one word");
  for (const auto& w : words_) {
    if (w.empty()) throw std::invalid_argument("bound words must be nonempty");
    for (Symbol s : w) {
      if (is_marker(s) || s == ',') throw std::invalid_argument("reserved symbol in bound word");
    }
    mu_ = std::max(mu_, w.size());
  }
}

std::string BoundDescriptor::alphabet() const {
  std::set<Symbol> symbols;
  for (const auto& w : words_) symbols.insert(w.begin(), w.end());
  return {symbols.begin(), symbols.end()};
}

StrictBound::StrictBound(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("strict bound needs at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (is_marker(symbols_[i])) throw std::invalid_argument("reserved symbol in bound");
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
      throw std::invalid_argument("strict bound symbols must be distinct");
    }
  }
}

int StrictBound::order_of(Symbol s) const {
  if (s == kLeftMarker) return -1;
  if (s == kRightMarker) return static_cast<int>(symbols_.size());
  auto i = symbols_.find(s);
  if (i == std::string::npos) throw std::invalid_argument("symbol outside strict bound");
  return static_cast<int>(i);
}

BoundDescriptor StrictBound::as_bound() const {
  std::vector<Word> words;
  for (Symbol s : symbols_) words.emplace_back(1, s);
  return BoundDescriptor(std::move(words));
}

BoundDescriptor parse_bound(std::string_view text) {
  std::vector<Word> words;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    words.emplace_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BoundDescriptor(std::move(words));
}

StrictBound parse_strict_bound(std::string_view text) {
  std::string symbols;
  const BoundDescriptor bound = parse_bound(text);
  for (const auto& w : bound.words()) {
    if (w.size() != 1) throw std::invalid_argument("strict bound entries must be single symbols");
    symbols += w[0];
  }
  return StrictBound(std::move(symbols));
}

std::vector<Block> decompose_blocks(std::string_view input) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (blocks.empty() || blocks.back().symbol != input[i]) {
      blocks.push_back({input[i], 1, static_cast<Index>(i)});
    } else {
      ++blocks.back().length;
    }
  }
  return blocks;
}

bool matches_bound(std::string_view input, const BoundDescriptor& bound) {
  // reach[p]: the prefix of length p lies in w_1* ... w_j* for the current j.
  std::vector<char> reach(input.size() + 1, 0);
  reach[0] = 1;
  for (const auto& w : bound.words()) {
    for (std::size_t p = 0; p + w.size() <= input.size(); ++p) {
      if (reach[p] && input.compare(p, w.size(), w) == 0) reach[p + w.size()] = 1;
    }
  }
  return reach[input.size()] != 0;
}

std::vector<Word> conjugates(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("conjugates of the empty word");
  std::vector<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word rot = Word(w.substr(i)) + Word(w.substr(0, i));
    if (std::find(out.begin(), out.end(), rot) == out.end()) out.push_back(std::move(rot));
  }
  return out;
}

Index fine_wilf_threshold(Index h, Index k) {
  if (h < 1 || k < 1) throw std::invalid_argument("periods must be positive");
  return h + k - std::gcd(h, k);
}

namespace {

bool over(std::string_view w, std::string_view alphabet) {
  return std::all_of(w.begin(), w.end(),
                     [&](Symbol s) { return alphabet.find(s) != std::string_view::npos; });
}

bool all_zero(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](Symbol s) { return s == '0'; });
}

// True for x$y with exactly one '$', binary halves and y the reversal of x;
// `left` receives x.
bool split_mirror(std::string_view word, std::string_view& left) {
  auto dollar = word.find('$');
  if (dollar == std::string_view::npos) return false;
  if (word.find('$', dollar + 1) != std::string_view::npos) return false;
  left = word.substr(0, dollar);
  std::string_view right = word.substr(dollar + 1);
  if (!over(left, "01") || !over(right, "01") || left.size() != right.size()) return false;
  return std::equal(left.begin(), left.end(), right.rbegin());
}

}  // namespace

bool oracle_membership(const LanguageId& lang, std::string_view x) {
  std::string_view left;
  switch (lang.tag) {
    case LanguageId::Tag::kMarkedPalindromes:
      return split_mirror(x, left);
    case LanguageId::Tag::kPaddedPalindromes: {
      if (!split_mirror(x, left) || left.size() % 2 != 0) return false;
      return all_zero(left.substr(left.size() / 2));
    }
    case LanguageId::Tag::kLogPalindromes: {
      if (lang.m < 1) throw std::invalid_argument("log-palindrome parameter must be >= 1");
      if (!split_mirror(x, left)) return false;
      // |left| = 2^t with t = |x|/m.
      const std::size_t h = left.size();
      if (h == 0 || (h & (h - 1)) != 0) return false;
      std::size_t t = 0;
      while ((std::size_t{1} << t) < h) ++t;
      const std::size_t xlen = static_cast<std::size_t>(lang.m) * t;
      if (xlen > h) return false;
      return all_zero(left.substr(xlen));
    }
    case LanguageId::Tag::kSquares:
      if (!over(x, "01") || x.size() % 2 != 0) return false;
      return x.substr(0, x.size() / 2) == x.substr(x.size() / 2);
  }
  return false;
}

namespace {

bool length_lex_less(const Word& a, const Word& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<Word> enumerate_bounded_inputs(const BoundDescriptor& bound, Index max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  std::set<Word, decltype(&length_lex_less)> seen(&length_lex_less);
  Word cur;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == bound.size()) {
      seen.insert(cur);
      return;
    }
    const Word& w = bound.words()[j];
    const std::size_t base = cur.size();
    while (true) {
      self(self, j + 1);
      if (static_cast<Index>(cur.size() + w.size()) > max_len) break;
      cur += w;
    }
    cur.resize(base);
  };
  rec(rec, 0);
  return {seen.begin(), seen.end()};
}

std::vector<Word> enumerate_bounded_inputs(const StrictBound& bound, Index max_len) {
  return enumerate_bounded_inputs(bound.as_bound(), max_len);
}

std::vector<Word> enumerate_words(std::string_view alphabet, Index max_len) {
  std::string sorted(alphabet);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Word> out{""};
  std::size_t layer_start = 0;
  for (Index len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i) {
      for (Symbol s : sorted) out.push_back(out[i] + s);
    }
    layer_start = layer_end;
  }
  return out;
}

}  // namespace bcl
