#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bcl/tape.hpp"

namespace bcl {

// The bound w_1* w_2* ... w_m* of a bounded language. Words need not be
// distinct.
class BoundDescriptor {
 public:
  explicit BoundDescriptor(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  // Length of the longest word.
  std::size_t mu() const { return mu_; }
  // Sorted distinct symbols used by the words.
  std::string alphabet() const;

 private:
  std::vector<Word> words_;
  std::size_t mu_ = 0;
};

// The bound a_1* ... a_m* of a strictly bounded language (distinct symbols).
class StrictBound {
 public:
  explicit StrictBound(std::string symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  // Index of `s` in the bound; the left end-marker maps to -1 and the right
  // end-marker to size(). Throws for foreign symbols.
  int order_of(Symbol s) const;
  BoundDescriptor as_bound() const;

 private:
  std::string symbols_;
};

// Parses the comma-separated CLI form, e.g. "ab,c".
BoundDescriptor parse_bound(std::string_view text);
// Parses a comma-separated list of single symbols, e.g. "a,b,c".
StrictBound parse_strict_bound(std::string_view text);

struct Block {
  Symbol symbol;
  Index length;
  Index start;  // 0-based offset into the word
  bool operator==(const Block&) const = default;
};

std::vector<Block> decompose_blocks(std::string_view input);

// True iff input = w_1^{k_1} ... w_m^{k_m} for some k_j >= 0.
bool matches_bound(std::string_view input, const BoundDescriptor& bound);

// Distinct rotations of w, in rotation order starting with w itself.
std::vector<Word> conjugates(std::string_view w);

// Agreement length that forces two sequences of periods h and k to agree
// everywhere: h + k - gcd(h, k).
Index fine_wilf_threshold(Index h, Index k);

struct LanguageId {
  enum class Tag { kMarkedPalindromes, kPaddedPalindromes, kLogPalindromes, kSquares };
  Tag tag;
  int m = 1;  // parameter of kLogPalindromes

  static LanguageId marked_palindromes() { return {Tag::kMarkedPalindromes}; }
  static LanguageId padded_palindromes() { return {Tag::kPaddedPalindromes}; }
  static LanguageId log_palindromes(int m) { return {Tag::kLogPalindromes, m}; }
  static LanguageId squares() { return {Tag::kSquares}; }
};

// Direct membership test for the witness languages:
//   marked palindromes  x$x^T
//   padded palindromes  x 0^{|x|} $ 0^{|x|} x^T
//   log palindromes     x 0^{2^{|x|/m}-|x|} $ 0^{2^{|x|/m}-|x|} x^T
//                       (m divides |x| and 2^{|x|/m} >= |x|)
//   squares             ww over {0,1}
// Words with foreign symbols are non-members.
bool oracle_membership(const LanguageId& lang, std::string_view x);

// Every word of the bound up to max_len, each once, length-lexicographic.
std::vector<Word> enumerate_bounded_inputs(const BoundDescriptor& bound, Index max_len);
std::vector<Word> enumerate_bounded_inputs(const StrictBound& bound, Index max_len);

// All words over `alphabet` up to max_len, length-lexicographic.
std::vector<Word> enumerate_words(std::string_view alphabet, Index max_len);

}  // namespace bcl
