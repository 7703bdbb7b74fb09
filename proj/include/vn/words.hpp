#pragma once
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vn/error.hpp"

namespace vn {

// A finite word over the alphabet {1,...,n}. The alphabet size travels with
// the structure the word lives in (code, table, sum), not with the word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  static Word single(int letter) { return Word({letter}); }
  static Word repeated(int letter, size_t count);

  // Text form: digit string for base <= 9, dot-separated for base >= 10.
  // The empty word reads as "", "e" or the UTF-8 epsilon.
  static Word parse(std::string_view text, int base);

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](size_t i) const { return letters_[i]; }
  int last() const { return letters_.back(); }
  const std::vector<int>& letters() const { return letters_; }

  Word operator+(const Word& rhs) const;
  Word appended(int letter) const;
  Word parent() const;  // drops the last letter; pre: nonempty
  Word prefix(size_t len) const;
  Word suffix_from(size_t pos) const;

  std::string str(int base) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

enum class LexOrder { Less, Equal, Greater, PrefixIncomparable };

// Positional comparison. A proper prefix and its extension are reported
// incomparable rather than silently ranked; inside a prefix code the case
// never comes up.
LexOrder lex_compare(const Word& a, const Word& b);

// b = a . z for some (possibly empty) z.
bool is_prefix(const Word& a, const Word& b);

// Strict total order: first positional difference decides, a proper prefix
// sorts before its extensions. Canonical storage order everywhere.
bool word_less(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// z with b = a . z; pre: is_prefix(a, b).
Word suffix_after(const Word& a, const Word& b);

bool is_prefix_free(const std::vector<Word>& words);

// True iff the set is finite, nonempty, prefix-free over {1..base} and every
// infinite word has a prefix in it (equivalently: sibling merges reduce the
// set to the empty word alone).
bool is_maximal_prefix_code(const std::vector<Word>& words, int base);

class PrefixCode {
 public:
  // Checks maximality and throws with a diagnostic when it fails.
  static PrefixCode validated(std::vector<Word> words, int base);
  // For construction-guaranteed callers (expansion, refinement); sorts only.
  static PrefixCode unchecked(std::vector<Word> words, int base);
  static PrefixCode trivial(int base);    // {empty word}
  static PrefixCode level_one(int base);  // {1,...,n}

  int base() const { return base_; }
  size_t size() const { return words_.size(); }
  const Word& operator[](size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const;
  size_t index_of(const Word& w) const;  // throws if absent
  // Index of the unique element prefixing w; throws if w is too shallow.
  size_t index_of_prefix_of(const Word& w) const;

  bool operator==(const PrefixCode&) const = default;

 private:
  PrefixCode(int base, std::vector<Word> words)
      : base_(base), words_(std::move(words)) {}
  int base_ = 0;
  std::vector<Word> words_;  // sorted by word_less
};

// Replace w by its n children w.1, ..., w.n; pre: code contains w.
PrefixCode expand(const PrefixCode& code, const Word& w);

// Coarsest common refinement of two maximal prefix codes, with the index of
// the A- and B-ancestor of each element.
struct Refinement {
  PrefixCode code;
  std::vector<size_t> in_a;
  std::vector<size_t> in_b;
};
Refinement common_refinement(const PrefixCode& a, const PrefixCode& b);

}  // namespace vn
