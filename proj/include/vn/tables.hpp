#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vn/words.hpp"

namespace vn {

// An element of the Higman-Thompson group V_n. Rows are pairs (a_i, b_i) of
// words from two equal-size maximal prefix codes; the element maps b_i . w
// to a_i . w. Rows are kept sorted by the b column.
class Table {
 public:
  static Table validated(std::vector<std::pair<Word, Word>> rows, int base);
  // Rows must already come from two maximal codes; sorts by b only.
  static Table from_rows_unchecked(std::vector<std::pair<Word, Word>> rows, int base);
  static Table identity(int base);

  // "a_1 a_2 ... -> b_1 b_2 ..." with words in text form.
  static Table parse(std::string_view text, int base);
  std::string str() const;

  int base() const { return base_; }
  size_t size() const { return rows_.size(); }
  const std::vector<std::pair<Word, Word>>& rows() const { return rows_; }
  const Word& range_word(size_t i) const { return rows_[i].first; }    // a_i
  const Word& domain_word(size_t i) const { return rows_[i].second; }  // b_i
  PrefixCode range_code() const;
  PrefixCode domain_code() const;

  // Structural equality of the stored rows; use equal() for group equality.
  bool operator==(const Table&) const = default;

 private:
  Table(int base, std::vector<std::pair<Word, Word>> rows)
      : base_(base), rows_(std::move(rows)) {}
  int base_ = 0;
  std::vector<std::pair<Word, Word>> rows_;
};

// Undo every complete sibling split shared by both columns; the result is
// the unique minimal table of the same element.
Table reduce(const Table& g);

// compose(g, h) applies h first: the element g . h.
Table compose(const Table& g, const Table& h);

Table invert(const Table& g);

bool equal(const Table& g, const Table& h);

enum class GroupClass { F, T, V };
// F: order-preserving, T: cyclic-order-preserving, V: the rest.
GroupClass classify(const Table& g);
std::string class_str(GroupClass c);

// Deterministic pseudorandom element: both codes grow by the same number of
// splits (at most max_depth deep), rows get a random pairing.
Table random_table(int base, int max_depth, std::uint64_t seed);

}  // namespace vn
