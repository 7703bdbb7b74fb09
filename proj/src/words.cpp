#include "vn/words.hpp"

#include <algorithm>
#include <set>

namespace vn {

Word Word::repeated(int letter, size_t count) {
  return Word(std::vector<int>(count, letter));
}

static void check_base(int base) {
  if (base < 2) throw Error("alphabet size must be at least 2");
}

Word Word::parse(std::string_view text, int base) {
  check_base(base);
  if (text.empty() || text == "e" || text == "\xce\xb5") return Word();
  std::vector<int> letters;
  if (base <= 9) {
    for (char c : text) {
      int v = c - '0';
      if (v < 1 || v > base)
        throw Error("letter '" + std::string(1, c) + "' out of range 1.." +
                    std::to_string(base));
      letters.push_back(v);
    }
  } else {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t dot = text.find('.', pos);
      std::string_view part = text.substr(pos, dot == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : dot - pos);
      if (part.empty()) throw Error("empty letter in word '" + std::string(text) + "'");
      int v = 0;
      for (char c : part) {
        if (c < '0' || c > '9') throw Error("bad letter '" + std::string(part) + "'");
        v = v * 10 + (c - '0');
        if (v > base) break;
      }
      if (v < 1 || v > base)
        throw Error("letter '" + std::string(part) + "' out of range 1.." +
                    std::to_string(base));
      letters.push_back(v);
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
    }
  }
  return Word(std::move(letters));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::appended(int letter) const {
  std::vector<int> out = letters_;
  out.push_back(letter);
  return Word(std::move(out));
}

Word Word::parent() const {
  if (empty()) throw Error("empty word has no parent");
  return Word(std::vector<int>(letters_.begin(), letters_.end() - 1));
}

Word Word::prefix(size_t len) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix_from(size_t pos) const {
  return Word(std::vector<int>(letters_.begin() + pos, letters_.end()));
}

std::string Word::str(int base) const {
  if (empty()) return "\xce\xb5";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (base >= 10 && i) out += '.';
    out += std::to_string(letters_[i]);
  }
  return out;
}

LexOrder lex_compare(const Word& a, const Word& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    if (a[i] < b[i]) return LexOrder::Less;
    if (a[i] > b[i]) return LexOrder::Greater;
  }
  if (a.size() == b.size()) return LexOrder::Equal;
  return LexOrder::PrefixIncomparable;
}

bool is_prefix(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool word_less(const Word& a, const Word& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Word suffix_after(const Word& a, const Word& b) {
  if (!is_prefix(a, b)) throw Error("suffix_after: not a prefix");
  return b.suffix_from(a.size());
}

bool is_prefix_free(const std::vector<Word>& words) {
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j)
      if (i != j && is_prefix(words[i], words[j])) return false;
  return true;
}

// Merge complete sibling families bottom-up; a maximal code collapses to
// {empty word} and nothing else does.
static bool merges_to_root(std::vector<Word> words, int base) {
  std::set<Word, WordLess> pool(words.begin(), words.end());
  while (true) {
    if (pool.size() == 1 && pool.begin()->empty()) return true;
    auto deepest = pool.begin();
    for (auto it = pool.begin(); it != pool.end(); ++it)
      if (it->size() > deepest->size()) deepest = it;
    if (deepest->empty()) return false;
    Word stem = deepest->parent();
    std::vector<Word> family;
    for (int j = 1; j <= base; ++j) {
      Word s = stem.appended(j);
      if (!pool.count(s)) return false;
      family.push_back(std::move(s));
    }
    for (const Word& s : family) pool.erase(s);
    pool.insert(stem);
  }
}

bool is_maximal_prefix_code(const std::vector<Word>& words, int base) {
  if (base < 2 || words.empty()) return false;
  for (const Word& w : words)
    for (int c : w.letters())
      if (c < 1 || c > base) return false;
  if (!is_prefix_free(words)) return false;
  return merges_to_root(words, base);
}

PrefixCode PrefixCode::validated(std::vector<Word> words, int base) {
  check_base(base);
  if (words.empty()) throw Error("empty prefix code");
  for (const Word& w : words)
    for (int c : w.letters())
      if (c < 1 || c > base)
        throw Error("letter " + std::to_string(c) + " out of range in code word " +
                    w.str(base));
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j)
      if (i != j && is_prefix(words[i], words[j]))
        throw Error("code word " + words[i].str(base) + " is a prefix of " +
                    words[j].str(base));
  if (!merges_to_root(words, base))
    throw Error("prefix code does not cover the full tree");
  return unchecked(std::move(words), base);
}

PrefixCode PrefixCode::unchecked(std::vector<Word> words, int base) {
  std::sort(words.begin(), words.end(), WordLess{});
  return PrefixCode(base, std::move(words));
}

PrefixCode PrefixCode::trivial(int base) {
  check_base(base);
  return PrefixCode(base, {Word()});
}

PrefixCode PrefixCode::level_one(int base) {
  check_base(base);
  std::vector<Word> ws;
  for (int j = 1; j <= base; ++j) ws.push_back(Word::single(j));
  return PrefixCode(base, std::move(ws));
}

bool PrefixCode::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, WordLess{});
}

size_t PrefixCode::index_of(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w, WordLess{});
  if (it == words_.end() || !(*it == w))
    throw Error("word " + w.str(base_) + " not in code");
  return it - words_.begin();
}

size_t PrefixCode::index_of_prefix_of(const Word& w) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (is_prefix(words_[i], w)) return i;
  throw Error("no code word prefixes " + w.str(base_));
}

PrefixCode expand(const PrefixCode& code, const Word& w) {
  size_t at = code.index_of(w);
  std::vector<Word> ws;
  ws.reserve(code.size() + code.base() - 1);
  for (size_t i = 0; i < code.size(); ++i) {
    if (i == at) {
      for (int j = 1; j <= code.base(); ++j) ws.push_back(w.appended(j));
    } else {
      ws.push_back(code[i]);
    }
  }
  return PrefixCode::unchecked(std::move(ws), code.base());
}

Refinement common_refinement(const PrefixCode& a, const PrefixCode& b) {
  if (a.base() != b.base()) throw Error("refinement across different alphabets");
  struct Item {
    Word w;
    size_t ia, ib;
  };
  std::vector<Item> items;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      if (is_prefix(b[j], a[i])) {
        items.push_back({a[i], i, j});
        break;
      }
    }
  }
  for (size_t j = 0; j < b.size(); ++j) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (is_prefix(a[i], b[j]) && a[i].size() < b[j].size()) {
        items.push_back({b[j], i, j});
        break;
      }
    }
  }
  std::sort(items.begin(), items.end(),
            [](const Item& x, const Item& y) { return word_less(x.w, y.w); });
  Refinement r{PrefixCode::trivial(a.base()), {}, {}};
  std::vector<Word> ws;
  for (auto& it : items) {
    ws.push_back(std::move(it.w));
    r.in_a.push_back(it.ia);
    r.in_b.push_back(it.ib);
  }
  r.code = PrefixCode::unchecked(std::move(ws), a.base());
  return r;
}

}  // namespace vn
