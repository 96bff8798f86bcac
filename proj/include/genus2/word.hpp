#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genus2 {

// Generator names are single lowercase ASCII letters; the generator index is
// the position of the name in construction order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view names);

  // The two-generator alphabet (a, b) every figure caption uses.
  static const Alphabet& ab();

  int size() const { return static_cast<int>(names_.size()); }
  char name(int gen) const { return names_.at(static_cast<size_t>(gen)); }
  const std::string& names() const { return names_; }
  std::optional<int> index(char name) const;
  bool contains(char name) const { return index(name).has_value(); }

  Alphabet with(char name) const;     // name appended
  Alphabet without(char name) const;  // name removed, order of the rest kept

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string names_;
};

struct Letter {
  std::int8_t gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letter order: by generator index, then +1 before -1.
inline bool letter_less(Letter x, Letter y) {
  if (x.gen != y.gen) return x.gen < y.gen;
  return x.sign > y.sign;
}

// A freely reduced word over an alphabet. Construction reduces.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter at(int i) const { return letters_.at(static_cast<size_t>(i)); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Lexicographic on letters (letter_less), shorter prefix first. Alphabets are
// not compared; callers keep words over one alphabet per container.
bool word_less(const Word& u, const Word& v);

struct WordHash {
  size_t operator()(const Word& w) const;
};

struct ParseError : std::runtime_error {
  ParseError(std::string message, size_t position);
  size_t position;
};

// Caption grammar:
//   word   := factor* ;
//   factor := atom exponent? ;
//   atom   := generator | '(' word ')' ;
//   exponent := '^' '-'? digits (nonzero) ;
// Whitespace between factors is ignored; a trailing "=1" (optionally
// space-padded) is stripped. "1" alone denotes the empty word, matching
// print_word's output for it.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Run-compressed form, e.g. "a^4ba^-1b"; the empty word prints as "1".
std::string print_word(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

// letters[k..] + letters[..k]. Intended for cyclically reduced words; the
// result is reduced in any case.
Word rotated(const Word& w, int k);

int exponent_sum(const Word& w, int gen);

// Replaces every occurrence of the named generator by `replacement`
// (inverted occurrences by its inverse). The result lives over
// replacement.alphabet(), which must contain every other generator of w.
Word substitute(const Word& w, char gen, const Word& replacement);

// Re-expresses w over `target` by generator name.
Word remap(const Word& w, const Alphabet& target);

// Strips mutually inverse first/last letters until none remain.
Word cyclically_reduce(const Word& w);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclically_reduce_with_conjugator(const Word& w);

// Canonical form of a relator: cyclically reduce, then take the
// lexicographically least word among all rotations of the result and all
// rotations of its inverse.
class CyclicWord {
 public:
  CyclicWord() = default;

  const Word& representative() const { return rep_; }
  int size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicWord cyclic_normal_form(const Word& w);
  Word rep_;
};

CyclicWord cyclic_normal_form(const Word& w);

inline bool cyclic_less(const CyclicWord& x, const CyclicWord& y) {
  return word_less(x.representative(), y.representative());
}

}  // namespace genus2
