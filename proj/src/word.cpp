#include "genus2/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace genus2 {

Alphabet::Alphabet(std::string_view names) : names_(names) {
  for (char c : names_) {
    if (c < 'a' || c > 'z')
      throw std::invalid_argument("generator names must be lowercase ASCII letters");
  }
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument(std::string("duplicate generator name '") + names_[i] + "'");
  if (names_.empty()) throw std::invalid_argument("alphabet must have at least one generator");
}

const Alphabet& Alphabet::ab() {
  static const Alphabet a("ab");
  return a;
}

std::optional<int> Alphabet::index(char name) const {
  auto pos = names_.find(name);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<int>(pos);
}

Alphabet Alphabet::with(char name) const {
  if (contains(name))
    throw std::invalid_argument(std::string("generator '") + name + "' already present");
  return Alphabet(names_ + name);
}

Alphabet Alphabet::without(char name) const {
  if (!contains(name))
    throw std::invalid_argument(std::string("generator '") + name + "' not present");
  std::string rest;
  for (char c : names_)
    if (c != name) rest += c;
  return Alphabet(rest);
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.gen < 0 || l.gen >= alphabet_.size()) throw std::invalid_argument("letter out of alphabet bounds");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

bool word_less(const Word& u, const Word& v) {
  return std::lexicographical_compare(u.letters().begin(), u.letters().end(),
                                      v.letters().begin(), v.letters().end(), letter_less);
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (Letter l : w.letters()) {
    h ^= static_cast<size_t>(static_cast<unsigned char>(l.gen) * 2 + (l.sign > 0 ? 0 : 1));
    h *= 1099511628211ull;
  }
  return h;
}

ParseError::ParseError(std::string message, size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const Alphabet& alphabet;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  // factor* until end of input or a closing paren
  std::vector<Letter> word() {
    std::vector<Letter> out;
    for (;;) {
      skip_ws();
      if (done() || peek() == ')') return out;
      factor(out);
    }
  }

  void factor(std::vector<Letter>& out) {
    std::vector<Letter> atom_letters;
    if (peek() == '(') {
      size_t open = pos++;
      auto inner = word();
      if (done() || peek() != ')') throw ParseError("unbalanced '('", open);
      ++pos;
      atom_letters = std::move(inner);
    } else {
      char c = peek();
      if (!std::islower(static_cast<unsigned char>(c)))
        throw ParseError(std::string("expected generator or '(', got '") + c + "'", pos);
      auto gen = alphabet.index(c);
      if (!gen) throw ParseError(std::string("unknown generator '") + c + "'", pos);
      ++pos;
      atom_letters.push_back({static_cast<std::int8_t>(*gen), 1});
    }
    long long exp = 1;
    if (!done() && peek() == '^') exp = exponent();
    append_power(out, atom_letters, exp);
  }

  long long exponent() {
    size_t caret = pos++;
    bool negative = false;
    if (!done() && peek() == '-') {
      negative = true;
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digits after '^'", done() ? text.size() : pos);
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) throw ParseError("exponent too large for eager expansion", caret);
      ++pos;
    }
    if (value == 0) throw ParseError("zero exponent", caret);
    return negative ? -value : value;
  }

  static void append_power(std::vector<Letter>& out, const std::vector<Letter>& base, long long exp) {
    if (exp >= 0) {
      for (long long k = 0; k < exp; ++k)
        for (Letter l : base) push_reduced(out, l);
    } else {
      for (long long k = 0; k < -exp; ++k)
        for (auto it = base.rbegin(); it != base.rend(); ++it) push_reduced(out, it->inverse());
    }
  }
};

// Removes a trailing "=1" with optional surrounding whitespace.
std::string_view strip_equals_one(std::string_view text) {
  size_t end = text.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (end == 0 || text[end - 1] != '1') return text.substr(0, end);
  size_t i = end - 1;
  while (i > 0 && std::isspace(static_cast<unsigned char>(text[i - 1]))) --i;
  if (i == 0 || text[i - 1] != '=') return text.substr(0, end);
  return text.substr(0, i - 1);
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::string_view body = strip_equals_one(text);
  // "1" by itself is the empty word (the form print_word emits).
  size_t first = 0;
  while (first < body.size() && std::isspace(static_cast<unsigned char>(body[first]))) ++first;
  size_t last = body.size();
  while (last > first && std::isspace(static_cast<unsigned char>(body[last - 1]))) --last;
  if (last - first == 1 && body[first] == '1') return Word(alphabet);

  Parser p{body, 0, alphabet};
  auto letters = p.word();
  if (!p.done()) throw ParseError("unexpected ')'", p.pos);
  return Word(alphabet, std::move(letters));
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  for (size_t i = 0; i < ls.size();) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    size_t run = j - i;
    out << w.alphabet().name(ls[i].gen);
    if (ls[i].sign < 0)
      out << "^-" << run;
    else if (run > 1)
      out << '^' << run;
    i = j;
  }
  return out.str();
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet(), std::move(out));
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) throw std::invalid_argument("concat: alphabet mismatch");
  std::vector<Letter> out = u.letters();
  for (Letter l : v.letters()) push_reduced(out, l);
  return Word(u.alphabet(), std::move(out));
}

Word rotated(const Word& w, int k) {
  if (w.empty()) return w;
  int n = w.size();
  k = ((k % n) + n) % n;
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(w.at((i + k) % n));
  return Word(w.alphabet(), std::move(out));
}

int exponent_sum(const Word& w, int gen) {
  if (gen < 0 || gen >= w.alphabet().size()) throw std::invalid_argument("exponent_sum: generator out of range");
  int sum = 0;
  for (Letter l : w.letters())
    if (l.gen == gen) sum += l.sign;
  return sum;
}

Word substitute(const Word& w, char gen, const Word& replacement) {
  const Alphabet& target = replacement.alphabet();
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    char name = w.alphabet().name(l.gen);
    if (name == gen) {
      const Word& piece = replacement;
      if (l.sign > 0)
        for (Letter r : piece.letters()) push_reduced(out, r);
      else
        for (auto it = piece.letters().rbegin(); it != piece.letters().rend(); ++it)
          push_reduced(out, it->inverse());
    } else {
      auto idx = target.index(name);
      if (!idx)
        throw std::invalid_argument(std::string("substitute: generator '") + name +
                                    "' missing from replacement alphabet");
      push_reduced(out, {static_cast<std::int8_t>(*idx), l.sign});
    }
  }
  return Word(target, std::move(out));
}

Word remap(const Word& w, const Alphabet& target) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (Letter l : w.letters()) {
    auto idx = target.index(w.alphabet().name(l.gen));
    if (!idx) throw std::invalid_argument("remap: generator missing from target alphabet");
    out.push_back({static_cast<std::int8_t>(*idx), l.sign});
  }
  return Word(target, std::move(out));
}

Word cyclically_reduce(const Word& w) { return cyclically_reduce_with_conjugator(w).core; }

CyclicReduction cyclically_reduce_with_conjugator(const Word& w) {
  const auto& ls = w.letters();
  size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi));
  std::vector<Letter> conj(ls.begin(), ls.begin() + static_cast<long>(lo));
  return {Word(w.alphabet(), std::move(core)), Word(w.alphabet(), std::move(conj))};
}

CyclicWord cyclic_normal_form(const Word& w) {
  Word core = cyclically_reduce(w);
  CyclicWord out;
  if (core.empty()) {
    out.rep_ = core;
    return out;
  }
  Word best = core;
  auto consider = [&](const Word& u) {
    for (int k = 0; k < u.size(); ++k) {
      Word r = rotated(u, k);
      if (word_less(r, best)) best = r;
    }
  };
  consider(core);
  consider(invert(core));
  out.rep_ = best;
  return out;
}

}  // namespace genus2
