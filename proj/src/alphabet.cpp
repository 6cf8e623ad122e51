#include "creg/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace creg {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty())
    throw std::invalid_argument("alphabet must contain at least one letter");
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == '.')
      throw std::invalid_argument("'.' is reserved for the dot marker");
    for (size_t j = i + 1; j < letters_.size(); ++j)
      if (letters_[i] == letters_[j])
        throw std::invalid_argument(std::string("duplicate letter '") +
                                    letters_[i] + "'");
  }
}

int Alphabet::index_of(char c) const {
  auto pos = letters_.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::optional<Symbol> match(Symbol a, Symbol b) {
  if (a.letter != b.letter) return std::nullopt;
  if (a.dotted && b.dotted) return a;
  if (a.dotted != b.dotted) return plain(a.letter);
  return std::nullopt;  // both plain
}

std::optional<DottedWord> match(const DottedWord& a, const DottedWord& b) {
  if (a.size() != b.size()) return std::nullopt;
  DottedWord out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    auto m = match(a[i], b[i]);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

std::optional<DottedWord> match_all(const std::vector<DottedWord>& words) {
  if (words.empty()) return std::nullopt;
  DottedWord acc = words.front();
  for (size_t i = 1; i < words.size(); ++i) {
    auto m = match(acc, words[i]);
    if (!m) return std::nullopt;
    acc = std::move(*m);
  }
  return acc;
}

Symbol apply(DotOp op, Symbol s) {
  switch (op) {
    case DotOp::Switch: return Symbol{s.letter, !s.dotted};
    case DotOp::Dot: return Symbol{s.letter, true};
    case DotOp::Undot: return Symbol{s.letter, false};
  }
  return s;
}

DottedWord apply(DotOp op, const DottedWord& w) {
  DottedWord out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(apply(op, s));
  return out;
}

bool is_strong(const DottedWord& w) {
  return std::none_of(w.begin(), w.end(), [](Symbol s) { return s.dotted; });
}

DottedWord project(const DottedWord& w, const std::vector<int>& keep_letters) {
  DottedWord out;
  for (Symbol s : w)
    if (std::find(keep_letters.begin(), keep_letters.end(), s.letter) !=
        keep_letters.end())
      out.push_back(s);
  return out;
}

DottedWord project_letter(const DottedWord& w, int letter) {
  DottedWord out;
  for (Symbol s : w)
    if (s.letter == letter) out.push_back(s);
  return out;
}

ParikhVector parikh(const DottedWord& w, int num_letters) {
  ParikhVector v(static_cast<size_t>(num_letters), 0);
  for (Symbol s : w) v[s.letter] += 1;
  return v;
}

ParikhVector parikh_placed(const DottedWord& w, int num_letters) {
  ParikhVector v(static_cast<size_t>(num_letters), 0);
  for (Symbol s : w)
    if (!s.dotted) v[s.letter] += 1;
  return v;
}

bool pv_is_zero(const ParikhVector& v) {
  return std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
}

DottedWord parse_word(std::string_view text, const Alphabet& alpha) {
  DottedWord out;
  for (size_t i = 0; i < text.size(); ++i) {
    bool dot = false;
    if (text[i] == '.') {
      dot = true;
      ++i;
      if (i >= text.size())
        throw std::invalid_argument("dangling '.' at end of word");
    }
    int letter = alpha.index_of(text[i]);
    if (letter < 0)
      throw std::invalid_argument(std::string("letter '") + text[i] +
                                  "' is not in the alphabet");
    out.push_back(Symbol{static_cast<std::uint8_t>(letter), dot});
  }
  return out;
}

std::string format_word(const DottedWord& w, const Alphabet& alpha) {
  std::string out;
  for (Symbol s : w) {
    if (s.dotted) out.push_back('.');
    out.push_back(alpha.letter(s.letter));
  }
  return out;
}

bool length_lex_less(const DottedWord& a, const DottedWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace creg
