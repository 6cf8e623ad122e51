#ifndef CREG_ALPHABET_HPP
#define CREG_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace creg {

/// Ordered terminal alphabet. The letter order is fixed for the lifetime of
/// a computation; Parikh vector components follow it.
class Alphabet {
public:
  Alphabet() = default;
  /// Letters must be distinct single ASCII characters, at least one.
  explicit Alphabet(std::string letters);

  int size() const { return static_cast<int>(letters_.size()); }
  /// Symbols of the double alphabet: every letter plus its dotted copy.
  int num_symbols() const { return 2 * size(); }
  char letter(int index) const { return letters_[static_cast<size_t>(index)]; }
  int index_of(char c) const;
  bool contains(char c) const { return index_of(c) >= 0; }
  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet&) const = default;

private:
  std::string letters_;
};

/// One symbol of the double alphabet: a letter index plus a dotted flag.
/// Ordering is letter-major with the plain symbol before its dotted copy.
struct Symbol {
  std::uint8_t letter = 0;
  bool dotted = false;

  /// Dense id in [0, 2k): plain a_i -> 2i, dotted a_i -> 2i+1.
  constexpr int id() const { return letter * 2 + (dotted ? 1 : 0); }
  static constexpr Symbol from_id(int id) {
    return Symbol{static_cast<std::uint8_t>(id / 2), (id & 1) != 0};
  }

  friend constexpr bool operator==(const Symbol&, const Symbol&) = default;
  friend constexpr auto operator<=>(const Symbol& a, const Symbol& b) {
    return a.id() <=> b.id();
  }
};

constexpr Symbol plain(int letter) {
  return Symbol{static_cast<std::uint8_t>(letter), false};
}
constexpr Symbol dotted(int letter) {
  return Symbol{static_cast<std::uint8_t>(letter), true};
}

/// A word over the double alphabet; empty vector is the empty word.
using DottedWord = std::vector<Symbol>;

/// Per-letter occurrence counts, one component per alphabet letter.
using ParikhVector = std::vector<long long>;

/// Partial, symmetric, associative match of two symbols:
/// plain@dotted = dotted@plain = plain, dotted@dotted = dotted,
/// undefined otherwise (in particular plain@plain).
std::optional<Symbol> match(Symbol a, Symbol b);

/// Positionwise match of equal-length words; absent when lengths differ or
/// any position fails. The empty word matches itself.
std::optional<DottedWord> match(const DottedWord& a, const DottedWord& b);

/// Folded match of one or more words; absent if any step is undefined.
std::optional<DottedWord> match_all(const std::vector<DottedWord>& words);

enum class DotOp { Switch, Dot, Undot };

Symbol apply(DotOp op, Symbol s);
DottedWord apply(DotOp op, const DottedWord& w);

inline DottedWord switch_word(const DottedWord& w) { return apply(DotOp::Switch, w); }
inline DottedWord dot_word(const DottedWord& w) { return apply(DotOp::Dot, w); }
inline DottedWord undot_word(const DottedWord& w) { return apply(DotOp::Undot, w); }

/// True when every symbol is undotted.
bool is_strong(const DottedWord& w);

/// Keeps the symbols (dotted or plain) whose letter is in keep_letters.
DottedWord project(const DottedWord& w, const std::vector<int>& keep_letters);
DottedWord project_letter(const DottedWord& w, int letter);

/// Counts per letter, dotted and plain occurrences together.
ParikhVector parikh(const DottedWord& w, int num_letters);
/// Counts per letter over the undotted positions only.
ParikhVector parikh_placed(const DottedWord& w, int num_letters);

inline ParikhVector pv_add(const ParikhVector& a, const ParikhVector& b) {
  ParikhVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
bool pv_is_zero(const ParikhVector& v);

/// Textual syntax: a plain letter is the letter itself, a dotted letter is
/// the letter prefixed by '.', e.g. ".ab.b" = dotted-a, b, dotted-b.
/// Throws std::invalid_argument on characters outside the alphabet or a
/// trailing dot.
DottedWord parse_word(std::string_view text, const Alphabet& alpha);
std::string format_word(const DottedWord& w, const Alphabet& alpha);

/// Length-lexicographic order; within one length, symbol ids decide.
bool length_lex_less(const DottedWord& a, const DottedWord& b);

}  // namespace creg

#endif
