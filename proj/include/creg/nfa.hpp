#ifndef CREG_NFA_HPP
#define CREG_NFA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "creg/alphabet.hpp"

namespace creg {

class Dfa;

/// Nondeterministic finite automaton over the double alphabet, with epsilon
/// moves. Immutable once built by the algebra below; builders are the only
/// mutators. Every operation trims its result.
class Nfa {
public:
  explicit Nfa(Alphabet a) : alphabet_(std::move(a)) {}

  static Nfa empty_lang(const Alphabet& a);
  static Nfa epsilon_lang(const Alphabet& a);
  static Nfa atom(const Alphabet& a, Symbol s);
  static Nfa single_word(const Alphabet& a, const DottedWord& w);
  /// One-state loop over a symbol set; accepts every word over those symbols.
  static Nfa symbols_star(const Alphabet& a, const std::vector<Symbol>& syms);
  /// All fully dotted words, including the empty word.
  static Nfa all_dotted_star(const Alphabet& a);
  /// All fully undotted words, including the empty word.
  static Nfa all_plain_star(const Alphabet& a);

  // Builder interface.
  int add_state();
  void add_edge(int from, Symbol s, int to);
  void add_eps(int from, int to);
  void mark_initial(int s);
  void mark_accepting(int s);

  int size() const { return static_cast<int>(out_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::pair<Symbol, int>>& edges(int s) const {
    return out_[static_cast<size_t>(s)];
  }
  const std::vector<int>& eps(int s) const { return eps_[static_cast<size_t>(s)]; }
  const std::vector<int>& initial() const { return initial_; }
  const std::vector<int>& accepting() const { return accepting_; }
  bool is_accepting(int s) const { return acc_[static_cast<size_t>(s)] != 0; }
  bool has_eps() const;
  size_t num_edges() const;

  bool accepts(const DottedWord& w) const;
  /// Language emptiness.
  bool empty() const;
  /// Some shortest accepted word, if the language is nonempty.
  std::optional<DottedWord> shortest_word() const;
  /// All accepted words of length <= max_len in length-lexicographic order.
  std::vector<DottedWord> enumerate(int max_len) const;

  /// Sorts and dedupes adjacency; called by the algebra before returning.
  void normalize();

private:
  Alphabet alphabet_;
  std::vector<std::vector<std::pair<Symbol, int>>> out_;
  std::vector<std::vector<int>> eps_;
  std::vector<int> initial_, accepting_;
  std::vector<char> init_, acc_;
};

/// Deterministic automaton; transitions may be partial (-1 = no move).
class Dfa {
public:
  explicit Dfa(Alphabet a) : alphabet_(std::move(a)) {}

  Alphabet alphabet_;
  std::vector<std::vector<int>> next;  // [state][symbol id] -> state or -1
  int initial = 0;
  std::vector<char> accepting;

  int size() const { return static_cast<int>(next.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  int step(int s, Symbol sym) const { return next[static_cast<size_t>(s)][static_cast<size_t>(sym.id())]; }
  Nfa to_nfa() const;
};

// Rational and Boolean algebra. Operands must share one alphabet.
Nfa unite(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa star(const Nfa& a);
Nfa plus(const Nfa& a);
Nfa intersect(const Nfa& a, const Nfa& b);
Nfa complement(const Nfa& a);
Nfa difference(const Nfa& a, const Nfa& b);
/// All interleavings of one word of a with one word of b.
Nfa shuffle(const Nfa& a, const Nfa& b);
/// Image of the language under a symbol mapping.
Nfa map_image(const Nfa& a, DotOp op);
/// Language { w1 @ w2 | w1 in L(a), w2 in L(b), the match is defined }.
Nfa match_product(const Nfa& a, const Nfa& b);

bool subset_of(const Nfa& a, const Nfa& b);
bool equivalent(const Nfa& a, const Nfa& b);

Nfa trimmed(const Nfa& a);
Nfa without_epsilons(const Nfa& a);
Dfa determinize(const Nfa& a);
Dfa minimize(const Dfa& d);
/// Minimal deterministic automaton for the same language, as an Nfa.
Nfa minimal(const Nfa& a);

/// Splits every accepted word after the last occurrence of the letter (plain
/// or dotted). head = the prefixes ending at that occurrence (empty word for
/// accepted words without the letter); tail = the matching suffixes, which
/// never use the letter. The per-word pairing is not retained here; the
/// append operation keeps it by construction.
struct FactorSplit {
  Nfa head;
  Nfa tail;
};
FactorSplit factor_at_last(const Nfa& a, int letter);

/// Inserts exactly `count` plain copies of the letter into each accepted
/// word, anywhere after the word's last occurrence of that letter (at the
/// very start for words without it). Realizes one letter step of appending.
Nfa append_letter(const Nfa& a, int letter, long long count);

}  // namespace creg

#endif
