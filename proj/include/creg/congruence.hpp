#ifndef CREG_CONGRUENCE_HPP
#define CREG_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "creg/nfa.hpp"

namespace creg {

/// Position-congruence parameters: an even module m > 3 and a nonempty set
/// of slots R within {1, ..., m/2 - 1}. Bases built over disjoint slot sets
/// of one module compose cleanly under union and dot-product.
struct SlotSet {
  int module = 0;
  std::vector<int> slots;  // sorted, unique

  void validate() const;  // throws std::invalid_argument
  bool disjoint_with(const SlotSet& other) const;
  SlotSet merged_with(const SlotSet& other) const;

  /// Textual form "m=<int>;R=<comma-separated ints>".
  std::string to_string() const;
  static SlotSet parse(const std::string& text);

  bool operator==(const SlotSet&) const = default;
};

/// The length-m block for one letter and slot r: positions 1 and r+1 are
/// dotted, all others carry the plain letter.
DottedWord slot_block(int letter, int module, int slot);

/// Per-letter component of the scaffold: (blocks-for-the-letter | letter)*,
/// over that letter's two symbols only.
Nfa letter_scaffold_lang(const Alphabet& a, int letter, const SlotSet& s);

/// Words whose projection on every letter is a sequence of that letter's
/// blocks and bare plain letters. Contains every plain word.
Nfa scaffold_lang(const Alphabet& a, const SlotSet& s);

/// The switched image of the scaffold language minus the fully dotted
/// words. Every accepted word carries at least one plain letter.
Nfa fill_lang(const Alphabet& a, const SlotSet& s);

/// Appends a finite commutative language, given by its Parikh vectors, to a
/// base: for each vector, plain letters are inserted letter by letter in
/// alphabet order, each after the last occurrence of its letter; the results
/// for different vectors are united. Each vector is processed independently
/// so its components stay correlated.
Nfa append(const Nfa& base, const std::vector<ParikhVector>& vectors);

/// Single-vector appending with an explicit letter processing order; the
/// result does not depend on the order.
Nfa append_one(const Nfa& base, const ParikhVector& v,
               const std::vector<int>& letter_order);

}  // namespace creg

#endif
