#include "creg/congruence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace creg {

void SlotSet::validate() const {
  if (module <= 3 || module % 2 != 0)
    throw std::invalid_argument("module must be an even number greater than 3");
  if (slots.empty()) throw std::invalid_argument("slot set must be nonempty");
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] < 1 || slots[i] > module / 2 - 1)
      throw std::invalid_argument("slot out of range [1, m/2-1]");
    if (i > 0 && slots[i] <= slots[i - 1])
      throw std::invalid_argument("slots must be strictly increasing");
  }
}

bool SlotSet::disjoint_with(const SlotSet& other) const {
  if (module != other.module) return false;
  for (int r : slots)
    if (std::find(other.slots.begin(), other.slots.end(), r) != other.slots.end())
      return false;
  return true;
}

SlotSet SlotSet::merged_with(const SlotSet& other) const {
  SlotSet m{module, slots};
  m.slots.insert(m.slots.end(), other.slots.begin(), other.slots.end());
  std::sort(m.slots.begin(), m.slots.end());
  m.slots.erase(std::unique(m.slots.begin(), m.slots.end()), m.slots.end());
  return m;
}

std::string SlotSet::to_string() const {
  std::ostringstream os;
  os << "m=" << module << ";R=";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i > 0) os << ',';
    os << slots[i];
  }
  return os.str();
}

SlotSet SlotSet::parse(const std::string& text) {
  SlotSet s;
  if (text.rfind("m=", 0) != 0)
    throw std::invalid_argument("slot set must start with 'm='");
  size_t semi = text.find(";R=");
  if (semi == std::string::npos)
    throw std::invalid_argument("slot set must contain ';R='");
  s.module = std::stoi(text.substr(2, semi - 2));
  std::string rest = text.substr(semi + 3);
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) s.slots.push_back(std::stoi(item));
  std::sort(s.slots.begin(), s.slots.end());
  s.validate();
  return s;
}

DottedWord slot_block(int letter, int module, int slot) {
  SlotSet check{module, {slot}};
  check.validate();
  DottedWord w(static_cast<size_t>(module),
               plain(letter));
  w[0] = dotted(letter);
  w[static_cast<size_t>(slot)] = dotted(letter);
  return w;
}

Nfa letter_scaffold_lang(const Alphabet& a, int letter, const SlotSet& s) {
  s.validate();
  Nfa lang = Nfa::atom(a, plain(letter));
  for (int r : s.slots)
    lang = unite(lang, Nfa::single_word(a, slot_block(letter, s.module, r)));
  return minimal(star(lang));
}

Nfa scaffold_lang(const Alphabet& a, const SlotSet& s) {
  s.validate();
  Nfa result = letter_scaffold_lang(a, 0, s);
  for (int letter = 1; letter < a.size(); ++letter)
    result = shuffle(result, letter_scaffold_lang(a, letter, s));
  return minimal(result);
}

Nfa fill_lang(const Alphabet& a, const SlotSet& s) {
  Nfa switched = map_image(scaffold_lang(a, s), DotOp::Switch);
  return minimal(difference(switched, Nfa::all_dotted_star(a)));
}

Nfa append_one(const Nfa& base, const ParikhVector& v,
               const std::vector<int>& letter_order) {
  const Alphabet& a = base.alphabet();
  if (static_cast<int>(v.size()) != a.size())
    throw std::invalid_argument("vector size does not match the alphabet");
  if (static_cast<int>(letter_order.size()) != a.size())
    throw std::invalid_argument("letter order must cover the whole alphabet");
  Nfa cur = base;
  for (int letter : letter_order) {
    long long count = v[static_cast<size_t>(letter)];
    if (count < 0) throw std::invalid_argument("negative vector component");
    if (count == 0) continue;
    cur = minimal(append_letter(cur, letter, count));
  }
  return cur;
}

Nfa append(const Nfa& base, const std::vector<ParikhVector>& vectors) {
  const Alphabet& a = base.alphabet();
  std::vector<int> order;
  for (int i = 0; i < a.size(); ++i) order.push_back(i);
  Nfa result = Nfa::empty_lang(a);
  for (const ParikhVector& v : vectors)
    result = unite(result, append_one(base, v, order));
  return minimal(result);
}

}  // namespace creg
