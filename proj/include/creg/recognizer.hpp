#ifndef CREG_RECOGNIZER_HPP
#define CREG_RECOGNIZER_HPP

#include <optional>
#include <vector>

#include "creg/nfa.hpp"

namespace creg {

/// A set of equal-length base words whose match is strong and equals the
/// input word.
struct Witness {
  std::vector<DottedWord> rows;
};

/// Decides membership in the consensual language of a regular base: the
/// plain words obtainable as the match of one or more equal-length base
/// words, where at every position exactly one word places the letter.
///
/// The base is determinized and minimized up front. Recognition scans the
/// input once per thread count, tracking a configuration = multiset of DFA
/// states occupied by the active threads; at each input letter one thread
/// takes the plain transition and every other thread takes the dotted one.
/// Configurations are memoized per position; worst case the number of
/// configurations is O(|x|^|Q|).
class ConsensualRecognizer {
public:
  /// Rejects bases that accept a fully dotted nonempty word; such words are
  /// useless in a match and would break the thread-count bound.
  explicit ConsensualRecognizer(const Nfa& base);

  /// x must be a plain word.
  bool member(const DottedWord& x) const;
  /// One witness reconstructed from an accepting run, smallest thread count
  /// first; absent for non-members.
  std::optional<Witness> witness(const DottedWord& x) const;
  /// All members of length <= max_len in length-lexicographic order.
  /// jobs > 1 evaluates disjoint prefix subtrees concurrently.
  std::vector<DottedWord> enumerate(int max_len, int jobs = 1) const;

  bool accepts_empty() const { return empty_member_; }
  const Alphabet& alphabet() const { return dfa_.alphabet(); }
  int dfa_size() const { return dfa_.size(); }

private:
  // Thread states pair a DFA state with a placed-at-least-one-letter flag;
  // the flag bounds how many threads may still be idle near the word end.
  using Cfg = std::vector<std::pair<int, int>>;  // sorted (thread state, count)

  void successors(const Cfg& cfg, int letter, int remaining_after,
                  std::vector<std::pair<Cfg, int>>& out) const;
  bool cfg_accepting(const Cfg& cfg) const;
  void enumerate_rec(DottedWord& prefix, const std::vector<Cfg>& frontier,
                     int max_len, std::vector<DottedWord>& out) const;

  Dfa dfa_;
  std::vector<std::vector<int>> plain_next_;   // [letter][dfa state]
  std::vector<std::vector<int>> dotted_next_;  // [letter][dfa state]
  bool empty_member_ = false;
};

/// Checks that rows are equal-length base words whose match is defined,
/// strong, and equal to x.
bool is_witness(const Nfa& base, const std::vector<DottedWord>& rows,
                const DottedWord& x);

/// Independent oracle for the recognizer: enumerates every base word whose
/// unmarking equals x (at most 2^|x| candidates, walked directly on the
/// base automaton) and searches an exact cover of the positions by their
/// plain-letter sets. Exponential; intended for |x| <= 12.
bool brute_force_member(const Nfa& base, const DottedWord& x);

std::vector<DottedWord> consensual_enumerate(const Nfa& base, int max_len);

}  // namespace creg

#endif
