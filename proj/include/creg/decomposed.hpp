#ifndef CREG_DECOMPOSED_HPP
#define CREG_DECOMPOSED_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "creg/congruence.hpp"
#include "creg/nfa.hpp"

namespace creg {

/// A base split into a scaffold (self-unmatchable, placed exactly once per
/// member) and a fill (unproductive on its own). The consensual language of
/// scaffold + fill is then composable: a slot-set tag records how the parts
/// were built and licenses union/dot-product composition.
struct DecomposedBase {
  Nfa scaffold;
  Nfa fill;
  std::optional<SlotSet> provenance;

  Nfa combined() const { return unite(scaffold, fill); }
};

enum class Verdict { ExactPass, BoundedPass, Fail };
std::string to_string(Verdict v);

struct DecomposedReport {
  bool disjoint = false;
  std::optional<DottedWord> overlap_witness;
  bool scaffold_unmatchable = false;
  std::optional<DottedWord> scaffold_match_witness;
  bool fill_never_all_dotted = false;
  Verdict fill_unproductive = Verdict::Fail;
  int bound_used = 0;
  std::optional<DottedWord> productive_witness;

  bool ok() const {
    return disjoint && scaffold_unmatchable && fill_never_all_dotted &&
           fill_unproductive != Verdict::Fail;
  }
  std::string describe(const Alphabet& a) const;
};

/// Verifies the decomposed-form conditions. Disjointness, scaffold
/// self-unmatchability and the no-all-dotted-fill condition are decided
/// exactly. Fill unproductivity is decided exactly when a slot-set
/// provenance is given (by language inclusion in the slot fill language);
/// otherwise the consensual language of the fill is checked empty up to the
/// length bound and the verdict is flagged as bounded.
DecomposedReport check_decomposed(const Nfa& scaffold, const Nfa& fill,
                                  int bound,
                                  const std::optional<SlotSet>& provenance = {});

class CompositionError : public std::runtime_error {
public:
  explicit CompositionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Union composition. Requires joinability, verified exactly: the pairs
/// (scaffold1, scaffold2), (scaffold1, fill2) and (scaffold2, fill1) must be
/// unmatchable. The result has the united scaffolds and fills and its
/// decomposed form is re-checked. Throws CompositionError with a witness
/// word when a pair is matchable.
DecomposedBase join(const DecomposedBase& b1, const DecomposedBase& b2,
                    int bound = 10);

/// Dot-product composition: scaffold1 . scaffold2 with the fills united,
/// consensually specifying the concatenation. Concatenability is
/// established through the sufficient slot conditions only: both operands
/// must carry provenance with one module, disjoint slot sets, and shiftable
/// fills. Throws CompositionError otherwise.
DecomposedBase dot_product(const DecomposedBase& b1, const DecomposedBase& b2,
                           int bound = 10);

/// True when the language is invariant under padding with dotted words on
/// either side.
bool check_shiftable(const Nfa& a);

}  // namespace creg

#endif
