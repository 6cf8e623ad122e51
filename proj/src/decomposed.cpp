#include "creg/decomposed.hpp"

#include <sstream>

#include "creg/recognizer.hpp"

namespace creg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactPass: return "pass (exact)";
    case Verdict::BoundedPass: return "pass (bounded)";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

std::string DecomposedReport::describe(const Alphabet& a) const {
  std::ostringstream os;
  os << "disjoint: " << (disjoint ? "pass" : "fail");
  if (overlap_witness) os << " [" << format_word(*overlap_witness, a) << "]";
  os << "; scaffold unmatchable: " << (scaffold_unmatchable ? "pass" : "fail");
  if (scaffold_match_witness)
    os << " [" << format_word(*scaffold_match_witness, a) << "]";
  os << "; fill has a plain letter: "
     << (fill_never_all_dotted ? "pass" : "fail");
  os << "; fill unproductive: " << to_string(fill_unproductive);
  if (fill_unproductive == Verdict::BoundedPass) os << " at " << bound_used;
  if (productive_witness)
    os << " [" << format_word(*productive_witness, a) << "]";
  return os.str();
}

DecomposedReport check_decomposed(const Nfa& scaffold, const Nfa& fill,
                                  int bound,
                                  const std::optional<SlotSet>& provenance) {
  if (!(scaffold.alphabet() == fill.alphabet()))
    throw std::invalid_argument("scaffold and fill are over different alphabets");
  const Alphabet& a = scaffold.alphabet();
  DecomposedReport rep;
  rep.bound_used = bound;

  Nfa overlap = intersect(scaffold, fill);
  rep.disjoint = overlap.empty();
  if (!rep.disjoint) rep.overlap_witness = overlap.shortest_word();

  Nfa self = match_product(scaffold, scaffold);
  rep.scaffold_unmatchable = self.empty();
  if (!rep.scaffold_unmatchable) rep.scaffold_match_witness = self.shortest_word();

  rep.fill_never_all_dotted = intersect(fill, Nfa::all_dotted_star(a)).empty();

  if (fill.empty()) {
    rep.fill_unproductive = Verdict::ExactPass;
    return rep;
  }
  if (provenance &&
      subset_of(fill, fill_lang(a, *provenance)) &&
      subset_of(scaffold, scaffold_lang(a, *provenance))) {
    // Any sub-language of a slot fill language is unproductive.
    rep.fill_unproductive = Verdict::ExactPass;
    return rep;
  }
  if (!rep.fill_never_all_dotted) {
    rep.fill_unproductive = Verdict::Fail;
    return rep;
  }
  std::vector<DottedWord> members = consensual_enumerate(fill, bound);
  if (members.empty()) {
    rep.fill_unproductive = Verdict::BoundedPass;
  } else {
    rep.fill_unproductive = Verdict::Fail;
    rep.productive_witness = members.front();
  }
  return rep;
}

namespace {

void require_unmatchable(const Nfa& x, const Nfa& y, const char* what) {
  Nfa product = match_product(x, y);
  if (!product.empty()) {
    std::ostringstream os;
    os << "pair " << what << " is matchable: "
       << format_word(*product.shortest_word(), x.alphabet());
    throw CompositionError(os.str());
  }
}

std::optional<SlotSet> merge_provenance(const DecomposedBase& b1,
                                        const DecomposedBase& b2) {
  if (b1.provenance && b2.provenance &&
      b1.provenance->module == b2.provenance->module)
    return b1.provenance->merged_with(*b2.provenance);
  return std::nullopt;
}

void require_wellformed(const DecomposedBase& b, int bound, const char* what) {
  DecomposedReport rep =
      check_decomposed(b.scaffold, b.fill, bound, b.provenance);
  if (!rep.ok())
    throw CompositionError(std::string(what) + " is not in decomposed form: " +
                           rep.describe(b.scaffold.alphabet()));
}

}  // namespace

DecomposedBase join(const DecomposedBase& b1, const DecomposedBase& b2,
                    int bound) {
  if (!(b1.scaffold.alphabet() == b2.scaffold.alphabet()))
    throw std::invalid_argument("bases are over different alphabets");
  require_unmatchable(b1.scaffold, b2.scaffold, "(scaffold1, scaffold2)");
  require_unmatchable(b1.scaffold, b2.fill, "(scaffold1, fill2)");
  require_unmatchable(b2.scaffold, b1.fill, "(scaffold2, fill1)");
  DecomposedBase result{minimal(unite(b1.scaffold, b2.scaffold)),
                        minimal(unite(b1.fill, b2.fill)),
                        merge_provenance(b1, b2)};
  require_wellformed(result, bound, "the union base");
  return result;
}

DecomposedBase dot_product(const DecomposedBase& b1, const DecomposedBase& b2,
                           int bound) {
  if (!(b1.scaffold.alphabet() == b2.scaffold.alphabet()))
    throw std::invalid_argument("bases are over different alphabets");
  if (!b1.provenance || !b2.provenance)
    throw CompositionError(
        "dot-product requires slot-set provenance on both bases");
  if (b1.provenance->module != b2.provenance->module)
    throw CompositionError("dot-product requires one common module, got " +
                           b1.provenance->to_string() + " and " +
                           b2.provenance->to_string());
  if (!b1.provenance->disjoint_with(*b2.provenance))
    throw CompositionError("dot-product requires disjoint slot sets, got " +
                           b1.provenance->to_string() + " and " +
                           b2.provenance->to_string());
  if (!check_shiftable(b1.fill) || !check_shiftable(b2.fill))
    throw CompositionError("dot-product requires shiftable fills");
  DecomposedBase result{minimal(concat(b1.scaffold, b2.scaffold)),
                        minimal(unite(b1.fill, b2.fill)),
                        merge_provenance(b1, b2)};
  require_wellformed(result, bound, "the dot-product base");
  return result;
}

bool check_shiftable(const Nfa& a) {
  Nfa dots = Nfa::all_dotted_star(a.alphabet());
  return equivalent(a, concat(concat(dots, a), dots));
}

}  // namespace creg
