#ifndef CREG_EXPR_HPP
#define CREG_EXPR_HPP

#include <vector>

#include "creg/alphabet.hpp"

namespace creg {

/// A commutative language with a linear Parikh image: the words whose letter
/// counts equal constant + n1*period1 + ... + nq*periodq for nonnegative nj.
/// When allow_empty is false the empty word is excluded even if the lattice
/// contains the zero vector; this models the difference between the starred
/// and the one-or-more closure of a commutative seed.
struct ComLipSpec {
  ParikhVector constant;
  std::vector<ParikhVector> periods;
  bool allow_empty = true;

  /// Default flag: a zero constant usually comes from a one-or-more closure,
  /// so the empty word is excluded; any other constant keeps it irrelevant.
  static ComLipSpec make(ParikhVector constant, std::vector<ParikhVector> periods);

  /// Throws std::invalid_argument on dimension mismatches, q = 0, negative
  /// components, or an all-zero period.
  void validate(int num_letters) const;
  bool all_periods_even() const;
};

/// Union/concatenation expression over commutative linear-image leaves.
struct Expr {
  enum class Kind { Leaf, Union, Concat };
  Kind kind = Kind::Leaf;
  ComLipSpec leaf;             // Kind::Leaf only
  std::vector<Expr> children;  // Union/Concat, at least 2, Concat ordered

  static Expr make_leaf(ComLipSpec spec);
  static Expr make_union(std::vector<Expr> children);
  static Expr make_concat(std::vector<Expr> children);

  void validate(int num_letters) const;
  int count_leaves() const;
};

}  // namespace creg

#endif
