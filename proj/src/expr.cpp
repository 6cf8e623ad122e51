#include "creg/expr.hpp"

#include <stdexcept>

namespace creg {

ComLipSpec ComLipSpec::make(ParikhVector constant,
                            std::vector<ParikhVector> periods) {
  ComLipSpec s;
  s.allow_empty = !pv_is_zero(constant);
  s.constant = std::move(constant);
  s.periods = std::move(periods);
  return s;
}

void ComLipSpec::validate(int num_letters) const {
  if (static_cast<int>(constant.size()) != num_letters)
    throw std::invalid_argument("constant dimension does not match the alphabet");
  for (long long c : constant)
    if (c < 0) throw std::invalid_argument("negative constant component");
  if (periods.empty())
    throw std::invalid_argument("at least one period is required");
  for (const ParikhVector& p : periods) {
    if (static_cast<int>(p.size()) != num_letters)
      throw std::invalid_argument("period dimension does not match the alphabet");
    for (long long c : p)
      if (c < 0) throw std::invalid_argument("negative period component");
    if (pv_is_zero(p))
      throw std::invalid_argument("zero periods are not allowed");
  }
}

bool ComLipSpec::all_periods_even() const {
  for (const ParikhVector& p : periods)
    for (long long c : p)
      if (c % 2 != 0) return false;
  return true;
}

Expr Expr::make_leaf(ComLipSpec spec) {
  Expr e;
  e.kind = Kind::Leaf;
  e.leaf = std::move(spec);
  return e;
}

Expr Expr::make_union(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::Union;
  e.children = std::move(children);
  return e;
}

Expr Expr::make_concat(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::Concat;
  e.children = std::move(children);
  return e;
}

void Expr::validate(int num_letters) const {
  if (kind == Kind::Leaf) {
    leaf.validate(num_letters);
    return;
  }
  if (children.size() < 2)
    throw std::invalid_argument("union/concat nodes need at least two children");
  for (const Expr& c : children) c.validate(num_letters);
}

int Expr::count_leaves() const {
  if (kind == Kind::Leaf) return 1;
  int n = 0;
  for (const Expr& c : children) n += c.count_leaves();
  return n;
}

}  // namespace creg
