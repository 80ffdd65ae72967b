#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace modeq {

class SetPartition;

enum class Op : unsigned char {
  Atom,     // x_a = x_b
  Card,     // sigma_a: exactly a elements
  Var,      // p_a
  Not,
  And,
  Or,
  Implies,
  Iff,
  Exists,   // binder on x_a
  Forall,
  Diamond,
  Box,
};

inline bool is_binary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Iff;
}
inline bool is_leaf(Op op) { return op == Op::Atom || op == Op::Card || op == Op::Var; }
inline bool is_modal(Op op) { return op == Op::Diamond || op == Op::Box; }
inline bool is_binder(Op op) { return op == Op::Exists || op == Op::Forall; }

namespace detail {

struct Node {
  Op op;
  int a = 0;
  int b = 0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t hash = 0;
  std::size_t size = 1;
};

std::shared_ptr<const Node> make_node(Op op, int a, int b, std::shared_ptr<const Node> l,
                                      std::shared_ptr<const Node> r);
// Binder indices at or above this value are always renamed by normalize_binders.
inline constexpr int kProvisionalBinder = 1 << 20;

bool equal_nodes(const Node* x, const Node* y);
int compare_nodes(const Node* x, const Node* y);

}  // namespace detail

/// Immutable, structurally shared formula. Tag separates the two languages.
template <class Tag>
class Formula {
 public:
  Formula() = default;

  Op op() const { return n_->op; }

  /// Atom: first variable. Card: k. Var: p. Binders: bound variable.
  int arg() const { return n_->a; }
  /// Atom: second variable.
  int arg2() const { return n_->b; }

  /// Only child of unary nodes and binders; left child of binary nodes.
  Formula child() const { return Formula(n_->left); }
  Formula left() const { return Formula(n_->left); }
  Formula right() const { return Formula(n_->right); }

  std::size_t hash() const { return n_->hash; }
  /// Number of AST nodes counted with repetition.
  std::size_t node_count() const { return n_->size; }
  const detail::Node* raw() const { return n_.get(); }
  bool empty() const { return !n_; }

  friend bool operator==(const Formula& x, const Formula& y) {
    return detail::equal_nodes(x.n_.get(), y.n_.get());
  }
  friend bool operator<(const Formula& x, const Formula& y) {
    return detail::compare_nodes(x.n_.get(), y.n_.get()) < 0;
  }

  static Formula make(Op op, int a, int b, const Formula& l, const Formula& r) {
    return Formula(detail::make_node(op, a, b, l.n_, r.n_));
  }

 private:
  explicit Formula(std::shared_ptr<const detail::Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const detail::Node> n_;
};

struct EqTag {};
struct PropTag {};
using EqFormula = Formula<EqTag>;
using PropFormula = Formula<PropTag>;

struct FormulaHash {
  template <class Tag>
  std::size_t operator()(const Formula<Tag>& f) const noexcept {
    return f.hash();
  }
};

// Constructors shared by both languages.
template <class T>
Formula<T> neg(const Formula<T>& f) { return Formula<T>::make(Op::Not, 0, 0, f, {}); }
template <class T>
Formula<T> conj(const Formula<T>& f, const Formula<T>& g) {
  return Formula<T>::make(Op::And, 0, 0, f, g);
}
template <class T>
Formula<T> disj(const Formula<T>& f, const Formula<T>& g) {
  return Formula<T>::make(Op::Or, 0, 0, f, g);
}
template <class T>
Formula<T> implies(const Formula<T>& f, const Formula<T>& g) {
  return Formula<T>::make(Op::Implies, 0, 0, f, g);
}
template <class T>
Formula<T> iff(const Formula<T>& f, const Formula<T>& g) {
  return Formula<T>::make(Op::Iff, 0, 0, f, g);
}
template <class T>
Formula<T> diamond(const Formula<T>& f) { return Formula<T>::make(Op::Diamond, 0, 0, f, {}); }
template <class T>
Formula<T> box(const Formula<T>& f) { return Formula<T>::make(Op::Box, 0, 0, f, {}); }

namespace eq {

EqFormula atom(int i, int j);
EqFormula card(int k);
EqFormula exists(int v, const EqFormula& f);
EqFormula forall(int v, const EqFormula& f);
/// card = 0 & ~card = 0
EqFormula falsum();
/// ~(card = 0 & ~card = 0)
EqFormula verum();
/// Right-nested; empty list gives verum / falsum.
EqFormula big_and(const std::vector<EqFormula>& fs);
EqFormula big_or(const std::vector<EqFormula>& fs);

/// P(x_{vars[0]}, ...): the equalities and inequalities realizing P exactly.
EqFormula partition_formula(const SetPartition& p, const std::vector<int>& vars);

}  // namespace eq

namespace prop {

PropFormula var(int p);

}  // namespace prop

enum class SigmaKind { Exact, AtLeast, AtMost };

/// sigma sugar. Primitive form uses Card leaves; quantifier form uses fresh
/// bound variables starting at first_var.
EqFormula expand_sigma(SigmaKind kind, int k, bool as_quantifiers, int first_var = 0);

EqFormula parse_eq(std::string_view text);
PropFormula parse_prop(std::string_view text);

std::string to_string(const EqFormula& f);
std::string to_string(const PropFormula& f);

EqFormula erase_modalities(const EqFormula& f);

std::set<int> free_vars(const EqFormula& f);
/// Every variable index occurring, free or bound.
std::set<int> all_vars(const EqFormula& f);
int max_card(const EqFormula& f);
/// Number of propositional variables: 1 + largest index, 0 if none.
int prop_var_count(const PropFormula& f);
int modal_depth(const PropFormula& f);
int modal_depth(const EqFormula& f);

/// Subformula count with repetition.
std::size_t ast_size(const PropFormula& f);
std::size_t ast_size(const EqFormula& f);

/// Renames binders so that no binder index is free anywhere in f and no two
/// nested binders share an index. Idempotent; the parser's output is fixed.
EqFormula normalize_binders(const EqFormula& f);

/// phi[psi_0/p_0, ...]. Missing entries are an error.
EqFormula substitute(const PropFormula& phi, const std::map<int, EqFormula>& psi);

/// Renames free variables via the map (variables not in the map unchanged);
/// binders are normalized first so no capture occurs.
EqFormula rename_free(const EqFormula& f, const std::map<int, int>& m);

}  // namespace modeq
