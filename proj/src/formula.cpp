#include "modeq/formula.hpp"

#include <algorithm>
#include <functional>

#include "modeq/errors.hpp"
#include "modeq/partition.hpp"

namespace modeq {

namespace detail {

std::shared_ptr<const Node> make_node(Op op, int a, int b, std::shared_ptr<const Node> l,
                                      std::shared_ptr<const Node> r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = a;
  n->b = b;
  std::size_t h = static_cast<std::size_t>(op) * 0x9e3779b97f4a7c15ULL;
  h ^= (static_cast<std::size_t>(a) + 0x7f4a7c15) * 0xbf58476d1ce4e5b9ULL;
  h ^= (static_cast<std::size_t>(b) + 0x1ce4e5b9) * 0x94d049bb133111ebULL;
  if (l) {
    h = (h ^ l->hash) * 0x100000001b3ULL + 0x51;
    n->size += l->size;
  }
  if (r) {
    h = (h ^ (r->hash * 31 + 7)) * 0x100000001b3ULL + 0x33;
    n->size += r->size;
  }
  n->hash = h ^ (h >> 29);
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

bool equal_nodes(const Node* x, const Node* y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->hash != y->hash || x->size != y->size || x->op != y->op || x->a != y->a ||
      x->b != y->b)
    return false;
  return equal_nodes(x->left.get(), y->left.get()) &&
         equal_nodes(x->right.get(), y->right.get());
}

int compare_nodes(const Node* x, const Node* y) {
  if (x == y) return 0;
  if (!x) return -1;
  if (!y) return 1;
  if (x->size != y->size) return x->size < y->size ? -1 : 1;
  if (x->op != y->op) return x->op < y->op ? -1 : 1;
  if (x->a != y->a) return x->a < y->a ? -1 : 1;
  if (x->b != y->b) return x->b < y->b ? -1 : 1;
  if (int c = compare_nodes(x->left.get(), y->left.get())) return c;
  return compare_nodes(x->right.get(), y->right.get());
}

}  // namespace detail

namespace eq {

EqFormula atom(int i, int j) {
  if (i < 0 || j < 0) throw Error("negative variable index");
  return EqFormula::make(Op::Atom, i, j, {}, {});
}

EqFormula card(int k) {
  if (k < 0) throw Error("negative cardinality");
  return EqFormula::make(Op::Card, k, 0, {}, {});
}

EqFormula exists(int v, const EqFormula& f) {
  if (v < 0) throw Error("negative variable index");
  return EqFormula::make(Op::Exists, v, 0, f, {});
}

EqFormula forall(int v, const EqFormula& f) {
  if (v < 0) throw Error("negative variable index");
  return EqFormula::make(Op::Forall, v, 0, f, {});
}

EqFormula falsum() { return conj(card(0), neg(card(0))); }
EqFormula verum() { return neg(falsum()); }

EqFormula big_and(const std::vector<EqFormula>& fs) {
  if (fs.empty()) return verum();
  EqFormula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}

EqFormula big_or(const std::vector<EqFormula>& fs) {
  if (fs.empty()) return falsum();
  EqFormula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

EqFormula partition_formula(const SetPartition& p, const std::vector<int>& vars) {
  if (vars.size() != p.ground_size()) throw ArityError("partition formula arity mismatch");
  std::vector<EqFormula> parts;
  auto blocks = p.blocks();
  for (const auto& block : blocks)
    for (std::size_t k = 1; k < block.size(); ++k)
      parts.push_back(atom(vars[block[0]], vars[block[k]]));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      parts.push_back(neg(atom(vars[blocks[i][0]], vars[blocks[j][0]])));
  return big_and(parts);
}

}  // namespace eq

namespace prop {

PropFormula var(int p) {
  if (p < 0) throw Error("negative propositional index");
  return PropFormula::make(Op::Var, p, 0, {}, {});
}

}  // namespace prop

namespace {

EqFormula at_least_q(int k, int first) {
  if (k == 0) return neg(eq::exists(first, neg(eq::atom(first, first))));
  std::vector<EqFormula> distinct;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) distinct.push_back(neg(eq::atom(first + i, first + j)));
  EqFormula body = distinct.empty() ? eq::atom(first, first) : eq::big_and(distinct);
  for (int i = k - 1; i >= 0; --i) body = eq::exists(first + i, body);
  return body;
}

}  // namespace

EqFormula expand_sigma(SigmaKind kind, int k, bool as_quantifiers, int first_var) {
  if (k < 0) throw Error("negative cardinality");
  if (!as_quantifiers) {
    switch (kind) {
      case SigmaKind::Exact:
        return eq::card(k);
      case SigmaKind::AtLeast: {
        if (k == 0) return eq::verum();
        std::vector<EqFormula> parts;
        for (int n = 0; n < k; ++n) parts.push_back(neg(eq::card(n)));
        return eq::big_and(parts);
      }
      case SigmaKind::AtMost: {
        std::vector<EqFormula> parts;
        for (int n = 0; n <= k; ++n) parts.push_back(eq::card(n));
        return eq::big_or(parts);
      }
    }
  }
  switch (kind) {
    case SigmaKind::Exact:
      if (k == 0) return eq::forall(first_var, neg(eq::atom(first_var, first_var)));
      return conj(at_least_q(k, first_var), neg(at_least_q(k + 1, first_var)));
    case SigmaKind::AtLeast:
      return at_least_q(k, first_var);
    case SigmaKind::AtMost:
      return neg(at_least_q(k + 1, first_var));
  }
  return {};
}

namespace {

const char* op_text(Op op) {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Implies: return " -> ";
    case Op::Iff: return " <-> ";
    default: return "";
  }
}

template <class T>
void print_rec(const Formula<T>& f, bool top, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += "x" + std::to_string(f.arg()) + " = x" + std::to_string(f.arg2());
      return;
    case Op::Card:
      out += "card = " + std::to_string(f.arg());
      return;
    case Op::Var:
      out += "p" + std::to_string(f.arg());
      return;
    case Op::Not:
      out += "~";
      print_rec(f.child(), false, out);
      return;
    case Op::Diamond:
      out += "<> ";
      print_rec(f.child(), false, out);
      return;
    case Op::Box:
      out += "[] ";
      print_rec(f.child(), false, out);
      return;
    case Op::Exists:
    case Op::Forall:
      out += f.op() == Op::Exists ? "E x" : "A x";
      out += std::to_string(f.arg()) + ". ";
      print_rec(f.child(), false, out);
      return;
    default:
      if (!top) out += "(";
      print_rec(f.left(), false, out);
      out += op_text(f.op());
      print_rec(f.right(), false, out);
      if (!top) out += ")";
  }
}

}  // namespace

std::string to_string(const EqFormula& f) {
  std::string s;
  print_rec(f, true, s);
  return s;
}

std::string to_string(const PropFormula& f) {
  std::string s;
  print_rec(f, true, s);
  return s;
}

EqFormula erase_modalities(const EqFormula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Card:
      return f;
    case Op::Diamond:
    case Op::Box:
      return erase_modalities(f.child());
    case Op::Not:
      return neg(erase_modalities(f.child()));
    case Op::Exists:
    case Op::Forall:
      return EqFormula::make(f.op(), f.arg(), 0, erase_modalities(f.child()), {});
    default:
      return EqFormula::make(f.op(), 0, 0, erase_modalities(f.left()),
                             erase_modalities(f.right()));
  }
}

namespace {

void free_rec(const EqFormula& f, std::vector<int>& bound, std::set<int>& out) {
  switch (f.op()) {
    case Op::Atom:
      for (int v : {f.arg(), f.arg2()})
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
      return;
    case Op::Card:
      return;
    case Op::Exists:
    case Op::Forall:
      bound.push_back(f.arg());
      free_rec(f.child(), bound, out);
      bound.pop_back();
      return;
    default:
      free_rec(f.left(), bound, out);
      if (is_binary(f.op())) free_rec(f.right(), bound, out);
  }
}

template <class T, class Fn>
void visit(const Formula<T>& f, Fn&& fn) {
  fn(f);
  if (is_leaf(f.op())) return;
  visit(f.left(), fn);
  if (is_binary(f.op())) visit(f.right(), fn);
}

}  // namespace

std::set<int> free_vars(const EqFormula& f) {
  std::set<int> out;
  std::vector<int> bound;
  free_rec(f, bound, out);
  return out;
}

std::set<int> all_vars(const EqFormula& f) {
  std::set<int> out;
  visit(f, [&](const EqFormula& g) {
    if (g.op() == Op::Atom) {
      out.insert(g.arg());
      out.insert(g.arg2());
    } else if (is_binder(g.op())) {
      out.insert(g.arg());
    }
  });
  return out;
}

int max_card(const EqFormula& f) {
  int k = -1;
  visit(f, [&](const EqFormula& g) {
    if (g.op() == Op::Card) k = std::max(k, g.arg());
  });
  return k;
}

int prop_var_count(const PropFormula& f) {
  int n = 0;
  visit(f, [&](const PropFormula& g) {
    if (g.op() == Op::Var) n = std::max(n, g.arg() + 1);
  });
  return n;
}

namespace {

template <class T>
int depth_rec(const Formula<T>& f) {
  if (is_leaf(f.op())) return 0;
  int d = depth_rec(f.left());
  if (is_binary(f.op())) d = std::max(d, depth_rec(f.right()));
  return d + (is_modal(f.op()) ? 1 : 0);
}

}  // namespace

int modal_depth(const PropFormula& f) { return depth_rec(f); }
int modal_depth(const EqFormula& f) { return depth_rec(f); }

std::size_t ast_size(const PropFormula& f) { return f.node_count(); }
std::size_t ast_size(const EqFormula& f) { return f.node_count(); }

namespace detail {

EqFormula normalize_with(const EqFormula& f, const std::set<int>& free,
                         std::map<int, int>& env, std::vector<int>& active) {
  switch (f.op()) {
    case Op::Atom: {
      auto look = [&](int v) {
        auto it = env.find(v);
        return it == env.end() ? v : it->second;
      };
      return eq::atom(look(f.arg()), look(f.arg2()));
    }
    case Op::Card:
      return f;
    case Op::Exists:
    case Op::Forall: {
      int v = f.arg();
      auto taken = [&](int k) {
        return free.count(k) || std::find(active.begin(), active.end(), k) != active.end();
      };
      int k = v;
      if (v >= kProvisionalBinder || taken(v)) {
        k = 0;
        while (taken(k)) ++k;
      }
      auto saved = env.find(v);
      std::optional<int> old;
      if (saved != env.end()) old = saved->second;
      env[v] = k;
      active.push_back(k);
      EqFormula body = normalize_with(f.child(), free, env, active);
      active.pop_back();
      if (old)
        env[v] = *old;
      else
        env.erase(v);
      return EqFormula::make(f.op(), k, 0, body, {});
    }
    default: {
      EqFormula l = normalize_with(f.left(), free, env, active);
      if (!is_binary(f.op())) return EqFormula::make(f.op(), 0, 0, l, {});
      return EqFormula::make(f.op(), 0, 0, l, normalize_with(f.right(), free, env, active));
    }
  }
}

}  // namespace detail

EqFormula normalize_binders(const EqFormula& f) {
  auto free = free_vars(f);
  std::map<int, int> env;
  std::vector<int> active;
  return detail::normalize_with(f, free, env, active);
}

EqFormula substitute(const PropFormula& phi, const std::map<int, EqFormula>& psi) {
  switch (phi.op()) {
    case Op::Var: {
      auto it = psi.find(phi.arg());
      if (it == psi.end())
        throw ArityError("no substitution for p" + std::to_string(phi.arg()));
      return it->second;
    }
    case Op::Not:
    case Op::Diamond:
    case Op::Box:
      return EqFormula::make(phi.op(), 0, 0, substitute(phi.child(), psi), {});
    default:
      return EqFormula::make(phi.op(), 0, 0, substitute(phi.left(), psi),
                             substitute(phi.right(), psi));
  }
}

namespace {

EqFormula rename_rec(const EqFormula& f, const std::map<int, int>& m,
                     std::vector<int>& bound) {
  auto is_bound = [&](int v) {
    return std::find(bound.begin(), bound.end(), v) != bound.end();
  };
  switch (f.op()) {
    case Op::Atom: {
      auto r = [&](int v) {
        if (is_bound(v)) return v;
        auto it = m.find(v);
        return it == m.end() ? v : it->second;
      };
      return eq::atom(r(f.arg()), r(f.arg2()));
    }
    case Op::Card:
      return f;
    case Op::Exists:
    case Op::Forall: {
      bound.push_back(f.arg());
      EqFormula body = rename_rec(f.child(), m, bound);
      bound.pop_back();
      return EqFormula::make(f.op(), f.arg(), 0, body, {});
    }
    default: {
      EqFormula l = rename_rec(f.left(), m, bound);
      if (!is_binary(f.op())) return EqFormula::make(f.op(), 0, 0, l, {});
      return EqFormula::make(f.op(), 0, 0, l, rename_rec(f.right(), m, bound));
    }
  }
}

}  // namespace

EqFormula rename_free(const EqFormula& f, const std::map<int, int>& m) {
  // Move binders out of the way of every source and target index first.
  std::set<int> reserved = free_vars(f);
  for (auto [a, b] : m) {
    reserved.insert(a);
    reserved.insert(b);
  }
  // Treat reserved indices as free so normalization avoids them.
  std::vector<EqFormula> guards;
  for (int v : reserved) guards.push_back(eq::atom(v, v));
  EqFormula wrapped = conj(eq::big_and(guards), f);
  EqFormula normalized = normalize_binders(wrapped).right();
  std::vector<int> bound;
  return rename_rec(normalized, m, bound);
}

}  // namespace modeq
