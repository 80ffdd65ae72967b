#include "brute.hpp"

#include <algorithm>
#include <stdexcept>

namespace brute {

using modeq::EqFormula;
using modeq::Morphisms;
using modeq::Op;

std::vector<std::vector<int>> morphisms(Morphisms m, int s, int t) {
  std::vector<std::vector<int>> out;
  if (m == Morphisms::Identities) {
    if (s == t) {
      std::vector<int> id(s);
      for (int i = 0; i < s; ++i) id[i] = i;
      out.push_back(id);
    }
    return out;
  }
  if (m == Morphisms::Inclusions) {
    // The canonical worlds are {0..n-1}; the inclusion of one in another.
    if (s <= t) {
      std::vector<int> id(s);
      for (int i = 0; i < s; ++i) id[i] = i;
      out.push_back(id);
    }
    return out;
  }
  std::vector<int> f(s, 0);
  if (s > 0 && t == 0) return out;
  while (true) {
    std::vector<bool> hit(t, false);
    bool inj = true;
    for (int x : f) {
      if (hit[x]) inj = false;
      hit[x] = true;
    }
    bool surj = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    bool keep = false;
    switch (m) {
      case Morphisms::Functions: keep = true; break;
      case Morphisms::Surjections: keep = surj; break;
      case Morphisms::Injections: keep = inj; break;
      case Morphisms::Bijections: keep = inj && surj; break;
      default: break;
    }
    if (keep) out.push_back(f);
    int i = 0;
    while (i < s && f[i] == t - 1) f[i++] = 0;
    if (i == s) break;
    ++f[i];
  }
  return out;
}

int Semantics::index(int size, int a0, int a1) const {
  int span = infinite_ ? max_size_ : size;
  int base = infinite_ ? 0 : offset_[size];
  return base + (a0 + 1) * (span + 1) + (a1 + 1);
}

Semantics Semantics::finite(Morphisms m, int max_size) {
  Semantics sem;
  sem.max_size_ = max_size;
  int total = 0;
  for (int s = 0; s <= max_size; ++s) {
    sem.offset_.push_back(total);
    total += (s + 1) * (s + 1);
  }
  if (total > 256) throw std::runtime_error("brute universe too large");
  for (int s = 0; s <= max_size; ++s)
    for (int a0 = -1; a0 < s; ++a0)
      for (int a1 = -1; a1 < s; ++a1) sem.states_.push_back({s, {a0, a1}});
  sem.reach_.assign(sem.states_.size(), Truth());
  for (int s = 0; s <= max_size; ++s)
    for (int t = 0; t <= max_size; ++t)
      for (const auto& f : morphisms(m, s, t))
        for (int a0 = -1; a0 < s; ++a0)
          for (int a1 = -1; a1 < s; ++a1) {
            int b0 = a0 < 0 ? -1 : f[a0];
            int b1 = a1 < 0 ? -1 : f[a1];
            sem.reach_[sem.index(s, a0, a1)].set(sem.index(t, b0, b1));
          }
  return sem;
}

Semantics Semantics::infinite(Morphisms m, int window) {
  Semantics sem;
  sem.infinite_ = true;
  sem.max_size_ = window;
  for (int a0 = -1; a0 < window; ++a0)
    for (int a1 = -1; a1 < window; ++a1) sem.states_.push_back({-1, {a0, a1}});
  sem.reach_.assign(sem.states_.size(), Truth());
  Morphisms kind = m;
  // Finite partial maps of N: any map for functions and surjections, any
  // injective map for the injective kinds, only the identity for identities.
  if (m == Morphisms::Functions || m == Morphisms::Surjections) kind = Morphisms::Functions;
  if (m == Morphisms::Injections || m == Morphisms::Inclusions || m == Morphisms::Bijections)
    kind = Morphisms::Injections;
  for (const auto& f : morphisms(kind, window, window))
    for (int a0 = -1; a0 < window; ++a0)
      for (int a1 = -1; a1 < window; ++a1) {
        int b0 = a0 < 0 ? -1 : f[a0];
        int b1 = a1 < 0 ? -1 : f[a1];
        sem.reach_[sem.index(0, a0, a1)].set(sem.index(0, b0, b1));
      }
  return sem;
}

Truth Semantics::eval(const EqFormula& f) const { return eval_rec(f); }

Truth Semantics::eval_rec(const EqFormula& f) const {
  Truth l, r;
  if (!modeq::is_leaf(f.op())) l = eval_rec(f.left());
  if (modeq::is_binary(f.op())) r = eval_rec(f.right());
  return apply(f, l, r);
}

Truth Semantics::apply(const EqFormula& f, const Truth& left, const Truth& right) const {
  Truth out;
  auto n = states_.size();
  switch (f.op()) {
    case Op::Atom: {
      if (f.arg() > 1 || f.arg2() > 1) throw std::runtime_error("brute: variable out of range");
      for (std::size_t i = 0; i < n; ++i) {
        const auto& st = states_[i];
        int x = st.a[f.arg()], y = st.a[f.arg2()];
        out[i] = x >= 0 && y >= 0 && x == y;
      }
      return out;
    }
    case Op::Card:
      for (std::size_t i = 0; i < n; ++i) out[i] = !infinite_ && states_[i].size == f.arg();
      return out;
    case Op::Not: {
      const Truth& c = left;
      for (std::size_t i = 0; i < n; ++i) out[i] = !c[i];
      return out;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: {
      const Truth& a = left;
      const Truth& b = right;
      for (std::size_t i = 0; i < n; ++i) {
        switch (f.op()) {
          case Op::And: out[i] = a[i] && b[i]; break;
          case Op::Or: out[i] = a[i] || b[i]; break;
          case Op::Implies: out[i] = !a[i] || b[i]; break;
          default: out[i] = a[i] == b[i];
        }
      }
      return out;
    }
    case Op::Exists:
    case Op::Forall: {
      int v = f.arg();
      if (v > 1) throw std::runtime_error("brute: variable out of range");
      const Truth& c = left;
      bool ex = f.op() == Op::Exists;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& st = states_[i];
        int span = infinite_ ? max_size_ : st.size;
        bool acc = !ex;
        for (int x = 0; x < span; ++x) {
          int a[2] = {st.a[0], st.a[1]};
          a[v] = x;
          bool val = c[index(st.size, a[0], a[1])];
          if (ex ? val : !val) {
            acc = ex;
            break;
          }
        }
        out[i] = acc;
      }
      return out;
    }
    default: {
      const Truth& c = left;
      bool dia = f.op() == Op::Diamond;
      for (std::size_t i = 0; i < n; ++i)
        out[i] = dia ? (reach_[i] & c).any() : (reach_[i] & ~c).none();
      return out;
    }
  }
}

bool Semantics::eval_static(const EqFormula& f, int size, std::vector<int> env) {
  switch (f.op()) {
    case Op::Atom: {
      auto get = [&](int v) {
        if (v >= static_cast<int>(env.size()) || env[v] < 0)
          throw std::runtime_error("brute: unassigned variable");
        return env[v];
      };
      return get(f.arg()) == get(f.arg2());
    }
    case Op::Card:
      return size == f.arg();
    case Op::Not:
      return !eval_static(f.child(), size, env);
    case Op::And:
      return eval_static(f.left(), size, env) && eval_static(f.right(), size, env);
    case Op::Or:
      return eval_static(f.left(), size, env) || eval_static(f.right(), size, env);
    case Op::Implies:
      return !eval_static(f.left(), size, env) || eval_static(f.right(), size, env);
    case Op::Iff:
      return eval_static(f.left(), size, env) == eval_static(f.right(), size, env);
    case Op::Exists:
    case Op::Forall: {
      int v = f.arg();
      if (v >= static_cast<int>(env.size())) env.resize(v + 1, kUnset);
      bool ex = f.op() == Op::Exists;
      for (int x = 0; x < size; ++x) {
        env[v] = x;
        if (eval_static(f.child(), size, env) == ex) return ex;
      }
      return !ex;
    }
    default:
      throw std::runtime_error("brute: modal operator in static evaluation");
  }
}

}  // namespace brute
