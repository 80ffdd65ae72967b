#include "modeq/eqcard.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <json.hpp>

#include "modeq/errors.hpp"

namespace modeq {

std::string to_string(Morphisms m) {
  switch (m) {
    case Morphisms::Functions: return "functions";
    case Morphisms::Surjections: return "surjections";
    case Morphisms::Injections: return "injections";
    case Morphisms::Inclusions: return "inclusions";
    case Morphisms::Bijections: return "bijections";
    case Morphisms::Identities: return "identities";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::AllSets: return "all";
    case Regime::FiniteOnly: return "fin";
    case Regime::InfiniteOnly: return "inf";
  }
  return "?";
}

std::string to_string(CategoryKind c) { return to_string(c.morphisms) + "/" + to_string(c.regime); }

Morphisms parse_morphisms(const std::string& s) {
  for (auto m : kAllMorphisms)
    if (to_string(m) == s) return m;
  throw Error("unknown category '" + s + "'");
}

Regime parse_regime(const std::string& s) {
  for (auto r : kAllRegimes)
    if (to_string(r) == s) return r;
  throw Error("unknown regime '" + s + "'");
}

Size Size::parse(const std::string& s) {
  if (s == "omega" || s == "w" || s == "inf") return omega();
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw Error("bad size '" + s + "'");
  return finite(static_cast<std::uint32_t>(std::stoul(s)));
}

std::string Size::to_string() const { return is_omega() ? "omega" : std::to_string(v_); }

std::string to_string(const AbstractState& s) {
  return "(" + s.pattern.to_string() + ", " + s.size.to_string() + ")";
}

namespace {

constexpr std::uint32_t kW = Size::kOmega;

Morphisms base_of(Morphisms m) {
  if (m == Morphisms::Inclusions) return Morphisms::Injections;
  if (m == Morphisms::Identities) return Morphisms::Bijections;
  return m;
}

// One-step reachability ignoring regimes; refinement P <= Q is the caller's job.
bool step_raw(Morphisms m, std::size_t bp, std::uint32_t s, std::size_t bq, std::uint32_t t,
              bool same_pattern) {
  if (t != kW && t < bq) return false;
  switch (base_of(m)) {
    case Morphisms::Functions:
      if (s == 0) return true;
      return t == kW || t >= std::max<std::size_t>(1, bq);
    case Morphisms::Surjections:
      if ((s == 0) != (t == 0)) return false;
      if (s == kW) return true;
      if (t == kW) return false;
      return t <= s && static_cast<long>(s) - static_cast<long>(bp) >=
                           static_cast<long>(t) - static_cast<long>(bq);
    case Morphisms::Injections:
      return same_pattern && (t == kW || (s != kW && t >= s));
    default:
      return same_pattern && t == s;
  }
}

void check_state(CategoryKind cat, const AbstractState& st) {
  if (!st.size.is_omega() && st.size.n() < st.pattern.block_count())
    throw RegimeError("unrealizable state " + to_string(st));
  if (cat.regime == Regime::FiniteOnly && st.size.is_omega())
    throw RegimeError("omega is not a finite world");
  if (cat.regime == Regime::InfiniteOnly && !st.size.is_omega())
    throw RegimeError("finite size in the infinite-only regime");
}

}  // namespace

bool can_step(CategoryKind cat, const AbstractState& from, const AbstractState& to) {
  if (from.pattern.ground_size() != to.pattern.ground_size())
    throw ArityError("can_step: tuple lengths differ");
  check_state(cat, from);
  check_state(cat, to);
  if (!refines(from.pattern, to.pattern)) return false;
  return step_raw(cat.morphisms, from.pattern.block_count(), from.size.n(),
                  to.pattern.block_count(), to.size.n(), from.pattern == to.pattern);
}

std::vector<AbstractState> successors(CategoryKind cat, const AbstractState& from,
                                      std::size_t N) {
  std::size_t m = from.pattern.ground_size();
  if (N < m) throw BoundError("threshold " + std::to_string(N) + " below tuple length");
  check_state(cat, from);
  std::vector<Size> sizes;
  if (cat.regime != Regime::InfiniteOnly)
    for (std::size_t t = 0; t <= N; ++t) sizes.push_back(Size::finite(static_cast<std::uint32_t>(t)));
  if (cat.regime != Regime::FiniteOnly) sizes.push_back(Size::omega());
  std::vector<AbstractState> out;
  for (const auto& q : coarsenings(from.pattern)) {
    for (Size t : sizes) {
      if (!t.is_omega() && t.n() < q.block_count()) continue;
      AbstractState to{q, t};
      if (can_step(cat, from, to)) out.push_back(to);
    }
  }
  return out;
}

std::size_t threshold(const EqFormula& f) {
  return all_vars(f).size() + static_cast<std::size_t>(std::max(max_card(f), 0)) + 1;
}

EqCardTable::EqCardTable(std::vector<int> vars, std::size_t N, std::size_t stable_from,
                         Regime regime, std::vector<std::vector<std::uint8_t>> values)
    : vars_(std::move(vars)),
      N_(N),
      stable_(stable_from),
      regime_(regime),
      values_(std::move(values)) {}

bool EqCardTable::entry(std::size_t part_index, std::size_t s) const {
  if (!has_entries()) throw RegimeError("infinite-only tables have no finite entries");
  if (s > N_) return tail(part_index);
  return values_.at(part_index).at(s) != 0;
}

bool EqCardTable::tail(std::size_t part_index) const {
  return values_.at(part_index).at(N_ + 1) != 0;
}

bool EqCardTable::tail(const SetPartition& p) const {
  return tail(PartitionIndex::of(m()).index_of(p));
}

bool EqCardTable::value_at(std::size_t part_index, Size s) const {
  if (s.is_omega()) {
    if (regime_ == Regime::FiniteOnly) throw RegimeError("omega is not a finite world");
    return tail(part_index);
  }
  if (regime_ == Regime::InfiniteOnly) throw RegimeError("finite size in the infinite-only regime");
  return entry(part_index, s.n());
}

bool EqCardTable::value(const SetPartition& p, Size s) const {
  if (p.ground_size() != m())
    throw ArityError("pattern has " + std::to_string(p.ground_size()) + " positions, formula has " +
                     std::to_string(m()) + " free variables");
  if (!s.is_omega() && s.n() < p.block_count())
    throw RegimeError("pattern " + p.to_string() + " not realizable in a world of size " +
                      s.to_string());
  return value_at(PartitionIndex::of(m()).index_of(p), s);
}

namespace {

struct Key {
  EqFormula f;
  Morphisms morph;
  Regime regime;
  std::size_t slack;
  bool operator==(const Key& o) const {
    return morph == o.morph && regime == o.regime && slack == o.slack && f == o.f;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return k.f.hash() ^ (static_cast<std::size_t>(k.morph) * 131 +
                         static_cast<std::size_t>(k.regime) * 17 + k.slack * 1009);
  }
};

std::shared_mutex cache_mu;
std::unordered_map<Key, std::shared_ptr<const EqCardTable>, KeyHash> cache;

using Table = std::shared_ptr<const EqCardTable>;

class Eliminator {
 public:
  Eliminator(Morphisms m, Regime r, std::size_t slack)
      : morph_(base_of(m)), regime_(r), slack_(slack) {}

  Table get(const EqFormula& f) {
    Key key{f, morph_, regime_, slack_};
    {
      std::shared_lock lock(cache_mu);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    Table t = compute(f);
    std::unique_lock lock(cache_mu);
    return cache.emplace(std::move(key), std::move(t)).first->second;
  }

 private:
  bool infinite() const { return regime_ == Regime::InfiniteOnly; }

  // Read a child at a finite size or (slot == tail) at the tail.
  static bool at(const EqCardTable& c, std::size_t q, std::size_t s, bool is_tail) {
    if (is_tail || s > c.N()) return c.tail(q);
    return c.entry(q, s);
  }

  Table finish(const EqFormula& f, std::vector<int> vars, std::size_t L,
               const std::function<bool(std::size_t, std::size_t, bool)>& fn) {
    std::size_t N = infinite() ? 0 : std::max(threshold(f), L) + slack_;
    const auto& idx = PartitionIndex::of(vars.size());
    std::vector<std::vector<std::uint8_t>> values(idx.size(),
                                                  std::vector<std::uint8_t>(N + 2, 0));
    for (std::size_t p = 0; p < idx.size(); ++p) {
      std::size_t blocks = idx.at(p).block_count();
      if (!infinite())
        for (std::size_t s = blocks; s <= N; ++s) values[p][s] = fn(p, s, false);
      values[p][N + 1] = fn(p, 0, true);
    }
    return std::make_shared<EqCardTable>(std::move(vars), N, infinite() ? 0 : L, regime_,
                                         std::move(values));
  }

  static std::vector<std::size_t> positions(const std::vector<int>& sub,
                                            const std::vector<int>& super) {
    std::vector<std::size_t> pos;
    for (int v : sub)
      pos.push_back(static_cast<std::size_t>(
          std::lower_bound(super.begin(), super.end(), v) - super.begin()));
    return pos;
  }

  // For each partition of `super`, the index of its restriction to `sub`.
  static std::vector<std::size_t> projection(const std::vector<int>& sub,
                                             const std::vector<int>& super) {
    auto pos = positions(sub, super);
    const auto& from = PartitionIndex::of(super.size());
    const auto& to = PartitionIndex::of(sub.size());
    std::vector<std::size_t> out(from.size());
    for (std::size_t p = 0; p < from.size(); ++p)
      out[p] = to.index_of(restrict_to(from.at(p), pos));
    return out;
  }

  Table compute(const EqFormula& f) {
    switch (f.op()) {
      case Op::Atom: {
        std::vector<int> vars{f.arg(), f.arg2()};
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        const auto& idx = PartitionIndex::of(vars.size());
        return finish(f, vars, 0, [&](std::size_t p, std::size_t, bool) {
          return vars.size() == 1 || idx.at(p).same_block(0, 1);
        });
      }
      case Op::Card: {
        auto k = static_cast<std::size_t>(f.arg());
        return finish(f, {}, k, [&](std::size_t, std::size_t s, bool tail) {
          return !tail && s == k;
        });
      }
      case Op::Not: {
        Table c = get(f.child());
        return finish(f, c->vars(), c->stable_from(), [&](std::size_t p, std::size_t s, bool tail) {
          return !at(*c, p, s, tail);
        });
      }
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff: {
        Table a = get(f.left());
        Table b = get(f.right());
        std::vector<int> vars;
        std::set_union(a->vars().begin(), a->vars().end(), b->vars().begin(), b->vars().end(),
                       std::back_inserter(vars));
        auto pa = projection(a->vars(), vars);
        auto pb = projection(b->vars(), vars);
        Op op = f.op();
        return finish(f, vars, std::max(a->stable_from(), b->stable_from()),
                      [&](std::size_t p, std::size_t s, bool tail) {
                        bool x = at(*a, pa[p], s, tail);
                        bool y = at(*b, pb[p], s, tail);
                        switch (op) {
                          case Op::And: return x && y;
                          case Op::Or: return x || y;
                          case Op::Implies: return !x || y;
                          default: return x == y;
                        }
                      });
      }
      case Op::Exists:
      case Op::Forall:
        return quantifier(f);
      default:
        return modal(f);
    }
  }

  Table quantifier(const EqFormula& f) {
    Table c = get(f.child());
    bool ex = f.op() == Op::Exists;
    int v = f.arg();
    const auto& cv = c->vars();
    if (!std::binary_search(cv.begin(), cv.end(), v)) {
      // Vacuous binder: only the empty world makes a difference.
      return finish(f, cv, c->stable_from(), [&](std::size_t p, std::size_t s, bool tail) {
        bool nonempty = tail || s >= 1;
        bool g = at(*c, p, s, tail);
        return ex ? (nonempty && g) : (!nonempty || g);
      });
    }
    std::vector<int> vars;
    for (int w : cv)
      if (w != v) vars.push_back(w);
    auto proj = projection(vars, cv);
    const auto& cidx = PartitionIndex::of(cv.size());
    std::vector<std::vector<std::size_t>> ext(PartitionIndex::of(vars.size()).size());
    for (std::size_t q = 0; q < cidx.size(); ++q) ext[proj[q]].push_back(q);
    std::size_t L = std::max(c->stable_from(), vars.size());
    return finish(f, vars, L, [&](std::size_t p, std::size_t s, bool tail) {
      for (std::size_t q : ext[p]) {
        if (!tail && cidx.at(q).block_count() > s) continue;
        if (at(*c, q, s, tail) == ex) return ex;
      }
      return !ex;
    });
  }

  Table modal(const EqFormula& f) {
    Table c = get(f.child());
    bool dia = f.op() == Op::Diamond;
    const auto& vars = c->vars();
    const auto& idx = PartitionIndex::of(vars.size());
    std::size_t L = c->stable_from();
    if (morph_ == Morphisms::Surjections && !vars.empty()) L += vars.size() - 1;
    std::size_t Nmax = std::max(threshold(f), L) + slack_;
    return finish(f, vars, L, [&](std::size_t p, std::size_t s, bool tail) {
      std::uint32_t from = tail ? kW : static_cast<std::uint32_t>(s);
      std::size_t bp = idx.at(p).block_count();
      for (std::size_t q : idx.coarsenings_of(p)) {
        std::size_t bq = idx.at(q).block_count();
        auto probe = [&](std::uint32_t t, bool t_tail) {
          if (!step_raw(morph_, bp, from, bq, t, p == q)) return false;
          return at(*c, q, t, t_tail) == dia;
        };
        if (!infinite())
          for (std::size_t t = bq; t <= Nmax; ++t)
            if (probe(static_cast<std::uint32_t>(t), false)) return dia;
        if (probe(kW, true)) return dia;
      }
      return !dia;
    });
  }

  Morphisms morph_;
  Regime regime_;
  std::size_t slack_;
};

}  // namespace

std::shared_ptr<const EqCardTable> eliminate(const EqFormula& f, CategoryKind cat,
                                             std::size_t slack) {
  if (cat.regime != Regime::FiniteOnly) return Eliminator(cat.morphisms, cat.regime, slack).get(f);
  // Large finite sizes behave like omega, so the all-sets computation serves;
  // only the regime label differs.
  Key key{f, base_of(cat.morphisms), Regime::FiniteOnly, slack};
  {
    std::shared_lock lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto all = Eliminator(cat.morphisms, Regime::AllSets, slack).get(f);
  std::vector<std::vector<std::uint8_t>> values;
  const auto& idx = PartitionIndex::of(all->m());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    std::vector<std::uint8_t> row;
    for (std::size_t s = 0; s <= all->N(); ++s)
      row.push_back(s >= idx.at(p).block_count() && all->entry(p, s));
    row.push_back(all->tail(p));
    values.push_back(std::move(row));
  }
  auto t = std::make_shared<const EqCardTable>(all->vars(), all->N(), all->stable_from(),
                                               Regime::FiniteOnly, std::move(values));
  std::unique_lock lock(cache_mu);
  return cache.emplace(std::move(key), std::move(t)).first->second;
}

bool evaluate(const EqFormula& f, CategoryKind cat, Size size, const SetPartition& pattern) {
  return eliminate(f, cat)->value(pattern, size);
}

bool evaluate_named(const EqFormula& f, CategoryKind cat, Size size,
                    const SetPartition& pattern) {
  auto t = eliminate(f, cat);
  std::vector<std::size_t> pos;
  for (int v : t->vars()) {
    if (static_cast<std::size_t>(v) >= pattern.ground_size())
      throw ArityError("free variable x" + std::to_string(v) + " is not named");
    pos.push_back(static_cast<std::size_t>(v));
  }
  if (!size.is_omega() && size.n() < pattern.block_count())
    throw RegimeError("pattern " + pattern.to_string() + " not realizable in a world of size " +
                      size.to_string());
  return t->value(restrict_to(pattern, pos), size);
}

EqFormula to_normal_formula(const EqCardTable& t) {
  const auto& idx = PartitionIndex::of(t.m());
  std::vector<EqFormula> disjuncts;
  bool everything = true;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    std::size_t lo = idx.at(p).block_count();
    std::vector<std::size_t> trues;
    bool any_false = !t.tail(p);
    if (t.has_entries())
      for (std::size_t s = lo; s <= t.N(); ++s) {
        if (t.entry(p, s))
          trues.push_back(s);
        else
          any_false = true;
      }
    if (trues.empty() && !t.tail(p)) {
      everything = false;
      continue;
    }
    everything = everything && !any_false;
    std::vector<EqFormula> conds;
    if (any_false) {
      std::size_t run = t.N() + 1;
      if (t.tail(p))
        while (run > lo && t.entry(p, run - 1)) --run;
      for (std::size_t s : trues)
        if (!t.tail(p) || s < run) conds.push_back(eq::card(static_cast<int>(s)));
      if (t.tail(p)) {
        // At least `run` elements; sizes below |P| are already impossible.
        std::vector<EqFormula> at_least;
        for (std::size_t n = lo; n < run; ++n) at_least.push_back(neg(eq::card(static_cast<int>(n))));
        conds.push_back(eq::big_and(at_least));
      }
    }
    std::vector<EqFormula> conj_parts;
    if (t.m() >= 2) {
      std::vector<int> vars(t.vars().begin(), t.vars().end());
      conj_parts.push_back(eq::partition_formula(idx.at(p), vars));
    }
    if (!conds.empty()) conj_parts.push_back(eq::big_or(conds));
    disjuncts.push_back(eq::big_and(conj_parts));
  }
  if (everything) return eq::verum();
  if (disjuncts.empty()) return eq::falsum();
  return eq::big_or(disjuncts);
}

std::string table_json(const EqCardTable& t) {
  using nlohmann::ordered_json;
  const auto& idx = PartitionIndex::of(t.m());
  ordered_json j;
  j["m"] = t.m();
  j["N"] = t.N();
  j["vars"] = t.vars();
  j["regime"] = to_string(t.regime());
  ordered_json entries = ordered_json::array();
  if (t.has_entries())
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t s = idx.at(p).block_count(); s <= t.N(); ++s)
        entries.push_back({{"partition", idx.at(p).to_string()},
                           {"size", s},
                           {"value", t.entry(p, s)}});
  j["entries"] = std::move(entries);
  ordered_json tail = ordered_json::array();
  for (std::size_t p = 0; p < idx.size(); ++p)
    tail.push_back({{"partition", idx.at(p).to_string()}, {"value", t.tail(p)}});
  j["tail"] = std::move(tail);
  return j.dump(2);
}

void clear_elimination_cache() {
  std::unique_lock lock(cache_mu);
  cache.clear();
}

}  // namespace modeq
