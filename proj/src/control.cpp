#include "modeq/control.hpp"

#include <algorithm>

#include <json.hpp>

#include "modeq/errors.hpp"

namespace modeq {

namespace {

constexpr std::pair<ControlKind, const char*> kKinds[] = {
    {ControlKind::WeakButton, "weak_button"},
    {ControlKind::Button, "button"},
    {ControlKind::PureButton, "pure_button"},
    {ControlKind::Switch, "switch"},
    {ControlKind::Dial, "dial"},
    {ControlKind::Ratchet, "ratchet"},
    {ControlKind::Penultimate, "penultimate"},
    {ControlKind::IndependentButtons, "independent_buttons"},
};

class Checker {
 public:
  explicit Checker(const WorldSpec& w) : w_(w) {}

  void require(const std::string& condition, const EqFormula& f) {
    bool v = holds_at(f, w_);
    out_.certificate.push_back({condition, f, v});
    out_.holds = out_.holds && v;
  }

  ControlResult result() && { return std::move(out_); }

 private:
  WorldSpec w_;
  ControlResult out_;
};

EqFormula weak_button(const EqFormula& b) { return diamond(box(b)); }
EqFormula button(const EqFormula& b) { return box(diamond(box(b))); }
EqFormula persistent(const EqFormula& b) { return box(implies(b, box(b))); }

std::string nth(const char* what, std::size_t i) { return std::string(what) + " " + std::to_string(i); }

}  // namespace

std::string to_string(ControlKind k) {
  for (auto [kind, name] : kKinds)
    if (kind == k) return name;
  throw Error("unknown control kind");
}

ControlKind parse_control_kind(const std::string& s) {
  for (auto [kind, name] : kKinds)
    if (s == name) return kind;
  throw Error("unknown control kind '" + s + "'");
}

std::string ControlResult::to_json() const {
  nlohmann::ordered_json j;
  j["holds"] = holds;
  j["certificate"] = nlohmann::ordered_json::array();
  for (const auto& c : certificate)
    j["certificate"].push_back({{"condition", c.condition}, {"formula", to_string(c.formula)}, {"value", c.value}});
  return j.dump(2);
}

bool holds_at(const EqFormula& f, const WorldSpec& w) {
  validate(w);
  std::size_t m = named_count(w);
  for (int v : free_vars(f))
    if (static_cast<std::size_t>(v) >= m)
      throw ArityError("x" + std::to_string(v) + " is not a parameter of the world (" +
                       std::to_string(m) + " named)");
  return evaluate_named(f, w.cat, w.size, SetPartition::discrete(m));
}

ControlResult check_control(const ControlClaim& c) {
  const auto& fs = c.formulas;
  std::size_t need = c.kind == ControlKind::IndependentButtons ? 2 : 1;
  if (fs.size() < need)
    throw ArityError(to_string(c.kind) + " needs at least " + std::to_string(need) + " formulas");
  if (c.kind == ControlKind::IndependentButtons) return independent_buttons(fs, c.world);

  Checker ck(c.world);
  switch (c.kind) {
    case ControlKind::WeakButton:
      for (std::size_t i = 0; i < fs.size(); ++i) ck.require(nth("weak button", i), weak_button(fs[i]));
      break;
    case ControlKind::Button:
      for (std::size_t i = 0; i < fs.size(); ++i) ck.require(nth("button", i), button(fs[i]));
      break;
    case ControlKind::PureButton:
      for (std::size_t i = 0; i < fs.size(); ++i) {
        ck.require(nth("button", i), button(fs[i]));
        ck.require(nth("persistence", i), persistent(fs[i]));
      }
      break;
    case ControlKind::Switch:
      for (std::size_t i = 0; i < fs.size(); ++i)
        ck.require(nth("switch", i), box(conj(diamond(fs[i]), diamond(neg(fs[i])))));
      break;
    case ControlKind::Penultimate:
      for (std::size_t i = 0; i < fs.size(); ++i) {
        ck.require(nth("true", i), fs[i]);
        ck.require(nth("possibly false", i), diamond(neg(fs[i])));
        ck.require(nth("falsity persists", i), persistent(neg(fs[i])));
      }
      break;
    case ControlKind::Dial: {
      std::vector<EqFormula> alts;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<EqFormula> parts{fs[i]};
        for (std::size_t j = 0; j < fs.size(); ++j)
          if (j != i) parts.push_back(neg(fs[j]));
        alts.push_back(eq::big_and(parts));
      }
      ck.require("necessarily exactly one", box(eq::big_or(alts)));
      for (std::size_t i = 0; i < fs.size(); ++i) ck.require(nth("always reachable", i), box(diamond(fs[i])));
      break;
    }
    case ControlKind::Ratchet: {
      std::size_t n = fs.size();
      auto r = [&](std::size_t i) {
        if (i == 0) return eq::verum();
        if (i > n) return eq::falsum();
        return fs[i - 1];
      };
      for (std::size_t i = 1; i < n; ++i)
        ck.require(nth("later implies earlier", i + 1), box(implies(r(i + 1), r(i))));
      for (std::size_t i = 1; i <= n; ++i) ck.require(nth("never decreases", i), persistent(r(i)));
      for (std::size_t i = 0; i < n; ++i) {
        auto vol = [&](std::size_t k) { return conj(r(k), neg(r(k + 1))); };
        ck.require(nth("can crank from volume", i), box(implies(vol(i), diamond(vol(i + 1)))));
      }
      break;
    }
    default:
      break;
  }
  return std::move(ck).result();
}

ControlResult independent_buttons(const std::vector<EqFormula>& bs, const WorldSpec& w) {
  if (bs.size() < 2) throw ArityError("independence needs at least two buttons");
  Checker ck(w);
  for (std::size_t i = 0; i < bs.size(); ++i) ck.require(nth("weak button", i), weak_button(bs[i]));
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      ck.require("push " + std::to_string(i) + " without " + std::to_string(j),
                 diamond(conj(box(bs[i]), neg(bs[j]))));
      ck.require("push " + std::to_string(j) + " without " + std::to_string(i),
                 diamond(conj(neg(bs[i]), box(bs[j]))));
    }
  return std::move(ck).result();
}

std::vector<EqFormula> cross_wiring_buttons(std::size_t n) {
  auto u = [](std::size_t i) { return static_cast<int>(2 * i); };
  auto v = [](std::size_t i) { return static_cast<int>(2 * i + 1); };
  std::vector<EqFormula> rho;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      rho.push_back(eq::atom(u(j), u(k)));
      rho.push_back(eq::atom(u(j), v(k)));
      rho.push_back(eq::atom(v(j), v(k)));
    }
  std::vector<EqFormula> out;
  auto r = eq::big_or(rho);
  for (std::size_t i = 0; i < n; ++i) out.push_back(disj(eq::atom(u(i), v(i)), r));
  return out;
}

std::vector<EqFormula> sigma_dial(int k) {
  std::vector<EqFormula> d(1);
  std::vector<EqFormula> any;
  for (int i = 1; i <= k; ++i) {
    d.push_back(eq::card(i));
    any.push_back(eq::card(i));
  }
  d[0] = neg(eq::big_or(any));
  return d;
}

std::vector<EqFormula> at_most_ratchet(int n) {
  std::vector<EqFormula> r;
  for (int k = n; k >= 1; --k) r.push_back(expand_sigma(SigmaKind::AtMost, k, false));
  return r;
}

Labeling lollipop_labeling(std::size_t n) {
  if (n == 0) throw Error("lollipop labeling needs a nonempty cluster");
  Labeling l;
  l.frame = lollipop_frame(n);
  l.labels.push_back(eq::card(0));
  for (std::size_t i = 1; i < n; ++i) l.labels.push_back(eq::card(static_cast<int>(i)));
  l.labels.push_back(expand_sigma(SigmaKind::AtLeast, static_cast<int>(n), false));
  l.initial = 0;
  l.world = {{Morphisms::Functions, Regime::AllSets}, Size::finite(0), Lang::Sentential, std::nullopt};
  return l;
}

Labeling partition_labeling(std::size_t n) {
  Labeling l;
  l.frame = partition_lattice_frame(n);
  std::vector<int> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<int>(i);
  auto parts = enumerate_partitions(n);
  for (const auto& p : parts) l.labels.push_back(eq::partition_formula(p, vars));
  l.initial = static_cast<std::size_t>(
      std::find(parts.begin(), parts.end(), SetPartition::discrete(n)) - parts.begin());
  l.world = {{Morphisms::Surjections, Regime::AllSets}, Size::finite(static_cast<std::uint32_t>(n)),
             Lang::Formulaic, n};
  return l;
}

LabelingReport verify_labeling(const Labeling& l, std::size_t N) {
  LabelingReport rep;
  const auto& F = l.frame;
  if (l.labels.size() != F.size()) throw ArityError("one label per frame node required");
  if (l.initial >= F.size()) throw Error("initial node out of range");
  std::size_t m = named_count(l.world);
  if (N == 0) {
    for (const auto& f : l.labels) N = std::max(N, threshold(f));
    N += m + 1;
  }
  auto of = oracle_state_frame(l.world, N);
  const auto& O = of.frame;
  Regime r = l.world.cat.regime;

  // sat[x][u]: label u holds at oracle node x
  std::vector<std::vector<bool>> sat(O.size(), std::vector<bool>(F.size()));
  for (std::size_t x = 0; x < O.size(); ++x)
    for (std::size_t u = 0; u < F.size(); ++u) {
      std::optional<bool> value;
      for (Size s : of.nodes[x].representatives(r)) {
        bool v = evaluate_named(l.labels[u], l.world.cat, s, of.nodes[x].pattern);
        if (value && *value != v)
          rep.violations.push_back("label of " + F.label(u) + " is not constant on " + O.label(x));
        value = v;
      }
      sat[x][u] = *value;
    }

  if (!sat[of.root][l.initial])
    rep.violations.push_back("initial state does not satisfy the label of " + F.label(l.initial));
  for (std::size_t x = 0; x < O.size(); ++x) {
    auto count = std::count(sat[x].begin(), sat[x].end(), true);
    if (count != 1)
      rep.violations.push_back("state " + O.label(x) + " satisfies " + std::to_string(count) + " labels");
  }
  for (std::size_t u = 0; u < F.size(); ++u)
    for (std::size_t v = 0; v < F.size(); ++v) {
      bool all = true;
      for (std::size_t x = 0; x < O.size() && all; ++x) {
        if (!sat[x][u]) continue;
        bool some = false;
        for (std::size_t y : O.successors(x)) some = some || sat[y][v];
        all = some;
      }
      if (all != F.sees(u, v))
        rep.violations.push_back("order mismatch between " + F.label(u) + " and " + F.label(v) +
                                 ": frame says " + (F.sees(u, v) ? "sees" : "does not see"));
    }
  rep.valid = rep.violations.empty();
  return rep;
}

std::map<int, EqFormula> labeling_substitution(const Labeling& l, const Valuation& model,
                                               std::size_t N) {
  auto rep = verify_labeling(l, N);
  if (!rep.valid) throw Error("labeling does not verify: " + rep.violations.front());
  std::map<int, EqFormula> psi;
  for (std::size_t p = 0; p < model.size(); ++p) {
    if (model[p].size() != l.frame.size()) throw ArityError("valuation row has the wrong length");
    std::vector<EqFormula> parts;
    for (std::size_t u = 0; u < l.frame.size(); ++u)
      if (model[p][u]) parts.push_back(l.labels[u]);
    psi.emplace(static_cast<int>(p), eq::big_or(parts));
  }
  return psi;
}

}  // namespace modeq
