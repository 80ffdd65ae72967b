#include <doctest.h>

#include "corpus.hpp"
#include "labeling_closure.hpp"
#include "modeq/control.hpp"
#include "modeq/errors.hpp"

using namespace modeq;

namespace {

WorldSpec W(Morphisms m, Size s, Lang l = Lang::Sentential, std::optional<std::size_t> named = std::nullopt,
            Regime r = Regime::AllSets) {
  return {{m, r}, s, l, named};
}

bool holds(ControlKind k, std::vector<EqFormula> fs, const WorldSpec& w) {
  return check_control({k, std::move(fs), w}).holds;
}

std::vector<EqFormula> two_variable_formulas(int max_size) {
  auto g = corpus::two_variable_grammar(2);
  std::vector<EqFormula> out;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& f : corpus::literal_level(g, n)) out.push_back(f);
  return out;
}

std::vector<WorldSpec> named_worlds() {
  std::vector<WorldSpec> out;
  for (auto m : kAllMorphisms) {
    for (std::uint32_t n = 2; n <= 4; ++n) out.push_back(W(m, Size::finite(n), Lang::Formulaic, 2));
    out.push_back(W(m, Size::omega(), Lang::Formulaic, 2));
    out.push_back(W(m, Size::omega(), Lang::Formulaic, 2, Regime::InfiniteOnly));
  }
  return out;
}

}  // namespace

TEST_CASE("kinds") {
  for (auto k : {ControlKind::WeakButton, ControlKind::Button, ControlKind::PureButton, ControlKind::Switch,
                 ControlKind::Dial, ControlKind::Ratchet, ControlKind::Penultimate,
                 ControlKind::IndependentButtons})
    CHECK(parse_control_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_control_kind("lever"), Error);
}

TEST_CASE("buttons") {
  auto w = W(Morphisms::Surjections, Size::finite(4), Lang::Formulaic, 2);
  CHECK(holds(ControlKind::PureButton, {eq::atom(0, 1)}, w));
  CHECK_FALSE(holds(ControlKind::PureButton, {neg(eq::atom(0, 1))}, w));
  auto r = check_control({ControlKind::PureButton, {eq::atom(0, 1)}, w});
  CHECK(r.certificate.size() == 2);
  CHECK(r.to_json().find("\"holds\": true") != std::string::npos);
}

TEST_CASE("independent buttons") {
  auto fam = cross_wiring_buttons(2);
  REQUIRE(fam.size() == 2);
  CHECK(to_string(fam[0]).find("x0 = x1") != std::string::npos);
  auto w = W(Morphisms::Surjections, Size::finite(5), Lang::Formulaic, 4);
  CHECK(independent_buttons(fam, w).holds);
  CHECK(holds(ControlKind::PureButton, fam, w));
  CHECK_FALSE(independent_buttons({eq::atom(0, 1), eq::atom(0, 1)}, w).holds);
  auto f3 = W(Morphisms::Functions, Size::finite(3));
  CHECK_FALSE(independent_buttons({parse_eq("card >= 2"), parse_eq("card <= 2")}, f3).holds);
  CHECK_FALSE(independent_buttons({eq::card(1), eq::card(2)}, f3).holds);
  CHECK_THROWS_AS(independent_buttons({eq::atom(0, 1)}, w), ArityError);
  CHECK_THROWS_AS(holds(ControlKind::Button, {eq::atom(0, 7)}, w), ArityError);
  CHECK_THROWS_AS(holds(ControlKind::Dial, {}, w), ArityError);
}

TEST_CASE("dials ratchets switches penultimates") {
  auto d = sigma_dial(3);
  REQUIRE(d.size() == 4);
  CHECK(holds(ControlKind::Dial, d, W(Morphisms::Functions, Size::finite(2))));
  CHECK_FALSE(holds(ControlKind::Dial, d, W(Morphisms::Surjections, Size::finite(2))));
  CHECK_FALSE(holds(ControlKind::Dial, {eq::card(1), eq::card(2)}, W(Morphisms::Functions, Size::finite(2))));

  auto omega = W(Morphisms::Surjections, Size::omega());
  for (int n = 1; n <= 4; ++n) CHECK(holds(ControlKind::Ratchet, at_most_ratchet(n), omega));
  auto rev = at_most_ratchet(3);
  std::reverse(rev.begin(), rev.end());
  CHECK_FALSE(holds(ControlKind::Ratchet, rev, omega));
  CHECK_FALSE(holds(ControlKind::Ratchet, at_most_ratchet(3), W(Morphisms::Functions, Size::omega())));

  CHECK(holds(ControlKind::Switch, {eq::card(1)}, W(Morphisms::Functions, Size::finite(2))));
  CHECK_FALSE(holds(ControlKind::Switch, {eq::card(2)}, omega));

  CHECK(holds(ControlKind::Penultimate, {parse_eq("card >= 3")}, omega));
  CHECK_FALSE(holds(ControlKind::Penultimate, {eq::card(2)}, W(Morphisms::Functions, Size::finite(2))));
}

TEST_CASE("button hierarchy") {
  auto fs = two_variable_formulas(4);
  for (const auto& w : named_worlds())
    for (const auto& f : fs) {
      bool pure = holds(ControlKind::PureButton, {f}, w);
      bool button = holds(ControlKind::Button, {f}, w);
      bool weak = holds(ControlKind::WeakButton, {f}, w);
      CHECK((!pure || button));
      CHECK((!button || weak));
    }
}

TEST_CASE("weak buttons are buttons where .2 is valid") {
  auto fs = two_variable_formulas(4);
  int worlds = 0;
  for (const auto& w : named_worlds()) {
    if (oracle_decide(w, axiom(".2")).outcome != Outcome::InValidities) continue;
    ++worlds;
    for (const auto& f : fs)
      if (holds(ControlKind::WeakButton, {f}, w)) CHECK(holds(ControlKind::Button, {f}, w));
  }
  CHECK(worlds > 10);
}

TEST_CASE("labelings verify") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(verify_labeling(lollipop_labeling(n)).valid);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(verify_labeling(partition_labeling(n)).valid);
  CHECK_THROWS_AS(lollipop_labeling(0), Error);

  auto swapped = lollipop_labeling(2);
  std::swap(swapped.labels[0], swapped.labels[1]);
  auto rep = verify_labeling(swapped);
  CHECK_FALSE(rep.valid);
  bool order = false;
  for (const auto& v : rep.violations) order = order || v.find("order mismatch") != std::string::npos;
  CHECK(order);

  auto wrong_world = partition_labeling(3);
  wrong_world.world.cat.morphisms = Morphisms::Injections;
  CHECK_FALSE(verify_labeling(wrong_world).valid);
}

TEST_CASE("labeling substitution") {
  auto l = partition_labeling(2);
  REQUIRE(l.frame.size() == 2);
  std::size_t top = l.frame.label(0) == "{0 1}" ? 0 : 1;
  Valuation v(1, std::vector<bool>(2));
  v[0][top] = true;
  auto psi = labeling_substitution(l, v);
  CHECK(psi.at(0) == eq::partition_formula(SetPartition::parse("{0 1}"), {0, 1}));
  auto pos = SetPartition::discrete(2);
  CHECK(model_check(l.frame, v, l.initial, diamond(prop::var(0))) ==
        evaluate_named(diamond(psi.at(0)), l.world.cat, l.world.size, pos));

  Valuation none(1, std::vector<bool>(2));
  CHECK(labeling_substitution(l, none).at(0) == eq::falsum());

  auto lol = lollipop_labeling(3);
  Valuation all(1, std::vector<bool>(lol.frame.size(), true));
  auto every = labeling_substitution(lol, all).at(0);
  auto of = oracle_state_frame(lol.world, 8);
  for (const auto& node : of.nodes)
    for (Size s : node.representatives(lol.world.cat.regime))
      CHECK(evaluate_named(every, lol.world.cat, s, node.pattern));

  auto bad = lollipop_labeling(2);
  std::swap(bad.labels[0], bad.labels[2]);
  CHECK_THROWS_AS(labeling_substitution(bad, Valuation(1, std::vector<bool>(3))), Error);
}

TEST_CASE("labeling contract on small labelings") {
  for (const auto& l : {lollipop_labeling(1), lollipop_labeling(2), partition_labeling(2)}) {
    auto rep = closure::check(l, 2, 3);
    CAPTURE(rep.first_failure);
    CHECK(rep.failures == 0);
    CHECK(rep.valuations == (std::size_t{1} << (2 * l.frame.size())));
  }
}
