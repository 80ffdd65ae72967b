#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "modeq/frames.hpp"
#include "modeq/validity.hpp"

namespace modeq {

enum class ControlKind {
  WeakButton, Button, PureButton, Switch, Dial, Ratchet, Penultimate, IndependentButtons
};

std::string to_string(ControlKind k);
/// weak_button, button, pure_button, switch, dial, ratchet, penultimate,
/// independent_buttons
ControlKind parse_control_kind(const std::string& s);

struct ControlClaim {
  ControlKind kind;
  std::vector<EqFormula> formulas;
  WorldSpec world;
};

struct CertificateLine {
  std::string condition;
  EqFormula formula;
  bool value = false;
};

struct ControlResult {
  bool holds = true;
  std::vector<CertificateLine> certificate;
  std::string to_json() const;
};

/// Truth of f at the world, parameters x0..x_{named-1} pairwise distinct.
bool holds_at(const EqFormula& f, const WorldSpec& w);

/// Evaluates the defining modal conditions of the claim at its world. Dials
/// and ratchets treat the formula list as one family; the other kinds check
/// every formula.
ControlResult check_control(const ControlClaim& c);
ControlResult independent_buttons(const std::vector<EqFormula>& bs, const WorldSpec& w);

/// b_i = (u_i = v_i) | rho with u_i = x_{2i-2}, v_i = x_{2i-1}, where rho says
/// some u_j or v_j is identified with a parameter of another pair.
std::vector<EqFormula> cross_wiring_buttons(std::size_t n);
/// d_0 = no d_i below holds, d_i = card = i for 1 <= i <= k.
std::vector<EqFormula> sigma_dial(int k);
/// r_1..r_n = card <= n, card <= n-1, ..., card <= 1.
std::vector<EqFormula> at_most_ratchet(int n);

struct Labeling {
  FiniteFrame frame;
  std::vector<EqFormula> labels;  // one per node
  std::size_t initial = 0;
  WorldSpec world;
};

/// Lollipop(n) for the empty world under functions: the root gets card = 0,
/// cluster node i < n gets card = i, the last gets card >= n.
Labeling lollipop_labeling(std::size_t n);
/// The partition lattice of n for the fully named n-element world under
/// surjections: node P gets the pattern formula P(x0..x_{n-1}).
Labeling partition_labeling(std::size_t n);

struct LabelingReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks the labeling conditions over the oracle state frame of the world.
/// N = 0 uses the largest label threshold + named + 1.
LabelingReport verify_labeling(const Labeling& l, std::size_t N = 0);

/// psi_p = disjunction of the labels of the nodes where p holds. Throws Error
/// when the labeling does not verify.
std::map<int, EqFormula> labeling_substitution(const Labeling& l, const Valuation& model,
                                               std::size_t N = 0);

}  // namespace modeq
