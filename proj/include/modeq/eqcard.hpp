#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modeq/formula.hpp"
#include "modeq/partition.hpp"

namespace modeq {

enum class Morphisms { Functions, Surjections, Injections, Inclusions, Bijections, Identities };
enum class Regime { AllSets, FiniteOnly, InfiniteOnly };

struct CategoryKind {
  Morphisms morphisms = Morphisms::Functions;
  Regime regime = Regime::AllSets;
  friend bool operator==(const CategoryKind&, const CategoryKind&) = default;
};

inline constexpr Morphisms kAllMorphisms[] = {
    Morphisms::Functions,  Morphisms::Surjections, Morphisms::Injections,
    Morphisms::Inclusions, Morphisms::Bijections,  Morphisms::Identities};
inline constexpr Regime kAllRegimes[] = {Regime::AllSets, Regime::FiniteOnly,
                                         Regime::InfiniteOnly};

std::string to_string(Morphisms m);
std::string to_string(Regime r);
std::string to_string(CategoryKind c);
Morphisms parse_morphisms(const std::string& s);
/// Accepts all|fin|inf.
Regime parse_regime(const std::string& s);

/// A world size: a natural number or the single abstract infinite size omega.
class Size {
 public:
  static constexpr std::uint32_t kOmega = 0xffffffffu;

  constexpr Size() = default;
  static constexpr Size finite(std::uint32_t n) { return Size(n); }
  static constexpr Size omega() { return Size(kOmega); }
  static Size parse(const std::string& s);

  constexpr bool is_omega() const { return v_ == kOmega; }
  constexpr std::uint32_t n() const { return v_; }
  std::string to_string() const;

  friend constexpr bool operator==(Size, Size) = default;
  friend constexpr auto operator<=>(Size a, Size b) { return a.v_ <=> b.v_; }

 private:
  explicit constexpr Size(std::uint32_t v) : v_(v) {}
  std::uint32_t v_ = 0;
};

struct AbstractState {
  SetPartition pattern;
  Size size;
  friend bool operator==(const AbstractState&, const AbstractState&) = default;
};

std::string to_string(const AbstractState& s);

/// Does some morphism of the category carry a world in `from` to one in `to`?
/// Throws RegimeError for states outside the regime or unrealizable states,
/// ArityError for mismatched tuple lengths.
bool can_step(CategoryKind cat, const AbstractState& from, const AbstractState& to);

/// States (Q, t) with t in {0..N}, plus omega outside FiniteOnly, reachable by
/// one step. Throws BoundError when N is smaller than the tuple length.
std::vector<AbstractState> successors(CategoryKind cat, const AbstractState& from,
                                      std::size_t N);

/// distinct variable indices + largest card index + 1.
std::size_t threshold(const EqFormula& f);

/// Truth table of a formula over (partition of its free variables, size).
class EqCardTable {
 public:
  EqCardTable(std::vector<int> vars, std::size_t N, std::size_t stable_from, Regime regime,
              std::vector<std::vector<std::uint8_t>> values);

  /// Free variables, ascending; position i of a pattern is vars()[i].
  const std::vector<int>& vars() const { return vars_; }
  std::size_t m() const { return vars_.size(); }
  std::size_t N() const { return N_; }
  /// Every size above this bound takes the tail value.
  std::size_t stable_from() const { return stable_; }
  Regime regime() const { return regime_; }
  bool has_entries() const { return regime_ != Regime::InfiniteOnly; }

  /// Sizes above N read the tail. Throws for unrealizable states or sizes
  /// outside the regime.
  bool value(const SetPartition& p, Size s) const;
  bool value_at(std::size_t part_index, Size s) const;
  bool entry(std::size_t part_index, std::size_t s) const;
  bool tail(std::size_t part_index) const;
  bool tail(const SetPartition& p) const;

  friend bool operator==(const EqCardTable&, const EqCardTable&) = default;

 private:
  std::vector<int> vars_;
  std::size_t N_;
  std::size_t stable_;
  Regime regime_;
  // values_[part][s] for s in 0..N, values_[part][N+1] = tail.
  std::vector<std::vector<std::uint8_t>> values_;
};

/// Simultaneous modality and quantifier elimination. Tables are memoized per
/// (formula, category). `slack` raises every internal threshold; used to
/// recompute a table independently for stability checks.
std::shared_ptr<const EqCardTable> eliminate(const EqFormula& f, CategoryKind cat,
                                             std::size_t slack = 0);

/// Pattern is over the free variables of f in ascending order.
bool evaluate(const EqFormula& f, CategoryKind cat, Size size, const SetPartition& pattern);

/// Pattern is over x0..x_{m-1}; every free variable of f must be below m.
bool evaluate_named(const EqFormula& f, CategoryKind cat, Size size,
                    const SetPartition& pattern);

/// Quantifier-free, modality-free equivalent of the table.
EqFormula to_normal_formula(const EqCardTable& t);

std::string table_json(const EqCardTable& t);

void clear_elimination_cache();

}  // namespace modeq
