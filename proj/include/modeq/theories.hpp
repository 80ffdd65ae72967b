#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modeq/frames.hpp"

namespace modeq {

enum class Theory {
  S4, S4_2, S4_3, S4_3J, S5, Grz, Grz_2, Grz_3, Grz_3J, Triv, Lollipop, Partition, Prepartition
};

struct TheoryId {
  Theory kind = Theory::Triv;
  int n = 0;  // only for S4.3J, Grz.3J, Partition, Prepartition
  friend bool operator==(const TheoryId&, const TheoryId&) = default;
  friend auto operator<=>(const TheoryId&, const TheoryId&) = default;
};

/// "Grz.3J(3)", "Partition(2)", "S4.2", ...
std::string to_string(TheoryId t);
TheoryId parse_theory(const std::string& s);

enum class FamilyMode { FinitelyManyFrames, BoundedFamily };

struct TheoryInfo {
  TheoryId id;
  /// (axiom name, index) pairs on top of K; empty for the theories given
  /// only by a frame class.
  std::vector<std::pair<std::string, int>> axioms;
  FamilyMode mode;
  std::string frames;  // description of the characteristic class
};

TheoryInfo theory_info(TheoryId t);
std::vector<TheoryId> all_theories(int max_index);

/// Frames of the characteristic class for a formula with `vars` variables,
/// with chains, clusters and posets limited by `bound`. Clusters never exceed
/// 2^vars nodes.
std::vector<FiniteFrame> characteristic_frames(TheoryId t, std::size_t bound, int vars);

}  // namespace modeq
