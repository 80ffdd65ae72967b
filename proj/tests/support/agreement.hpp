#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modeq/eqcard.hpp"

namespace agreement {

struct Report {
  modeq::CategoryKind cat;
  std::vector<std::size_t> generated;  // per AST size
  std::vector<std::size_t> classes;
  std::size_t checked_states = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::size_t stability_failures = 0;
  std::string first_stability_failure;
  std::size_t triv_failures = 0;
  std::string first_triv_failure;
};

/// Eliminator against brute-force semantics on every formula of AST size
/// <= max_size over x0, x1 with card indices <= max_card, taken modulo
/// compositional semantic equivalence. Optionally also compares each formula
/// with its modality erasure.
Report check(modeq::CategoryKind cat, int max_size, int max_card, bool trivialization);

}  // namespace agreement
