#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modeq/eqcard.hpp"
#include "modeq/frames.hpp"
#include "modeq/theories.hpp"

namespace modeq {

enum class Lang { Sentential, Formulaic };
std::string to_string(Lang l);
Lang parse_lang(const std::string& s);

struct WorldSpec {
  CategoryKind cat;
  Size size;
  Lang lang = Lang::Sentential;
  /// Parameter count. Unset: 0 for sentential, the size for finite formulaic
  /// worlds, 3 for infinite formulaic worlds.
  std::optional<std::size_t> named;
};

std::string to_string(const WorldSpec& w);
std::size_t named_count(const WorldSpec& w);
/// Throws RegimeError or Error when the spec does not describe a world.
void validate(const WorldSpec& w);

enum class Outcome { InValidities, NotInValidities };

struct FrameWitness {
  FiniteFrame frame;
  Countermodel countermodel;
};

struct Verdict {
  Outcome outcome = Outcome::InValidities;
  bool exact = false;
  std::size_t bound = 0;  // meaningful when !exact
  std::optional<FrameWitness> countermodel;
  /// prop index -> substituted formula
  std::optional<std::map<int, EqFormula>> substitution;

  /// "in-validities (exact)", "not-in-validities (bounded N=6)"
  std::string summary() const;
  std::string to_json() const;
};

TheoryId expected_theory(const WorldSpec& w);

/// Validity on every frame of the characteristic class. bound = 0 uses the
/// AST size of phi.
Verdict decide_in_theory(TheoryId t, const PropFormula& phi, std::size_t bound = 0,
                         std::uint64_t budget = 2'000'000);

/// A node of the oracle frame: a partition of the named tuple together with
/// either an exact size or the tail of all sizes whose excess over the block
/// count is above N - named (including omega where the regime has it).
struct OracleNode {
  SetPartition pattern;
  bool tail = false;
  std::uint32_t size = 0;  // exact size, or the least size of the tail

  /// Sizes standing for the node when evaluating formulas.
  std::vector<Size> representatives(Regime r) const;
  /// Formula over x0..x_{named-1} defining the node among reachable states.
  EqFormula defining_formula(Regime r) const;
  std::string label(Regime r) const;
};

struct OracleFrame {
  FiniteFrame frame;
  std::vector<OracleNode> nodes;
  std::size_t root = 0;
  std::size_t named = 0;
  std::size_t N = 0;
};

/// Reachable abstract states of the world, with every size whose excess is
/// above N - named folded into one tail node per partition.
OracleFrame oracle_state_frame(const WorldSpec& w, std::size_t N);

/// Default threshold: AST size + named + 1.
std::size_t default_threshold(const PropFormula& phi, std::size_t named);
/// Named count used for phi when the spec leaves it open: infinite formulaic
/// worlds get max(3, variables + 1).
std::size_t named_for(const WorldSpec& w, const PropFormula& phi);

/// Validity of phi at the initial state under every valuation of the oracle
/// frame. N = 0 uses default_threshold.
Verdict oracle_decide(const WorldSpec& w, const PropFormula& phi, std::size_t N = 0,
                      std::uint64_t budget = 2'000'000);

struct CorpusEntry {
  std::string name;
  PropFormula formula;
};

/// T, 4, 5, Grz, .2, .3, J1..J4, Triv.
std::vector<CorpusEntry> standard_corpus();

struct CellResult {
  std::string formula;
  std::optional<Verdict> theory;
  std::optional<Verdict> oracle;
  bool agree = false;
  std::string skipped;  // nonempty when a search ran out of budget
};

struct CellReport {
  WorldSpec world;
  TheoryId expected;
  std::vector<CellResult> results;
};

struct TableReport {
  std::vector<CellReport> cells;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t skipped = 0;

  std::string to_json() const;
  std::string to_text() const;
};

struct TableOptions {
  std::vector<std::uint32_t> sizes{0, 1, 2, 3, 4};
  bool include_omega = true;
  std::size_t N = 0;  // 0: per-formula default
  std::uint64_t budget = 2'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Every cell of the classification table (all morphism classes and regimes,
/// both substitution languages) against every corpus formula.
TableReport reproduce_table(const std::vector<CorpusEntry>& corpus, const TableOptions& opts = {});

}  // namespace modeq
