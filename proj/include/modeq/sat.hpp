#pragma once

#include <cstdint>
#include <vector>

namespace modeq::sat {

/// Literals in DIMACS convention: +v or -v for a variable v >= 1.
using Lit = int;

enum class Result { Sat, Unsat, Unknown };

/// Conflict-driven clause learning: two watched literals, first-UIP learning,
/// activity-ordered decisions with phase saving, Luby restarts.
class Solver {
 public:
  int new_var();
  int num_vars() const { return static_cast<int>(assign_.size()); }

  /// Clauses may only be added before the first solve.
  void add_clause(const std::vector<Lit>& lits);

  /// conflict_budget = 0 means unlimited; Unknown when it runs out.
  Result solve(std::uint64_t conflict_budget = 0);

  /// Model value after Sat.
  bool value(int var) const;
  std::uint64_t conflicts() const { return conflicts_; }

 private:
  struct Clause {
    std::vector<int> lits;
    bool learnt = false;
    bool deleted = false;
    int lbd = 0;
  };

  static int code(Lit l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
  int lit_value(int c) const;  // 1 true, 0 false, -1 unassigned
  void enqueue(int c, int reason);
  int propagate();
  void analyze(int confl, std::vector<int>& learnt, int& back_level, int& lbd);
  bool redundant(int c) const;
  void backtrack(int level);
  int pick_branch();
  void bump(int var);
  void reduce_db();
  bool locked(int ci) const;
  int attach(std::vector<int> lits, bool learnt, int lbd);

  void heap_insert(int v);
  void heap_up(int i);
  void heap_down(int i);
  int heap_pop();

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assign_;  // -1 unassigned
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<std::int8_t> phase_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  double var_inc_ = 1.0;
  bool unsat_ = false;
  bool solved_ = false;
  std::uint64_t conflicts_ = 0;
  std::size_t learnt_count_ = 0;
  std::size_t max_learnts_ = 0;
};

}  // namespace modeq::sat
