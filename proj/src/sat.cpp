#include "modeq/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace modeq::sat {

namespace {

std::uint64_t luby(std::uint64_t i) {
  std::uint64_t size = 1, seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  std::uint64_t x = i;
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::uint64_t{1} << seq;
}

}  // namespace

int Solver::new_var() {
  int v = num_vars();
  assign_.push_back(-1);
  level_.push_back(0);
  reason_.push_back(-1);
  phase_.push_back(0);
  activity_.push_back(0.0);
  seen_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v + 1;
}

int Solver::lit_value(int c) const {
  int a = assign_[c >> 1];
  if (a < 0) return -1;
  return a ^ (c & 1);
}

void Solver::enqueue(int c, int reason) {
  int v = c >> 1;
  assign_[v] = static_cast<std::int8_t>((c & 1) ^ 1);
  level_[v] = static_cast<int>(trail_lim_.size());
  reason_[v] = reason;
  trail_.push_back(c);
}

int Solver::attach(std::vector<int> lits, bool learnt, int lbd) {
  int ci = static_cast<int>(clauses_.size());
  watches_[lits[0]].push_back(ci);
  watches_[lits[1]].push_back(ci);
  clauses_.push_back({std::move(lits), learnt, false, lbd});
  if (learnt) ++learnt_count_;
  return ci;
}

void Solver::add_clause(const std::vector<Lit>& in) {
  if (solved_) throw std::logic_error("sat: clause added after solve");
  if (unsat_) return;
  std::vector<int> c;
  for (Lit l : in) {
    if (l == 0 || std::abs(l) > num_vars()) throw std::out_of_range("sat: bad literal");
    c.push_back(code(l));
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<int> kept;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i + 1 < c.size() && (c[i] ^ 1) == c[i + 1]) return;  // tautology
    int val = lit_value(c[i]);
    if (val == 1) return;
    if (val == -1) kept.push_back(c[i]);
  }
  if (kept.empty()) {
    unsat_ = true;
  } else if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) unsat_ = true;
  } else {
    attach(std::move(kept), false, 0);
  }
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    int p = trail_[qhead_++];
    int fl = p ^ 1;
    auto& ws = watches_[fl];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      int ci = ws[i++];
      Clause& c = clauses_[ci];
      if (c.deleted) continue;
      if (c.lits[0] == fl) std::swap(c.lits[0], c.lits[1]);
      if (lit_value(c.lits[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.lits.size(); ++k) {
        if (lit_value(c.lits[k]) != 0) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[c.lits[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (lit_value(c.lits[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c.lits[0], ci);
    }
    ws.resize(j);
  }
  return -1;
}

bool Solver::redundant(int c) const {
  int r = reason_[c >> 1];
  if (r < 0) return false;
  for (std::size_t k = 1; k < clauses_[r].lits.size(); ++k) {
    int v = clauses_[r].lits[k] >> 1;
    if (!seen_[v] && level_[v] > 0) return false;
  }
  return true;
}

void Solver::analyze(int confl, std::vector<int>& learnt, int& back_level, int& lbd) {
  learnt.assign(1, -1);
  int path = 0;
  int p = -1;
  int idx = static_cast<int>(trail_.size()) - 1;
  int current = static_cast<int>(trail_lim_.size());
  do {
    const Clause& c = clauses_[confl];
    for (std::size_t k = (p < 0 ? 0 : 1); k < c.lits.size(); ++k) {
      int q = c.lits[k];
      int v = q >> 1;
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= current)
        ++path;
      else
        learnt.push_back(q);
    }
    while (!seen_[trail_[idx] >> 1]) --idx;
    p = trail_[idx--];
    confl = reason_[p >> 1];
    seen_[p >> 1] = 0;
    --path;
  } while (path > 0);
  learnt[0] = p ^ 1;

  std::vector<int> all(learnt.begin() + 1, learnt.end());
  std::size_t j = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i)
    if (!redundant(learnt[i])) learnt[j++] = learnt[i];
  learnt.resize(j);
  for (int q : all) seen_[q >> 1] = 0;

  back_level = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i)
      if (level_[learnt[i] >> 1] > level_[learnt[best] >> 1]) best = i;
    std::swap(learnt[1], learnt[best]);
    back_level = level_[learnt[1] >> 1];
  }
  std::vector<int> levels;
  for (int q : learnt) levels.push_back(level_[q >> 1]);
  std::sort(levels.begin(), levels.end());
  lbd = static_cast<int>(std::unique(levels.begin(), levels.end()) - levels.begin());
}

void Solver::backtrack(int level) {
  if (static_cast<int>(trail_lim_.size()) <= level) return;
  for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[level]; --i) {
    int v = trail_[i] >> 1;
    phase_[v] = assign_[v];
    assign_[v] = -1;
    reason_[v] = -1;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

void Solver::bump(int v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
}

void Solver::heap_insert(int v) {
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_pos_[v]);
}

void Solver::heap_up(int i) {
  int v = heap_[i];
  while (i > 0) {
    int parent = (i - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = i;
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = i;
}

void Solver::heap_down(int i) {
  int v = heap_[i];
  int n = static_cast<int>(heap_.size());
  while (true) {
    int child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[i] = heap_[child];
    heap_pos_[heap_[i]] = i;
    i = child;
  }
  heap_[i] = v;
  heap_pos_[v] = i;
}

int Solver::heap_pop() {
  int v = heap_[0];
  heap_pos_[v] = -1;
  int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return v;
}

int Solver::pick_branch() {
  while (!heap_.empty()) {
    int v = heap_pop();
    if (assign_[v] < 0) return 2 * v + (phase_[v] == 1 ? 0 : 1);
  }
  return -1;
}

bool Solver::locked(int ci) const {
  const Clause& c = clauses_[ci];
  int v = c.lits[0] >> 1;
  return reason_[v] == ci && lit_value(c.lits[0]) == 1;
}

void Solver::reduce_db() {
  std::vector<int> cand;
  for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
    const Clause& c = clauses_[ci];
    if (c.learnt && !c.deleted && c.lbd > 2 && !locked(ci)) cand.push_back(ci);
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return clauses_[a].lbd > clauses_[b].lbd; });
  for (std::size_t i = 0; i < cand.size() / 2; ++i) {
    Clause& c = clauses_[cand[i]];
    c.deleted = true;
    c.lits.clear();
    c.lits.shrink_to_fit();
    --learnt_count_;
  }
}

Result Solver::solve(std::uint64_t budget) {
  solved_ = true;
  if (unsat_) return Result::Unsat;
  if (propagate() >= 0) return Result::Unsat;
  max_learnts_ = std::max<std::size_t>(2000, clauses_.size() / 3);
  std::uint64_t start = conflicts_;
  std::vector<int> learnt;
  for (std::uint64_t restart = 0;; ++restart) {
    std::uint64_t limit = 100 * luby(restart);
    std::uint64_t here = 0;
    while (true) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts_;
        ++here;
        if (trail_lim_.empty()) return Result::Unsat;
        int back, lbd;
        analyze(confl, learnt, back, lbd);
        backtrack(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          int ci = attach(learnt, true, lbd);
          enqueue(learnt[0], ci);
        }
        var_inc_ /= 0.95;
        if (budget && conflicts_ - start >= budget) {
          backtrack(0);
          return Result::Unknown;
        }
      } else {
        if (here >= limit) {
          backtrack(0);
          break;
        }
        if (learnt_count_ > max_learnts_) {
          reduce_db();
          max_learnts_ += max_learnts_ / 10;
        }
        int d = pick_branch();
        if (d < 0) return Result::Sat;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(d, -1);
      }
    }
  }
}

bool Solver::value(int var) const { return assign_.at(var - 1) == 1; }

}  // namespace modeq::sat
