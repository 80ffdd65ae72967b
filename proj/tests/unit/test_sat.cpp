#include <doctest.h>

#include <random>

#include "modeq/sat.hpp"

using modeq::sat::Lit;
using modeq::sat::Result;
using modeq::sat::Solver;

namespace {

using Cnf = std::vector<std::vector<Lit>>;

bool satisfies(const Cnf& cnf, std::uint32_t assignment) {
  for (const auto& c : cnf) {
    bool ok = false;
    for (Lit l : c) {
      bool v = assignment >> (std::abs(l) - 1) & 1;
      if ((l > 0) == v) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

bool naive_sat(const Cnf& cnf, int n) {
  for (std::uint32_t a = 0; a < (1u << n); ++a)
    if (satisfies(cnf, a)) return true;
  return false;
}

Cnf pigeonhole(int holes) {
  int pigeons = holes + 1;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
  Cnf cnf;
  for (int p = 0; p < pigeons; ++p) {
    std::vector<Lit> c;
    for (int h = 0; h < holes; ++h) c.push_back(var(p, h));
    cnf.push_back(c);
  }
  for (int h = 0; h < holes; ++h)
    for (int p = 0; p < pigeons; ++p)
      for (int q = p + 1; q < pigeons; ++q) cnf.push_back({-var(p, h), -var(q, h)});
  return cnf;
}

}  // namespace

TEST_CASE("agrees with exhaustive enumeration on random CNF") {
  std::mt19937 rng(2024);
  int sat_count = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    int n = 3 + iter % 10;
    int m = static_cast<int>(n * (3.0 + (iter % 7) * 0.4));
    std::uniform_int_distribution<int> var(1, n), sign(0, 1), width(1, 4);
    Cnf cnf;
    for (int i = 0; i < m; ++i) {
      std::vector<Lit> c;
      int w = iter % 5 == 0 ? width(rng) : 3;
      for (int j = 0; j < w; ++j) c.push_back(sign(rng) ? var(rng) : -var(rng));
      cnf.push_back(c);
    }
    Solver s;
    for (int i = 0; i < n; ++i) s.new_var();
    for (const auto& c : cnf) s.add_clause(c);
    auto r = s.solve();
    bool expected = naive_sat(cnf, n);
    REQUIRE(r != Result::Unknown);
    CHECK((r == Result::Sat) == expected);
    if (r == Result::Sat) {
      ++sat_count;
      std::uint32_t a = 0;
      for (int v = 1; v <= n; ++v)
        if (s.value(v)) a |= 1u << (v - 1);
      CHECK(satisfies(cnf, a));
    }
  }
  CHECK(sat_count > 300);
  CHECK(sat_count < 2700);
}

TEST_CASE("empty and trivial instances") {
  Solver s;
  CHECK(s.solve() == Result::Sat);
  Solver t;
  int v = t.new_var();
  t.add_clause({v});
  t.add_clause({-v});
  CHECK(t.solve() == Result::Unsat);
  Solver u;
  u.new_var();
  u.add_clause({});
  CHECK(u.solve() == Result::Unsat);
}

TEST_CASE("pigeonhole is unsatisfiable and the budget is honored") {
  auto cnf = pigeonhole(6);
  Solver s;
  for (int i = 0; i < 42; ++i) s.new_var();
  for (const auto& c : cnf) s.add_clause(c);
  CHECK(s.solve() == Result::Unsat);

  Solver b;
  for (int i = 0; i < 72; ++i) b.new_var();
  for (const auto& c : pigeonhole(8)) b.add_clause(c);
  CHECK(b.solve(50) == Result::Unknown);
  CHECK(b.conflicts() >= 50);
}
