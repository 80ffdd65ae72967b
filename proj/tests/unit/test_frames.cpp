#include <doctest.h>

#include <algorithm>
#include <random>

#include "modeq/errors.hpp"
#include "modeq/frames.hpp"

using namespace modeq;

namespace {

PropFormula p(int i) { return prop::var(i); }

Valuation single(std::size_t n, std::vector<std::size_t> nodes) {
  Valuation v(1, std::vector<bool>(n));
  for (auto u : nodes) v[0][u] = true;
  return v;
}

PropFormula random_prop(std::mt19937& rng, int depth, int vars) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 0 : 7), var(0, vars - 1);
  switch (pick(rng)) {
    case 0: return p(var(rng));
    case 1: return neg(random_prop(rng, depth - 1, vars));
    case 2: return conj(random_prop(rng, depth - 1, vars), random_prop(rng, depth - 1, vars));
    case 3: return disj(random_prop(rng, depth - 1, vars), random_prop(rng, depth - 1, vars));
    case 4: return implies(random_prop(rng, depth - 1, vars), random_prop(rng, depth - 1, vars));
    case 5: return box(random_prop(rng, depth - 1, vars));
    default: return diamond(random_prop(rng, depth - 1, vars));
  }
}

/// Random reflexive-transitive relation.
FiniteFrame random_preorder(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution edge(0.3);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && edge(rng)) edges.push_back({u, v});
  return FiniteFrame(n, edges);
}

/// Every valuation of the first `vars` variables; counts nodes falsifying phi.
bool naive_valid(const FiniteFrame& f, const PropFormula& phi, int vars, std::optional<std::size_t> root) {
  std::size_t n = f.size();
  std::size_t bits = n * static_cast<std::size_t>(vars);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << bits); ++a) {
    Valuation v(vars, std::vector<bool>(n));
    for (int q = 0; q < vars; ++q)
      for (std::size_t u = 0; u < n; ++u) v[q][u] = a >> (q * n + u) & 1;
    auto t = truth_set(f, v, phi);
    if (root) {
      if (!t[*root]) return false;
    } else if (std::find(t.begin(), t.end(), false) != t.end()) {
      return false;
    }
  }
  return true;
}

bool valid(const FiniteFrame& f, const std::string& name, int n = 0) {
  return frame_valid(f, axiom(name, n)).valid;
}

bool preorder(const FiniteFrame& f) {
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (!f.sees(a, a)) return false;
    for (std::size_t b = 0; b < f.size(); ++b)
      for (std::size_t c = 0; c < f.size(); ++c)
        if (f.sees(a, b) && f.sees(b, c) && !f.sees(a, c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(partition_lattice_frame(3).size() == 5);
  auto c1 = chain_frame(1);
  CHECK(c1.size() == 1);
  CHECK(c1.sees(0, 0));
  auto l = lollipop_frame(2);
  REQUIRE(l.size() == 3);
  for (std::size_t v = 0; v < 3; ++v) CHECK(l.sees(0, v));
  CHECK(l.sees(1, 2));
  CHECK(l.sees(2, 1));
  CHECK_FALSE(l.sees(1, 0));
  CHECK_FALSE(l.sees(2, 0));
  CHECK(prepartition_frame(3, 2).size() == 10);
  CHECK(pretree_frame({0, 0, 0, 1}, {1, 2, 1, 3}).size() == 7);
  for (const auto& f : {chain_frame(4), cluster_frame(3), lollipop_frame(3), partition_lattice_frame(4),
                        prepartition_frame(3, 3), pretree_frame({0, 0, 1}, {2, 1, 2}),
                        inflate_clusters(chain_frame(3), 2)})
    CHECK(preorder(f));
}

TEST_CASE("relations must be preorders") {
  CHECK_THROWS_AS(FiniteFrame::from_relation({{true, true}, {false, false}}), Error);
  CHECK_THROWS_AS(FiniteFrame::from_relation({{true, true, false}, {false, true, true}, {false, false, true}}),
                  Error);
  CHECK_NOTHROW(FiniteFrame::from_relation({{true, true}, {false, true}}));
}

TEST_CASE("clusters") {
  auto f = lollipop_frame(3);
  REQUIRE(f.clusters().size() == 2);
  CHECK(f.clusters()[0] == std::vector<std::size_t>{0});
  CHECK(f.clusters()[1].size() == 3);
  CHECK(f.cluster_covers(0) == std::vector<std::size_t>{1});
  CHECK(f.cone(1).size() == 3);
}

TEST_CASE("poset enumeration") {
  std::vector<std::size_t> counts(6), directed(6);
  for (const auto& f : all_posets(5)) ++counts[f.size()];
  for (const auto& f : all_directed_posets(5)) ++directed[f.size()];
  CHECK(counts == std::vector<std::size_t>{0, 1, 2, 5, 16, 63});
  CHECK(directed == std::vector<std::size_t>{0, 1, 1, 2, 5, 16});
  CHECK_THROWS_AS(all_posets(6), BoundError);
}

TEST_CASE("isomorphism") {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto f = random_preorder(rng, 2 + i % 6);
    std::vector<std::size_t> perm(f.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < f.size(); ++u)
      for (std::size_t v = 0; v < f.size(); ++v)
        if (f.sees(u, v)) edges.push_back({perm[u], perm[v]});
    CHECK(isomorphic(f, FiniteFrame(f.size(), edges)));
  }
  CHECK_FALSE(isomorphic(chain_frame(3), lollipop_frame(2)));
  CHECK_FALSE(isomorphic(partition_lattice_frame(3), chain_frame(5)));
}

TEST_CASE("model_check examples") {
  CHECK(model_check(chain_frame(2), single(2, {1}), 0, diamond(p(0))));
  CHECK_FALSE(model_check(cluster_frame(2), single(2, {0}), 0, box(p(0))));
  auto l = lollipop_frame(1);
  auto v = single(2, {1});
  CHECK(model_check(l, v, 0, diamond(box(p(0)))));
  CHECK_FALSE(model_check(l, v, 0, p(0)));
  CHECK_FALSE(model_check(l, v, 0, axiom("5")));
  CHECK_THROWS_AS(model_check(l, v, 0, p(1)), ArityError);
}

TEST_CASE("axiom texts") {
  CHECK(to_string(axiom("J", 1)) == "<> [] p0 -> p0");
  CHECK(to_string(axiom("Grz")) == "[] ([] (p0 -> [] p0) -> p0) -> p0");
  CHECK(to_string(axiom("J", 2)) == "<> ([] p1 & ~(<> [] p0 -> p0)) -> p1");
  CHECK(to_string(axiom("T")) == "[] p0 -> p0");
  CHECK(to_string(axiom("4")) == "[] p0 -> [] [] p0");
  CHECK(to_string(axiom(".2")) == "<> [] p0 -> [] <> p0");
  CHECK(to_string(axiom("Triv")) == "[] p0 <-> p0");
  CHECK_THROWS_AS(axiom("J", 0), Error);
  CHECK_THROWS_AS(axiom("Q"), Error);
}

TEST_CASE("frame_valid examples") {
  CHECK(valid(chain_frame(3), ".3"));
  auto r = frame_valid(cluster_frame(2), axiom("Grz"));
  CHECK_FALSE(r.valid);
  REQUIRE(r.countermodel);
  CHECK_FALSE(model_check(cluster_frame(2), r.countermodel->valuation, r.countermodel->node, axiom("Grz")));
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) CHECK(valid(random_preorder(rng, 1 + i % 7), "T"));
  for (const char* a : {"K", "Dual", "4"}) CHECK(valid(partition_lattice_frame(4), a));
}

TEST_CASE("frame characterizations") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto c = chain_frame(n);
    CHECK(valid(c, "Grz"));
    CHECK(valid(c, ".3"));
    CHECK(valid(c, "J", static_cast<int>(n)));
    CHECK_FALSE(valid(c, "J", static_cast<int>(n) - 1));
  }
  auto pl = partition_lattice_frame(3);
  CHECK(valid(pl, "Grz"));
  CHECK(valid(pl, ".2"));
  CHECK_FALSE(valid(pl, ".3"));
  for (std::size_t k = 2; k <= 4; ++k) {
    CHECK(valid(cluster_frame(k), "5"));
    CHECK_FALSE(valid(cluster_frame(k), "Grz"));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(valid(lollipop_frame(k), "4"));
    CHECK(valid(lollipop_frame(k), "T"));
    CHECK_FALSE(valid(lollipop_frame(k), "5"));
  }
  CHECK(valid(chain_frame(1), "Triv"));
  CHECK_FALSE(valid(chain_frame(2), "Triv"));
}

TEST_CASE("frame_valid agrees with exhaustive valuation search") {
  std::mt19937 rng(42);
  int invalid = 0;
  for (int i = 0; i < 400; ++i) {
    std::size_t n = 1 + i % 6;
    int vars = 1 + static_cast<int>(i / 6 % 3);
    while (n * static_cast<std::size_t>(vars) > 12) --vars;
    auto f = random_preorder(rng, n);
    auto phi = random_prop(rng, 1 + i % 4, vars);
    std::optional<std::size_t> root;
    if (i % 3 == 0) root = static_cast<std::size_t>(i) % n;
    FrameCheckOptions opts;
    opts.root = root;
    auto r = frame_valid(f, phi, opts);
    CAPTURE(to_string(phi));
    CHECK(r.valid == naive_valid(f, phi, vars, root));
    if (!r.valid) {
      ++invalid;
      REQUIRE(r.countermodel);
      if (root) CHECK(r.countermodel->node == *root);
      CHECK_FALSE(model_check(f, r.countermodel->valuation, r.countermodel->node, phi));
    }
  }
  CHECK(invalid > 50);
  // a few at the size limit
  for (int i = 0; i < 6; ++i) {
    auto f = random_preorder(rng, 4);
    auto phi = random_prop(rng, 3, 4);
    CHECK(frame_valid(f, phi).valid == naive_valid(f, phi, 4, std::nullopt));
  }
  for (const char* a : {"5", "Grz", ".2", ".3"})
    CHECK(frame_valid(inflate_clusters(chain_frame(2), 4), axiom(a)).valid ==
          naive_valid(inflate_clusters(chain_frame(2), 4), axiom(a), a == std::string(".3") ? 2 : 1,
                      std::nullopt));
}

TEST_CASE("json output") {
  auto j = lollipop_frame(1).to_json();
  CHECK(j.find("\"relation\"") != std::string::npos);
  auto r = frame_valid(lollipop_frame(1), axiom("5"));
  REQUIRE(r.countermodel);
  auto c = countermodel_json(*r.countermodel, lollipop_frame(1));
  CHECK(c.find("\"node\":\"root\"") != std::string::npos);
  CHECK(c.find("\"p0\"") != std::string::npos);
}
