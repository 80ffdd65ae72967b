#include <doctest.h>

#include <functional>
#include <set>

#include "modeq/errors.hpp"
#include "modeq/partition.hpp"

using namespace modeq;

namespace {

// Equivalence relations on m points as sets of pairs, by brute force over
// all subsets of pairs.
std::size_t count_equivalence_relations(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back({i, j});
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) r[pairs[k].first][pairs[k].second] = r[pairs[k].second][pairs[k].first] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < m && transitive; ++a)
      for (std::size_t b = 0; b < m && transitive; ++b)
        for (std::size_t c = 0; c < m && transitive; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) transitive = false;
    count += transitive;
  }
  return count;
}

SetPartition P(const char* s) { return SetPartition::parse(s); }

}  // namespace

TEST_CASE("partition counts") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0].block_count() == 0);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == 15);
  for (std::size_t m = 0; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(enumerate_partitions(m).size() == count_equivalence_relations(m));
    CHECK(bell_number(m) == enumerate_partitions(m).size());
  }
  CHECK_THROWS_AS(enumerate_partitions(kMaxPartitionGround + 1), BoundError);
}

TEST_CASE("canonical form and text") {
  auto p = SetPartition::from_blocks(3, {{2, 1}, {0}});
  CHECK(p.to_string() == "{0}{1 2}");
  CHECK(p == P("{0}{2 1}"));
  CHECK(P("{}").ground_size() == 0);
  CHECK(P("").block_count() == 0);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(SetPartition::from_blocks(2, {{0, 1}, {1}}), Error);
  for (std::size_t m = 0; m <= 5; ++m)
    for (const auto& q : enumerate_partitions(m)) {
      CHECK(SetPartition::parse(q.to_string()) == q);
      for (const auto& b : q.blocks()) CHECK(std::is_sorted(b.begin(), b.end()));
    }
}

TEST_CASE("refines examples") {
  CHECK(refines(P("{0}{1}"), P("{0 1}")));
  CHECK(refines(P("{0 1}{2}"), P("{0 1}{2}")));
  CHECK_FALSE(refines(P("{0 1}{2}"), P("{0}{1 2}")));
}

TEST_CASE("refinement is a partial order") {
  for (std::size_t m = 0; m <= 5; ++m) {
    auto all = enumerate_partitions(m);
    for (const auto& a : all) {
      CHECK(refines(a, a));
      for (const auto& b : all) {
        if (refines(a, b) && refines(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
      }
    }
  }
}

TEST_CASE("coarsenings") {
  CHECK(coarsenings(P("{0}{1}")) == std::vector<SetPartition>{P("{0 1}"), P("{0}{1}")});
  CHECK(coarsenings(P("{0 1 2}")) == std::vector<SetPartition>{P("{0 1 2}")});
  CHECK(coarsenings(SetPartition::discrete(3)).size() == 5);
  for (std::size_t m = 0; m <= 5; ++m) {
    auto all = enumerate_partitions(m);
    for (const auto& p : all) {
      std::vector<SetPartition> expected;
      for (const auto& q : all)
        if (refines(p, q)) expected.push_back(q);
      CHECK(coarsenings(p) == expected);
    }
  }
}

TEST_CASE("kernel partition") {
  CHECK(kernel_partition(std::vector<char>{'a', 'a', 'b'}) == P("{0 1}{2}"));
  CHECK(kernel_partition(std::vector<char>{}) == SetPartition());
  CHECK(kernel_partition(std::vector<char>{'a', 'b', 'a', 'b'}) == P("{0 2}{1 3}"));
}

TEST_CASE("partition index") {
  const auto& idx = PartitionIndex::of(4);
  CHECK(idx.size() == 15);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index_of(idx.at(i)) == i);
}
