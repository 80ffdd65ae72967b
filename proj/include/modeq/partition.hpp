#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modeq {

/// Largest ground set accepted by the enumeration routines (Bell(8) = 4140).
inline constexpr std::size_t kMaxPartitionGround = 8;

/// A partition of {0, ..., m-1}.
///
/// Stored as a restricted growth string: rgs[i] is the index of the block
/// containing i, with blocks numbered in order of their minimum element. This
/// makes the canonical block ordering and structural equality coincide.
class SetPartition {
 public:
  /// The unique partition of the empty set.
  SetPartition() = default;

  static SetPartition discrete(std::size_t m);
  static SetPartition single_block(std::size_t m);

  /// Blocks must be nonempty, disjoint and cover {0..m-1}; any order accepted.
  static SetPartition from_blocks(std::size_t m,
                                  const std::vector<std::vector<int>>& blocks);

  /// Any labelling of positions by block ids; ids are renumbered canonically.
  static SetPartition from_labels(std::span<const int> labels);

  /// Parses the text form "{0 1}{2}". "{}" and "" denote the empty partition.
  static SetPartition parse(std::string_view text);

  std::size_t ground_size() const noexcept { return rgs_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }

  int block_of(std::size_t i) const { return rgs_.at(i); }
  bool same_block(std::size_t i, std::size_t j) const {
    return rgs_.at(i) == rgs_.at(j);
  }

  const std::vector<std::uint8_t>& rgs() const noexcept { return rgs_; }
  std::vector<std::vector<int>> blocks() const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend std::strong_ordering operator<=>(const SetPartition& a,
                                          const SetPartition& b) {
    if (auto c = a.rgs_.size() <=> b.rgs_.size(); c != 0) return c;
    return a.rgs_ <=> b.rgs_;
  }

 private:
  explicit SetPartition(std::vector<std::uint8_t> rgs);

  std::vector<std::uint8_t> rgs_;
  std::size_t blocks_ = 0;
};

/// All partitions of {0..m-1} in canonical (lexicographic RGS) order.
/// Throws BoundError when m > kMaxPartitionGround.
std::vector<SetPartition> enumerate_partitions(std::size_t m);

/// P <= Q: every block of P lies inside a block of Q.
bool refines(const SetPartition& p, const SetPartition& q);

/// Every Q with P <= Q, in canonical order.
std::vector<SetPartition> coarsenings(const SetPartition& p);

/// Positions i, j share a block iff values[i] == values[j].
template <class T>
SetPartition kernel_partition(std::span<const T> values) {
  std::vector<int> labels(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    labels[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j) {
      if (values[j] == values[i]) {
        labels[i] = labels[j];
        break;
      }
    }
  }
  return SetPartition::from_labels(labels);
}

template <class T>
SetPartition kernel_partition(const std::vector<T>& values) {
  return kernel_partition(std::span<const T>(values));
}

/// The partition induced on the listed positions (in the listed order).
SetPartition restrict_to(const SetPartition& p,
                         std::span<const std::size_t> positions);

/// Number of partitions of an m-set.
std::size_t bell_number(std::size_t m);

/// Index of every partition of {0..m-1} within enumerate_partitions(m).
/// Shared, immutable, built once per ground size.
class PartitionIndex {
 public:
  static const PartitionIndex& of(std::size_t m);

  std::size_t ground_size() const noexcept { return m_; }
  std::size_t size() const noexcept { return parts_.size(); }
  const SetPartition& at(std::size_t i) const { return parts_.at(i); }
  const std::vector<SetPartition>& all() const noexcept { return parts_; }
  std::size_t index_of(const SetPartition& p) const;

  /// Indices of all coarsenings of partition i (including i).
  const std::vector<std::size_t>& coarsenings_of(std::size_t i) const {
    return up_.at(i);
  }

 private:
  explicit PartitionIndex(std::size_t m);

  std::size_t m_;
  std::vector<SetPartition> parts_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::vector<std::size_t>> up_;
};

}  // namespace modeq

template <>
struct std::hash<modeq::SetPartition> {
  std::size_t operator()(const modeq::SetPartition& p) const noexcept {
    std::size_t h = p.ground_size() * 0x9e3779b97f4a7c15ULL;
    for (auto b : p.rgs()) h = (h ^ b) * 0x100000001b3ULL;
    return h;
  }
};
