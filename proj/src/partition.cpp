#include "modeq/partition.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "modeq/errors.hpp"

namespace modeq {

namespace {

std::vector<std::uint8_t> canonical_rgs(std::span<const int> labels) {
  std::vector<std::uint8_t> rgs(labels.size());
  std::vector<std::pair<int, std::uint8_t>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& e) { return e.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
      rgs[i] = seen.back().second;
    } else {
      rgs[i] = it->second;
    }
  }
  return rgs;
}

std::uint64_t rgs_key(const std::vector<std::uint8_t>& rgs) {
  std::uint64_t k = 0;
  for (auto b : rgs) k = k * 16 + b;
  return k;
}

}  // namespace

SetPartition::SetPartition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs)) {
  blocks_ = 0;
  for (auto b : rgs_) blocks_ = std::max<std::size_t>(blocks_, b + 1u);
}

SetPartition SetPartition::discrete(std::size_t m) {
  std::vector<std::uint8_t> rgs(m);
  for (std::size_t i = 0; i < m; ++i) rgs[i] = static_cast<std::uint8_t>(i);
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::single_block(std::size_t m) {
  return SetPartition(std::vector<std::uint8_t>(m, 0));
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  if (labels.size() > 255) throw BoundError("partition ground set too large");
  return SetPartition(canonical_rgs(labels));
}

SetPartition SetPartition::from_blocks(std::size_t m,
                                       const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(m, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("partition has an empty block");
    for (int x : blocks[b]) {
      if (x < 0 || static_cast<std::size_t>(x) >= m)
        throw Error("partition element " + std::to_string(x) + " outside ground set");
      if (labels[x] != -1)
        throw Error("partition element " + std::to_string(x) + " in two blocks");
      labels[x] = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (labels[i] == -1)
      throw Error("partition does not cover element " + std::to_string(i));
  return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, 1, i + 1);
  };
  skip();
  if (text.substr(i) == "{}") return SetPartition();
  int max_elem = -1;
  while (true) {
    skip();
    if (i == text.size()) break;
    if (text[i] != '{') throw fail("expected '{'");
    ++i;
    std::vector<int> block;
    while (true) {
      skip();
      if (i == text.size()) throw fail("unterminated block");
      if (text[i] == '}') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected element");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      block.push_back(v);
      max_elem = std::max(max_elem, v);
    }
    if (block.empty()) throw fail("empty block");
    blocks.push_back(std::move(block));
  }
  return from_blocks(static_cast<std::size_t>(max_elem + 1), blocks);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(static_cast<int>(i));
  return out;
}

std::string SetPartition::to_string() const {
  if (rgs_.empty()) return "{}";
  std::string s;
  for (const auto& block : blocks()) {
    s += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(block[k]);
    }
    s += '}';
  }
  return s;
}

std::vector<SetPartition> enumerate_partitions(std::size_t m) {
  if (m > kMaxPartitionGround)
    throw BoundError("partition enumeration limited to m <= " +
                     std::to_string(kMaxPartitionGround));
  std::vector<SetPartition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings in lexicographic order.
  std::vector<int> a(m, 0), maxima(m, 0);
  while (true) {
    out.push_back(SetPartition::from_labels(a));
    std::size_t i = m - 1;
    while (i > 0 && a[i] == maxima[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    maxima[i] = std::max(maxima[i - 1], a[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      a[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  return out;
}

bool refines(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size())
    throw ArityError("refines: partitions over different ground sets");
  // Map each P-block to the Q-block of its first element; all members must agree.
  std::array<int, 256> target;
  target.fill(-1);
  for (std::size_t i = 0; i < p.ground_size(); ++i) {
    int pb = p.block_of(i);
    int qb = q.block_of(i);
    if (target[pb] == -1)
      target[pb] = qb;
    else if (target[pb] != qb)
      return false;
  }
  return true;
}

std::vector<SetPartition> coarsenings(const SetPartition& p) {
  if (p.ground_size() > kMaxPartitionGround)
    throw BoundError("coarsenings limited to m <= " + std::to_string(kMaxPartitionGround));
  // A coarsening merges blocks of P: it is a partition of P's block set.
  std::vector<SetPartition> out;
  for (const auto& merge : enumerate_partitions(p.block_count())) {
    std::vector<int> labels(p.ground_size());
    for (std::size_t i = 0; i < p.ground_size(); ++i)
      labels[i] = merge.block_of(static_cast<std::size_t>(p.block_of(i)));
    out.push_back(SetPartition::from_labels(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition restrict_to(const SetPartition& p, std::span<const std::size_t> positions) {
  std::vector<int> labels;
  labels.reserve(positions.size());
  for (auto pos : positions) labels.push_back(p.block_of(pos));
  return SetPartition::from_labels(labels);
}

std::size_t bell_number(std::size_t m) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

PartitionIndex::PartitionIndex(std::size_t m) : m_(m), parts_(enumerate_partitions(m)) {
  keys_.reserve(parts_.size());
  for (const auto& p : parts_) keys_.push_back(rgs_key(p.rgs()));
  up_.resize(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = 0; j < parts_.size(); ++j)
      if (refines(parts_[i], parts_[j])) up_[i].push_back(j);
}

const PartitionIndex& PartitionIndex::of(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<PartitionIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new PartitionIndex(m));
  return *slot;
}

std::size_t PartitionIndex::index_of(const SetPartition& p) const {
  if (p.ground_size() != m_) throw ArityError("partition ground size mismatch");
  // Lexicographic RGS order equals numeric order of the base-16 key.
  auto key = rgs_key(p.rgs());
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  return static_cast<std::size_t>(it - keys_.begin());
}

}  // namespace modeq
