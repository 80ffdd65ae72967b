#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modeq/formula.hpp"

namespace modeq {

/// Finite reflexive-transitive frame.
class FiniteFrame {
 public:
  FiniteFrame() = default;
  /// Takes the reflexive-transitive closure of the given edges.
  FiniteFrame(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
               std::vector<std::string> labels = {}, std::string name = {});
  /// The relation must already be reflexive and transitive; throws Error otherwise.
  static FiniteFrame from_relation(std::vector<std::vector<bool>> rel,
                                   std::vector<std::string> labels = {}, std::string name = {});

  std::size_t size() const { return rel_.size(); }
  /// Row u of the relation as 64-bit words.
  const std::vector<std::uint64_t>& row(std::size_t u) const { return rel_[u]; }
  bool sees(std::size_t u, std::size_t v) const { return (rel_[u][v >> 6] >> (v & 63)) & 1; }
  const std::vector<std::size_t>& successors(std::size_t u) const { return succ_[u]; }
  const std::string& label(std::size_t u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  /// Clusters in topological order (every cluster before the clusters it sees).
  const std::vector<std::vector<std::size_t>>& clusters() const { return clusters_; }
  std::size_t cluster_of(std::size_t u) const { return cluster_of_[u]; }
  /// Covers in the strict order on clusters.
  const std::vector<std::size_t>& cluster_covers(std::size_t c) const { return covers_[c]; }

  /// Induced subframe on the given nodes, in the given order.
  FiniteFrame restrict_to(const std::vector<std::size_t>& nodes) const;
  /// The subframe generated by u: u and everything it sees.
  std::vector<std::size_t> cone(std::size_t u) const;

  /// {"name", "nodes":[{"id","label"}], "relation":[[u,v],...]}; strict pairs only.
  std::string to_json() const;

 private:
  void finish();

  std::vector<std::vector<std::uint64_t>> rel_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<std::vector<std::size_t>> clusters_;
  std::vector<std::size_t> cluster_of_;
  std::vector<std::vector<std::size_t>> covers_;
};

/// valuation[p][node]
using Valuation = std::vector<std::vector<bool>>;

FiniteFrame chain_frame(std::size_t n);
FiniteFrame cluster_frame(std::size_t k);
/// Node 0 strictly below a k-cluster.
FiniteFrame lollipop_frame(std::size_t k);
/// Partitions of n under refinement, in enumeration order.
FiniteFrame partition_lattice_frame(std::size_t n);
/// Each node of the partition lattice of n replaced by a k-cluster.
FiniteFrame prepartition_frame(std::size_t n, std::size_t k);
/// A rooted tree of clusters: parent[i] < i for i > 0 (parent[0] ignored),
/// cluster_sizes[i] >= 1 copies of tree node i.
FiniteFrame pretree_frame(const std::vector<std::size_t>& parent,
                          const std::vector<std::size_t>& cluster_sizes);
/// Each node of a frame replaced by a k-cluster.
FiniteFrame inflate_clusters(const FiniteFrame& f, std::size_t k);

/// All partial orders on 1..max_nodes points up to isomorphism.
std::vector<FiniteFrame> all_posets(std::size_t max_nodes);
/// Those with a greatest element.
std::vector<FiniteFrame> all_directed_posets(std::size_t max_nodes);

/// Canonical form of the relation under node relabeling; equal iff isomorphic.
std::vector<std::uint8_t> canonical_form(const FiniteFrame& f);
bool isomorphic(const FiniteFrame& a, const FiniteFrame& b);

/// Truth of every node; throws ArityError when a variable has no valuation row.
std::vector<bool> truth_set(const FiniteFrame& f, const Valuation& v, const PropFormula& phi);
bool model_check(const FiniteFrame& f, const Valuation& v, std::size_t node,
                 const PropFormula& phi);

struct Countermodel {
  Valuation valuation;
  std::size_t node = 0;
};

struct FrameResult {
  bool valid = true;
  std::optional<Countermodel> countermodel;
};

struct FrameCheckOptions {
  /// Check truth at this node only instead of at every node.
  std::optional<std::size_t> root;
  /// SAT conflicts; 0 = unlimited.
  std::uint64_t budget = 2'000'000;
  /// Shrink clusters larger than 2^vars before searching.
  bool cap_clusters = true;
};

/// Validity under every valuation; throws BudgetExceeded.
FrameResult frame_valid(const FiniteFrame& f, const PropFormula& phi,
                        const FrameCheckOptions& opts = {});

std::string countermodel_json(const Countermodel& c, const FiniteFrame& f);

/// K, Dual, T, 4, 5, Grz, .2, .3, Triv, J (with n >= 1). Throws Error on
/// unknown names.
PropFormula axiom(const std::string& name, int n = 0);

}  // namespace modeq
