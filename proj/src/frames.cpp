#include "modeq/frames.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "modeq/errors.hpp"
#include "modeq/partition.hpp"
#include "modeq/sat.hpp"

namespace modeq {

namespace {

using Row = std::vector<std::uint64_t>;

std::size_t words(std::size_t n) { return (n + 63) / 64; }
void set_bit(Row& r, std::size_t i) { r[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool get_bit(const Row& r, std::size_t i) { return (r[i >> 6] >> (i & 63)) & 1; }

bool subset(const Row& a, const Row& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw Error("frame: label count does not match node count");
  return labels;
}

}  // namespace

FiniteFrame::FiniteFrame(std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                         std::vector<std::string> labels, std::string name)
    : labels_(default_labels(n, std::move(labels))), name_(std::move(name)) {
  rel_.assign(n, Row(words(n), 0));
  for (std::size_t i = 0; i < n; ++i) set_bit(rel_[i], i);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("frame: edge endpoint out of range");
    set_bit(rel_[u], v);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (get_bit(rel_[i], k))
        for (std::size_t w = 0; w < rel_[i].size(); ++w) rel_[i][w] |= rel_[k][w];
  finish();
}

FiniteFrame FiniteFrame::from_relation(std::vector<std::vector<bool>> rel,
                                       std::vector<std::string> labels, std::string name) {
  std::size_t n = rel.size();
  FiniteFrame f;
  f.labels_ = default_labels(n, std::move(labels));
  f.name_ = std::move(name);
  f.rel_.assign(n, Row(words(n), 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rel[i].size() != n) throw Error("frame: relation is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) set_bit(f.rel_[i], j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!get_bit(f.rel_[i], i)) throw Error("frame: relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j)
      if (get_bit(f.rel_[i], j) && !subset(f.rel_[j], f.rel_[i]))
        throw Error("frame: relation is not transitive");
  }
  f.finish();
  return f;
}

void FiniteFrame::finish() {
  std::size_t n = rel_.size();
  succ_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sees(i, j)) succ_[i].push_back(j);

  cluster_of_.assign(n, n);
  std::vector<std::vector<std::size_t>> raw;
  for (std::size_t i = 0; i < n; ++i) {
    if (cluster_of_[i] != n) continue;
    std::vector<std::size_t> c;
    for (std::size_t j : succ_[i])
      if (sees(j, i)) c.push_back(j);
    for (std::size_t j : c) cluster_of_[j] = raw.size();
    raw.push_back(std::move(c));
  }
  // A strictly higher cluster has a strictly smaller cone.
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return succ_[raw[a][0]].size() > succ_[raw[b][0]].size();
  });
  clusters_.clear();
  for (std::size_t c : order) clusters_.push_back(raw[c]);
  for (std::size_t c = 0; c < clusters_.size(); ++c)
    for (std::size_t j : clusters_[c]) cluster_of_[j] = c;

  std::size_t m = clusters_.size();
  std::vector<Row> above(m, Row(words(m), 0));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t j : succ_[clusters_[c][0]])
      if (cluster_of_[j] != c) set_bit(above[c], cluster_of_[j]);
  covers_.assign(m, {});
  for (std::size_t c = 0; c < m; ++c) {
    Row indirect(words(m), 0);
    for (std::size_t d = 0; d < m; ++d)
      if (get_bit(above[c], d))
        for (std::size_t w = 0; w < indirect.size(); ++w) indirect[w] |= above[d][w];
    for (std::size_t d = 0; d < m; ++d)
      if (get_bit(above[c], d) && !get_bit(indirect, d)) covers_[c].push_back(d);
  }
}

FiniteFrame FiniteFrame::restrict_to(const std::vector<std::size_t>& nodes) const {
  std::vector<std::vector<bool>> rel(nodes.size(), std::vector<bool>(nodes.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    labels.push_back(labels_.at(nodes[i]));
    for (std::size_t j = 0; j < nodes.size(); ++j) rel[i][j] = sees(nodes[i], nodes[j]);
  }
  return from_relation(std::move(rel), std::move(labels), name_);
}

std::vector<std::size_t> FiniteFrame::cone(std::size_t u) const { return succ_.at(u); }

std::string FiniteFrame::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < size(); ++i) j["nodes"].push_back({{"id", i}, {"label", labels_[i]}});
  j["relation"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k : succ_[i])
      if (k != i) j["relation"].push_back({i, k});
  return j.dump();
}

FiniteFrame chain_frame(std::size_t n) {
  if (n > 4096) throw BoundError("chain longer than 4096");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return FiniteFrame(n, e, {}, "chain(" + std::to_string(n) + ")");
}

FiniteFrame cluster_frame(std::size_t k) {
  if (k > 4096) throw BoundError("cluster larger than 4096");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return FiniteFrame(k, e, {}, "cluster(" + std::to_string(k) + ")");
}

FiniteFrame lollipop_frame(std::size_t k) {
  if (k > 4096) throw BoundError("cluster larger than 4096");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::vector<std::string> labels{"root"};
  for (std::size_t i = 1; i <= k; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % k + 1);
    labels.push_back("c" + std::to_string(i));
  }
  return FiniteFrame(k + 1, e, labels, "lollipop(" + std::to_string(k) + ")");
}

FiniteFrame partition_lattice_frame(std::size_t n) {
  const auto& idx = PartitionIndex::of(n);
  std::size_t size = idx.size();
  std::vector<std::vector<bool>> rel(size, std::vector<bool>(size));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back(idx.at(i).to_string());
    for (std::size_t j = 0; j < size; ++j) rel[i][j] = refines(idx.at(i), idx.at(j));
  }
  return FiniteFrame::from_relation(std::move(rel), std::move(labels),
                                    "partition_lattice(" + std::to_string(n) + ")");
}

FiniteFrame inflate_clusters(const FiniteFrame& f, std::size_t k) {
  if (k == 0) throw Error("clusters must be nonempty");
  if (f.size() * k > 1u << 16) throw BoundError("inflated frame too large");
  std::size_t n = f.size() * k;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(k == 1 ? f.label(i / k) : f.label(i / k) + "#" + std::to_string(i % k));
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = f.sees(i / k, j / k);
  }
  return FiniteFrame::from_relation(std::move(rel), std::move(labels),
                                    f.name() + "x" + std::to_string(k));
}

FiniteFrame prepartition_frame(std::size_t n, std::size_t k) {
  auto f = inflate_clusters(partition_lattice_frame(n), k);
  std::vector<std::vector<bool>> rel(f.size(), std::vector<bool>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) rel[i][j] = f.sees(i, j);
  return FiniteFrame::from_relation(
      std::move(rel), f.labels(),
      "prepartition(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

FiniteFrame pretree_frame(const std::vector<std::size_t>& parent,
                          const std::vector<std::size_t>& cluster_sizes) {
  if (parent.size() != cluster_sizes.size() || parent.empty())
    throw Error("pretree: parent and cluster size lists must be nonempty and equally long");
  std::vector<std::size_t> first;
  std::size_t n = 0;
  for (std::size_t c : cluster_sizes) {
    if (c == 0) throw Error("pretree: empty cluster");
    first.push_back(n);
    n += c;
  }
  if (n > 4096) throw BoundError("pretree larger than 4096 nodes");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < parent.size(); ++t) {
    if (t > 0 && parent[t] >= t) throw Error("pretree: parent must precede child");
    for (std::size_t i = 0; i < cluster_sizes[t]; ++i) {
      e.emplace_back(first[t] + i, first[t] + (i + 1) % cluster_sizes[t]);
      labels.push_back("t" + std::to_string(t) + "#" + std::to_string(i));
    }
    if (t > 0) e.emplace_back(first[parent[t]], first[t]);
  }
  return FiniteFrame(n, e, labels, "pretree");
}

namespace {

// Canonical form by trying every ordering consistent with a degree-based
// coloring; frames here are small.
std::vector<std::uint8_t> encode(const FiniteFrame& f, const std::vector<std::size_t>& perm) {
  std::size_t n = f.size();
  std::vector<std::uint8_t> out{static_cast<std::uint8_t>(n & 0xff),
                                static_cast<std::uint8_t>(n >> 8)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(f.sees(perm[i], perm[j]) ? 1 : 0);
  return out;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const FiniteFrame& f) {
  std::size_t n = f.size();
  std::vector<std::pair<std::size_t, std::size_t>> color(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t in = 0;
    for (std::size_t j = 0; j < n; ++j) in += f.sees(j, i);
    color[i] = {f.successors(i).size(), in};
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  double work = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[perm[j]] == color[perm[i]]) ++j;
    groups.emplace_back(i, j);
    for (std::size_t k = 2; k <= j - i; ++k) work *= static_cast<double>(k);
    i = j;
  }
  if (work > 5e6) throw BoundError("canonical form: too many symmetric candidates");
  std::vector<std::uint8_t> best = encode(f, perm);
  // Odometer over the permutations of each color group.
  while (true) {
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [b, e] = groups[g];
      if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
    }
    if (g == groups.size()) break;
    best = std::min(best, encode(f, perm));
  }
  return best;
}

bool isomorphic(const FiniteFrame& a, const FiniteFrame& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<FiniteFrame> all_posets(std::size_t max_nodes) {
  if (max_nodes > 5) throw BoundError("poset enumeration is limited to 5 nodes");
  std::vector<FiniteFrame> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::vector<std::uint8_t>> seen;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) rel[slots[s].first][slots[s].second] = true;
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i)
        for (std::size_t j = 0; j < n && transitive; ++j)
          for (std::size_t k = 0; k < n && transitive; ++k)
            if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
      if (!transitive) continue;
      auto f = FiniteFrame::from_relation(rel, {}, "poset");
      if (seen.insert(canonical_form(f)).second) out.push_back(std::move(f));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto rel = std::vector<std::vector<bool>>(out[i].size(), std::vector<bool>(out[i].size()));
    for (std::size_t a = 0; a < out[i].size(); ++a)
      for (std::size_t b = 0; b < out[i].size(); ++b) rel[a][b] = out[i].sees(a, b);
    out[i] = FiniteFrame::from_relation(std::move(rel), {}, "poset#" + std::to_string(i));
  }
  return out;
}

std::vector<FiniteFrame> all_directed_posets(std::size_t max_nodes) {
  std::vector<FiniteFrame> out;
  for (auto& f : all_posets(max_nodes)) {
    bool top = false;
    for (std::size_t t = 0; t < f.size() && !top; ++t) {
      top = true;
      for (std::size_t i = 0; i < f.size(); ++i) top = top && f.sees(i, t);
    }
    if (top) out.push_back(std::move(f));
  }
  return out;
}

std::vector<bool> truth_set(const FiniteFrame& f, const Valuation& val, const PropFormula& phi) {
  std::unordered_map<PropFormula, std::vector<bool>, FormulaHash> memo;
  std::size_t n = f.size();
  std::function<const std::vector<bool>&(const PropFormula&)> go =
      [&](const PropFormula& g) -> const std::vector<bool>& {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    std::vector<bool> out(n);
    switch (g.op()) {
      case Op::Var:
        if (g.arg() >= static_cast<int>(val.size()) || val[g.arg()].size() != n)
          throw ArityError("valuation has no row for p" + std::to_string(g.arg()));
        out = val[g.arg()];
        break;
      case Op::Not: {
        const auto& a = go(g.child());
        for (std::size_t i = 0; i < n; ++i) out[i] = !a[i];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff: {
        auto a = go(g.left());
        const auto& b = go(g.right());
        for (std::size_t i = 0; i < n; ++i) {
          switch (g.op()) {
            case Op::And: out[i] = a[i] && b[i]; break;
            case Op::Or: out[i] = a[i] || b[i]; break;
            case Op::Implies: out[i] = !a[i] || b[i]; break;
            default: out[i] = a[i] == b[i];
          }
        }
        break;
      }
      case Op::Diamond:
      case Op::Box: {
        const auto& a = go(g.child());
        bool dia = g.op() == Op::Diamond;
        for (std::size_t i = 0; i < n; ++i) {
          bool acc = !dia;
          for (std::size_t j : f.successors(i))
            if (a[j] == dia) {
              acc = dia;
              break;
            }
          out[i] = acc;
        }
        break;
      }
      default:
        throw Error("unexpected operator in propositional formula");
    }
    return memo.emplace(g, std::move(out)).first->second;
  };
  return go(phi);
}

bool model_check(const FiniteFrame& f, const Valuation& v, std::size_t node,
                 const PropFormula& phi) {
  if (node >= f.size()) throw Error("model_check: node out of range");
  return truth_set(f, v, phi)[node];
}

namespace {

// Tseitin encoding of the truth of phi at every node of w. Modal subformulas
// take one variable per cluster, constrained through the cluster covers.
class Encoder {
 public:
  Encoder(const FiniteFrame& w, sat::Solver& s, int vars) : w_(w), s_(s) {
    props_.resize(vars);
    for (auto& row : props_)
      for (std::size_t i = 0; i < w.size(); ++i) row.push_back(s.new_var());
  }

  const std::vector<int>& lits(const PropFormula& g) {
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;
    std::size_t n = w_.size();
    std::vector<int> out(n);
    switch (g.op()) {
      case Op::Var:
        out = props_[g.arg()];
        break;
      case Op::Not: {
        const auto& a = lits(g.child());
        for (std::size_t i = 0; i < n; ++i) out[i] = -a[i];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff: {
        auto a = lits(g.left());
        auto b = lits(g.right());
        for (std::size_t i = 0; i < n; ++i) {
          int x = s_.new_var();
          int p = a[i], q = b[i];
          switch (g.op()) {
            case Op::Implies: p = -p; [[fallthrough]];
            case Op::Or:
              s_.add_clause({-x, p, q});
              s_.add_clause({x, -p});
              s_.add_clause({x, -q});
              break;
            case Op::And:
              s_.add_clause({-x, p});
              s_.add_clause({-x, q});
              s_.add_clause({x, -p, -q});
              break;
            default:
              s_.add_clause({-x, -p, q});
              s_.add_clause({-x, p, -q});
              s_.add_clause({x, p, q});
              s_.add_clause({x, -p, -q});
          }
          out[i] = x;
        }
        break;
      }
      case Op::Diamond:
      case Op::Box: {
        const auto a = lits(g.child());
        // Box is encoded as the negation of a diamond of the negation.
        int sign = g.op() == Op::Box ? -1 : 1;
        const auto& cl = w_.clusters();
        std::vector<int> d(cl.size());
        for (auto& x : d) x = s_.new_var();
        for (std::size_t c = 0; c < cl.size(); ++c) {
          std::vector<int> big{-d[c]};
          for (std::size_t u : cl[c]) {
            int l = sign * a[u];
            big.push_back(l);
            s_.add_clause({-l, d[c]});
          }
          for (std::size_t e : w_.cluster_covers(c)) {
            big.push_back(d[e]);
            s_.add_clause({-d[e], d[c]});
          }
          s_.add_clause(big);
        }
        for (std::size_t i = 0; i < n; ++i) out[i] = sign * d[w_.cluster_of(i)];
        break;
      }
      default:
        throw Error("unexpected operator in propositional formula");
    }
    return memo_.emplace(g, std::move(out)).first->second;
  }

  const std::vector<std::vector<int>>& props() const { return props_; }

 private:
  const FiniteFrame& w_;
  sat::Solver& s_;
  std::vector<std::vector<int>> props_;
  std::unordered_map<PropFormula, std::vector<int>, FormulaHash> memo_;
};

}  // namespace

FrameResult frame_valid(const FiniteFrame& f, const PropFormula& phi,
                        const FrameCheckOptions& opts) {
  int vars = prop_var_count(phi);
  if (opts.root && *opts.root >= f.size()) throw Error("frame_valid: root out of range");
  std::vector<std::size_t> pool;
  if (opts.root)
    pool = f.cone(*opts.root);
  else {
    pool.resize(f.size());
    std::iota(pool.begin(), pool.end(), 0);
  }
  std::size_t cap = opts.cap_clusters && vars < 24 ? std::size_t{1} << vars : f.size();
  std::vector<std::size_t> kept_in_cluster(f.clusters().size(), 0);
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> stand_in(f.size(), f.size());
  if (opts.root) {
    nodes.push_back(*opts.root);
    ++kept_in_cluster[f.cluster_of(*opts.root)];
  }
  for (std::size_t u : pool) {
    if (opts.root && u == *opts.root) continue;
    auto& k = kept_in_cluster[f.cluster_of(u)];
    if (k < cap) {
      nodes.push_back(u);
      ++k;
    }
  }
  for (std::size_t u : nodes) stand_in[u] = u;
  for (std::size_t u : nodes)
    for (std::size_t v : f.clusters()[f.cluster_of(u)])
      if (stand_in[v] == f.size()) stand_in[v] = u;
  FiniteFrame w = f.restrict_to(nodes);

  sat::Solver solver;
  Encoder enc(w, solver, vars);
  const auto& top = enc.lits(phi);
  if (opts.root) {
    solver.add_clause({-top[0]});
  } else {
    std::vector<int> any;
    for (int l : top) any.push_back(-l);
    solver.add_clause(any);
  }
  auto r = solver.solve(opts.budget);
  if (r == sat::Result::Unknown)
    throw BudgetExceeded("frame search on " + (f.name().empty() ? std::string("frame") : f.name()) +
                         " exceeded " + std::to_string(opts.budget) + " conflicts");
  FrameResult out;
  if (r == sat::Result::Unsat) return out;

  auto lit_true = [&](int l) { return l > 0 ? solver.value(l) : !solver.value(-l); };
  std::vector<std::size_t> pos(f.size(), f.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = i;
  Countermodel cm;
  cm.valuation.assign(vars, std::vector<bool>(f.size(), false));
  for (int p = 0; p < vars; ++p)
    for (std::size_t u = 0; u < f.size(); ++u)
      if (stand_in[u] != f.size()) cm.valuation[p][u] = lit_true(enc.props()[p][pos[stand_in[u]]]);
  cm.node = nodes[0];
  if (!opts.root)
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (!lit_true(top[i])) {
        cm.node = nodes[i];
        break;
      }
  if (model_check(f, cm.valuation, cm.node, phi))
    throw std::logic_error("frame_valid: countermodel does not refute the formula");
  out.valid = false;
  out.countermodel = std::move(cm);
  return out;
}

std::string countermodel_json(const Countermodel& c, const FiniteFrame& f) {
  nlohmann::ordered_json j;
  j["node"] = f.label(c.node);
  nlohmann::ordered_json v = nlohmann::ordered_json::object();
  for (std::size_t p = 0; p < c.valuation.size(); ++p) {
    auto set = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < f.size(); ++u)
      if (c.valuation[p][u]) set.push_back(f.label(u));
    v["p" + std::to_string(p)] = set;
  }
  j["valuation"] = v;
  return j.dump();
}

PropFormula axiom(const std::string& name, int n) {
  if (name == "J") {
    if (n < 1) throw Error("axiom J needs n >= 1");
    if (n > 64) throw BoundError("axiom J index too large");
    PropFormula j = parse_prop("<> [] p0 -> p0");
    for (int k = 1; k < n; ++k)
      j = implies(diamond(conj(box(prop::var(k)), neg(j))), prop::var(k));
    return j;
  }
  static const std::pair<const char*, const char*> table[] = {
      {"K", "[] (p0 -> p1) -> ([] p0 -> [] p1)"},
      {"Dual", "~ <> p0 <-> [] ~ p0"},
      {"T", "[] p0 -> p0"},
      {"4", "[] p0 -> [] [] p0"},
      {"5", "<> [] p0 -> p0"},
      {"Grz", "[] ([] (p0 -> [] p0) -> p0) -> p0"},
      {".2", "<> [] p0 -> [] <> p0"},
      {".3", "[] ([] p0 -> p1) | [] ([] p1 -> p0)"},
      {"Triv", "[] p0 <-> p0"},
  };
  for (auto [key, text] : table)
    if (name == key) return parse_prop(text);
  throw Error("unknown axiom '" + name + "'");
}

}  // namespace modeq
