#include "modeq/validity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "modeq/errors.hpp"

namespace modeq {

using nlohmann::ordered_json;

std::string to_string(Lang l) { return l == Lang::Sentential ? "sentential" : "formulaic"; }

Lang parse_lang(const std::string& s) {
  if (s == "sentential" || s == "sent") return Lang::Sentential;
  if (s == "formulaic" || s == "form") return Lang::Formulaic;
  throw Error("unknown substitution language '" + s + "'");
}

std::size_t named_count(const WorldSpec& w) {
  if (w.named) return *w.named;
  if (w.lang == Lang::Sentential) return 0;
  return w.size.is_omega() ? 3 : w.size.n();
}

std::string to_string(const WorldSpec& w) {
  std::string s = to_string(w.cat) + " size " + w.size.to_string() + " " + to_string(w.lang);
  if (w.lang == Lang::Formulaic) s += " named " + std::to_string(named_count(w));
  return s;
}

void validate(const WorldSpec& w) {
  if (w.cat.regime == Regime::InfiniteOnly && !w.size.is_omega())
    throw RegimeError("the infinite-only regime has no finite worlds");
  if (w.cat.regime == Regime::FiniteOnly && w.size.is_omega())
    throw RegimeError("the finite-only regime has no infinite worlds");
  std::size_t m = named_count(w);
  if (w.lang == Lang::Sentential && m != 0)
    throw Error("sentential substitution takes no parameters");
  if (!w.size.is_omega() && m > w.size.n())
    throw Error("more parameters than elements in a world of size " + w.size.to_string());
}

std::size_t named_for(const WorldSpec& w, const PropFormula& phi) {
  if (!w.named && w.lang == Lang::Formulaic && w.size.is_omega())
    return std::max<std::size_t>(3, static_cast<std::size_t>(prop_var_count(phi)) + 1);
  return named_count(w);
}

std::size_t default_threshold(const PropFormula& phi, std::size_t named) {
  return ast_size(phi) + named + 1;
}

std::string Verdict::summary() const {
  std::string s = outcome == Outcome::InValidities ? "in-validities" : "not-in-validities";
  s += exact ? " (exact)" : " (bounded N=" + std::to_string(bound) + ")";
  return s;
}

std::string Verdict::to_json() const {
  ordered_json j;
  j["outcome"] = outcome == Outcome::InValidities ? "in-validities" : "not-in-validities";
  j["exactness"] = exact ? "exact" : "bounded";
  if (!exact) j["bound"] = bound;
  if (countermodel) {
    j["frame"] = ordered_json::parse(countermodel->frame.to_json());
    j["countermodel"] =
        ordered_json::parse(countermodel_json(countermodel->countermodel, countermodel->frame));
  }
  if (substitution) {
    ordered_json s = ordered_json::object();
    for (const auto& [p, f] : *substitution) s["p" + std::to_string(p)] = to_string(f);
    j["substitution"] = s;
  }
  return j.dump();
}

TheoryId expected_theory(const WorldSpec& w) {
  validate(w);
  Morphisms m = w.cat.morphisms;
  bool sent = w.lang == Lang::Sentential;
  bool fun_or_surj = m == Morphisms::Functions || m == Morphisms::Surjections;
  if (w.cat.regime == Regime::InfiniteOnly)
    return {!sent && fun_or_surj ? Theory::Grz_2 : Theory::Triv, 0};
  if (w.size.is_omega()) {
    switch (m) {
      case Morphisms::Functions: return {sent ? Theory::S5 : Theory::S4_2, 0};
      case Morphisms::Surjections: return {sent ? Theory::Grz_3 : Theory::Grz_2, 0};
      default: return {Theory::Triv, 0};
    }
  }
  int n = static_cast<int>(w.size.n());
  switch (m) {
    case Morphisms::Functions:
      if (n == 0) return {Theory::Lollipop, 0};
      return sent ? TheoryId{Theory::S5, 0} : TheoryId{Theory::Prepartition, n};
    case Morphisms::Surjections:
      if (n <= 1) return {Theory::Triv, 0};
      return sent ? TheoryId{Theory::Grz_3J, n} : TheoryId{Theory::Partition, n};
    case Morphisms::Injections:
    case Morphisms::Inclusions:
      return {Theory::Grz_3, 0};
    default:
      return {Theory::Triv, 0};
  }
}

Verdict decide_in_theory(TheoryId t, const PropFormula& phi, std::size_t bound,
                         std::uint64_t budget) {
  if (bound == 0) bound = ast_size(phi);
  auto info = theory_info(t);
  Verdict v;
  v.exact = info.mode == FamilyMode::FinitelyManyFrames;
  v.bound = bound;
  for (auto& f : characteristic_frames(t, bound, prop_var_count(phi))) {
    FrameCheckOptions o;
    o.budget = budget;
    auto r = frame_valid(f, phi, o);
    if (!r.valid) {
      v.outcome = Outcome::NotInValidities;
      v.countermodel = FrameWitness{std::move(f), std::move(*r.countermodel)};
      return v;
    }
  }
  return v;
}

std::vector<Size> OracleNode::representatives(Regime r) const {
  if (!tail) return {Size::finite(size)};
  switch (r) {
    case Regime::AllSets: return {Size::finite(size), Size::finite(size + 1), Size::omega()};
    case Regime::FiniteOnly: return {Size::finite(size), Size::finite(size + 1)};
    default: return {Size::omega()};
  }
}

EqFormula OracleNode::defining_formula(Regime r) const {
  std::vector<int> vars(pattern.ground_size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = static_cast<int>(i);
  std::vector<EqFormula> parts;
  if (pattern.ground_size() >= 2) parts.push_back(eq::partition_formula(pattern, vars));
  if (!tail)
    parts.push_back(eq::card(static_cast<int>(size)));
  else if (r != Regime::InfiniteOnly)
    parts.push_back(expand_sigma(SigmaKind::AtLeast, static_cast<int>(size), false));
  return eq::big_and(parts);
}

std::string OracleNode::label(Regime r) const {
  std::string p = pattern.to_string();
  if (!tail) return p + ":" + std::to_string(size);
  if (r == Regime::InfiniteOnly) return p + ":omega";
  return p + ":>=" + std::to_string(size);
}

OracleFrame oracle_state_frame(const WorldSpec& w, std::size_t N) {
  validate(w);
  std::size_t m = named_count(w);
  if (N < m) throw BoundError("threshold below the number of parameters");
  const CategoryKind cat = w.cat;
  const Regime r = cat.regime;
  const std::size_t E = N - m;
  const auto& idx = PartitionIndex::of(m);

  std::vector<OracleNode> all;
  for (std::size_t q = 0; q < idx.size(); ++q) {
    const auto& Q = idx.at(q);
    auto k = static_cast<std::uint32_t>(Q.block_count());
    if (r == Regime::InfiniteOnly) {
      all.push_back({Q, true, k});
      continue;
    }
    for (std::size_t e = 0; e <= E; ++e) all.push_back({Q, false, static_cast<std::uint32_t>(k + e)});
    all.push_back({Q, true, static_cast<std::uint32_t>(k + E + 1)});
  }

  // Every size a tail node may be asked to hit.
  auto members = [&](const OracleNode& y) {
    std::vector<Size> out;
    if (!y.tail) return std::vector<Size>{Size::finite(y.size)};
    if (r != Regime::InfiniteOnly)
      for (std::uint32_t s = y.size; s <= N + 3; ++s) out.push_back(Size::finite(s));
    if (r != Regime::FiniteOnly) out.push_back(Size::omega());
    return out;
  };
  auto edge = [&](const OracleNode& x, const OracleNode& y) {
    if (!refines(x.pattern, y.pattern)) return false;
    auto targets = members(y);
    std::optional<bool> answer;
    for (Size sx : x.representatives(r)) {
      bool hit = false;
      for (Size sy : targets)
        if (can_step(cat, {x.pattern, sx}, {y.pattern, sy})) {
          hit = true;
          break;
        }
      if (answer && *answer != hit)
        throw std::logic_error("oracle frame: tail node " + x.label(r) + " is not uniform");
      answer = hit;
    }
    return *answer;
  };

  std::size_t root = all.size();
  auto disc = SetPartition::discrete(m);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].pattern != disc) continue;
    bool hit = w.size.is_omega() ? all[i].tail
                                 : (all[i].tail ? w.size.n() >= all[i].size : w.size.n() == all[i].size);
    if (hit && (root == all.size() || !all[i].tail)) root = i;
  }
  if (root == all.size()) throw std::logic_error("oracle frame: initial state not found");

  std::vector<std::vector<std::size_t>> adj(all.size());
  std::vector<char> reached(all.size(), 0);
  std::vector<std::size_t> stack{root};
  reached[root] = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < all.size(); ++y)
      if (edge(all[x], all[y])) {
        adj[x].push_back(y);
        if (!reached[y]) {
          reached[y] = 1;
          stack.push_back(y);
        }
      }
  }
  std::vector<std::size_t> keep;
  std::vector<std::size_t> pos(all.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (reached[i]) {
      pos[i] = keep.size();
      keep.push_back(i);
    }
  std::vector<std::vector<bool>> rel(keep.size(), std::vector<bool>(keep.size()));
  std::vector<std::string> labels;
  OracleFrame out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t y : adj[keep[i]]) rel[i][pos[y]] = true;
    labels.push_back(all[keep[i]].label(r));
    out.nodes.push_back(all[keep[i]]);
  }
  out.frame = FiniteFrame::from_relation(std::move(rel), std::move(labels),
                                         "oracle(" + to_string(w) + ", N=" + std::to_string(N) + ")");
  out.root = pos[root];
  out.named = m;
  out.N = N;
  return out;
}

Verdict oracle_decide(const WorldSpec& w, const PropFormula& phi, std::size_t N,
                      std::uint64_t budget) {
  WorldSpec ws = w;
  ws.named = named_for(w, phi);
  if (N == 0) N = default_threshold(phi, *ws.named);
  auto of = oracle_state_frame(ws, N);
  FrameCheckOptions o;
  o.root = of.root;
  o.budget = budget;
  auto r = frame_valid(of.frame, phi, o);
  Verdict v;
  v.exact = false;
  v.bound = N;
  if (r.valid) return v;

  v.outcome = Outcome::NotInValidities;
  const auto& cm = *r.countermodel;
  std::map<int, EqFormula> psi;
  for (int p = 0; p < prop_var_count(phi); ++p) {
    std::vector<EqFormula> parts;
    for (std::size_t u = 0; u < of.nodes.size(); ++u)
      if (cm.valuation[p][u]) parts.push_back(of.nodes[u].defining_formula(w.cat.regime));
    psi.emplace(p, eq::big_or(parts));
  }
  auto instance = substitute(phi, psi);
  if (evaluate_named(instance, w.cat, w.size, SetPartition::discrete(of.named)))
    throw std::logic_error("oracle: substitution witness does not refute the formula");
  v.substitution = std::move(psi);
  v.countermodel = FrameWitness{std::move(of.frame), cm};
  return v;
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> c;
  for (const char* n : {"T", "4", "5", "Grz", ".2", ".3"}) c.push_back({n, axiom(n)});
  for (int j = 1; j <= 4; ++j) c.push_back({"J" + std::to_string(j), axiom("J", j)});
  c.push_back({"Triv", axiom("Triv")});
  return c;
}

namespace {

void run_parallel(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      std::size_t i = next++;
      if (i >= count) return;
      try {
        job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string exactness(const Verdict& v) {
  return v.exact ? "exact" : "bounded(" + std::to_string(v.bound) + ")";
}

}  // namespace

TableReport reproduce_table(const std::vector<CorpusEntry>& corpus, const TableOptions& opts) {
  TableReport rep;
  for (Regime r : kAllRegimes)
    for (Morphisms m : kAllMorphisms) {
      std::vector<Size> sizes;
      if (r != Regime::InfiniteOnly)
        for (auto n : opts.sizes) sizes.push_back(Size::finite(n));
      if (r != Regime::FiniteOnly && opts.include_omega) sizes.push_back(Size::omega());
      for (Size s : sizes)
        for (Lang l : {Lang::Sentential, Lang::Formulaic}) {
          CellReport cell;
          cell.world = {{m, r}, s, l, std::nullopt};
          cell.expected = expected_theory(cell.world);
          cell.results.resize(corpus.size());
          for (std::size_t i = 0; i < corpus.size(); ++i) cell.results[i].formula = corpus[i].name;
          rep.cells.push_back(std::move(cell));
        }
    }

  std::vector<std::pair<TheoryId, std::size_t>> theory_jobs;
  for (const auto& c : rep.cells)
    for (std::size_t i = 0; i < corpus.size(); ++i) theory_jobs.emplace_back(c.expected, i);
  std::sort(theory_jobs.begin(), theory_jobs.end());
  theory_jobs.erase(std::unique(theory_jobs.begin(), theory_jobs.end()), theory_jobs.end());
  std::vector<std::optional<Verdict>> theory_out(theory_jobs.size());
  std::vector<std::string> theory_skip(theory_jobs.size());
  std::size_t cells = rep.cells.size();
  std::size_t total = theory_jobs.size() + cells * corpus.size();

  run_parallel(total, opts.threads, [&](std::size_t k) {
    if (k < theory_jobs.size()) {
      auto [t, i] = theory_jobs[k];
      try {
        theory_out[k] = decide_in_theory(t, corpus[i].formula, 0, opts.budget);
      } catch (const BudgetExceeded& e) {
        theory_skip[k] = e.what();
      }
      return;
    }
    k -= theory_jobs.size();
    auto& cell = rep.cells[k / corpus.size()];
    auto& res = cell.results[k % corpus.size()];
    try {
      res.oracle = oracle_decide(cell.world, corpus[k % corpus.size()].formula, opts.N, opts.budget);
    } catch (const BudgetExceeded& e) {
      res.skipped = e.what();
    }
  });

  for (auto& cell : rep.cells)
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto& res = cell.results[i];
      auto it = std::lower_bound(theory_jobs.begin(), theory_jobs.end(), std::make_pair(cell.expected, i));
      std::size_t k = static_cast<std::size_t>(it - theory_jobs.begin());
      res.theory = theory_out[k];
      if (!theory_skip[k].empty() && res.skipped.empty()) res.skipped = theory_skip[k];
      if (res.theory && res.oracle) {
        res.agree = res.theory->outcome == res.oracle->outcome;
        ++(res.agree ? rep.agreements : rep.disagreements);
      } else {
        ++rep.skipped;
      }
    }
  return rep;
}

std::string TableReport::to_json() const {
  ordered_json j;
  j["agreements"] = agreements;
  j["disagreements"] = disagreements;
  j["skipped"] = skipped;
  j["cells"] = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json cj;
    cj["category"] = to_string(c.world.cat.morphisms);
    cj["regime"] = to_string(c.world.cat.regime);
    cj["size"] = c.world.size.to_string();
    cj["lang"] = to_string(c.world.lang);
    cj["expected_theory"] = to_string(c.expected);
    cj["results"] = ordered_json::array();
    for (const auto& r : c.results) {
      ordered_json rj;
      rj["formula"] = r.formula;
      rj["theory_verdict"] = r.theory ? r.theory->summary() : "skipped";
      rj["oracle_verdict"] = r.oracle ? r.oracle->summary() : "skipped";
      rj["agree"] = r.agree;
      rj["exactness"] = r.theory ? exactness(*r.theory) : "none";
      if (!r.skipped.empty()) rj["skipped"] = r.skipped;
      cj["results"].push_back(rj);
    }
    j["cells"].push_back(cj);
  }
  return j.dump(2);
}

std::string TableReport::to_text() const {
  std::ostringstream out;
  for (Regime r : kAllRegimes) {
    std::vector<const CellReport*> row_cells;
    std::vector<std::string> columns;
    for (const auto& c : cells)
      if (c.world.cat.regime == r && c.world.cat.morphisms == Morphisms::Functions)
        columns.push_back(c.world.size.to_string() + (c.world.lang == Lang::Sentential ? " sent" : " form"));
    if (columns.empty()) continue;
    out << "regime " << to_string(r) << "\n";
    std::vector<std::vector<std::string>> grid;
    grid.push_back({""});
    for (const auto& col : columns) grid.back().push_back(col);
    for (Morphisms m : kAllMorphisms) {
      std::vector<std::string> row{to_string(m)};
      for (const auto& c : cells) {
        if (c.world.cat.regime != r || c.world.cat.morphisms != m) continue;
        std::size_t ok = 0;
        for (const auto& res : c.results) ok += res.agree;
        std::string mark = ok == c.results.size() ? "" : " !" + std::to_string(ok) + "/" + std::to_string(c.results.size());
        row.push_back(to_string(c.expected) + mark);
      }
      grid.push_back(row);
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i] << std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << "\n";
    }
    out << "\n";
  }
  out << "agreements " << agreements << ", disagreements " << disagreements << ", skipped "
      << skipped << "\n";
  for (const auto& c : cells)
    for (const auto& r : c.results)
      if (!r.agree)
        out << "  " << to_string(c.world) << " " << r.formula << ": theory "
            << (r.theory ? r.theory->summary() : "skipped") << ", oracle "
            << (r.oracle ? r.oracle->summary() : "skipped")
            << (r.skipped.empty() ? "" : " [" + r.skipped + "]") << "\n";
  return out.str();
}

}  // namespace modeq
