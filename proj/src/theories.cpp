#include "modeq/theories.hpp"

#include <algorithm>

#include "modeq/errors.hpp"

namespace modeq {

namespace {

struct Name {
  Theory kind;
  const char* text;
  bool indexed;
};

constexpr Name kNames[] = {
    {Theory::S4, "S4", false},           {Theory::S4_2, "S4.2", false},
    {Theory::S4_3, "S4.3", false},       {Theory::S4_3J, "S4.3J", true},
    {Theory::S5, "S5", false},           {Theory::Grz, "Grz", false},
    {Theory::Grz_2, "Grz.2", false},     {Theory::Grz_3, "Grz.3", false},
    {Theory::Grz_3J, "Grz.3J", true},    {Theory::Triv, "Triv", false},
    {Theory::Lollipop, "Lollipop", false}, {Theory::Partition, "Partition", true},
    {Theory::Prepartition, "Prepartition", true},
};

const Name& name_of(Theory t) {
  for (const auto& n : kNames)
    if (n.kind == t) return n;
  throw Error("unknown theory");
}

std::size_t cluster_cap(std::size_t bound, int vars) {
  std::size_t cap = vars < 20 ? std::size_t{1} << vars : bound;
  return std::max<std::size_t>(1, std::min(bound, cap));
}

}  // namespace

std::string to_string(TheoryId t) {
  const auto& n = name_of(t.kind);
  std::string s = n.text;
  if (n.indexed) s += "(" + std::to_string(t.n) + ")";
  return s;
}

TheoryId parse_theory(const std::string& s) {
  std::string base = s;
  int n = 0;
  auto open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')') throw Error("malformed theory name '" + s + "'");
    base = s.substr(0, open);
    try {
      n = std::stoi(s.substr(open + 1, s.size() - open - 2));
    } catch (const std::exception&) {
      throw Error("malformed theory index in '" + s + "'");
    }
  }
  for (const auto& nm : kNames)
    if (base == nm.text) {
      if (nm.indexed != (open != std::string::npos))
        throw Error("theory '" + base + "' " + (nm.indexed ? "needs" : "takes no") + " index");
      return {nm.kind, n};
    }
  throw Error("unknown theory '" + s + "'");
}

TheoryInfo theory_info(TheoryId t) {
  using A = std::vector<std::pair<std::string, int>>;
  A s4{{"T", 0}, {"4", 0}};
  auto plus = [](A a, A b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  switch (t.kind) {
    case Theory::S4:
      return {t, s4, FamilyMode::BoundedFamily, "finite preorders"};
    case Theory::S4_2:
      return {t, plus(s4, {{".2", 0}}), FamilyMode::BoundedFamily, "finite directed preorders"};
    case Theory::S4_3:
      return {t, plus(s4, {{".3", 0}}), FamilyMode::BoundedFamily, "finite linear preorders"};
    case Theory::S4_3J:
      return {t, plus(s4, {{".3", 0}, {"J", t.n}}), FamilyMode::BoundedFamily,
              "linear preorders of length at most " + std::to_string(t.n)};
    case Theory::S5:
      return {t, plus(s4, {{"5", 0}}), FamilyMode::BoundedFamily, "clusters"};
    case Theory::Grz:
      return {t, {{"Grz", 0}}, FamilyMode::BoundedFamily, "finite partial orders"};
    case Theory::Grz_2:
      return {t, {{"Grz", 0}, {".2", 0}}, FamilyMode::BoundedFamily, "finite directed partial orders"};
    case Theory::Grz_3:
      return {t, {{"Grz", 0}, {".3", 0}}, FamilyMode::BoundedFamily, "finite linear orders"};
    case Theory::Grz_3J:
      return {t, {{"Grz", 0}, {".3", 0}, {"J", t.n}}, FamilyMode::FinitelyManyFrames,
              "linear orders of length at most " + std::to_string(t.n)};
    case Theory::Triv:
      return {t, {{"Triv", 0}, {"4", 0}}, FamilyMode::FinitelyManyFrames, "a reflexive point"};
    case Theory::Lollipop:
      return {t, {}, FamilyMode::BoundedFamily, "lollipop frames"};
    case Theory::Partition:
      return {t, {}, FamilyMode::FinitelyManyFrames,
              "partition lattices of size at most " + std::to_string(t.n)};
    case Theory::Prepartition:
      return {t, {}, FamilyMode::BoundedFamily,
              "partition prelattices of size at most " + std::to_string(t.n)};
  }
  throw Error("unknown theory");
}

std::vector<TheoryId> all_theories(int max_index) {
  std::vector<TheoryId> out;
  for (const auto& n : kNames) {
    if (!n.indexed) {
      out.push_back({n.kind, 0});
      continue;
    }
    for (int i = n.kind == Theory::Partition || n.kind == Theory::Prepartition ? 0 : 1;
         i <= max_index; ++i)
      out.push_back({n.kind, i});
  }
  return out;
}

std::vector<FiniteFrame> characteristic_frames(TheoryId t, std::size_t bound, int vars) {
  if (bound == 0) throw Error("frame bound must be positive");
  std::size_t c = cluster_cap(bound, vars);
  std::size_t posets = std::min<std::size_t>(bound, 5);
  std::vector<FiniteFrame> out;
  auto inflate_all = [&](std::vector<FiniteFrame> fs) {
    for (auto& f : fs) out.push_back(inflate_clusters(f, c));
  };
  switch (t.kind) {
    case Theory::S4: inflate_all(all_posets(posets)); break;
    case Theory::S4_2: inflate_all(all_directed_posets(posets)); break;
    case Theory::S4_3: out.push_back(inflate_clusters(chain_frame(bound), c)); break;
    case Theory::S4_3J:
      if (t.n < 1) throw Error("J index must be at least 1");
      out.push_back(inflate_clusters(chain_frame(static_cast<std::size_t>(t.n)), c));
      break;
    case Theory::S5: out.push_back(cluster_frame(c)); break;
    case Theory::Grz: out = all_posets(posets); break;
    case Theory::Grz_2: out = all_directed_posets(posets); break;
    case Theory::Grz_3: out.push_back(chain_frame(bound)); break;
    case Theory::Grz_3J:
      if (t.n < 1) throw Error("J index must be at least 1");
      out.push_back(chain_frame(static_cast<std::size_t>(t.n)));
      break;
    case Theory::Triv: out.push_back(chain_frame(1)); break;
    case Theory::Lollipop: out.push_back(lollipop_frame(c)); break;
    case Theory::Partition:
      if (t.n < 0) throw Error("partition size must be nonnegative");
      out.push_back(partition_lattice_frame(static_cast<std::size_t>(t.n)));
      break;
    case Theory::Prepartition:
      if (t.n < 0) throw Error("partition size must be nonnegative");
      out.push_back(prepartition_frame(static_cast<std::size_t>(t.n), c));
      break;
  }
  return out;
}

}  // namespace modeq
