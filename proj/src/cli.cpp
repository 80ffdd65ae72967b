#include "modeq/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modeq/control.hpp"
#include "modeq/errors.hpp"
#include "modeq/validity.hpp"

namespace modeq {

namespace {

using nlohmann::ordered_json;

struct WorldFlags {
  std::string cat = "functions";
  std::string regime = "all";
  std::string size;
  std::string lang = "sentential";
  std::optional<std::size_t> named;
};

void add_world_flags(CLI::App* app, WorldFlags& w, bool with_size) {
  app->add_option("--cat", w.cat, "category of morphisms")
      ->check(CLI::IsMember({"functions", "surjections", "injections", "inclusions", "bijections",
                             "identities"}));
  app->add_option("--regime", w.regime, "all|fin|inf")->check(CLI::IsMember({"all", "fin", "inf"}));
  if (!with_size) return;
  app->add_option("--size", w.size, "nat or omega");
  app->add_option("--lang", w.lang, "sentential|formulaic");
  app->add_option("--named", w.named, "number of named parameters");
}

CategoryKind category(const WorldFlags& w) {
  return {parse_morphisms(w.cat), parse_regime(w.regime)};
}

Size world_size(const WorldFlags& w) {
  if (!w.size.empty()) return Size::parse(w.size);
  if (w.regime == "inf") return Size::omega();
  throw Error("--size is required outside the infinite-only regime");
}

WorldSpec world(const WorldFlags& w) {
  WorldSpec s{category(w), world_size(w), parse_lang(w.lang), w.named};
  validate(s);
  return s;
}

WorldSpec world_from_json(const ordered_json& j) {
  WorldFlags f;
  f.cat = j.value("cat", f.cat);
  f.regime = j.value("regime", f.regime);
  if (j.contains("size"))
    f.size = j["size"].is_string() ? j["size"].get<std::string>() : std::to_string(j["size"].get<std::uint64_t>());
  f.lang = j.value("lang", f.lang);
  if (j.contains("named")) f.named = j["named"].get<std::size_t>();
  return world(f);
}

/// "5", "Grz", "J3"
PropFormula axiom_from_flag(const std::string& a) {
  if (a.size() > 1 && a[0] == 'J') return axiom("J", std::stoi(a.substr(1)));
  return axiom(a);
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      out.push_back({line.substr(first), parse_prop(line)});
    } else {
      std::string name = line.substr(first, colon - first);
      out.push_back({name, parse_prop(line.substr(colon + 1))});
    }
  }
  if (out.empty()) throw Error("corpus file '" + path + "' has no formulas");
  return out;
}

FiniteFrame named_frame(const std::string& kind, std::size_t n, std::size_t k) {
  if (kind == "chain") return chain_frame(n);
  if (kind == "cluster") return cluster_frame(n);
  if (kind == "lollipop") return lollipop_frame(n);
  if (kind == "partition") return partition_lattice_frame(n);
  if (kind == "prepartition") return prepartition_frame(n, k);
  throw Error("unknown frame kind '" + kind + "'");
}

void print_verdict(std::ostream& out, const Verdict& v, bool text) {
  if (!text) {
    auto j = ordered_json::parse(v.to_json());
    ordered_json o;
    o["verdict"] = v.summary();
    for (auto& [key, value] : j.items()) o[key] = value;
    out << o.dump(2) << "\n";
    return;
  }
  out << v.summary() << "\n";
  if (v.countermodel) {
    const auto& c = *v.countermodel;
    out << "countermodel on " << c.frame.name() << " at " << c.frame.label(c.countermodel.node) << "\n";
    for (std::size_t p = 0; p < c.countermodel.valuation.size(); ++p) {
      out << "  p" << p << " true at:";
      for (std::size_t u = 0; u < c.frame.size(); ++u)
        if (c.countermodel.valuation[p][u]) out << " " << c.frame.label(u);
      out << "\n";
    }
  }
  if (v.substitution)
    for (const auto& [p, f] : *v.substitution) out << "p" << p << " := " << to_string(f) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modal logic of equality over Kripke categories of sets", "modeq"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "human-readable output");
  bool json = false;
  app.add_flag("--json", json, "JSON output (default)");
  app.fallthrough();
  std::uint64_t budget = 2'000'000;
  app.add_option("--budget", budget, "SAT conflict budget per search");

  std::string formula;
  WorldFlags wf;
  std::size_t N = 0;
  std::string pattern;
  std::string axiom_name;

  auto* parse_cmd = app.add_subcommand("parse", "parse and print a formula");
  bool as_prop = false;
  parse_cmd->add_flag("--prop", as_prop, "propositional modal formula");
  parse_cmd->add_option("formula", formula)->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "eliminate modalities and quantifiers");
  add_world_flags(normalize_cmd, wf, false);
  normalize_cmd->add_option("formula", formula)->required();

  auto* eval_cmd = app.add_subcommand("eval", "truth value at a world");
  add_world_flags(eval_cmd, wf, true);
  eval_cmd->add_option("--pattern", pattern, "pattern of x0..x_{m-1}, e.g. {0 1}{2}");
  eval_cmd->add_option("formula", formula)->required();

  auto* frame_cmd = app.add_subcommand("frame", "finite frames and frame validity");
  std::string frame_kind = "chain";
  std::size_t frame_n = 1, frame_k = 1;
  std::optional<std::size_t> frame_root;
  frame_cmd->add_option("--kind", frame_kind, "chain|cluster|lollipop|partition|prepartition");
  frame_cmd->add_option("--n", frame_n, "frame size parameter");
  frame_cmd->add_option("--k", frame_k, "cluster size for prepartition frames");
  frame_cmd->add_option("--root", frame_root, "check at this node only");
  frame_cmd->add_option("--axiom", axiom_name, "axiom name (K, T, 4, 5, Grz, .2, .3, Triv, Jn)");
  frame_cmd->add_option("formula", formula);

  auto* validity_cmd = app.add_subcommand("validity", "membership in the validities of a world");
  add_world_flags(validity_cmd, wf, true);
  std::string theory_name;
  validity_cmd->add_option("--threshold", N, "oracle size threshold N (0: default)");
  validity_cmd->add_option("--axiom", axiom_name, "axiom name instead of a formula");
  validity_cmd->add_option("--theory", theory_name, "decide in a named theory instead, e.g. Grz.3J(3)");
  validity_cmd->add_option("formula", formula);

  auto* table_cmd = app.add_subcommand("table", "reproduce the classification table");
  std::string corpus_path;
  std::vector<std::uint32_t> sizes{0, 1, 2, 3, 4};
  bool no_omega = false;
  unsigned threads = 0;
  table_cmd->add_option("--corpus", corpus_path, "file of 'name: formula' lines");
  table_cmd->add_option("--threshold", N, "oracle size threshold N (0: per formula)");
  table_cmd->add_option("--sizes", sizes, "finite world sizes")->delimiter(',');
  table_cmd->add_flag("--no-omega", no_omega, "skip infinite worlds of the all-sets regime");
  table_cmd->add_option("--threads", threads, "worker threads (0: all cores)");

  auto* control_cmd = app.add_subcommand("control", "check a control claim file");
  std::string claim_path;
  control_cmd->add_option("claim", claim_path, "JSON claim file")->required();

  auto* labeling_cmd = app.add_subcommand("labeling", "verify a preset labeling");
  std::string preset = "partition";
  std::size_t preset_n = 2;
  labeling_cmd->add_option("--preset", preset)->check(CLI::IsMember({"lollipop", "partition"}));
  labeling_cmd->add_option("--n", preset_n, "frame size parameter");
  labeling_cmd->add_option("--threshold", N, "oracle size threshold N (0: default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (json) text = false;

  try {
    if (*parse_cmd) {
      ordered_json j;
      if (as_prop) {
        auto f = parse_prop(formula);
        j["formula"] = to_string(f);
        j["ast_size"] = ast_size(f);
        j["variables"] = prop_var_count(f);
        j["modal_depth"] = modal_depth(f);
      } else {
        auto f = parse_eq(formula);
        j["formula"] = to_string(f);
        j["ast_size"] = ast_size(f);
        j["free_vars"] = free_vars(f);
        j["modal_depth"] = modal_depth(f);
        j["threshold"] = threshold(f);
      }
      if (text)
        out << j["formula"].get<std::string>() << "\n";
      else
        out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*normalize_cmd) {
      auto f = parse_eq(formula);
      auto t = eliminate(f, category(wf));
      auto nf = to_normal_formula(*t);
      if (text) {
        out << to_string(nf) << "\n" << ordered_json::parse(table_json(*t)).dump(2) << "\n";
      } else {
        ordered_json j;
        j["normal_form"] = to_string(nf);
        j["table"] = ordered_json::parse(table_json(*t));
        out << j.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*eval_cmd) {
      auto f = parse_eq(formula);
      SetPartition p;
      if (!pattern.empty()) {
        p = SetPartition::parse(pattern);
      } else {
        auto fv = free_vars(f);
        p = SetPartition::discrete(fv.empty() ? 0 : static_cast<std::size_t>(*fv.rbegin()) + 1);
      }
      auto cat = category(wf);
      bool v = evaluate_named(f, cat, world_size(wf), p);
      out << (v ? "true" : "false") << "\n";
      return kExitOk;
    }

    if (*frame_cmd) {
      auto fr = named_frame(frame_kind, frame_n, frame_k);
      if (formula.empty() && axiom_name.empty()) {
        out << (text ? fr.name() + " with " + std::to_string(fr.size()) + " nodes"
                     : ordered_json::parse(fr.to_json()).dump(2))
            << "\n";
        return kExitOk;
      }
      auto phi = axiom_name.empty() ? parse_prop(formula) : axiom_from_flag(axiom_name);
      FrameCheckOptions opts;
      opts.root = frame_root;
      opts.budget = budget;
      auto r = frame_valid(fr, phi, opts);
      if (text) {
        out << (r.valid ? "valid" : "not valid") << "\n";
        if (r.countermodel) out << countermodel_json(*r.countermodel, fr) << "\n";
      } else {
        ordered_json j;
        j["frame"] = fr.name();
        j["formula"] = to_string(phi);
        j["valid"] = r.valid;
        if (r.countermodel) j["countermodel"] = ordered_json::parse(countermodel_json(*r.countermodel, fr));
        out << j.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*validity_cmd) {
      if (formula.empty() == axiom_name.empty()) throw ArityError("give exactly one of a formula or --axiom");
      auto phi = axiom_name.empty() ? parse_prop(formula) : axiom_from_flag(axiom_name);
      Verdict v = theory_name.empty() ? oracle_decide(world(wf), phi, N, budget)
                                      : decide_in_theory(parse_theory(theory_name), phi, N, budget);
      print_verdict(out, v, text);
      return kExitOk;
    }

    if (*table_cmd) {
      TableOptions opts;
      opts.sizes = sizes;
      opts.include_omega = !no_omega;
      opts.N = N;
      opts.budget = budget;
      opts.threads = threads;
      auto corpus = corpus_path.empty() ? standard_corpus() : read_corpus(corpus_path);
      auto rep = reproduce_table(corpus, opts);
      out << (text ? rep.to_text() : rep.to_json()) << "\n";
      if (rep.skipped > 0 && rep.disagreements == 0) return kExitBudget;
      return rep.disagreements == 0 ? kExitOk : kExitViolation;
    }

    if (*control_cmd) {
      std::ifstream in(claim_path);
      if (!in) throw Error("cannot open claim file '" + claim_path + "'");
      ordered_json j;
      try {
        j = ordered_json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("claim file is not valid JSON: ") + e.what());
      }
      ControlClaim claim{parse_control_kind(j.at("kind").get<std::string>()), {},
                         world_from_json(j.at("world"))};
      for (const auto& f : j.at("formulas")) claim.formulas.push_back(parse_eq(f.get<std::string>()));
      auto r = check_control(claim);
      if (text) {
        out << (r.holds ? "holds" : "fails") << "\n";
        for (const auto& c : r.certificate)
          out << "  " << (c.value ? "ok   " : "FAIL ") << c.condition << ": " << to_string(c.formula) << "\n";
      } else {
        out << r.to_json() << "\n";
      }
      return r.holds ? kExitOk : kExitViolation;
    }

    if (*labeling_cmd) {
      auto l = preset == "lollipop" ? lollipop_labeling(preset_n) : partition_labeling(preset_n);
      auto rep = verify_labeling(l, N);
      if (text) {
        out << (rep.valid ? "valid" : "invalid") << "\n";
        for (std::size_t u = 0; u < l.frame.size(); ++u)
          out << "  " << l.frame.label(u) << (u == l.initial ? " (initial)" : "") << ": "
              << to_string(l.labels[u]) << "\n";
        for (const auto& v : rep.violations) out << "  violation: " << v << "\n";
      } else {
        ordered_json j;
        j["preset"] = preset;
        j["n"] = preset_n;
        j["world"] = to_string(l.world);
        j["valid"] = rep.valid;
        j["labels"] = ordered_json::object();
        for (std::size_t u = 0; u < l.frame.size(); ++u) j["labels"][l.frame.label(u)] = to_string(l.labels[u]);
        j["initial"] = l.frame.label(l.initial);
        j["violations"] = rep.violations;
        out << j.dump(2) << "\n";
      }
      return rep.valid ? kExitOk : kExitViolation;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed claim: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace modeq
