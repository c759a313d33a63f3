#include "srn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srn/arrowing.hpp"
#include "srn/edge_coloring.hpp"
#include "srn/free_coloring.hpp"
#include "srn/graph6.hpp"
#include "srn/ramsey.hpp"

namespace srn {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;

// Graph inputs: "g6:<code>", "edgelist:<path>" or "edgelist:-" for stdin.
Graph read_graph_spec(const std::string& spec, std::istream& in) {
  if (spec.rfind("g6:", 0) == 0) return graph6_decode(spec.substr(3));
  if (spec.rfind("edgelist:", 0) == 0) {
    std::string path = spec.substr(9);
    if (path == "-") return edge_list_decode(in);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open edge list file: " + path);
    return edge_list_decode(file);
  }
  throw std::invalid_argument("graph spec must start with g6: or edgelist:");
}

Json forests_json(const std::vector<StarForest>& forests) {
  Json out = Json::array();
  for (const auto& f : forests) out.push_back(f.sizes);
  return out;
}

Json coloring_json(const Graph& g, const EdgeColoring& c) {
  Json out = Json::array();
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out.push_back(Json{{"edge", {edges[i].first, edges[i].second}}, {"color", c.colors[i]}});
  return out;
}

Json edge_classes_json(const Graph& g, const std::vector<int>& colors, int count) {
  Json classes = Json::array();
  auto edges = g.edges();
  for (int c = 0; c < count; ++c) {
    Json cls = Json::array();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (colors[i] == c) cls.push_back({edges[i].first, edges[i].second});
    classes.push_back(std::move(cls));
  }
  return classes;
}

Json factors_json(const std::vector<std::vector<Edge>>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) {
    Json fj = Json::array();
    for (auto [u, v] : f) fj.push_back({u, v});
    out.push_back(std::move(fj));
  }
  return out;
}

std::string render_text(const Json& j, int indent = 0) {
  std::string pad(indent, ' ');
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += pad + it.key() + ":";
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     it.value().front().is_structured())) {
        out += "\n" + render_text(it.value(), indent + 2);
      } else {
        out += " " + it.value().dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_structured() && !item.is_array())
        out += render_text(item, indent + 2);
      else
        out += pad + "- " + item.dump() + "\n";
    }
  } else {
    out += pad + j.dump() + "\n";
  }
  return out;
}

struct Options {
  std::vector<std::string> forest_specs;
  std::string f1, f2;
  std::string graph_spec;
  std::string output = "json";
  std::uint64_t budget = SearchBudget{}.max_nodes;
  long long time_limit_ms = 0;
  int threads = 1;
  int max_edges = kDefaultEnumerationBudget;
  int enum_budget = kDefaultEnumerationBudget;
  int lemma_n = 0, lemma_m = 0;
  unsigned seed = 0;
  bool all_matches = false;
  bool no_symmetry_breaking = false;
};

std::vector<StarForest> collect_forests(const Options& opt, int minimum) {
  std::vector<StarForest> forests;
  if (!opt.f1.empty()) forests.push_back(StarForest::parse(opt.f1));
  if (!opt.f2.empty()) forests.push_back(StarForest::parse(opt.f2));
  for (const auto& spec : opt.forest_specs) forests.push_back(StarForest::parse(spec));
  if (static_cast<int>(forests.size()) < minimum)
    throw CLI::ValidationError("need at least " + std::to_string(minimum) +
                               " forests (--f1/--f2/--fi)");
  return forests;
}

SearchBudget search_budget(const Options& opt) {
  SearchBudget b;
  b.max_nodes = opt.budget;
  b.max_time = std::chrono::milliseconds(opt.time_limit_ms);
  b.threads = opt.threads;
  b.symmetry_breaking = !opt.no_symmetry_breaking;
  return b;
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  if (opt.output == "text")
    out << render_text(report);
  else
    out << report.dump() << '\n';
}

int cmd_formula(const Options& opt, std::ostream& out) {
  auto forests = collect_forests(opt, 1);
  auto ls = l_sequence(forests);
  Json report{{"command", "formula"}, {"forests", forests_json(forests)}};
  report["l_sequence"] = ls.values;
  report["total"] = ls.total;
  if (forests.size() == 2) {
    auto cls = classify_instance(forests[0], forests[1]);
    report["covered_by"] = to_string(cls.kind);
    report["status"] = cls.proved() ? "proved" : "conjectured";
    if (opt.all_matches) {
      Json matches = Json::array();
      for (const auto& m : all_matching_classes(forests[0], forests[1]))
        matches.push_back(Json{{"class", to_string(m.kind)}, {"details", m.details}});
      report["all_matches"] = std::move(matches);
    }
  } else {
    report["covered_by"] = to_string(InstanceClassKind::conjecture_only);
    report["status"] = "conjectured";
  }
  emit(report, opt, out);
  return kExitOk;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  auto forests = collect_forests(opt, 1);
  auto ls = l_sequence(forests);
  Graph w = witness_graph(forests);
  Json report{{"command", "witness"}, {"forests", forests_json(forests)}};
  report["l_sequence"] = ls.values;
  report["total"] = ls.total;
  report["graph6"] = graph6_encode(w);
  report["vertex_count"] = w.vertex_count();
  report["edge_count"] = w.edge_count();
  emit(report, opt, out);
  return kExitOk;
}

int cmd_arrows(const Options& opt, std::istream& in, std::ostream& out) {
  auto forests = collect_forests(opt, 1);
  Graph g = read_graph_spec(opt.graph_spec, in);
  auto verdict = arrows_with_certificate_check(g, forests, search_budget(opt));

  Json report{{"command", "arrows"}, {"graph6", graph6_encode(g)},
              {"forests", forests_json(forests)}};
  report["verdict"] = to_string(verdict.status);
  report["colorings_explored"] = verdict.colorings_explored;
  if (verdict.counterexample)
    report["counterexample"] = coloring_json(g, *verdict.counterexample);
  emit(report, opt, out);
  switch (verdict.status) {
    case ArrowStatus::arrows: return kExitOk;
    case ArrowStatus::does_not_arrow: return kExitNegative;
    case ArrowStatus::undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

int cmd_free_color(const Options& opt, std::istream& in, std::ostream& out) {
  Graph g = read_graph_spec(opt.graph_spec, in);
  Json report{{"command", "free-color"}, {"graph6", graph6_encode(g)},
              {"n", opt.lemma_n}, {"m", opt.lemma_m}};
  try {
    auto lemma = lemma_free_coloring(g, opt.lemma_n, opt.lemma_m);
    int red_max = 0, blue_max = 0;
    std::vector<int> red_deg(g.vertex_count(), 0), blue_deg(g.vertex_count(), 0);
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto& deg = lemma.coloring.colors[i] == 0 ? red_deg : blue_deg;
      ++deg[edges[i].first];
      ++deg[edges[i].second];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      red_max = std::max(red_max, red_deg[v]);
      blue_max = std::max(blue_max, blue_deg[v]);
    }
    report["branch"] = lemma.branch;
    report["coloring"] = coloring_json(g, lemma.coloring);
    report["max_degree_red"] = red_max;
    report["max_degree_blue"] = blue_max;
    emit(report, opt, out);
    return kExitOk;
  } catch (const LemmaHypothesesError& e) {
    report["error"] = "lemma-hypotheses-not-met";
    report["message"] = e.what();
    emit(report, opt, out);
    return kExitNegative;
  }
}

int cmd_edge_color(const Options& opt, std::istream& in, std::ostream& out) {
  Graph g = read_graph_spec(opt.graph_spec, in);
  auto pec = proper_edge_coloring(g);
  Json report{{"command", "edge-color"}, {"graph6", graph6_encode(g)}};
  report["max_degree"] = max_degree(g);
  report["bipartite"] = bipartition(g).has_value();
  report["color_count"] = pec.color_count;
  report["classes"] = edge_classes_json(g, pec.colors, pec.color_count);
  emit(report, opt, out);
  return kExitOk;
}

int cmd_two_factor(const Options& opt, std::istream& in, std::ostream& out) {
  Graph g = read_graph_spec(opt.graph_spec, in);
  Json report{{"command", "two-factor"}, {"graph6", graph6_encode(g)}};
  try {
    auto tf = two_factorize(g);
    report["factor_count"] = static_cast<int>(tf.factors.size());
    report["factors"] = factors_json(tf.factors);
    emit(report, opt, out);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    report["error"] = "not-even-regular";
    report["message"] = e.what();
    emit(report, opt, out);
    return kExitNegative;
  }
}

int cmd_search(const Options& opt, std::ostream& out) {
  auto forests = collect_forests(opt, 1);
  ExhaustiveOptions options;
  options.max_edges = opt.max_edges;
  options.enum_budget = opt.enum_budget;  // library rejects max_edges above this
  options.per_graph = search_budget(opt);
  options.per_graph.threads = 1;
  options.threads = opt.threads;
  auto result = size_ramsey_exhaustive(forests, options);

  Json report{{"command", "search"}, {"forests", forests_json(forests)},
              {"max_edges", opt.max_edges}};
  report["value"] = result.value ? Json(*result.value) : Json(nullptr);
  Json graphs = Json::array();
  for (const auto& g : result.minimal_graphs) graphs.push_back(graph6_encode(g));
  report["minimal_graphs"] = std::move(graphs);
  report["status"] = !result.complete ? "partial" : (result.value ? "exact" : "not-found");
  emit(report, opt, out);
  if (!result.complete) return kExitUndecided;
  return result.value ? kExitOk : kExitNegative;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  auto forests = collect_forests(opt, 2);
  if (forests.size() != 2) throw CLI::ValidationError("verify takes exactly two forests");
  ExhaustiveOptions options;
  options.enum_budget = opt.enum_budget;
  options.per_graph = search_budget(opt);
  options.per_graph.threads = 1;
  options.threads = opt.threads;

  Json report{{"command", "verify"}, {"forests", forests_json(forests)}};
  CharacterizationReport rep;
  try {
    rep = verify_characterization(forests[0], forests[1], options);
  } catch (const std::invalid_argument& e) {
    report["error"] = "no-characterization";
    report["message"] = e.what();
    report["covered_by"] = to_string(classify_instance(forests[0], forests[1]).kind);
    emit(report, opt, out);
    return kExitNegative;
  }
  report["covered_by"] = to_string(rep.cls.kind);
  report["conjectured_total"] = rep.conjectured_total;
  report["exhaustive_value"] = rep.exhaustive_value ? Json(*rep.exhaustive_value) : Json(nullptr);
  Json predicted = Json::array(), found = Json::array();
  for (const auto& g : rep.predicted) predicted.push_back(graph6_encode(g));
  for (const auto& g : rep.found) found.push_back(graph6_encode(g));
  report["predicted"] = std::move(predicted);
  report["found"] = std::move(found);
  report["equal"] = rep.equal;
  report["status"] = rep.complete ? "complete" : "partial";
  if (!rep.discrepancies.empty()) report["discrepancies"] = rep.discrepancies;
  emit(report, opt, out);
  if (!rep.complete) return kExitUndecided;
  return rep.equal ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"size Ramsey numbers of star forests", "srn"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("SRN_THREADS")) opt.threads = std::atoi(env);
  if (opt.threads < 1) opt.threads = 1;

  auto add_common = [&](CLI::App* cmd, bool with_graph, int forest_min) {
    if (with_graph)
      cmd->add_option("--graph", opt.graph_spec, "g6:<code>, edgelist:<path> or edgelist:-")
          ->required();
    if (forest_min >= 0) {
      cmd->add_option("--f1", opt.f1, "first forest, comma-separated star sizes");
      cmd->add_option("--f2", opt.f2, "second forest");
      cmd->add_option("--fi", opt.forest_specs, "extra forests (repeatable)");
    }
    cmd->add_option("--output", opt.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", opt.seed, "seed recorded for reproducibility");
    cmd->add_option("--threads", opt.threads, "worker threads (default SRN_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", opt.budget, "max colorings explored per arrowing search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", opt.time_limit_ms, "wall clock limit per search, ms")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--no-symmetry-breaking", opt.no_symmetry_breaking,
                  "explore color swaps between equal forests");
  };

  auto* formula = app.add_subcommand("formula", "evaluate the l-sequence and conjectured value");
  add_common(formula, false, 1);
  formula->add_flag("--all-matches", opt.all_matches, "list every covering theorem");

  auto* witness = app.add_subcommand("witness", "build the star-union upper-bound graph");
  add_common(witness, false, 1);

  auto* arrows_cmd = app.add_subcommand("arrows", "decide G -> (F1,...,Fq) exactly");
  add_common(arrows_cmd, true, 1);

  auto* free_color = app.add_subcommand("free-color", "construct a (K_{1,n},K_{1,m})-free coloring");
  add_common(free_color, true, -1);
  free_color->add_option("--n", opt.lemma_n, "red star size")->required();
  free_color->add_option("--m", opt.lemma_m, "blue star size")->required();

  auto* edge_color = app.add_subcommand("edge-color", "proper edge coloring");
  add_common(edge_color, true, -1);

  auto* two_factor = app.add_subcommand("two-factor", "split an even-regular graph into 2-factors");
  add_common(two_factor, true, -1);

  auto* search = app.add_subcommand("search", "exhaustive size Ramsey computation");
  add_common(search, false, 1);
  search->add_option("--max-edges", opt.max_edges, "largest edge count to scan")
      ->check(CLI::PositiveNumber);
  search->add_option("--enum-budget", opt.enum_budget, "enumeration budget cap")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a predicted extremal family exhaustively");
  add_common(verify, false, 2);
  verify->add_option("--enum-budget", opt.enum_budget, "enumeration budget cap")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (opt.threads < 1) opt.threads = 1;

  try {
    if (formula->parsed()) return cmd_formula(opt, out);
    if (witness->parsed()) return cmd_witness(opt, out);
    if (arrows_cmd->parsed()) return cmd_arrows(opt, in, out);
    if (free_color->parsed()) return cmd_free_color(opt, in, out);
    if (edge_color->parsed()) return cmd_edge_color(opt, in, out);
    if (two_factor->parsed()) return cmd_two_factor(opt, in, out);
    if (search->parsed()) return cmd_search(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace srn
