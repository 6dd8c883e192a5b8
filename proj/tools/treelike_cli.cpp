// Copyright 2026 The treelike Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// treelike: command-line front end.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 precondition violated
// (class precondition, disconnected input), 3 conjecture finding, 4 internal
// invariant breach, 5 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treelike/treelike.hpp"

namespace {

using nlohmann::json;
using namespace treelike;

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kFinding = 3, kInvariant = 4, kBudget = 5 };

struct Common {
  bool json = false;
  unsigned parallel = 1;
  std::optional<long> budget_ms;
  std::string format = "auto";
};

Budget make_budget(const Common& c) {
  Budget b;
  std::optional<long> ms = c.budget_ms;
  if (!ms) {
    if (const char* env = std::getenv("HYP_BUDGET_MS")) ms = std::strtol(env, nullptr, 10);
  }
  if (ms && *ms > 0) b.time_limit = std::chrono::milliseconds(*ms);
  return b;
}

Graph read_graph(const std::string& path, const Common& c) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  GraphFormat format = GraphFormat::kAuto;
  if (c.format == "edgelist") format = GraphFormat::kEdgeList;
  if (c.format == "graph6") format = GraphFormat::kGraph6;
  ParseResult r = parse_graph(text, format);
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
  return r.graph;
}

json witness_json(const std::optional<Quadruple>& w) {
  if (!w) return nullptr;
  return json::array({(*w)[0], (*w)[1], (*w)[2], (*w)[3]});
}

json report_json(const ClassificationReport& r) {
  json obs = json::array();
  for (const Obstruction& o : r.obstructions_found) obs.push_back({{"pattern", o.pattern}, {"image", o.image}});
  json j = {{"theorem", r.theorem},
            {"applicable", r.applicable},
            {"claim", r.claim},
            {"predicted", r.predicted},
            {"observed", r.observed},
            {"obstructions", obs},
            {"delta_star_doubled", r.direct.delta_star.doubled()},
            {"delta_star", r.direct.delta_star.str()},
            {"witness", witness_json(r.direct.witness)},
            {"agrees", r.agrees}};
  if (r.bc) {
    j["bc"] = {{"no_long_isometric_cycle", r.bc->no_long_isometric_cycle},
               {"closer_neighbors_adjacent", r.bc->closer_neighbors_adjacent},
               {"no_pattern", r.bc->no_pattern}};
    if (r.bc->isometric_cycle) j["bc"]["isometric_cycle"] = *r.bc->isometric_cycle;
    if (r.bc->neighbor_witness) j["bc"]["neighbor_witness"] = *r.bc->neighbor_witness;
  }
  return j;
}

std::string quad_str(const std::optional<Quadruple>& w) {
  if (!w) return "none";
  std::ostringstream os;
  os << "(" << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << "," << (*w)[3] << ")";
  return os.str();
}

std::string seq_str(const std::vector<Vertex>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
  return os.str();
}

int cmd_compute(const std::string& path, bool with_tl, const Common& c) {
  Graph g = read_graph(path, c);
  DistanceMatrix dm = all_pairs_distances(g, {.max_vertices = 4096, .threads = c.parallel});
  HypResult h = hyperbolicity(g, dm, {.threads = c.parallel, .stop_at_diameter_bound = true});
  CycleSearchOptions cycles;
  cycles.budget = make_budget(c);
  cycles.threads = c.parallel;
  ChordalityResult lc = longest_induced_cycle(g, cycles);
  std::optional<int> tl;
  if (with_tl) {
    TreeLengthOptions options;
    options.budget = make_budget(c);
    tl = tree_length_exact(g, dm, options).tl;
  }
  if (c.json) {
    json j = {{"n", g.order()},
              {"m", g.size()},
              {"delta_star_doubled", h.delta_star.doubled()},
              {"delta_star", h.delta_star.str()},
              {"witness", witness_json(h.witness)},
              {"lc", lc.lc},
              {"lc_witness", lc.witness_cycle ? json(*lc.witness_cycle) : json(nullptr)},
              {"diameter", diameter(dm)}};
    if (tl) j["tree_length"] = *tl;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "vertices: " << g.order() << "\nedges: " << g.size() << "\ndiameter: " << diameter(dm)
              << "\ndelta*: " << h.delta_star << "\nwitness: " << quad_str(h.witness) << "\nlc: " << lc.lc << "\n";
    if (lc.witness_cycle) std::cout << "longest induced cycle: " << seq_str(*lc.witness_cycle) << "\n";
    if (tl) std::cout << "tree-length: " << *tl << "\n";
  }
  return kOk;
}

int cmd_classify(const std::string& path, const std::string& theorem, bool all, const Common& c) {
  Graph g = read_graph(path, c);
  DistanceMatrix dm = all_pairs_distances(g);
  ClassifyOptions options;
  options.all = all;
  options.cycles.budget = make_budget(c);
  options.hyperbolicity.threads = c.parallel;
  ClassificationReport r = classify(theorem, g, dm, options);
  if (c.json) {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << "theorem: " << r.theorem << "\nclaim: " << r.claim << "\ndelta*: " << r.direct.delta_star
              << "\nwitness: " << quad_str(r.direct.witness) << "\n";
    if (r.obstructions_found.empty()) std::cout << "obstructions: none\n";
    for (const Obstruction& o : r.obstructions_found) std::cout << "obstruction " << o.pattern << ": " << seq_str(o.image) << "\n";
    if (r.bc) {
      std::cout << "isometric cycle > 5: " << (r.bc->no_long_isometric_cycle ? "none" : seq_str(*r.bc->isometric_cycle))
                << "\ncloser neighbours adjacent: " << (r.bc->closer_neighbors_adjacent ? "yes" : "no") << "\n";
    }
    std::cout << "agrees: " << (r.agrees ? "yes" : "no") << "\n";
  }
  return r.agrees ? kOk : kFinding;
}

int cmd_verify(CampaignConfig config, const Common& c) {
  config.threads = c.parallel;
  config.budget = make_budget(c);
  CampaignReport r = run_campaign(config);
  if (c.json) {
    std::cout << json(r).dump(2) << "\n";
  } else {
    std::cout << "campaign: " << r.campaign << "\ninstances: " << r.instances << "\nskipped: " << r.skipped
              << "\nwitness checks: " << r.witness_checks << "\nfailures: " << r.failures.size()
              << "\nfindings: " << r.findings.size() << "\n";
    for (const auto& f : r.failures)
      std::cout << "FAIL " << f.instance << " [" << f.graph << "] expected " << f.expected << ", got " << f.got << "\n";
    for (const auto& f : r.findings)
      std::cout << "FINDING " << f.instance << " [" << f.graph << "] predicted " << f.expected << ", got " << f.got << "\n";
  }
  if (!r.failures.empty()) return kInvariant;
  if (!r.findings.empty()) return kFinding;
  return kOk;
}

int write_graph(const Graph& g, const std::string& out, const std::string& format) {
  const std::string text = format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ArgumentError("cannot write " + out);
    f << text;
  }
  return kOk;
}

int cmd_catalog(bool selftest, bool list, const std::string& export_name, const std::string& out,
                const std::string& format, const Common& c) {
  if (!export_name.empty()) return write_graph(catalog_entry(export_name).graph, out, format);
  if (list) {
    for (const CatalogEntry& e : catalog())
      std::cout << e.name << " " << e.graph.order() << " " << e.graph.size() << " " << e.expected_lc << " "
                << e.expected_delta_star << "\n";
    return kOk;
  }
  if (!selftest) throw ArgumentError("catalog needs --selftest, --list or --export NAME");
  CatalogSelftest st = catalog_selftest(false);
  if (c.json) {
    json entries = json::array();
    for (const CatalogCheck& e : st.entries)
      entries.push_back({{"name", e.name}, {"n", e.vertices}, {"m", e.edges}, {"lc", e.lc}, {"expected_lc", e.expected_lc},
                         {"delta_star_doubled", e.delta_star.doubled()},
                         {"expected_delta_star_doubled", e.expected_delta_star.doubled()}, {"ok", e.ok()}});
    std::cout << json({{"entries", entries}, {"embeds_into", st.embeds_into}, {"isomorphic", st.isomorphic}, {"ok", st.ok()}}).dump(2)
              << "\n";
  } else {
    for (const CatalogCheck& e : st.entries)
      std::cout << (e.ok() ? "ok   " : "FAIL ") << e.name << " n=" << e.vertices << " m=" << e.edges << " lc=" << e.lc
                << " (expected " << e.expected_lc << ") delta*=" << e.delta_star << " (expected " << e.expected_delta_star
                << ")\n";
    for (const auto& [p, q] : st.embeds_into) std::cout << p << " is isometric in " << q << "\n";
  }
  return st.ok() ? kOk : kInvariant;
}

int cmd_treelength(const std::string& path, std::size_t cap, bool probe, const Common& c) {
  Graph g = read_graph(path, c);
  DistanceMatrix dm = all_pairs_distances(g);
  TreeLengthOptions options;
  options.max_vertices = cap;
  options.budget = make_budget(c);
  if (probe) {
    SandwichProbe p = sandwich_probe_question1(g, dm, options);
    if (c.json) {
      std::cout << json({{"lc", p.lc}, {"k", p.k}, {"feasible", p.feasible}}).dump(2) << "\n";
    } else {
      std::cout << "lc: " << p.lc << "\nk: " << p.k << "\nchordal sandwich in G^k: " << (p.feasible ? "yes" : "no") << "\n";
    }
    return p.feasible ? kOk : kFinding;
  }
  TreeLengthResult r = tree_length_exact(g, dm, options);
  TreeLengthBounds b = tree_length_bounds(g, dm);
  json fill = json::array();
  for (const Edge& e : r.witness_triangulation) fill.push_back({e.first, e.second});
  if (c.json) {
    std::cout << json({{"tree_length", r.tl}, {"lower", b.lower}, {"upper", b.upper}, {"triangulation", fill},
                       {"states", r.search_stats.states}}).dump(2)
              << "\n";
  } else {
    std::cout << "tree-length: " << r.tl << "\nbounds: " << b.lower << " <= tl <= " << b.upper
              << "\ntriangulation edges: " << r.witness_triangulation.size() << "\n";
  }
  return kOk;
}

int cmd_diagnose(const std::string& path, const std::vector<std::size_t>& quad, const Common& c) {
  Graph g = read_graph(path, c);
  DistanceMatrix dm = all_pairs_distances(g);
  for (std::size_t v : quad)
    if (v >= g.order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  QuadrangleReport r = quadrangle_diagnostics(g, dm, quad[0], quad[1], quad[2], quad[3], {.orient = true, .throw_on_failure = false});
  if (c.json) {
    json checks = json::array();
    for (const BoundCheck& b : r.bound_checks)
      checks.push_back({{"name", b.name}, {"lhs_doubled", b.lhs.doubled()}, {"rhs_doubled", b.rhs.doubled()}, {"holds", b.holds}});
    json pi = json::array();
    for (HalfInt p : r.pi) pi.push_back(p.doubled());
    std::cout << json({{"x", r.x}, {"y", r.y}, {"u", r.u}, {"v", r.v}, {"side_a", r.side_a}, {"side_b", r.side_b},
                       {"side_c", r.side_c}, {"side_d", r.side_d}, {"delta_doubled", r.delta.doubled()},
                       {"diameter", r.diameter}, {"d_ad", r.d_ad}, {"d_bc", r.d_bc}, {"ringel", r.ringel_holds},
                       {"i", r.i}, {"j", r.j}, {"l", r.l}, {"m", r.m}, {"pi_doubled", pi}, {"a_edges", r.a_edges},
                       {"h_edges", r.h_edges}, {"checks", checks}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << "(x,y,u,v) = (" << r.x << "," << r.y << "," << r.u << "," << r.v << ")\ndelta: " << r.delta
              << "\nP_a: " << seq_str(r.side_a) << "\nP_b: " << seq_str(r.side_b) << "\nP_c: " << seq_str(r.side_c)
              << "\nP_d: " << seq_str(r.side_d) << "\nd(P_a,P_d): " << r.d_ad << "\nd(P_b,P_c): " << r.d_bc
              << "\npairing condition: " << (r.ringel_holds ? "yes" : "no") << "\ni j l m: " << r.i << " " << r.j << " "
              << r.l << " " << r.m << "\npi: " << r.pi[0] << " " << r.pi[1] << " " << r.pi[2] << " " << r.pi[3]
              << "\nA-edges: " << r.a_edges << "\nH-edges: " << r.h_edges << "\n";
    for (const BoundCheck& b : r.bound_checks)
      std::cout << (b.holds ? "ok   " : "FAIL ") << b.name << ": " << b.lhs << " <= " << b.rhs << "\n";
  }
  return r.all_hold() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperbolicity, chordality and tree-length of small graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Machine-readable output");
    sub->add_option("--parallel", common.parallel, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", common.budget_ms, "Time budget in milliseconds (default $HYP_BUDGET_MS)");
    sub->add_option("--format", common.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    auto* pos = sub->add_option("file", input, "Edge-list or graph6 file, - for stdin");
    sub->add_option("--input", input, "Same as the positional file")->excludes(pos);
  };

  auto* compute = app.add_subcommand("compute", "delta*, witness, lc, diameter");
  bool with_tl = false;
  add_input(compute);
  add_common(compute);
  compute->add_flag("--tl", with_tl, "Also compute the exact tree-length");

  auto* classify_cmd = app.add_subcommand("classify", "Obstruction classifier for one theorem");
  std::string theorem;
  bool all = false;
  add_input(classify_cmd);
  add_common(classify_cmd);
  classify_cmd->add_option("--theorem", theorem, "main1, cor7, bkm, atfree, bc or conj14")
      ->required()
      ->check(CLI::IsMember({"main1", "cor7", "bkm", "atfree", "bc", "conj14"}));
  classify_cmd->add_flag("--all", all, "Report every obstruction");

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  CampaignConfig config;
  add_common(verify);
  std::vector<std::string> campaign_names(std::begin(kCampaigns), std::end(kCampaigns));
  verify->add_option("--campaign", config.campaign, "Campaign name")->required()->check(CLI::IsMember(campaign_names));
  verify->add_option("--samples", config.samples, "Random instances");
  verify->add_option("--seed", config.seed, "Seed");
  verify->add_option("--max-n", config.max_n, "Largest random instance");
  verify->add_option("--data-dir", config.data_dir, "Directory with connected<n>.g6 files");

  auto* gen = app.add_subcommand("gen", "Generate a family member");
  std::string family, out, out_format = "edgelist";
  std::vector<std::int64_t> params;
  std::uint64_t seed = 1;
  gen->add_option("--family", family, "Family name")->required();
  gen->add_option("--params", params, "Integer parameters");
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("-o,--output", out, "Output file (default stdout)");
  gen->add_option("--out-format", out_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* cat = app.add_subcommand("catalog", "Named obstruction graphs");
  bool selftest = false, list = false;
  std::string export_name;
  add_common(cat);
  cat->add_flag("--selftest", selftest, "Recompute (lc, delta*) of every entry");
  cat->add_flag("--list", list, "List entries");
  cat->add_option("--export", export_name, "Write one entry");
  cat->add_option("-o,--output", out, "Output file (default stdout)");
  cat->add_option("--out-format", out_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* tl = app.add_subcommand("treelength", "Exact tree-length");
  std::size_t cap = 12;
  bool probe = false;
  add_input(tl);
  add_common(tl);
  tl->add_option("--cap", cap, "Vertex cap of the exact search");
  tl->add_flag("--probe", probe, "Only test for a chordal sandwich in G^ceil(lc/3)");

  auto* diagnose = app.add_subcommand("diagnose", "Geodesic quadrangle report for x y u v");
  std::vector<std::size_t> quad;
  diagnose->add_option("file", input, "Edge-list or graph6 file, - for stdin")->required();
  diagnose->add_option("vertices", quad, "x y u v")->expected(4)->required();
  add_common(diagnose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(input, with_tl, common);
    if (*classify_cmd) return cmd_classify(input, theorem, all, common);
    if (*verify) return cmd_verify(config, common);
    if (*gen) return write_graph(generate({parse_family(family), params, seed}), out, out_format);
    if (*cat) return cmd_catalog(selftest, list, export_name, out, out_format, common);
    if (*tl) return cmd_treelength(input, cap, probe, common);
    if (*diagnose) return cmd_diagnose(input, quad, common);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DisconnectedError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantError& e) {
    std::cerr << "invariant: " << e.what() << "\n";
    return kInvariant;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
