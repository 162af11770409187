// Copyright 2026 The antiembed Authors
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


// Command-line front end. Exit codes: 0 success, 1 negative answer
// (witness found, tree absent, sweep failed), 2 certified refusal,
// 3 inconclusive, 4 internal assertion, 64 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "antiembed/antitree.hpp"
#include "antiembed/convex.hpp"
#include "antiembed/embedder.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/freeness.hpp"
#include "antiembed/generators.hpp"
#include "antiembed/oracle.hpp"
#include "antiembed/subdigraph.hpp"
#include "antiembed/sweep.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace antiembed;

constexpr int kBadInput = 64;

struct Globals {
  std::uint64_t seed = 20261018;
  int jobs = 0;
  bool json = false;
};

AntiTree load_tree(const std::string& path) { return validate_antitree(read_graph_file(path).graph); }

json map_pairs(const Embedding& e) {
  json pairs = json::array();
  for (std::size_t i = 0; i < e.map.size(); ++i) pairs.push_back({static_cast<int>(i), e.map[i]});
  return pairs;
}

json witness_json(const ForbiddenWitness& w) {
  return {{"a", w.a},
          {"b", w.b},
          {"sign_a", std::string(1, sign_char(w.sign_a))},
          {"sign_b", std::string(1, sign_char(w.sign_b))},
          {"common", w.common}};
}

ConvexDigraph convex_from(const Digraph& d, const std::string& order) {
  if (order == "id") return ConvexDigraph::with_id_order(d);
  if (order.rfind("random:", 0) == 0) {
    return ConvexDigraph::with_random_order(d, std::stoull(order.substr(7)));
  }
  throw InvalidInput("--order must be 'id' or 'random:<seed>'");
}

Arc parse_arc(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',' || ch == ':' || ch == '>' || ch == '-') ch = ' ';
  }
  std::istringstream in(s);
  Arc a;
  if (!(in >> a.tail >> a.head)) throw InvalidInput("cannot parse arc '" + text + "', expected u,v");
  return a;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text << "\n";
}

void print_graph(const Digraph& d, const Globals& g) {
  std::cout << (g.json ? to_json_text(d) : to_arc_list(d));
  if (g.json) std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embed antidirected trees into dense digraphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string tree_path;
  std::string host_path;

  // embed
  auto* embed = app.add_subcommand("embed", "Run the full pipeline");
  bool force_oracle = false;
  bool no_check = false;
  std::uint64_t budget = 2000000;
  std::string trace_path;
  embed->add_option("--tree", tree_path, "Tree file")->required();
  embed->add_option("--host", host_path, "Host file")->required();
  embed->add_flag("--force-oracle", force_oracle, "Answer with the exact search when hypotheses fail");
  embed->add_flag("--no-check", no_check, "Skip the hypothesis checks");
  embed->add_option("--budget", budget, "Node budget of the exact search")->capture_default_str();
  embed->add_option("--trace", trace_path, "Write the trace JSON here");

  // embed-cat
  auto* embed_cat = app.add_subcommand("embed-cat", "Embed a caterpillar via convex drawings");
  std::string mode = "density";
  std::string order = "id";
  embed_cat->add_option("--tree", tree_path)->required();
  embed_cat->add_option("--host", host_path)->required();
  embed_cat->add_option("--mode", mode)->check(CLI::IsMember({"density", "mindeg"}))->capture_default_str();
  embed_cat->add_option("--order", order, "id or random:<seed>")->capture_default_str();

  // good-arcs
  auto* good = app.add_subcommand("good-arcs", "Print the good arcs of a convex host");
  std::string witness_arc;
  good->add_option("--tree", tree_path)->required();
  good->add_option("--host", host_path)->required();
  good->add_option("--order", order, "id or random:<seed>")->capture_default_str();
  good->add_option("--mode", mode)->check(CLI::IsMember({"density", "mindeg"}))->capture_default_str();
  good->add_option("--witness", witness_arc, "Reconstruct the embedding onto this arc (u,v)");

  // check-free
  auto* check_free = app.add_subcommand("check-free", "Test K_{2,s}-freeness");
  int s = 1;
  check_free->add_option("--s", s)->required();
  check_free->add_option("host", host_path, "Host file")->required();

  // select
  auto* select = app.add_subcommand("select", "Select the core subdigraph");
  int k = 0;
  int r = 0;
  select->add_option("--k", k)->required();
  select->add_option("--r", r)->required();
  select->add_option("host", host_path, "Host file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_burr_cmd = gen->add_subcommand("burr", "Extremal host with (k-1)n arcs");
  gen_burr_cmd->add_option("--k", k)->required();
  auto* gen_inc = gen->add_subcommand("incidence", "PG(2,q) incidence host");
  int q = 0;
  gen_inc->add_option("--q", q)->required();
  auto* gen_rand = gen->add_subcommand("random", "Random host above the density bound");
  int n = 0;
  gen_rand->add_option("--n", n)->required();
  gen_rand->add_option("--k", k)->required();
  auto* gen_tree = gen->add_subcommand("tree", "Random antidirected tree");
  std::string shape = "uniform";
  gen_tree->add_option("--k", k)->required();
  gen_tree->add_option("--shape", shape)
      ->check(CLI::IsMember({"uniform", "caterpillar", "two-hub"}))
      ->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact embedding search");
  std::optional<std::uint64_t> oracle_budget;
  oracle->add_option("--tree", tree_path)->required();
  oracle->add_option("--host", host_path)->required();
  oracle->add_option("--budget", oracle_budget, "Node budget");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run an acceptance suite");
  SweepConfig cfg;
  bool list = false;
  sweep->add_option("--suite", cfg.suite, "Suite id");
  sweep->add_flag("--list", list, "List the suites");
  sweep->add_option("--samples", cfg.samples, "Sample count (suite default when omitted)");
  sweep->add_option("--n-max", cfg.n_max, "Largest host order");
  sweep->add_option("--k-max", cfg.k_max, "Largest tree size");
  sweep->add_option("--q", cfg.q, "Plane order");
  sweep->add_option("--output", cfg.output, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*embed) {
      EmbedOptions opt;
      opt.force_oracle = force_oracle;
      opt.check_hypotheses = !no_check;
      opt.fallback_budget = budget;
      const Digraph d = read_graph_file(host_path).graph;
      const AntiTree t = load_tree(tree_path);
      const EmbedOutcome o = embed_antitree(d, t, opt);
      const std::string js = outcome_to_json(o);
      if (!trace_path.empty()) write_file(trace_path, js);
      if (g.json) {
        std::cout << js << "\n";
      } else {
        std::cout << to_string(o.status);
        if (o.tag) std::cout << " [" << to_string(o.tag->branch) << (o.tag->detail.empty() ? "" : " " + o.tag->detail) << "]";
        if (!o.message.empty()) std::cout << ": " << o.message;
        if (o.failure) std::cout << ": " << o.failure->reason;
        std::cout << "\n";
        if (o.embedding) std::cout << map_pairs(*o.embedding).dump() << "\n";
      }
      return o.exit_code();
    }
    if (*embed_cat) {
      const Digraph d = read_graph_file(host_path).graph;
      const AntiTree t = load_tree(tree_path);
      CaterpillarOptions copt;
      if (order != "id") {
        convex_from(d, order);  // validates the --order syntax
        copt.random_order_seed = std::stoull(order.substr(7));
      }
      const Embedding e = mode == "density" ? embed_caterpillar(d, t, copt) : embed_caterpillar_mindeg(d, t, copt);
      std::cout << map_pairs(e).dump() << "\n";
      return 0;
    }
    if (*good) {
      const Digraph d = read_graph_file(host_path).graph;
      const AntiTree t = load_tree(tree_path);
      const ConvexDigraph c = convex_from(d, order);
      const GoodArcTable tab =
          compute_good_arcs(c, t, mode == "density" ? GoodArcVariant::Density : GoodArcVariant::MinDegree);
      json arcs = json::array();
      for (const Arc& a : tab.final_good()) arcs.push_back({a.tail, a.head});
      json out = {{"order", c.order()}, {"good", arcs}, {"lower_bound", tab.lower_bound()}};
      if (!witness_arc.empty()) {
        const Arc a = parse_arc(witness_arc);
        if (!tab.is_good(a)) throw InvalidInput("arc " + witness_arc + " is not good");
        out["witness"] = map_pairs(tab.witness(a));
      }
      std::cout << out.dump(g.json ? -1 : 2) << "\n";
      return 0;
    }
    if (*check_free) {
      const Digraph d = read_graph_file(host_path).graph;
      const auto w = find_k2s(d, s);
      if (!w) {
        std::cout << (g.json ? "{\"free\":true}" : "free") << "\n";
        return 0;
      }
      std::cout << json{{"free", false}, {"witness", witness_json(*w)}}.dump() << "\n";
      return 1;
    }
    if (*select) {
      const Digraph d = read_graph_file(host_path).graph;
      const SelectionResult sel = select_subdigraph(d, k, r);
      const SelectionAudit& a = sel.audit;
      json out = {{"case", to_string(sel.tag)},
                  {"witness_vertex", sel.witness_vertex},
                  {"audit",
                   {{"arcs", a.arcs},
                    {"plus_count", a.plus_count},
                    {"minus_count", a.minus_count},
                    {"min_pair_sum", a.min_pair_sum},
                    {"pseudo_out", a.pseudo_out},
                    {"pseudo_in", a.pseudo_in},
                    {"max_out", a.max_out},
                    {"max_in", a.max_in},
                    {"density_condition", a.density_condition},
                    {"pair_sum_condition", a.pair_sum_condition},
                    {"case_i", a.case_i},
                    {"case_ii", a.case_ii}}}};
      if (g.json) out["sub"] = json::parse(to_json_text(sel.sub));
      std::cout << out.dump(g.json ? -1 : 2) << "\n";
      return 0;
    }
    if (*gen) {
      if (*gen_burr_cmd) print_graph(gen_burr(k), g);
      if (*gen_inc) print_graph(gen_incidence(q), g);
      if (*gen_rand) print_graph(gen_random_dense(n, k, g.seed), g);
      if (*gen_tree) {
        const AntiTree t = shape == "caterpillar" ? random_caterpillar(k, g.seed)
                           : shape == "two-hub"   ? random_two_hub_antitree(k, g.seed)
                                                  : random_antitree(k, g.seed);
        print_graph(t.digraph(), g);
      }
      return 0;
    }
    if (*oracle) {
      const Digraph d = read_graph_file(host_path).graph;
      const AntiTree t = load_tree(tree_path);
      const SearchStats st = oracle_embed(d, t, oracle_budget);
      json out = {{"verdict", to_string(st.verdict)},
                  {"nodes_expanded", st.nodes_expanded},
                  {"max_depth", st.max_depth},
                  {"elapsed_ms", st.elapsed_ms}};
      if (st.witness) out["embedding"] = map_pairs(*st.witness);
      std::cout << out.dump(g.json ? -1 : 2) << "\n";
      return st.verdict == Verdict::Embeds ? 0 : st.verdict == Verdict::NotContained ? 1 : 3;
    }
    if (*sweep) {
      if (list) {
        for (const SuiteInfo& si : sweep_suites()) {
          std::cout << si.id << "  (criterion " << si.criterion << ")  " << si.description << "\n";
        }
        return 0;
      }
      cfg.seed = g.seed;
      cfg.jobs = g.jobs;
      const SweepReport rep = run_sweep(cfg);
      std::cout << (g.json ? rep.json : rep.summary) << "\n";
      return rep.pass ? 0 : 1;
    }
  } catch (const InternalAssertion& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadInput;
  }
  return 0;
}
