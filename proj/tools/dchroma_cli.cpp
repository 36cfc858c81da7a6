#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dchroma/coloring.hpp"
#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/motion.hpp"
#include "dchroma/recipes.hpp"

using namespace dchroma;
using json = nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 7;
  std::uint64_t budget_nodes = 100'000'000;
  double budget_secs = 0;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";

  SearchOptions search() const {
    SearchOptions o;
    o.node_budget = budget_nodes;
    o.time_budget_secs = budget_secs;
    return o;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_json_path(const std::string& path) { return path.ends_with(".json"); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Graph load_graph(const std::string& path) {
  const std::string text = slurp(path);
  return is_json_path(path) ? graph_from_json(parse_json(text)) : graph_from_text(text);
}

Coloring load_coloring(const std::string& path, std::size_t n) {
  const std::string text = slurp(path);
  if (!is_json_path(path)) return coloring_from_text(text, n);
  Coloring c = coloring_from_json(parse_json(text));
  if (c.size() != n) throw Error(ErrorCode::ParseError, "coloring size does not match the graph");
  return c;
}

void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + g.out);
  f << text;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// TSV: checks become rows, otherwise one key/value row per top-level field.
std::string to_tsv(const json& j) {
  std::ostringstream s;
  if (j.contains("checks")) {
    s << "criterion\tpass\tname\n";
    for (const auto& c : j["checks"]) s << c["criterion"] << '\t' << c["pass"] << '\t' << scalar(c["name"]) << '\n';
    return s.str();
  }
  for (const auto& [k, v] : j.items()) s << k << '\t' << scalar(v) << '\n';
  return s.str();
}

void emit_report(const Globals& g, json j) {
  j["schema"] = kReportSchema;
  emit_text(g, g.format == "tsv" ? to_tsv(j) : j.dump(2) + "\n");
}

json perm_json(const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameters, "bad integer list: " + s);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinguishing chromatic numbers: graph families, automorphisms, certificates"};
  app.require_subcommand(1);
  Globals G;
  app.add_option("--seed", G.seed, "RNG seed")->capture_default_str();
  app.add_option("--budget-nodes", G.budget_nodes, "automorphism search node budget")->capture_default_str();
  app.add_option("--budget-secs", G.budget_secs, "automorphism search time budget (0 = none)");
  app.add_option("--threads", G.threads, "workers for E(N) and Monte Carlo")->check(CLI::Range(1u, 256u));
  app.add_option("--out", G.out, "output path (default stdout)");
  app.add_option("--format", G.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.fallthrough();

  // family
  auto* family = app.add_subcommand("family", "write a graph from a named family");
  std::string fam;
  int q = 0;
  unsigned k = 0, n = 0, r = 0, s = 0, m = 0, power = 0;
  std::string slopes;
  family->add_option("name", fam, "levi|lg1|kneser|weak|gs|krs|complete|bipartite|cycle|path")->required();
  family->add_option("--q", q);
  family->add_option("--k", k);
  family->add_option("--n", n);
  family->add_option("--r", r);
  family->add_option("--s", s);
  family->add_option("--m", m, "base K_m for weak");
  family->add_option("--power", power, "exponent for weak");
  family->add_option("--slopes", slopes, "comma-separated slope set for gs");

  // aut / chi / chid / verify
  std::string graph_path, coloring_path;
  auto* aut = app.add_subcommand("aut", "automorphism group of a graph");
  aut->add_option("graph", graph_path)->required();
  aut->add_option("--coloring", coloring_path, "restrict to color-preserving automorphisms");
  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  chi->add_option("graph", graph_path)->required();
  auto* chid = app.add_subcommand("chid", "exact distinguishing chromatic number");
  unsigned max_k = 8;
  std::uint64_t coloring_cap = 10'000'000;
  chid->add_option("graph", graph_path)->required();
  chid->add_option("--max-k", max_k)->capture_default_str();
  chid->add_option("--cap", coloring_cap, "coloring enumeration cap")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "check a coloring is proper and distinguishing");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path)->required();

  // motion exact|bound
  auto* motion_cmd = app.add_subcommand("motion", "E(N) certificates and analytic bounds");
  motion_cmd->require_subcommand(1);
  auto* exact = motion_cmd->add_subcommand("exact", "exact E(N) over the color-preserving group of a coloring");
  unsigned t = 2, class_id = 1;
  int levi_q = 0;
  bool pgammal = false, split = false;
  std::uint64_t max_tries = 1000;
  exact->add_option("--graph", graph_path);
  exact->add_option("--coloring", coloring_path);
  exact->add_option("--levi", levi_q, "use LG_q with its point/line coloring and PGL(3,q)");
  exact->add_flag("--pgammal", pgammal, "with --levi, use PGammaL(3,q)");
  exact->add_option("--class", class_id)->capture_default_str();
  exact->add_option("--t", t)->capture_default_str();
  exact->add_flag("--split", split, "run the randomized split search when the certificate holds");
  exact->add_option("--max-tries", max_tries)->capture_default_str();
  auto* bound = motion_cmd->add_subcommand("bound", "analytic upper bounds on E(N)");
  std::string which;
  std::string aut_order = "6";
  std::size_t c1_size = 1;
  bound->add_option("kind", which, "levi|lg1|weak")->required()->check(CLI::IsMember({"levi", "lg1", "weak"}));
  bound->add_option("--q", q);
  bound->add_option("--t", t);
  bound->add_option("--n", n);
  bound->add_option("--k", k);
  bound->add_option("--m", m);
  bound->add_option("--aut-order", aut_order);
  bound->add_option("--c1", c1_size);

  // gs montecarlo
  auto* gs = app.add_subcommand("gs", "slope graph experiments");
  gs->require_subcommand(1);
  auto* mc = gs->add_subcommand("montecarlo", "fraction of S with |Aut(G_S)| = q^2 (q-1)");
  std::uint64_t trials = 50;
  bool exhaustive = false;
  mc->add_option("--q", q)->required();
  mc->add_option("--trials", trials)->capture_default_str();
  mc->add_flag("--exhaustive", exhaustive, "run every S instead of sampling");

  auto* reproduce = app.add_subcommand("reproduce", "run a named recipe of checks");
  std::string recipe;
  reproduce->add_option("recipe", recipe)->required()->check(CLI::IsMember(recipe_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*family) {
      Graph g;
      if (fam == "levi") g = levi_graph(q);
      else if (fam == "lg1") g = levi_order1(k, n);
      else if (fam == "kneser") g = kneser_complement(n, r);
      else if (fam == "weak") g = weak_power(complete_graph(m), power);
      else if (fam == "gs") g = slope_graph(q, parse_int_list(slopes)).first;
      else if (fam == "krs") g = levi_tensor_krs(q, r, s).first;
      else if (fam == "complete") g = complete_graph(n);
      else if (fam == "bipartite") g = complete_bipartite(r, s);
      else if (fam == "cycle") g = cycle_graph(n);
      else if (fam == "path") g = path_graph(n);
      else throw Error(ErrorCode::InvalidParameters, "unknown family: " + fam);
      // Graph text unless JSON is asked for explicitly.
      const bool as_json = app.get_option("--format")->count() > 0 && G.format == "json";
      emit_text(G, as_json ? graph_to_json(g).dump() + "\n" : graph_to_text(g));
    } else if (*aut) {
      const Graph g = load_graph(graph_path);
      AutResult res = coloring_path.empty()
                          ? automorphism_group(g, {}, G.search())
                          : color_preserving_automorphisms(g, load_coloring(coloring_path, g.order()), G.search());
      json gens = json::array();
      for (const auto& p : res.generators) gens.push_back(perm_json(p));
      emit_report(G, {{"command", "aut"}, {"order", res.order.str()}, {"complete", res.complete}, {"generators", gens}});
    } else if (*chi) {
      const Graph g = load_graph(graph_path);
      emit_report(G, {{"command", "chi"}, {"vertices", g.order()}, {"chi", chromatic_number(g, G.search())}});
    } else if (*chid) {
      const Graph g = load_graph(graph_path);
      ChiDOptions opts;
      opts.search = G.search();
      opts.coloring_cap = coloring_cap;
      opts.stored_witnesses = 0;
      const auto res = distinguishing_chromatic_number(g, max_k, opts);
      json certs = json::array();
      for (const auto& c : res.certificates)
        certs.push_back({{"k", c.k}, {"exhaustive", c.exhaustive}, {"colorings", c.colorings}});
      json j{{"command", "chid"}, {"chi", res.chromatic}, {"certificates", certs}};
      j["chi_D"] = res.value ? json(*res.value) : json("unknown");
      if (res.witness) j["witness"] = res.witness->colors();
      emit_report(G, j);
    } else if (*verify) {
      const Graph g = load_graph(graph_path);
      const Coloring c = load_coloring(coloring_path, g.order());
      const auto d = is_distinguishing(g, c, G.search());
      json j{{"command", "verify"}, {"proper", is_proper(g, c)}, {"distinguishing", d.distinguishing}, {"colors", c.k()}};
      if (d.witness) j["witness"] = perm_json(*d.witness);
      emit_report(G, j);
    } else if (*exact) {
      Graph g;
      Coloring c;
      GroupSpec group{0, {}};
      if (levi_q) {
        g = levi_graph(levi_q);
        std::vector<std::uint32_t> colors(g.order());
        for (Vertex v = 0; v < g.order(); ++v) colors[v] = (*g.sides())[v] + 1u;
        c = Coloring(colors);
        group = pgammal ? pgammal3_action(levi_q) : pgl3_action(levi_q);
      } else {
        if (graph_path.empty() || coloring_path.empty())
          throw Error(ErrorCode::InvalidParameters, "motion exact needs --levi or --graph with --coloring");
        g = load_graph(graph_path);
        c = load_coloring(coloring_path, g.order());
        group = GroupSpec{g.order(), color_preserving_automorphisms(g, c, G.search()).generators};
      }
      group.ensure_elements();
      MotionReport rep = exact_expected_fixers(*group.elements, c.color_class(class_id), t, G.threads);
      if (group.elements->size() > 1) rep.motion = motion(*group.elements);
      json j = motion_report_to_json(rep);
      j["command"] = "motion exact";
      j["seed"] = G.seed;
      if (split && rep.lemma_satisfied) {
        const auto res = randomized_split_search(g, c, class_id, t, rep, G.seed, max_tries, G.search());
        j["split"] = {{"tries", res.tries}, {"coloring", res.coloring.colors()}};
      }
      emit_report(G, j);
    } else if (*bound) {
      HalfPowerBound b;
      if (which == "levi") b = levi_bound(q, t);
      else if (which == "lg1") b = lg1_bound(n, k);
      else b = weak_bound(m, BigInt(aut_order), n, c1_size);
      json j = bound_to_json(b);
      j["command"] = "motion bound " + which;
      if (which == "levi") j["log2_form"] = levi_bound_log2_form(q, t);
      emit_report(G, j);
    } else if (*mc) {
      const auto rep = favorable_fraction(q, trials, G.seed, exhaustive ? FavorableMode::ExactSmall : FavorableMode::MonteCarlo,
                                          G.search(), G.threads);
      json j = favorable_to_json(rep);
      j["command"] = "gs montecarlo";
      emit_report(G, j);
    } else if (*reproduce) {
      RecipeConfig cfg;
      cfg.seed = G.seed;
      cfg.search = G.search();
      cfg.threads = G.threads;
      const json rep = run_recipe(recipe, cfg);
      emit_report(G, rep);
      return rep["pass"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
