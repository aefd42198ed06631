#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "plucker/acceptance.hpp"
#include "plucker/cache.hpp"
#include "plucker/io.hpp"
#include "plucker/parallel.hpp"
#include "plucker/relations.hpp"
#include "plucker/rep.hpp"
#include "plucker/rewriting.hpp"
#include "plucker/ring.hpp"
#include "plucker/trees.hpp"

using namespace plucker;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitFuel = 70;

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 0;
  int trials = 500;
  int jobs = 0;
  bool no_cache = false;
  std::string cache_dir;
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("PLUCKER_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/plucker";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/plucker";
  return ".plucker-cache";
}

json cache_stats() {
  auto& c = StraightenCache::global();
  return json{{"enabled", c.enabled()}, {"entries", c.size()}, {"hits", c.hits()}, {"misses", c.misses()}};
}

json report(const std::string& command, json inputs, json outputs, double seconds) {
  return json{{"command", command}, {"inputs", std::move(inputs)}, {"outputs", std::move(outputs)}, {"timing", {{"seconds", std::round(seconds * 1000) / 1000}}}, {"cache", cache_stats()}};
}

PointConfig parse_points(const std::string& text, int n) {
  PointConfig p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos)
        p.points.emplace_back(q_from_string(item), Q(1));
      else
        p.points.emplace_back(q_from_string(item.substr(0, colon)), q_from_string(item.substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad point: ") + e.what());
    }
  }
  if (static_cast<int>(p.points.size()) != n) throw ParseError("expected " + std::to_string(n) + " points");
  return p;
}

TrivalentTree tree_of_shape(const std::string& shape, int r) {
  if (shape == "y" || shape == "y-tree") return build_y_tree(r);
  if (shape == "caterpillar") return build_caterpillar(r);
  throw ParseError("unknown tree shape '" + shape + "' (expected y or caterpillar)");
}

MatchingTuple parse_tuple(const std::vector<std::string>& args) {
  MatchingTuple tup;
  for (const auto& a : args) {
    std::stringstream ss(read_arg(a));
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (item.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      try {
        tup.push_back(parse_reduced_matching(item));
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
    }
  }
  if (tup.empty()) throw ParseError("no reduced matchings given");
  return tup;
}

json tuple_json(const MatchingTuple& t) {
  json a = json::array();
  for (const auto& m : t) a.push_back(to_string(m));
  return a;
}

SymElement build_relation(const std::string& kind, const std::string& datum, std::mt19937_64& rng, int n) {
  auto datum_json = [&]() -> json {
    try {
      return json::parse(read_arg(datum));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON datum: ") + e.what());
    }
  };
  if (kind == "segre-cubic") return segre_cubic();
  if (kind == "segre8") return segre8();
  if (kind == "segre8-outer")
    return outer_product(segre_cubic(), {0, 1, 2, 3, 4, 5, 6}, triple_edge(1, 2, 2), {0, 7, 8}, 8);
  if (kind == "simplest-binomial") return simplest_binomial_example();
  if (kind == "simple-binomial") {
    if (datum.empty()) throw ParseError("simple-binomial needs --datum");
    return simple_binomial(binomial_from_json(datum_json()));
  }
  if (kind == "gen-segre") {
    if (!datum.empty()) return generalized_segre(gen_segre_from_json(datum_json()));
    if (n > 0) return generalized_segre(random_gen_segre_datum(n, rng));
    return generalized_segre(genseg6_datum());
  }
  if (kind == "square-rotation") {
    if (!datum.empty()) return square_rotation(square_rotation_from_json(datum_json()));
    return square_rotation(random_square_rotation_datum(n > 0 ? n : 8, rng));
  }
  throw ParseError("unknown relation kind '" + kind +
                   "' (expected segre-cubic, segre8, segre8-outer, simplest-binomial, simple-binomial, gen-segre, square-rotation)");
}

void print_decomposition(const std::map<Partition, long long>& d) {
  if (d.empty()) std::cout << "(zero)\n";
  for (auto it = d.rbegin(); it != d.rend(); ++it) std::cout << partition_to_string(it->first) << ": " << it->second << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of points on the projective line: straightening, ideals, toric degenerations"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Emit JSON");
  app.add_option("--seed", g.seed, "Seed for randomized work")->capture_default_str();
  app.add_option("--trials", g.trials, "Trials for randomized checks")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware)");
  app.add_flag("--no-cache", g.no_cache, "Disable the straightening cache");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $PLUCKER_CACHE_DIR)");

  std::string input, points, shape = "y", mode, space = "V", kind = "simplest-binomial", datum, suite = "all", cache_action = "stats";
  std::vector<std::string> tuple_args;
  int n = 0, d = 1, k = 2, r = 3;
  long long fuel = 0;
  bool verify = false, show_trace = false;

  auto* s_str = app.add_subcommand("straighten", "Expand a graph or element in the non-crossing basis");
  s_str->add_option("input", input, "Graph text, graph/element JSON, or a file")->required();
  s_str->add_option("--fuel", fuel, "Rewrite budget");

  auto* s_eval = app.add_subcommand("evaluate", "Evaluate at a point configuration");
  s_eval->add_option("input", input, "Graph or element")->required();
  s_eval->add_option("--points", points, "x1[:y1],x2[:y2],... (default: random from --seed)");

  auto* s_hil = app.add_subcommand("hilbert", "Dimension of the degree-d part");
  s_hil->add_option("--n", n, "Number of points")->required();
  s_hil->add_option("--d", d, "Degree")->capture_default_str();

  auto* s_tor = app.add_subcommand("toric", "Tree weightings: count, greedy, roundtrip, weight");
  s_tor->add_option("mode", mode, "count | greedy | roundtrip | weight")->required();
  s_tor->add_option("args", tuple_args, "Tree (greedy, weight) and graph (weight)");
  s_tor->add_option("--shape", shape, "y or caterpillar")->capture_default_str();
  s_tor->add_option("--r", r, "Tree size")->capture_default_str();
  s_tor->add_option("--d", d, "Degree")->capture_default_str();

  auto* s_nf = app.add_subcommand("normal-form", "Normal form of a tuple of reduced matchings");
  s_nf->add_option("tuple", tuple_args, "Entries like \"(1 | 1 1 1 | 1)\", separated by ';' or given separately")->required();
  s_nf->add_flag("--trace", show_trace, "Print rewrite steps");

  auto* s_rel = app.add_subcommand("relation", "Construct (and optionally verify) a relation");
  s_rel->add_option("kind", kind, "Relation kind")->required();
  s_rel->add_option("--datum", datum, "Datum JSON or file");
  s_rel->add_option("--n", n, "Points for random data");
  s_rel->add_flag("--verify", verify, "Check projection and evaluation vanish");

  auto* s_id = app.add_subcommand("ideal-dim", "Dimension of the relation ideal in Sym^k");
  s_id->add_option("--n", n, "Number of points")->required();
  s_id->add_option("--k", k, "Degree")->capture_default_str();

  auto* s_orb = app.add_subcommand("orbit-span", "Rank of the S_n-orbit of a relation");
  s_orb->add_option("kind", kind, "Relation kind")->capture_default_str();
  s_orb->add_option("--datum", datum, "Datum JSON or file");
  s_orb->add_option("--n", n, "Points for random data");

  auto* s_dec = app.add_subcommand("decompose", "Decompose a representation into irreducibles");
  s_dec->add_option("--n", n, "Number of points")->required();
  s_dec->add_option("--space", space, "V, Sym2, Wedge2, R2, I2")->capture_default_str();

  auto* s_rep = app.add_subcommand("report", "Run an acceptance suite");
  s_rep->add_option("suite", suite, "hilbert, ideals, rep, toric, relations, all")->capture_default_str();

  auto* s_cache = app.add_subcommand("cache", "Straightening cache maintenance");
  s_cache->add_option("action", cache_action, "stats | clear | warm")->capture_default_str();
  s_cache->add_option("--n", n, "Points for warm");
  s_cache->add_option("--d", d, "Degree for warm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  set_default_jobs(g.jobs);
  auto& cache = StraightenCache::global();
  const std::string dir = g.cache_dir.empty() ? default_cache_dir() : g.cache_dir;
  cache.set_enabled(!g.no_cache);
  const bool persist = !g.no_cache && !s_cache->parsed();
  if (persist) cache.load(dir);

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  std::mt19937_64 rng(g.seed);
  int code = 0;

  try {
    if (s_str->parsed()) {
      if (fuel > 0) set_straighten_fuel(fuel);
      RingElement e = parse_ring_element(read_arg(input));
      RingElement out = straighten(e);
      if (g.json_out)
        std::cout << report("straighten", ring_to_json(e), ring_to_json(out), elapsed()).dump() << "\n";
      else
        std::cout << ring_to_text(out) << "\n";
    } else if (s_eval->parsed()) {
      RingElement e = parse_ring_element(read_arg(input));
      PointConfig p = points.empty() ? random_config(e.n, g.seed) : parse_points(points, e.n);
      Q v = evaluate(e, p);
      json pts = json::array();
      for (const auto& [x, y] : p.points) pts.push_back({q_to_string(x), q_to_string(y)});
      if (g.json_out)
        std::cout << report("evaluate", json{{"element", ring_to_json(e)}, {"points", pts}}, json{{"value", q_to_string(v)}}, elapsed()).dump() << "\n";
      else
        std::cout << q_to_string(v) << "\n";
    } else if (s_hil->parsed()) {
      long long dim = hilbert_dim(n, d);
      if (g.json_out)
        std::cout << report("hilbert", json{{"n", n}, {"d", d}}, json{{"n", n}, {"d", d}, {"dim", dim}}, elapsed()).dump() << "\n";
      else
        std::cout << dim << "\n";
    } else if (s_tor->parsed()) {
      json out;
      if (mode == "count") {
        TrivalentTree t = tree_of_shape(shape, r);
        out = {{"leaves", t.num_leaves()}, {"d", d}, {"count", count_admissible_regular(t, d)}};
        if (t.num_leaves() % 2 == 0) out["hilbert"] = hilbert_dim(t.num_leaves(), d);
        if (!g.json_out) std::cout << out["count"].get<long long>() << "\n";
      } else if (mode == "greedy") {
        if (tuple_args.size() != 1) throw ParseError("toric greedy takes one weighted tree");
        TreeWeighting w = parse_tree(read_arg(tuple_args[0]));
        DirectedGraph gr = greedy_graph(w);
        out = graph_to_json(gr);
        if (!g.json_out) std::cout << to_text(gr) << "\n";
      } else if (mode == "weight") {
        if (tuple_args.size() != 2) throw ParseError("toric weight takes a tree and a graph");
        TreeWeighting t = parse_tree(read_arg(tuple_args[0]));
        DirectedGraph gr = parse_graph(read_arg(tuple_args[1]));
        TreeWeighting w = weighting_of_graph(gr, t.tree);
        out = {{"tree", tree_to_text(w)}, {"level", level(gr, t.tree)}, {"admissible", is_admissible(w)}};
        if (!g.json_out) std::cout << tree_to_text(w) << "\nlevel " << level(gr, t.tree) << "\n";
      } else if (mode == "roundtrip") {
        TrivalentTree t = tree_of_shape(shape, r);
        long long total = 0, fails = 0;
        for (const auto& w : enumerate_admissible_regular(t, d)) {
          ++total;
          if (!(weighting_of_graph(greedy_graph(w), t) == w)) ++fails;
        }
        out = {{"weightings", total}, {"failures", fails}};
        if (!g.json_out) std::cout << total << " weightings, " << fails << " failures\n";
        if (fails) code = kExitFail;
      } else {
        throw ParseError("unknown toric mode '" + mode + "'");
      }
      if (g.json_out) std::cout << report("toric", json{{"mode", mode}, {"shape", shape}, {"r", r}, {"d", d}}, out, elapsed()).dump() << "\n";
    } else if (s_nf->parsed()) {
      MatchingTuple tup = parse_tuple(tuple_args);
      RewriteTrace trace;
      MatchingTuple nf;
      try {
        nf = normal_form(tup, &trace);
      } catch (const RewriteError& e) {
        throw ParseError(e.what());
      }
      if (g.json_out) {
        json steps = json::array();
        for (const auto& s : trace)
          steps.push_back({{"i", s.i}, {"j", s.j}, {"before", {to_string(s.before_i), to_string(s.before_j)}}, {"after", {to_string(s.after_i), to_string(s.after_j)}}});
        std::cout << report("normal-form", tuple_json(tup), json{{"normal_form", tuple_json(nf)}, {"steps", steps}}, elapsed()).dump() << "\n";
      } else {
        if (show_trace)
          for (const auto& s : trace)
            std::cout << "  [" << s.i << "," << s.j << "] " << to_string(s.before_i) << " " << to_string(s.before_j) << " -> " << to_string(s.after_i) << " "
                      << to_string(s.after_j) << "\n";
        for (const auto& m : nf) std::cout << to_string(m) << "\n";
      }
    } else if (s_rel->parsed()) {
      SymElement e = build_relation(kind, datum, rng, n);
      json out{{"element", sym_to_json(e)}};
      bool ok = true;
      if (verify) {
        bool proj = project_to_ring(e).is_zero();
        bool ev = true;
        for (int i = 0; i < 5; ++i) ev = ev && evaluate(e, random_config(e.n, g.seed * 1000 + i)) == 0;
        out["projects_to_zero"] = proj;
        out["evaluates_to_zero"] = ev;
        ok = proj && ev;
      }
      if (g.json_out) {
        std::cout << report("relation", json{{"kind", kind}, {"seed", g.seed}}, out, elapsed()).dump() << "\n";
      } else {
        std::cout << sym_to_json(e).dump() << "\n";
        if (verify) std::cout << (ok ? "verified: projects to 0 and vanishes at 5 configurations" : "NOT a relation") << "\n";
      }
      if (!ok) code = kExitFail;
    } else if (s_id->parsed()) {
      long long dim = ideal_component_dim(n, k, g.jobs);
      if (g.json_out)
        std::cout << report("ideal-dim", json{{"n", n}, {"k", k}}, json{{"n", n}, {"k", k}, {"dim", dim}}, elapsed()).dump() << "\n";
      else
        std::cout << dim << "\n";
    } else if (s_orb->parsed()) {
      SymElement e = build_relation(kind, datum, rng, n);
      OrbitSpan s = orbit_span_check(e, g.jobs);
      if (g.json_out)
        std::cout << report("orbit-span", json{{"kind", kind}}, json{{"rank", s.rank}, {"ideal_dim", s.ideal_dim}, {"spans_ideal", s.spans_ideal}}, elapsed()).dump()
                  << "\n";
      else
        std::cout << "orbit rank " << s.rank << " of " << s.ideal_dim << (s.spans_ideal ? " (spans)" : "") << "\n";
    } else if (s_dec->parsed()) {
      RepSpace sp;
      try {
        sp = rep_space_from_string(space);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      auto dec = decompose(character_of_action(n, sp, g.jobs));
      if (g.json_out)
        std::cout << report("decompose", json{{"n", n}, {"space", to_string(sp)}}, decomposition_to_json(dec), elapsed()).dump() << "\n";
      else
        print_decomposition(dec);
    } else if (s_rep->parsed()) {
      std::vector<int> ids;
      try {
        ids = suite_criteria(suite);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      AcceptanceOptions opt{g.seed, g.trials, g.jobs};
      json crit = json::array();
      bool all = true;
      for (int id : ids) {
        CriterionResult res = run_criterion(id, opt);
        std::cerr << (res.pass ? "PASS " : "FAIL ") << id << " " << res.name << "\n";
        all = all && res.pass;
        crit.push_back(criterion_to_json(res, false));
      }
      std::cout << report("report", json{{"suite", suite}, {"seed", g.seed}, {"trials", g.trials}}, json{{"pass", all}, {"criteria", crit}}, elapsed()).dump()
                << "\n";
      if (!all) code = kExitFail;
    } else if (s_cache->parsed()) {
      json out;
      if (cache_action == "stats") {
        int files = g.no_cache ? 0 : cache.load(dir);
        out = {{"dir", dir}, {"files", files}, {"entries", cache.size()}};
        if (!g.json_out) std::cout << dir << ": " << files << " files, " << cache.size() << " entries\n";
      } else if (cache_action == "clear") {
        int removed = 0;
        std::error_code ec;
        if (std::filesystem::is_directory(dir, ec))
          for (const auto& ent : std::filesystem::directory_iterator(dir)) {
            auto name = ent.path().filename().string();
            if (name.rfind("straighten_n", 0) == 0 && ent.path().extension() == ".json") removed += std::filesystem::remove(ent.path());
          }
        out = {{"dir", dir}, {"removed", removed}};
        if (!g.json_out) std::cout << "removed " << removed << " files from " << dir << "\n";
      } else if (cache_action == "warm") {
        if (g.no_cache) throw ParseError("cache warm conflicts with --no-cache");
        if (n <= 0) throw ParseError("cache warm needs --n");
        cache.load(dir);
        projection_matrix(n, d, g.jobs);
        int files = cache.save(dir);
        out = {{"dir", dir}, {"files", files}, {"entries", cache.size()}};
        if (!g.json_out) std::cout << "wrote " << files << " files (" << cache.size() << " entries) to " << dir << "\n";
      } else {
        throw ParseError("unknown cache action '" + cache_action + "'");
      }
      if (g.json_out) std::cout << report("cache", json{{"action", cache_action}}, out, elapsed()).dump() << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FuelExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFuel;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }

  if (persist) {
    try {
      cache.save(dir);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not save cache to " << dir << ": " << e.what() << "\n";
    }
  }
  return code;
}
