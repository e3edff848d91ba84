#include "snark/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "snark/construct.hpp"
#include "snark/corpus.hpp"
#include "snark/error.hpp"
#include "snark/gdd.hpp"
#include "snark/search.hpp"

namespace snark::cli {

namespace {

using json = nlohmann::json;

struct Config {
  std::vector<std::string> gdd_path;
  unsigned jobs = 0;
  std::uint64_t node_budget = 2'000'000;
  std::uint64_t max_steps = 2'000'000;
  std::uint64_t max_restarts = 0;
  std::uint64_t plateau = 0;
  std::uint64_t seeds = 1;
};

Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  json j;
  try {
    j = json::parse(in);
    if (j.contains("gdd_path")) c.gdd_path = j.at("gdd_path").get<std::vector<std::string>>();
    if (j.contains("jobs")) c.jobs = j.at("jobs").get<unsigned>();
    if (j.contains("node_budget")) c.node_budget = j.at("node_budget").get<std::uint64_t>();
    if (j.contains("search")) {
      const auto& s = j.at("search");
      if (s.contains("max_steps")) c.max_steps = s.at("max_steps").get<std::uint64_t>();
      if (s.contains("max_restarts")) c.max_restarts = s.at("max_restarts").get<std::uint64_t>();
      if (s.contains("plateau")) c.plateau = s.at("plateau").get<std::uint64_t>();
      if (s.contains("seeds")) c.seeds = s.at("seeds").get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return c;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
}

struct Options {
  std::string config;
  bool json = false;
  std::optional<unsigned> jobs;

  // verify
  std::vector<std::string> paths;
  bool fail_fast = false;
  bool details = false;

  // construct, search, gdd
  std::string graph;
  std::uint64_t n = 0;
  std::string output;
  bool plan_only = false;
  std::vector<std::string> gdd_path;

  std::string host;
  std::string action;
  std::size_t blocks = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> seeds;
  std::optional<std::uint64_t> max_steps;
  bool suggest = false;

  std::string type;
  std::size_t k = 3;
  std::optional<std::uint64_t> budget;

  int v = 0;
  std::string name;
  bool check = false;
};

int do_verify(const Options& o, const Config& c, std::ostream& out, std::ostream& err) {
  const auto& cat = builtin_catalog();
  std::vector<Decomposition> entries = o.paths.empty() ? builtin_corpus() : load_corpus(o.paths, cat);
  auto summary = verify_all(entries, cat, o.jobs.value_or(c.jobs), o.fail_fast);
  for (const auto& r : summary.results) {
    if (o.json) {
      json j{{"entry", r.id}};
      if (r.config_error) {
        j["status"] = "error";
        j["error"] = r.error;
      } else {
        j["status"] = r.ok ? "pass" : "fail";
        j["copies"] = r.report.copies;
        j["violations"] = r.report.violations.size();
        if (o.details) {
          json vs = json::array();
          for (const auto& v : r.report.violations) {
            vs.push_back({{"kind", std::string(to_string(v.kind))},
                          {"index", v.index},
                          {"x", v.x},
                          {"y", v.y},
                          {"multiplicity", v.multiplicity}});
          }
          j["details"] = vs;
        }
      }
      out << j.dump() << '\n';
      continue;
    }
    if (r.config_error) {
      out << "entry=" << r.id << " status=error error=\"" << r.error << "\"\n";
      continue;
    }
    out << "entry=" << r.id << " status=" << (r.ok ? "pass" : "fail") << " copies=" << r.report.copies
        << " violations=" << r.report.violations.size() << '\n';
    if (o.details) {
      for (const auto& v : r.report.violations) {
        out << "  " << to_string(v.kind) << " index=" << v.index << " x=" << v.x << " y=" << v.y
            << " multiplicity=" << v.multiplicity << '\n';
      }
    }
  }
  err << summary.passed << " passed, " << summary.failed << " failed, " << summary.errors << " errors\n";
  if (summary.errors) return kUsage;
  return summary.failed ? kVerifyFailed : kOk;
}

int do_construct(const Options& o, const Config& c, std::ostream& out, std::ostream& err) {
  const auto& cat = builtin_catalog();
  const auto& g = cat.at(o.graph);
  if (o.plan_only) {
    const std::string text = describe(plan_for(g, o.n));
    if (o.json) {
      out << json{{"graph", g.name}, {"n", o.n}, {"plan", text}}.dump() << '\n';
    } else {
      out << text << '\n';
    }
    return kOk;
  }
  ConstructOptions opts;
  opts.gdd.gdd_path = o.gdd_path.empty() ? c.gdd_path : o.gdd_path;
  opts.gdd.node_budget = c.node_budget;
  Decomposition d = construct(g.name, o.n, opts);
  const std::uint64_t copies = explicit_copies(d).size();
  const std::string text = render_entry(d);
  if (o.json) {
    json j{{"entry", d.id}, {"host", d.host.name()}, {"status", "pass"}, {"copies", copies}};
    if (o.output.empty()) {
      j["design"] = text;
    } else {
      write_text(o.output, text, out);
    }
    out << j.dump() << '\n';
  } else {
    write_text(o.output, text, out);
    err << d.host.name() << ": " << copies << " copies of " << d.graph << " verified\n";
  }
  return kOk;
}

SearchProblem read_problem(const Options& o, const Catalog& cat) {
  std::ostringstream text;
  text << "entry search\ngraph " << o.graph << "\nhost " << o.host << "\naction a " << o.action << "\nend\n";
  auto parsed = parse_corpus(text.str(), "command line", cat);
  SearchProblem p{parsed[0].host, parsed[0].graph, parsed[0].actions[0], o.blocks};
  return p;
}

std::string problem_line(const SearchProblem& p) {
  Decomposition d;
  d.host = p.host;
  d.infinity = to_decomposition(p, {}, "").infinity;
  std::string action = render_action(p.action, d);
  return action.substr(std::string("action a ").size());
}

int do_search(const Options& o, const Config& c, std::ostream& out, std::ostream& err) {
  const auto& cat = builtin_catalog();
  if (o.suggest) {
    for (const auto& p : suggest_problems(parse_host(o.host), o.graph, cat)) {
      const std::string action = problem_line(p);
      if (o.json) {
        out << json{{"action", action}, {"blocks", p.block_count}}.dump() << '\n';
      } else {
        out << "blocks=" << p.block_count << " action=\"" << action << "\"\n";
      }
    }
    return kOk;
  }
  SearchProblem p = read_problem(o, cat);
  SearchBudget budget;
  budget.max_steps = o.max_steps.value_or(c.max_steps);
  budget.max_restarts = c.max_restarts;
  budget.plateau = c.plateau;
  auto r = parallel_search(p, o.seed, o.seeds.value_or(c.seeds), budget, cat, o.jobs.value_or(c.jobs));
  if (!r.blocks) {
    if (o.json) {
      out << json{{"status", "none"}, {"seed", r.seed}, {"steps", r.steps}, {"best_cost", r.best_cost}}.dump()
          << '\n';
    }
    err << "no solution within " << budget.max_steps << " steps per seed (best cost " << r.best_cost << ")\n";
    return kUnreachable;
  }
  std::string id = p.graph + "." + p.host.name();
  std::transform(id.begin(), id.end(), id.begin(), [](unsigned char ch) { return std::tolower(ch); });
  id.erase(std::remove(id.begin(), id.end(), '_'), id.end());
  id[p.graph.size() + 1] = 'K';
  auto d = to_decomposition(p, *r.blocks, id);
  if (!verify(d, cat).pass) throw Error("search result failed verification");
  const std::string text = render_entry(d);
  if (o.json) {
    json j{{"status", "found"}, {"seed", r.seed}, {"steps", r.steps}, {"restarts", r.restarts}};
    if (o.output.empty()) {
      j["design"] = text;
    } else {
      write_text(o.output, text, out);
    }
    out << j.dump() << '\n';
  } else {
    write_text(o.output, text, out);
    err << "seed " << r.seed << ": solved in " << r.steps << " steps, " << r.restarts << " restarts\n";
  }
  return kOk;
}

int do_catalog(const Options& o, std::ostream& out) {
  const auto& cat = builtin_catalog();
  std::vector<const CatalogGraph*> graphs;
  if (o.name.empty()) {
    for (const auto& g : cat.graphs()) graphs.push_back(&g);
  } else {
    graphs.push_back(&cat.at(o.name));
  }
  bool all_ok = true;
  for (const auto* g : graphs) {
    const auto gi = girth(g->graph);
    json j{{"graph", g->name}, {"v", g->v()}, {"e", g->e()}, {"girth", gi ? *gi : 0}};
    if (g->spectrum) {
      Admissibility a{g->spectrum->modulus, g->spectrum->residues, 1};
      j["spectrum"] = format_admissibility(a, g->spectrum->excluded);
    }
    if (o.check) {
      const bool cubic = is_cubic(g->graph), connected = is_connected(g->graph);
      const bool bridgeless = is_bridgeless(g->graph), colorable = has_proper_3_edge_coloring(g->graph);
      j["cubic"] = cubic;
      j["connected"] = connected;
      j["bridgeless"] = bridgeless;
      j["colorable"] = colorable;
      all_ok = all_ok && cubic && connected && bridgeless && !colorable;
    }
    if (o.json) {
      out << j.dump() << '\n';
      continue;
    }
    out << g->name << " v=" << g->v() << " e=" << g->e() << " girth=" << j["girth"].get<int>();
    if (o.check) {
      auto flag = [&](const char* key) { return j[key].get<bool>() ? "yes" : "no"; };
      out << " cubic=" << flag("cubic") << " connected=" << flag("connected") << " bridgeless=" << flag("bridgeless")
          << " 3-edge-colorable=" << flag("colorable");
    }
    out << '\n';
  }
  return all_ok ? kOk : kVerifyFailed;
}

int do_admissible(const Options& o, std::ostream& out) {
  const Admissibility a = admissible_residues(o.v);
  const auto spectrum = known_spectrum(o.v);
  const std::string text = format_admissibility(a, spectrum ? spectrum->excluded : std::vector<int>{});
  if (o.json) {
    out << json{{"v", o.v}, {"modulus", a.modulus}, {"residues", a.residues}, {"text", text}}.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return kOk;
}

int do_gdd(const Options& o, const Config& c, std::ostream& out) {
  GddProviderOptions opts;
  opts.gdd_path = o.gdd_path.empty() ? c.gdd_path : o.gdd_path;
  opts.node_budget = o.budget.value_or(c.node_budget);
  const Gdd g = gdd_provider(parse_gdd_type(o.type, o.k), opts);
  const std::string text = render_gdd(g);
  if (o.json) {
    json j{{"type", g.type().to_string()}, {"k", g.k}, {"points", g.points}, {"blocks", g.blocks.size()}};
    if (o.output.empty()) {
      j["design"] = text;
    } else {
      write_text(o.output, text, out);
    }
    out << j.dump() << '\n';
  } else {
    write_text(o.output, text, out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompositions of complete and multipartite graphs into snarks", "snarkdesign"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "JSON configuration file");

  auto* verify_cmd = app.add_subcommand("verify", "Verify designs (the shipped corpus when no paths are given)");
  verify_cmd->add_option("paths", o.paths, "Design files or directories");
  verify_cmd->add_flag("--fail-fast", o.fail_fast, "Stop at the first failing entry");
  verify_cmd->add_flag("--details", o.details, "List violations");

  auto* construct_cmd = app.add_subcommand("construct", "Build a verified design of K_n");
  construct_cmd->add_option("graph", o.graph)->required();
  construct_cmd->add_option("n", o.n)->required();
  construct_cmd->add_option("-o,--output", o.output, "Output file");
  construct_cmd->add_flag("--plan", o.plan_only, "Print the recipe only");
  construct_cmd->add_option("--gdd-path", o.gdd_path, "GDD files or directories");

  auto* search_cmd = app.add_subcommand("search", "Local search for base blocks");
  search_cmd->add_option("graph", o.graph)->required();
  search_cmd->add_option("--host", o.host, "Host, e.g. \"complete 28\"")->required();
  search_cmd->add_option("--action", o.action, "Action, e.g. \"shift 4 mod 28 on 0..27\"");
  search_cmd->add_option("--blocks", o.blocks, "Number of base blocks");
  search_cmd->add_option("--seed", o.seed, "First seed");
  search_cmd->add_option("--seeds", o.seeds, "Number of seeds");
  search_cmd->add_option("--max-steps", o.max_steps, "Steps per seed");
  search_cmd->add_option("-o,--output", o.output, "Output file");
  search_cmd->add_flag("--suggest", o.suggest, "List candidate actions instead of searching");

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog graphs");
  catalog_cmd->add_option("name", o.name);
  catalog_cmd->add_flag("--check", o.check, "Check the snark properties");

  auto* admissible_cmd = app.add_subcommand("admissible", "Admissible orders for cubic graphs on v vertices");
  admissible_cmd->add_option("v", o.v)->required();

  auto* gdd_cmd = app.add_subcommand("gdd", "Build a group divisible design");
  gdd_cmd->add_option("type", o.type, "Type, e.g. \"2^3 4^1\"")->required();
  gdd_cmd->add_option("-k", o.k, "Block size");
  gdd_cmd->add_option("--budget", o.budget, "Exact cover node budget");
  gdd_cmd->add_option("--gdd-path", o.gdd_path, "GDD files or directories");
  gdd_cmd->add_option("-o,--output", o.output, "Output file");

  for (auto* sub : {verify_cmd, construct_cmd, search_cmd, catalog_cmd, admissible_cmd, gdd_cmd}) {
    sub->add_flag("--json", o.json, "One JSON object per line");
    sub->add_option("--jobs", o.jobs, "Worker threads");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Config c = load_config(o.config);
    if (search_cmd->parsed() && !o.suggest && (o.action.empty() || o.blocks == 0)) {
      throw ConfigError("search needs --action and --blocks (or --suggest)");
    }
    if (verify_cmd->parsed()) return do_verify(o, c, out, err);
    if (construct_cmd->parsed()) return do_construct(o, c, out, err);
    if (search_cmd->parsed()) return do_search(o, c, out, err);
    if (catalog_cmd->parsed()) return do_catalog(o, out);
    if (admissible_cmd->parsed()) return do_admissible(o, out);
    return do_gdd(o, c, out);
  } catch (const UnreachableError& e) {
    err << e.what() << '\n';
    return kUnreachable;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace snark::cli
