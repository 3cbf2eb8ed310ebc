#include "slidegraph/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slidegraph/circles.hpp"
#include "slidegraph/configuration.hpp"
#include "slidegraph/counting.hpp"
#include "slidegraph/decide.hpp"
#include "slidegraph/decomposition.hpp"
#include "slidegraph/graph.hpp"
#include "slidegraph/io.hpp"
#include "slidegraph/oracle.hpp"
#include "slidegraph/presets.hpp"
#include "slidegraph/solver.hpp"

namespace slidegraph {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotConnected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

Mode parse_mode(const std::string& s) {
  return s == "literal" ? Mode::literal : Mode::corrected;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot open for writing: " + path);
  f << text;
  if (!f.good()) throw FormatError("write failed: " + path);
}

// Values every subcommand reads after parsing; only the chosen subcommand's
// options are bound to them.
struct Options {
  std::string graph_file;
  std::string from_file;
  std::string to_file;
  std::string preset_name;
  std::string out_file;
  std::string start_out_file;
  std::string mode = "corrected";
  std::string format = "json";
  int k = 0;
  bool k_given = false;
  long long solve_cap = kDefaultSearchCap;
  long long oracle_cap = kDefaultOracleCap;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int run_analyze(const Options& opt, std::ostream& out) {
  Graph g = load_graph_file(opt.graph_file);
  Classification cls = classify(g);
  BlockCutTree bct = block_cut_tree(g);
  std::vector<Hallway> halls = hallways(g);
  KappaStar ks = kappa_star(g, parse_mode(opt.mode));

  if (opt.format == "dot") {
    out << to_dot(g);
    return kExitOk;
  }

  std::vector<int> orders;
  for (const Hallway& h : halls) orders.push_back(h.order());

  if (opt.format == "text") {
    out << "vertices: " << g.num_vertices() << "\n"
        << "edges: " << g.num_edges() << "\n"
        << "connected: " << yes_no(cls.connected) << "\n"
        << "biconnected: " << yes_no(cls.biconnected) << "\n"
        << "bipartite: " << yes_no(cls.bipartite) << "\n"
        << "tree: " << yes_no(cls.tree) << "\n"
        << "path: " << yes_no(cls.is_path) << "\n"
        << "cycle: " << yes_no(cls.is_cycle) << "\n"
        << "theta0: " << yes_no(cls.is_theta0) << "\n"
        << "blocks: " << bct.blocks.size() << "\n";
    out << "cut vertices:";
    for (Vertex v : bct.cut_vertices) out << " " << v;
    out << "\nhallway orders:";
    for (int o : orders) out << " " << o;
    out << "\nkappa: " << kappa(g) << "\n";
    out << "kappa* (" << opt.mode << "): ";
    if (ks.finite) {
      out << ks.value << "\n";
    } else {
      out << "none\n";
    }
    return kExitOk;
  }

  json j;
  j["n"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["connected"] = cls.connected;
  j["biconnected"] = cls.biconnected;
  j["bipartite"] = cls.bipartite;
  j["tree"] = cls.tree;
  j["path"] = cls.is_path;
  j["cycle"] = cls.is_cycle;
  j["theta0"] = cls.is_theta0;
  j["blocks"] = bct.blocks;
  j["cut_vertices"] = bct.cut_vertices;
  json hs = json::array();
  for (const Hallway& h : halls) hs.push_back(h.vertices);
  j["hallways"] = hs;
  j["hallway_orders"] = orders;
  j["kappa"] = kappa(g);
  j["mode"] = opt.mode;
  if (ks.finite) {
    j["kappa_star"] = ks.value;
  } else {
    j["kappa_star"] = nullptr;
  }
  emit(out, j);
  return kExitOk;
}

int run_circles(const Options& opt, std::ostream& out) {
  Graph g = load_graph_file(opt.graph_file);
  std::vector<Circle> circles = social_circles(g, opt.k);

  if (opt.format == "dot") {
    std::vector<std::vector<Vertex>> clusters;
    for (const Circle& c : circles) clusters.push_back(c.vertices);
    out << to_dot(g, clusters);
    return kExitOk;
  }
  if (opt.format == "text") {
    for (size_t i = 0; i < circles.size(); ++i) {
      out << "circle " << i << ":";
      for (Vertex v : circles[i].vertices) out << " " << v;
      out << " | anchors:";
      for (Vertex v : circles[i].anchors) out << " " << v;
      out << "\n";
    }
    return kExitOk;
  }
  json arr = json::array();
  for (const Circle& c : circles) {
    json cj;
    cj["vertices"] = c.vertices;
    cj["anchors"] = c.anchors;
    arr.push_back(cj);
  }
  json j;
  j["n"] = g.num_vertices();
  j["k"] = opt.k;
  j["circles"] = arr;
  emit(out, j);
  return kExitOk;
}

int run_decide(const Options& opt, std::ostream& out) {
  Graph g = load_graph_file(opt.graph_file);
  Configuration a = configuration_from_json(g, load_json_file(opt.from_file));
  Configuration b = configuration_from_json(g, load_json_file(opt.to_file));
  if (opt.k_given && (a.k != opt.k || b.k != opt.k)) {
    throw FormatError("--k disagrees with the configuration files");
  }
  Verdict v = decide(g, a, b);
  if (opt.format == "text") {
    if (v.connected) {
      out << "connected\n";
    } else {
      out << "not connected: " << verdict_reason_name(v.reason);
      if (!v.detail.empty()) out << " — " << v.detail;
      out << "\n";
    }
  } else {
    json j;
    j["connected"] = v.connected;
    j["reason"] = verdict_reason_name(v.reason);
    j["detail"] = v.detail;
    emit(out, j);
  }
  return v.connected ? kExitOk : kExitNotConnected;
}

int run_count(const Options& opt, std::ostream& out) {
  Graph g = load_graph_file(opt.graph_file);
  BigCount c = count_components(g, opt.k, parse_mode(opt.mode));
  if (opt.format == "text") {
    out << c.str() << "\n";
  } else {
    json j;
    j["components"] = c.str();
    j["k"] = opt.k;
    j["mode"] = opt.mode;
    emit(out, j);
  }
  return kExitOk;
}

int run_solve(const Options& opt, std::ostream& out) {
  Graph g = load_graph_file(opt.graph_file);
  Configuration a = configuration_from_json(g, load_json_file(opt.from_file));
  Configuration b = configuration_from_json(g, load_json_file(opt.to_file));
  if (opt.k_given && (a.k != opt.k || b.k != opt.k)) {
    throw FormatError("--k disagrees with the configuration files");
  }
  SolveOutcome o = solve(g, a, b, opt.solve_cap);

  if (opt.format == "text") {
    switch (o.status) {
      case SolveStatus::kSolved:
        out << "solved in " << o.moves.size() << " moves (" << o.note << ")\n";
        for (const Move& m : o.moves) {
          out << m.first << " " << m.second << "\n";
        }
        break;
      case SolveStatus::kNotConnected:
        out << "not connected: " << verdict_reason_name(o.verdict.reason);
        if (!o.verdict.detail.empty()) out << " — " << o.verdict.detail;
        out << "\n";
        break;
      case SolveStatus::kFallbackExceeded:
        out << "cap exceeded: " << o.library << " has " << o.state_bound
            << " states\n";
        break;
    }
  } else {
    json j;
    j["status"] = solve_status_name(o.status);
    switch (o.status) {
      case SolveStatus::kSolved:
        j["length"] = o.moves.size();
        j["moves"] = moves_to_json(o.moves);
        j["note"] = o.note;
        break;
      case SolveStatus::kNotConnected:
        j["reason"] = verdict_reason_name(o.verdict.reason);
        j["detail"] = o.verdict.detail;
        break;
      case SolveStatus::kFallbackExceeded:
        j["library"] = o.library;
        j["state_bound"] = o.state_bound;
        break;
    }
    emit(out, j);
  }
  switch (o.status) {
    case SolveStatus::kSolved:
      return kExitOk;
    case SolveStatus::kNotConnected:
      return kExitNotConnected;
    case SolveStatus::kFallbackExceeded:
      return kExitCapExceeded;
  }
  return kExitUsage;
}

int run_oracle(const Options& opt, std::ostream& out) {
  Graph g = load_graph_file(opt.graph_file);
  OracleResult r = enumerate_components(g, opt.k, opt.oracle_cap);
  if (opt.format == "text") {
    out << "states: " << r.num_states << "\n"
        << "components: " << r.num_components << "\n"
        << "sizes:";
    for (long long s : r.component_sizes) out << " " << s;
    out << "\n";
  } else {
    json j;
    j["num_states"] = r.num_states;
    j["num_components"] = r.num_components;
    j["component_sizes"] = r.component_sizes;
    j["k"] = opt.k;
    emit(out, j);
  }
  return kExitOk;
}

int run_preset(const Options& opt, std::ostream& out, std::ostream& err) {
  Graph g = make_preset(opt.preset_name);
  json gj = graph_to_json(g);

  if (!opt.start_out_file.empty()) {
    std::optional<Configuration> start = preset_special_start(opt.preset_name);
    if (!start) {
      throw FormatError("preset has no distinguished start: " +
                        opt.preset_name);
    }
    write_text_file(opt.start_out_file,
                    configuration_to_json(*start).dump(2) + "\n");
    err << "wrote " << opt.start_out_file << "\n";
  }
  if (!opt.out_file.empty()) {
    write_text_file(opt.out_file, gj.dump(2) + "\n");
    err << "wrote " << opt.out_file << "\n";
    return kExitOk;
  }

  if (opt.format == "dot") {
    out << to_dot(g, {}, preset_special_start(opt.preset_name));
  } else if (opt.format == "text") {
    out << "vertices: " << g.num_vertices() << "\n"
        << "edges: " << g.num_edges() << "\n";
  } else {
    emit(out, gj);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Sliding-block puzzles on arbitrary boards with several empty cells: "
      "board structure reports, reachability verdicts, component counts, "
      "replayable move plans, and a brute-force cross-check."};
  app.name("slidegraph");
  app.require_subcommand(1);

  Options opt;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", opt.graph_file, "board graph JSON file")
        ->required();
  };
  auto add_k = [&](CLI::App* cmd, bool required) {
    CLI::Option* o =
        cmd->add_option("--k", opt.k, "number of empty cells (blanks)");
    if (required) {
      o->required();
    } else {
      o->each([&](const std::string&) { opt.k_given = true; });
    }
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode,
                    "which published cycle threshold to use")
        ->check(CLI::IsMember({"literal", "corrected"}))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd, bool with_dot) {
    std::vector<std::string> allowed = {"json", "text"};
    if (with_dot) allowed.push_back("dot");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };
  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--from", opt.from_file, "start configuration JSON file")
        ->required();
    cmd->add_option("--to", opt.to_file, "target configuration JSON file")
        ->required();
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify a board: blocks, hallways, blank thresholds");
  add_graph(analyze);
  add_mode(analyze);
  add_format(analyze, true);

  CLI::App* circles = app.add_subcommand(
      "circles", "the free-rearrangement regions for k blanks");
  add_graph(circles);
  add_k(circles, true);
  add_format(circles, true);

  CLI::App* decide_cmd = app.add_subcommand(
      "decide", "is the target reachable from the start? (no enumeration)");
  add_graph(decide_cmd);
  add_k(decide_cmd, false);
  add_pair(decide_cmd);
  add_format(decide_cmd, false);

  CLI::App* count = app.add_subcommand(
      "count", "number of components of the full labeled state space");
  add_graph(count);
  add_k(count, true);
  add_mode(count);
  add_format(count, false);

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "produce a replayable move sequence from start to target");
  add_graph(solve_cmd);
  add_k(solve_cmd, false);
  add_pair(solve_cmd);
  solve_cmd
      ->add_option("--cap", opt.solve_cap,
                   "largest per-piece state count bounded search may visit")
      ->capture_default_str();
  add_format(solve_cmd, false);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive state-space enumeration (ground truth)");
  add_graph(oracle);
  add_k(oracle, true);
  oracle
      ->add_option("--cap", opt.oracle_cap,
                   "largest state count the enumeration may visit")
      ->capture_default_str();
  add_format(oracle, false);

  CLI::App* preset = app.add_subcommand(
      "preset", "materialize a named board, e.g. grid(4,4) or theta0");
  preset
      ->add_option("--name", opt.preset_name,
                   "grid(a,b) path(n) cycle(n) coiled15 black_white theta0 "
                   "snake_tongue(n) stopwatch(n) hourglass(a,b) bowtie")
      ->required();
  preset->add_option("--out", opt.out_file, "write the graph JSON here");
  preset->add_option("--start-out", opt.start_out_file,
                     "write the board's distinguished start configuration");
  add_format(preset, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt, out);
    if (circles->parsed()) return run_circles(opt, out);
    if (decide_cmd->parsed()) return run_decide(opt, out);
    if (count->parsed()) return run_count(opt, out);
    if (solve_cmd->parsed()) return run_solve(opt, out);
    if (oracle->parsed()) return run_oracle(opt, out);
    if (preset->parsed()) return run_preset(opt, out, err);
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const FallbackExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace slidegraph
