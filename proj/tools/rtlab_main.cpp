#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtlab/rtlab.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owns a string handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { rt_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
  json parse() const { return json::parse(str()); }
};

struct Graph {
  rt_graph* g = nullptr;
  ~Graph() { rt_graph_free(g); }
};

void check(rt_status s) {
  if (s == RT_OK) return;
  const std::string msg = rt_last_error();
  if (s == RT_E_INTERNAL) throw std::runtime_error(msg);
  throw UsageError(msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(const std::string& bytes) {
  LibString hex;
  check(rt_digest(bytes.data(), bytes.size(), &hex.p));
  return hex.str();
}

// Shared state for the one report printed per invocation.
struct Run {
  std::string command;
  std::string inputs;  // concatenated input bytes for the digest
  json result;
  bool pass = false;
  int exit_code = kExitPass;
};

int default_jobs() {
  if (const char* env = std::getenv("RTLAB_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring malformed RTLAB_JOBS='" << env << "'\n";
  }
  return 1;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("RTLAB_DATA_DIR")) return env;
#ifdef RTLAB_DATA_DIR
  return RTLAB_DATA_DIR;
#else
  return "data/catalogues";
#endif
}

json run_catalogue_file(const std::string& path, int jobs, std::string& inputs, bool& violated) {
  const std::string text = read_file(path);
  inputs += text;
  LibString out;
  int v = 0;
  check(rt_catalogue_run(text.c_str(), jobs, &v, &out.p));
  violated = v != 0;
  return out.parse();
}

json lemma_grid(int max_sum, bool& ok) {
  json rows = json::array();
  ok = true;
  for (int total = 0; total <= max_sum; ++total)
    for (int a = 0; a <= total; ++a) {
      LibString out;
      check(rt_lemma21(a, total - a, &out.p));
      json r = out.parse();
      r.erase("witness_edges");
      ok = ok && r["within_bound"].get<bool>();
      rows.push_back(r);
    }
  return rows;
}

struct SuiteCase {
  const char* id;
  int c;
};

json construction_suite(int n_min, int n_max, bool& ok) {
  static const SuiteCase cases[] = {{"bipartite-double", 4}, {"bipartite-double", 5}, {"directed3", 3},
                                    {"transitive3", 3},      {"oriented-cyclic", 3},  {"oriented-cyclic", 4},
                                    {"two-color-heavy", 3}};
  ok = true;
  json failures = json::array();
  int checked = 0;
  for (const auto& sc : cases)
    for (int n = n_min; n <= n_max; ++n) {
      LibString out;
      check(rt_construction_report(sc.id, n, sc.c, &out.p));
      const json r = out.parse();
      ++checked;
      if (!r["pass"].get<bool>()) {
        ok = false;
        failures.push_back({{"id", sc.id}, {"n", n}, {"c", sc.c}});
      }
    }
  return {{"n_min", n_min}, {"n_max", n_max}, {"checked", checked}, {"failures", failures}, {"pass", ok}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow triangle verification toolkit"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "Worker threads (env RTLAB_JOBS)")->check(CLI::PositiveNumber);

  Run run;
  for (int k = 0; k < argc; ++k) run.command += (k ? " " : "") + std::string(argv[k]);

  // detect
  auto* detect = app.add_subcommand("detect", "Look for a rainbow triangle in a graph file");
  std::string detect_file, detect_pattern = "directed";
  detect->add_option("file", detect_file, "Graph JSON")->required();
  detect->add_option("--pattern", detect_pattern, "directed | transitive");

  // construct
  auto* construct = app.add_subcommand("construct", "Generate an extremal construction");
  std::string construct_id, construct_out;
  int construct_n = 0, construct_c = 3;
  construct->add_option("id", construct_id, "Construction id")->required();
  construct->add_option("n", construct_n, "Vertex count")->required();
  construct->add_option("c", construct_c, "Color count where applicable");
  construct->add_option("--out", construct_out, "Write the graph JSON here");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive extremal search on small n");
  int search_n = 3, search_c = 3;
  std::string search_pattern = "directed", search_class = "digraph", search_objective = "max-total";
  std::uint64_t search_nodes = 0;
  search->add_option("--n", search_n)->required();
  search->add_option("--c", search_c)->required();
  search->add_option("--pattern", search_pattern);
  search->add_option("--class", search_class, "digraph | oriented");
  search->add_option("--objective", search_objective, "max-total | max-min");
  search->add_option("--max-nodes", search_nodes, "Node budget, 0 = unlimited");

  // scenario
  auto* scenario = app.add_subcommand("scenario", "Local bound catalogues");
  scenario->require_subcommand(1);
  auto* scenario_run = scenario->add_subcommand("run", "Evaluate a catalogue file");
  std::string scenario_file;
  scenario_run->add_option("file", scenario_file, "Catalogue JSON")->required();
  auto* verify_table = scenario->add_subcommand("verify-table", "Evaluate the shipped 10x10 pair table");
  std::string data_dir = default_data_dir();
  verify_table->add_option("--data-dir", data_dir, "Catalogue directory (env RTLAB_DATA_DIR)");
  auto* scenario_dump = scenario->add_subcommand("dump", "Print a built-in catalogue");
  std::string dump_name;
  scenario_dump->add_option("name", dump_name)->required();

  // lemma21
  auto* lemma = app.add_subcommand("lemma21", "Mixed-triangle-free maximum on A + B");
  int lemma_a = 0, lemma_b = 0, lemma_grid_max = -1;
  lemma->add_option("--a", lemma_a);
  lemma->add_option("--b", lemma_b);
  lemma->add_option("--grid", lemma_grid_max, "Evaluate every a + b <= value instead");

  // optscan
  auto* optscan = app.add_subcommand("optscan", "Grid scan of the terminal constraint system");
  double scan_step = 0.002;
  int scan_iters = 200;
  bool scan_nonstrict = false;
  optscan->add_option("--step", scan_step);
  optscan->add_option("--iters", scan_iters);
  optscan->add_flag("--non-strict", scan_nonstrict, "Use non-strict inequalities");

  auto* thresholds = app.add_subcommand("thresholds", "Exact threshold constants");

  auto* verify_all = app.add_subcommand("verify-all", "Run every shipped check");
  verify_all->add_option("--data-dir", data_dir, "Catalogue directory (env RTLAB_DATA_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*detect) {
      const std::string text = read_file(detect_file);
      run.inputs = text + "\n" + detect_pattern;
      Graph g;
      check(rt_graph_from_json(text.c_str(), &g.g));
      int found = 0;
      LibString witness;
      check(rt_detect(g.g, detect_pattern.c_str(), &found, &witness.p));
      LibString canon;
      check(rt_graph_to_json(g.g, &canon.p));
      run.result = {{"pattern", detect_pattern},
                    {"found", found != 0},
                    {"witness", found ? witness.parse() : json(nullptr)},
                    {"graph_digest", digest(canon.str())}};
      run.pass = found == 0;
      run.exit_code = found ? kExitFail : kExitPass;
    } else if (*construct) {
      run.inputs = construct_id + " " + std::to_string(construct_n) + " " + std::to_string(construct_c);
      LibString report;
      check(rt_construction_report(construct_id.c_str(), construct_n, construct_c, &report.p));
      run.result = report.parse();
      Graph g;
      check(rt_construct(construct_id.c_str(), construct_n, construct_c, &g.g));
      LibString text;
      check(rt_graph_to_json(g.g, &text.p));
      run.result["graph_digest"] = digest(text.str());
      if (!construct_out.empty()) {
        std::ofstream out(construct_out, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + construct_out + "'");
        out << text.str();
        run.result["out"] = construct_out;
      }
      run.pass = run.result["pass"].get<bool>();
      run.exit_code = run.pass ? kExitPass : kExitFail;
    } else if (*search) {
      run.inputs = std::to_string(search_n) + " " + std::to_string(search_c) + " " + search_pattern + " " +
                   search_class + " " + search_objective + " " + std::to_string(search_nodes);
      LibString out;
      check(rt_search(search_n, search_c, search_pattern.c_str(), search_class.c_str(), search_objective.c_str(),
                      search_nodes, &out.p));
      run.result = out.parse();
      run.pass = run.result["exhaustive"].get<bool>();
      run.exit_code = run.pass ? kExitPass : kExitFail;
    } else if (*scenario_run || *verify_table) {
      const std::string path =
          *scenario_run ? scenario_file : (fs::path(data_dir) / "table10x10.json").string();
      bool violated = false;
      run.result = run_catalogue_file(path, jobs, run.inputs, violated);
      run.result["file"] = path;
      run.pass = !violated;
      run.exit_code = violated ? kExitFail : kExitPass;
    } else if (*scenario_dump) {
      LibString out;
      check(rt_catalogue_builtin(dump_name.c_str(), &out.p));
      std::cout << out.str() << "\n";
      return kExitPass;
    } else if (*lemma) {
      if (lemma_grid_max >= 0) {
        run.inputs = "grid " + std::to_string(lemma_grid_max);
        bool ok = true;
        run.result = {{"rows", lemma_grid(lemma_grid_max, ok)}};
        run.pass = ok;
      } else {
        run.inputs = std::to_string(lemma_a) + " " + std::to_string(lemma_b);
        LibString out;
        check(rt_lemma21(lemma_a, lemma_b, &out.p));
        run.result = out.parse();
        run.pass = run.result["within_bound"].get<bool>();
      }
      run.exit_code = run.pass ? kExitPass : kExitFail;
    } else if (*optscan) {
      std::ostringstream in;
      in << scan_step << " " << scan_iters << " " << scan_nonstrict;
      run.inputs = in.str();
      LibString out;
      check(rt_optscan(scan_step, scan_iters, scan_nonstrict ? 0 : 1, jobs, &out.p));
      run.result = out.parse();
      run.pass = run.result["pass"].get<bool>();
      run.exit_code = run.pass ? kExitPass : kExitFail;
    } else if (*thresholds) {
      LibString out;
      check(rt_thresholds(&out.p));
      run.result = out.parse();
      run.pass = run.result["pass"].get<bool>();
      run.exit_code = run.pass ? kExitPass : kExitFail;
    } else if (*verify_all) {
      LibString names_json;
      check(rt_catalogue_names(&names_json.p));
      const auto names = names_json.parse().get<std::vector<std::string>>();
      for (const auto& name : names)
        if (!fs::exists(fs::path(data_dir) / (name + ".json")))
          throw UsageError("missing catalogue '" + (fs::path(data_dir) / (name + ".json")).string() + "'");

      bool all = true;
      json catalogues = json::object();
      for (const auto& name : names) {
        bool violated = false;
        json rep = run_catalogue_file((fs::path(data_dir) / (name + ".json")).string(), jobs, run.inputs, violated);
        catalogues[name] = {{"summary", rep["summary"]}, {"pass", !violated}};
        all = all && !violated;
      }
      bool lemma_ok = true;
      json lemma_rows = lemma_grid(7, lemma_ok);
      LibString scan;
      check(rt_optscan(0.002, 200, 1, jobs, &scan.p));
      const json scan_json = scan.parse();
      LibString thr;
      check(rt_thresholds(&thr.p));
      const json thr_json = thr.parse();
      bool suite_ok = true;
      json suite = construction_suite(3, 30, suite_ok);

      all = all && lemma_ok && scan_json["pass"].get<bool>() && thr_json["pass"].get<bool>() && suite_ok;
      run.result = {{"catalogues", catalogues},
                    {"lemma21", {{"max_sum", 7}, {"pass", lemma_ok}, {"rows", lemma_rows}}},
                    {"optscan", scan_json},
                    {"thresholds", {{"pass", thr_json["pass"]}, {"identities", thr_json["identities"]}}},
                    {"constructions", suite}};
      run.pass = all;
      run.exit_code = all ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: unexpected library output: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const json report = {{"command", run.command},
                       {"input_digest", digest(run.inputs)},
                       {"result", run.result},
                       {"pass", run.pass},
                       {"wall_time_s", seconds}};
  std::cout << report.dump(2) << "\n";
  return run.exit_code;
}
