#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "spectool/generators.hpp"
#include "spectool/graph_io.hpp"
#include "spectool/report_json.hpp"
#include "spectool/verify.hpp"

namespace spectool::cli {

namespace {

// Raised for any invalid flag combination; mapped to kExitConfigError.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_positive(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw ConfigError(what + " must be a positive integer, got '" + s + "'");
  }
  return v;
}

int default_jobs() {
  const char* env = std::getenv("SPECTOOL_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  return parse_positive(env, "SPECTOOL_JOBS");
}

std::vector<TheoremId> parse_theorems(const std::vector<std::string>& raw) {
  std::vector<TheoremId> out;
  for (const auto& group : raw) {
    for (const auto& id : split_list(group)) {
      if (id == "all") {
        out.insert(out.end(), kAllTheorems.begin(), kAllTheorems.end());
      } else if (auto t = parse_theorem_id(id)) {
        out.push_back(*t);
      } else {
        throw ConfigError("unknown theorem id '" + id + "'");
      }
    }
  }
  if (out.empty()) out.assign(kAllTheorems.begin(), kAllTheorems.end());
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

// ---------------------------------------------------------------------------
// Input

struct InputGraph {
  int line;
  Graph graph;
};

std::vector<InputGraph> read_graphs(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  // Edge lists open with an "n m" header; graph6 never starts with a digit.
  static const std::regex kHeader(R"(^\s*\d+\s+\d+\s*$)");
  std::istringstream lines(text);
  bool edge_list = false;
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    edge_list = std::regex_match(line, kHeader);
    break;
  }
  std::istringstream body(text);
  std::vector<InputGraph> out;
  try {
    if (edge_list) {
      out.push_back({1, read_edge_list(body)});
    } else {
      for (auto& p : read_graph6_lines(body)) out.push_back({p.line_number, std::move(p.graph)});
    }
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  return out;
}

std::vector<InputGraph> read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_graphs(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return read_graphs(file);
}

// ---------------------------------------------------------------------------
// Output

void print_analysis(std::ostream& out, int index, const Json& a) {
  out << "graph " << index;
  if (a.contains("graph6")) out << " " << a["graph6"].get<std::string>();
  out << ": n=" << a["n"] << " m=" << a["m"] << "\n";
  if (!a.contains("spectrum")) return;
  const auto& st = a["stats"];
  const auto& sp = a["spectrum"];
  out << "  degrees: min " << st["min_degree"] << " max " << st["max_degree"] << ", "
      << (st["connected"].get<bool>() ? "connected" : "disconnected") << ", "
      << st["regularity"].get<std::string>() << "\n";
  out << "  lambda1 = " << fmt(sp["lambda1"]) << ", lambda_n = " << fmt(sp["lambda_n"])
      << ", distinct eigenvalues = " << sp["distinct"] << "\n";
  out << "  triangles = " << st["triangles"] << " (spectral " << fmt(sp["triangles_spectral"]) << ")\n";
  out << "  spectral-mantel: " << a["spectral_mantel"]["outcome"].get<std::string>() << "\n";
  out << "  bounds:\n";
  for (const auto& b : a["bounds"]) {
    out << "    " << std::left << std::setw(8) << b["id"].get<std::string>() << std::right << " "
        << fmt(b["bound"]);
    if (b.contains("skipped")) {
      out << "  (" << b["skipped"].get<std::string>() << ")";
    } else {
      out << "  slack " << fmt(b["slack"]) << (b["tight"].get<bool>() ? "  tight" : "")
          << (b["holds"].get<bool>() ? "" : "  VIOLATED");
    }
    out << "\n";
  }
  if (a.contains("walks")) {
    out << "  walks:";
    for (const auto& w : a["walks"]["totals"]) out << " " << w.get<std::string>();
    out << "\n";
  }
  if (a.contains("cycles")) {
    out << "  cycle lengths:";
    for (int l : a["cycles"]["lengths"]) out << " " << l;
    if (!a["cycles"]["inconclusive"].empty()) out << "  (budget hit: " << a["cycles"]["inconclusive"] << ")";
    out << "\n";
  }
}

void print_sweep(std::ostream& out, const SweepReport& r) {
  out << r.mode << " run over " << r.graphs_checked << " graphs\n";
  for (const auto& [k, v] : r.config) out << "  " << k << " = " << v << "\n";
  out << std::left << std::setw(20) << "theorem" << std::right << std::setw(12) << "holds"
      << std::setw(12) << "vacuous" << std::setw(10) << "violated" << std::setw(14) << "inconclusive"
      << std::setw(10) << "advisory" << "\n";
  for (const auto& [id, t] : r.totals) {
    out << std::left << std::setw(20) << theorem_id(id) << std::right << std::setw(12) << t.holds
        << std::setw(12) << t.vacuous << std::setw(10) << t.violated << std::setw(14)
        << t.inconclusive << std::setw(10) << t.advisory << "\n";
  }
  for (const auto& [kind, census] : r.tight) {
    out << "tight " << bound_id(kind) << ": " << census.count << "\n";
  }
  for (const auto& c : r.counterexamples) {
    out << "counterexample " << theorem_id(c.theorem) << " " << c.graph << ": " << c.verdict.reason
        << (c.verdict.advisory ? " (advisory)" : "") << "\n";
  }
  out << "violations: " << r.violations() << "\n";
}

int emit_sweep(std::ostream& out, const SweepReport& r, bool json) {
  if (json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    print_sweep(out, r);
  }
  return r.violations() > 0 ? kExitViolations : kExitOk;
}

// ---------------------------------------------------------------------------
// gen

std::vector<int> parse_params(const std::string& s) {
  std::vector<int> out;
  for (const auto& p : split_list(s)) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc() || ptr != p.data() + p.size() || v < 0) {
      throw ConfigError("bad parameter '" + p + "'");
    }
    out.push_back(v);
  }
  return out;
}

Graph generate(const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw ConfigError(family + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  try {
    if (family == "complete") return need(1), complete(params[0]);
    if (family == "bipartite") return need(2), complete_bipartite(params[0], params[1]);
    if (family == "cycle") return need(1), cycle(params[0]);
    if (family == "path") return need(1), path(params[0]);
    if (family == "star") return need(1), star(params[0]);
    if (family == "petersen") return need(0), petersen();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown family '" + family + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spectral extremal graph toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Report spectra, bounds and structure per input graph");
  std::string input_path;
  bool analyze_json = false;
  int walks = -1;
  int cycles = -1;
  analyze->add_option("input", input_path, "graph6 lines or an edge list; standard input when omitted");
  analyze->add_flag("--json", analyze_json, "Emit a JSON array");
  analyze->add_option("--walks", walks, "Walk counts up to length K")->check(CLI::Range(0, 1000));
  analyze->add_option("--cycles", cycles, "Cycle lengths 3..L")->check(CLI::Range(3, 100000));

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive check over all small graphs");
  std::vector<std::string> verify_theorems;
  int max_n = 6;
  int min_n = 1;
  bool connected = false;
  std::string dedup = "labeled";
  std::string verify_jobs;
  bool verify_json = false;
  bool long_run = false;
  bool verify_no_timing = false;
  std::size_t tight_cap = 1000;
  verify->add_option("--theorem", verify_theorems, "Theorem id(s) or 'all'");
  verify->add_option("--max-n", max_n, "Largest order (at most 8)");
  verify->add_option("--min-n", min_n, "Smallest order");
  verify->add_flag("--connected", connected, "Connected graphs only");
  verify->add_option("--dedup", dedup, "labeled | canonical");
  verify->add_option("--jobs", verify_jobs, "Worker threads (default $SPECTOOL_JOBS or 1)");
  verify->add_flag("--json", verify_json, "Emit the report as JSON");
  verify->add_flag("--long-run", long_run, "Permit the n = 8 labelled sweep");
  verify->add_flag("--no-timing", verify_no_timing, "Report runtime_ms as 0");
  verify->add_option("--tight-cap", tight_cap, "Tight graphs listed per bound");

  // fuzz
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check random graphs from a seeded distribution");
  std::string dist;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> fuzz_theorems;
  std::string fuzz_jobs;
  bool fuzz_json = false;
  bool fuzz_no_timing = false;
  fuzz_cmd->add_option("--dist", dist, "gnp:n,p | bipartite:a,b,p | regular:n,k")->required();
  fuzz_cmd->add_option("--count", count, "Number of samples");
  fuzz_cmd->add_option("--seed", seed, "Base seed");
  fuzz_cmd->add_option("--theorem", fuzz_theorems, "Theorem id(s) or 'all'");
  fuzz_cmd->add_option("--jobs", fuzz_jobs, "Worker threads (default $SPECTOOL_JOBS or 1)");
  fuzz_cmd->add_flag("--json", fuzz_json, "Emit the report as JSON");
  fuzz_cmd->add_flag("--no-timing", fuzz_no_timing, "Report runtime_ms as 0");

  // gen
  auto* gen = app.add_subcommand("gen", "Print a named graph");
  std::string family;
  std::string params;
  std::string gen_format = "graph6";
  gen->add_option("--family", family, "complete | bipartite | cycle | path | star | petersen")->required();
  gen->add_option("--params", params, "Comma separated parameters");
  gen->add_option("--format", gen_format, "graph6 | edgelist");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (analyze->parsed()) {
      AnalyzeOptions options;
      if (walks >= 0) options.walks = walks;
      if (cycles >= 0) options.cycles = cycles;
      const auto graphs = read_input(input_path, in);
      Json all = Json::array();
      int index = 0;
      for (const auto& g : graphs) {
        Json a;
        try {
          a = analyze_graph(g.graph, options);
        } catch (const Error& e) {
          a = {{"n", g.graph.order()}, {"m", g.graph.edge_count()}, {"error", e.what()}};
        }
        a["line"] = g.line;
        if (analyze_json) {
          all.push_back(std::move(a));
        } else {
          print_analysis(out, ++index, a);
          if (a.contains("error")) out << "  error: " << a["error"].get<std::string>() << "\n";
        }
      }
      if (analyze_json) out << all.dump(2) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      SweepConfig config;
      config.n_min = min_n;
      config.n_max = max_n;
      config.connected_only = connected;
      if (dedup == "labeled" || dedup == "labelled") {
        config.dedup = Dedup::kLabeled;
      } else if (dedup == "canonical") {
        config.dedup = Dedup::kCanonical;
      } else {
        throw ConfigError("--dedup must be labeled or canonical");
      }
      config.theorems = parse_theorems(verify_theorems);
      config.jobs = verify_jobs.empty() ? default_jobs() : parse_positive(verify_jobs, "--jobs");
      config.allow_long_run = long_run;
      config.record_timing = !verify_no_timing;
      config.tight_cap = tight_cap;
      SweepReport report;
      try {
        report = sweep(config);
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
      return emit_sweep(out, report, verify_json);
    }

    if (fuzz_cmd->parsed()) {
      FuzzConfig config;
      try {
        config.distribution = FuzzDistribution::parse(dist);
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
      config.count = count;
      config.seed = seed;
      config.theorems = parse_theorems(fuzz_theorems);
      config.jobs = fuzz_jobs.empty() ? default_jobs() : parse_positive(fuzz_jobs, "--jobs");
      config.record_timing = !fuzz_no_timing;
      return emit_sweep(out, fuzz(config), fuzz_json);
    }

    if (gen->parsed()) {
      const Graph g = generate(family, parse_params(params));
      if (gen_format == "graph6") {
        if (g.order() > kMaxGraph6Order) throw ConfigError("graph6 output is limited to n <= 62");
        out << to_graph6(g) << "\n";
      } else if (gen_format == "edgelist") {
        write_edge_list(out, g);
      } else {
        throw ConfigError("--format must be graph6 or edgelist");
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace spectool::cli
