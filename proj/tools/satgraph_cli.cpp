// satgraph: build, verify and search K_t-saturated subgraphs of complete
// balanced multipartite hosts.
//
// Exit codes:
//   0  success / verified saturated
//   1  verified not saturated (maximality failure)
//   2  contains a K_t (freeness failure)
//   3  parameter or admissibility error
//   4  search budget exhausted
//   5  I/O or parse error

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "satgraph/constructions.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/io.hpp"
#include "satgraph/search.hpp"
#include "satgraph/verify.hpp"

using nlohmann::json;
using namespace satgraph;

namespace {

enum ExitCode {
  kOk = 0,
  kNotSaturated = 1,
  kNotFree = 2,
  kBadParameters = 3,
  kBudgetExhausted = 4,
  kIoError = 5,
};

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Graph input: a JSON object ({"k","n","edges"}) or a graph6 line.  graph6
// carries no part structure, so k and n must come from flags in that case.
Subgraph load_graph(const std::string& path, int k, int n) {
  std::string text = read_input(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty graph input", 0);
  if (text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON graph", first);
    return graph_from_json(j);
  }
  if (k == 0 || n == 0)
    throw ParameterDomainError("graph6 input needs explicit --k and --n");
  std::size_t eol = text.find('\n', first);
  return decode_graph6(
      std::string_view(text).substr(first, eol == std::string::npos
                                               ? std::string::npos
                                               : eol - first),
      Host(k, n));
}

void print_report_text(const SaturationReport& rep, const Subgraph& g,
                       std::ostream& os) {
  os << "host K_" << g.host().part_count() << "^" << g.host().part_size()
     << ", edges " << g.edge_count() << ", t = " << rep.t << "\n";
  if (!rep.kt_free) {
    os << "contains K_" << rep.t << ":";
    for (int v : rep.kt_witness->vertices) os << " " << v;
    os << "\n";
    return;
  }
  os << "K_" << rep.t << "-free; missing edges checked: " << rep.missing_checked
     << "\n";
  if (rep.non_completing.empty()) {
    os << "saturated: every missing edge closes a K_" << rep.t << "\n";
  } else {
    os << "not saturated; " << rep.non_completing.size()
       << " missing edge(s) close nothing:";
    for (const Edge& e : rep.non_completing)
      os << " (" << e.u << "," << e.v << ")";
    os << "\n";
  }
}

int report_exit(const SaturationReport& rep) {
  if (!rep.kt_free) return kNotFree;
  return rep.is_saturated ? kOk : kNotSaturated;
}

struct BuildArgs {
  std::string kind;
  int k = 0, n = 0, t = 3;
  std::string format = "text";
  bool no_verify = false;
  int jobs = 0;
  std::string output;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "' for writing", 0);
  return file;
}

long long formula_or_minus1(const ConstructionSpec& spec) {
  try {
    return size_formula(spec);
  } catch (const NoClosedFormError&) {
    return -1;
  }
}

int cmd_build(const BuildArgs& args) {
  ConstructionSpec spec{kind_from_name(args.kind), args.k, args.n, args.t};
  if (spec.kind == Kind::G1 || spec.kind == Kind::G2) spec.t = 3;
  ConstructionArtifacts art = build(spec);
  long long formula = formula_or_minus1(spec);

  std::optional<SaturationReport> rep;
  if (!args.no_verify)
    rep = verify_saturated(art.graph, spec.t, resolve_jobs(args.jobs));

  std::ofstream file;
  std::ostream& os = open_output(args.output, file);
  if (args.format == "graph6") {
    os << encode_graph6(art.graph) << "\n";
    std::cerr << kind_name(spec.kind) << " k=" << spec.k << " n=" << spec.n
              << " t=" << spec.t << ": |E| = " << art.graph.edge_count()
              << ", |S| = " << art.hubs.size();
    if (formula >= 0) std::cerr << ", formula = " << formula;
    std::cerr << "\n";
  } else if (args.format == "json") {
    json j = graph_to_json(art.graph);
    j["kind"] = kind_name(spec.kind);
    j["t"] = spec.t;
    j["edge_count"] = art.graph.edge_count();
    j["hubs"] = art.hubs;
    json completion = json::array();
    for (const Edge& e : art.completion_edges)
      completion.push_back(json::array({e.u, e.v}));
    j["completion_edges"] = std::move(completion);
    j["formula"] = formula >= 0 ? json(formula) : json(nullptr);
    j["notes"] = art.notes;
    if (rep) j["verified"] = rep->is_saturated;
    os << j.dump() << "\n";
  } else if (args.format == "text") {
    os << kind_name(spec.kind) << " on K_" << spec.k << "^" << spec.n
       << " (t = " << spec.t << ")\n";
    os << "edges: " << art.graph.edge_count();
    if (formula >= 0) os << " (closed form " << formula << ")";
    os << "\nhub set size: " << art.hubs.size() << "\n";
    if (!art.completion_edges.empty())
      os << "greedy completion added " << art.completion_edges.size()
         << " edge(s)\n";
    for (const std::string& note : art.notes) os << "note: " << note << "\n";
    if (rep) print_report_text(*rep, art.graph, os);
  } else {
    throw ParameterDomainError("build supports --format text, json or graph6");
  }

  if (rep && !rep->is_saturated) {
    std::cerr << "self-verification failed\n";
    return report_exit(*rep);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K_t-saturated subgraphs of complete multipartite hosts"};
  app.require_subcommand(1);

  // ---- build ----
  BuildArgs build_args;
  CLI::App* build_cmd =
      app.add_subcommand("build", "materialize a construction");
  build_cmd->add_option("--kind", build_args.kind,
                        "g1|g2|gknt|hknt|fknt|iknt")->required();
  build_cmd->add_option("--k", build_args.k, "part count")->required();
  build_cmd->add_option("--n", build_args.n, "part size")->required();
  build_cmd->add_option("--t", build_args.t, "clique order (default 3)");
  build_cmd->add_option("--format", build_args.format, "text|json|graph6");
  build_cmd->add_flag("--no-verify", build_args.no_verify,
                      "skip self-verification");
  build_cmd->add_option("--jobs", build_args.jobs,
                        "verification threads (default: cores)");
  build_cmd->add_option("--output,-o", build_args.output, "output file");

  // ---- verify ----
  std::string verify_input = "-";
  int verify_k = 0, verify_n = 0, verify_t = 3, verify_jobs = 0;
  std::string verify_format = "text";
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check saturation of a graph6/JSON graph");
  verify_cmd->add_option("--input,-i", verify_input,
                         "graph file or - for stdin");
  verify_cmd->add_option("--k", verify_k, "part count (graph6 input)");
  verify_cmd->add_option("--n", verify_n, "part size (graph6 input)");
  verify_cmd->add_option("--t", verify_t, "clique order")->required();
  verify_cmd->add_option("--format", verify_format, "text|json");
  verify_cmd->add_option("--jobs", verify_jobs, "scan threads");

  // ---- formulas ----
  int f_k = 0, f_n = 0, f_t = 0;
  std::string f_format = "text";
  CLI::App* formulas_cmd =
      app.add_subcommand("formulas", "closed-form sizes and the minimum side");
  formulas_cmd->add_option("--k", f_k)->required();
  formulas_cmd->add_option("--n", f_n)->required();
  formulas_cmd->add_option("--t", f_t, "also evaluate the general bound");
  formulas_cmd->add_option("--format", f_format, "text|json");

  // ---- table ----
  std::string tbl_kinds = "g1,g2";
  int tbl_k = 3, tbl_kmax = 0, tbl_n = 2, tbl_nmax = 0, tbl_t = 3, tbl_tmax = 0;
  bool tbl_no_verify = false;
  int tbl_jobs = 0;
  std::string tbl_output;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "CSV grid: formula vs built size vs verification verdict");
  table_cmd->add_option("--kind", tbl_kinds, "comma list or 'all'");
  table_cmd->add_option("--k", tbl_k, "k lower bound")->required();
  table_cmd->add_option("--k-max", tbl_kmax, "k upper bound (default: --k)");
  table_cmd->add_option("--n", tbl_n, "n lower bound")->required();
  table_cmd->add_option("--n-max", tbl_nmax, "n upper bound (default: --n)");
  table_cmd->add_option("--t", tbl_t, "t lower bound (default 3)");
  table_cmd->add_option("--t-max", tbl_tmax, "t upper bound (default: --t)");
  table_cmd->add_flag("--no-verify", tbl_no_verify);
  table_cmd->add_option("--jobs", tbl_jobs);
  table_cmd->add_option("--output,-o", tbl_output, "output file");

  // ---- exact ----
  int ex_k = 0, ex_n = 0, ex_t = 0;
  long long ex_cap = 30;
  std::uint64_t ex_max_subsets = 0;
  double ex_max_seconds = 0.0;
  bool ex_no_prune = false;
  std::string ex_format = "text";
  CLI::App* exact_cmd = app.add_subcommand(
      "exact", "exhaustive minimum saturated size on a tiny host");
  exact_cmd->add_option("--k", ex_k)->required();
  exact_cmd->add_option("--n", ex_n)->required();
  exact_cmd->add_option("--t", ex_t)->required();
  exact_cmd->add_option("--edge-cap", ex_cap,
                        "refuse hosts with more edges (default 30)");
  exact_cmd->add_option("--max-subsets", ex_max_subsets,
                        "stop after this many subset checks (0 = unlimited)");
  exact_cmd->add_option("--max-seconds", ex_max_seconds,
                        "wall-clock limit (0 = unlimited)");
  exact_cmd->add_flag("--no-prune", ex_no_prune,
                      "disable the clique prune (diagnostics)");
  exact_cmd->add_option("--format", ex_format, "text|json");

  // ---- heuristic ----
  int h_k = 0, h_n = 0, h_t = 0, h_trials = 64;
  std::uint64_t h_seed = 1;
  std::string h_format = "text";
  CLI::App* heuristic_cmd = app.add_subcommand(
      "heuristic", "randomized greedy upper bounds for sat(K_t, host)");
  heuristic_cmd->add_option("--k", h_k)->required();
  heuristic_cmd->add_option("--n", h_n)->required();
  heuristic_cmd->add_option("--t", h_t)->required();
  heuristic_cmd->add_option("--trials", h_trials, "default 64");
  heuristic_cmd->add_option("--seed", h_seed, "default 1");
  heuristic_cmd->add_option("--format", h_format, "text|json");

  // ---- density ----
  std::string d_kind, d_input, d_format = "text";
  int d_k = 0, d_n = 0, d_t = 3;
  CLI::App* density_cmd = app.add_subcommand(
      "density", "per-part-pair edge counts and densities");
  density_cmd->add_option("--kind", d_kind, "build this construction");
  density_cmd->add_option("--input,-i", d_input, "or read a graph file");
  density_cmd->add_option("--k", d_k);
  density_cmd->add_option("--n", d_n);
  density_cmd->add_option("--t", d_t);
  density_cmd->add_option("--format", d_format, "text|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kBadParameters;
  }

  try {
    if (*build_cmd) return cmd_build(build_args);

    if (*verify_cmd) {
      Subgraph g = [&] {
        try {
          return load_graph(verify_input, verify_k, verify_n);
        } catch (const ParameterDomainError&) {
          throw;  // missing --k/--n stays a parameter error
        } catch (const Error& e) {
          throw ParseError(std::string("graph input rejected: ") + e.what(), 0);
        }
      }();
      SaturationReport rep =
          verify_saturated(g, verify_t, resolve_jobs(verify_jobs));
      if (verify_format == "json")
        std::cout << report_to_json(rep, g).dump() << "\n";
      else
        print_report_text(rep, g, std::cout);
      return report_exit(rep);
    }

    if (*formulas_cmd) {
      long long g1 = size_formula({Kind::G1, f_k, f_n, 3});
      long long g2 = size_formula({Kind::G2, f_k, f_n, 3});
      K3Min k3 = sat_k3_formula(f_k, f_n);
      json j{{"k", f_k},      {"n", f_n},
             {"g1", g1},      {"g2", g2},
             {"min", k3.value}, {"argmin", kind_name(k3.argmin)}};
      if (f_t > 0) {
        j["t"] = f_t;
        j["gknt"] = size_formula({Kind::Gknt, f_k, f_n, f_t});
        j["hknt"] = size_formula({Kind::Hknt, f_k, f_n, f_t});
        j["general_min"] = general_bound_formula(f_k, f_n, f_t);
      }
      if (f_format == "json") {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "g1(k=" << f_k << ", n=" << f_n << ") = " << g1 << "\n"
                  << "g2(k=" << f_k << ", n=" << f_n << ") = " << g2 << "\n"
                  << "min = " << k3.value << " attained by "
                  << kind_name(k3.argmin) << "\n";
        if (f_t > 0)
          std::cout << "gknt(t=" << f_t << ") = " << j["gknt"] << ", hknt(t="
                    << f_t << ") = " << j["hknt"] << ", min = "
                    << j["general_min"] << "\n";
      }
      return kOk;
    }

    if (*table_cmd) {
      if (tbl_kmax == 0) tbl_kmax = tbl_k;
      if (tbl_nmax == 0) tbl_nmax = tbl_n;
      if (tbl_tmax == 0) tbl_tmax = tbl_t;
      std::vector<Kind> kinds;
      if (tbl_kinds == "all") {
        kinds = {Kind::G1, Kind::G2, Kind::Gknt, Kind::Hknt, Kind::Fknt,
                 Kind::Iknt};
      } else {
        std::stringstream ss(tbl_kinds);
        std::string item;
        while (std::getline(ss, item, ',')) kinds.push_back(kind_from_name(item));
      }
      std::ofstream file;
      std::ostream& os = open_output(tbl_output, file);
      os << "kind,k,n,t,formula,built,verified\n";
      for (Kind kind : kinds)
        for (int k = tbl_k; k <= tbl_kmax; ++k)
          for (int n = tbl_n; n <= tbl_nmax; ++n)
            for (int t = tbl_t; t <= tbl_tmax; ++t) {
              ConstructionSpec spec{kind, k, n, t};
              if (kind == Kind::G1 || kind == Kind::G2) {
                if (t != tbl_t) continue;  // t is fixed; emit one row
                spec.t = 3;
              }
              try {
                validate(spec);
              } catch (const ParameterDomainError&) {
                continue;  // inadmissible grid corner
              }
              ConstructionArtifacts art = build(spec);
              long long formula = formula_or_minus1(spec);
              os << kind_name(kind) << "," << spec.k << "," << spec.n << ","
                 << spec.t << ",";
              if (formula >= 0) os << formula;
              os << "," << art.graph.edge_count() << ",";
              if (tbl_no_verify)
                os << "skipped";
              else
                os << (verify_saturated(art.graph, spec.t,
                                        resolve_jobs(tbl_jobs))
                               .is_saturated
                           ? "true"
                           : "false");
              os << "\n";
            }
      return kOk;
    }

    if (*exact_cmd) {
      ExactBudget budget;
      budget.edge_cap = ex_cap;
      budget.max_subsets = ex_max_subsets;
      budget.max_seconds = ex_max_seconds;
      budget.prune_kt = !ex_no_prune;
      ExactResult res = brute_force_sat(Host(ex_k, ex_n), ex_t, budget);
      if (ex_format == "json") {
        json j{{"k", ex_k},
               {"n", ex_n},
               {"t", ex_t},
               {"min_size", res.min_size ? json(*res.min_size) : json(nullptr)},
               {"witness", res.witness ? json(encode_graph6(*res.witness))
                                       : json(nullptr)},
               {"subsets_examined", res.subsets_examined},
               {"sizes_exhausted", res.sizes_exhausted},
               {"wall_budget_hit", res.wall_budget_hit}};
        std::cout << j.dump() << "\n";
      } else {
        if (res.min_size)
          std::cout << "sat(K_" << ex_t << ", K_" << ex_k << "^" << ex_n
                    << ") = " << *res.min_size << "\nwitness: "
                    << encode_graph6(*res.witness) << "\n";
        else
          std::cout << "no result; budget exhausted\n";
        std::cout << "subsets examined: " << res.subsets_examined
                  << ", sizes exhausted through " << res.sizes_exhausted
                  << "\n";
      }
      return res.wall_budget_hit ? kBudgetExhausted : kOk;
    }

    if (*heuristic_cmd) {
      HeuristicResult res =
          random_greedy_upper_bound(Host(h_k, h_n), h_t, h_trials, h_seed);
      if (h_format == "json") {
        json j{{"k", h_k},
               {"n", h_n},
               {"t", h_t},
               {"trials", h_trials},
               {"seed", h_seed},
               {"best_size", res.best_size},
               {"best", encode_graph6(res.best_graph)},
               {"per_trial_sizes", res.per_trial_sizes}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "best saturated size over " << h_trials
                  << " trials: " << res.best_size << "\nbest: "
                  << encode_graph6(res.best_graph) << "\nper-trial:";
        for (long long s : res.per_trial_sizes) std::cout << " " << s;
        std::cout << "\n";
      }
      return kOk;
    }

    if (*density_cmd) {
      std::optional<Subgraph> g;
      if (!d_kind.empty()) {
        g = build({kind_from_name(d_kind), d_k, d_n, d_t}).graph;
      } else if (!d_input.empty()) {
        try {
          g = load_graph(d_input, d_k, d_n);
        } catch (const ParameterDomainError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(std::string("graph input rejected: ") + e.what(), 0);
        }
      } else {
        throw ParameterDomainError("density needs --kind or --input");
      }
      if (d_format == "csv")
        std::cout << density_to_csv(*g);
      else if (d_format == "json")
        std::cout << density_to_json(*g).dump() << "\n";
      else
        for (const PairDensity& row : density_profile(*g))
          std::cout << "V" << row.part_a << "-V" << row.part_b << ": "
                    << row.edges << " edges, density " << row.density << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParameters;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParameters;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kIoError;
  }
  return kBadParameters;
}
