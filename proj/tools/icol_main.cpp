// icol: interval edge colouring toolkit, batch front-end.
//
// One binary, nine subcommands. Every run prints a RunReport document:
//   {"command", "input" (fingerprint), "seed", "timing_ms", "results"}
// The results payload is bit-stable for a fixed seed and input; timing_ms is
// the only field that varies between identical invocations.
//
// Exit codes: solve/tmax 0 = colourable/found, 1 = not colourable,
// 2 = timeout; check 0 = valid, 1 = invalid; certificate 0 = found,
// 1 = none; bounds/corpus 0 = all pass, 1 = failure; everywhere 3 = I/O or
// parse error, 4 = usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icol/corpus.hpp"
#include "icol/reference.hpp"

namespace {

using icol::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::optional<long long> time_limit_ms;
  std::string out_path;  // report destination; empty = stdout
  bool pretty = false;
};

icol::SolveOptions solve_opts(const GlobalOpts& g) {
  icol::SolveOptions o;
  o.seed = g.seed;
  o.time_limit_ms = g.time_limit_ms;
  return o;
}

// flat key/value rendering of the report for --pretty; nested payloads are
// shown as single-line JSON, long arrays elided to their length
void print_pretty(const Json& report) {
  auto cell = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && v.size() > 24)
      return "[" + std::to_string(v.size()) + " entries]";
    return v.dump();
  };
  std::ostream& os = std::cout;
  for (const auto& [key, value] : report.items()) {
    if (key != "results") {
      os << key << "  " << cell(value) << "\n";
      continue;
    }
    for (const auto& [rk, rv] : value.items())
      os << rk << "  " << cell(rv) << "\n";
  }
}

int emit(const std::string& command, const std::string& input_bytes,
         const GlobalOpts& g, const Json& results, long long timing_ms,
         int exit_code) {
  Json report;
  report["command"] = command;
  report["input"] = icol::fingerprint_bytes(input_bytes);
  report["seed"] = g.seed;
  report["timing_ms"] = timing_ms;
  report["results"] = results;
  if (!g.out_path.empty()) write_file(g.out_path, report.dump() + "\n");
  if (g.pretty)
    print_pretty(report);
  else if (g.out_path.empty())
    std::cout << report.dump() << "\n";
  return exit_code;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int solve_exit(icol::SolveStatus s) {
  switch (s) {
    case icol::SolveStatus::colourable_with_witness: return 0;
    case icol::SolveStatus::not_colourable: return 1;
    default: return 2;
  }
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval edge colouring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name too

  GlobalOpts g;
  app.add_option("--seed", g.seed, "deterministic seed (default 0)");
  long long tl = -1;
  app.add_option("--time-limit-ms", tl, "wall-clock budget for searches");
  app.add_option("--out", g.out_path, "write the report (or graph) here");
  app.add_flag("--pretty", g.pretty, "human-readable table instead of JSON");

  std::string path;          // positional input file
  std::string alpha_s = "1";
  std::optional<int> palette_max;

  CLI::App* solve = app.add_subcommand("solve", "decide interval colourability");
  solve->add_option("file", path)->required();
  solve->add_option("--alpha", alpha_s, "window factor, rational >= 1");
  solve->add_option("--palette-max", palette_max, "per-component colour cap");

  CLI::App* tmax = app.add_subcommand("tmax", "exact maximum palette size t(G)");
  tmax->add_option("file", path)->required();

  bool theta_exact_flag = false;
  int kmax = 3;
  CLI::App* theta = app.add_subcommand("theta", "interval colouring thickness");
  theta->add_option("file", path)->required();
  theta->add_flag("--exact", theta_exact_flag, "exhaustive search up to --kmax");
  theta->add_option("--kmax", kmax, "part budget for --exact (default 3)");

  std::string thresholds_s;
  int min_regularity = 2;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "forest + regular bipartite pipeline");
  decompose->add_option("file", path)->required();
  decompose->add_option("--thresholds", thresholds_s,
                        "comma-separated density cutoffs");
  decompose->add_option("--min-regularity", min_regularity);

  std::string effort_s = "balls";
  CLI::App* certificate = app.add_subcommand(
      "certificate", "search for a non-colourability certificate");
  certificate->add_option("file", path)->required();
  certificate->add_option("--effort", effort_s,
                          "neighbourhoods | balls | exhaustive");

  std::string family_s, blue_s, colours_out, p_s;
  int gen_s = 2, gen_n = 0, gen_a = 0, gen_b = 0, gen_da = 0, gen_db = 0;
  int gen_t = 1;
  bool odd = false, no_trim = false;
  std::string gen_alpha_s = "1/2";
  CLI::App* generate = app.add_subcommand("generate", "construct a graph");
  generate->add_option("--family", family_s,
                       "extremal | layer | union | path | cycle | complete | "
                       "complete-bipartite | random-tree | random-biregular | "
                       "knsqrtn")
      ->required();
  generate->add_option("--s", gen_s, "extremal width");
  generate->add_option("--blue", blue_s, "csv subset of 1..s-2, or 'all'");
  generate->add_flag("--odd", odd, "extremal odd extension");
  generate->add_option("--n", gen_n);
  generate->add_option("--a", gen_a);
  generate->add_option("--b", gen_b);
  generate->add_option("--d-a", gen_da);
  generate->add_option("--d-b", gen_db);
  generate->add_option("--t", gen_t, "union layer count");
  generate->add_option("--alpha", gen_alpha_s, "layer density, in (0, 1/2]");
  generate->add_option("--p", p_s, "layer edge probability override");
  generate->add_flag("--no-trim", no_trim, "skip exact-degree trimming");
  generate->add_option("--colours-out", colours_out,
                       "write the construction colouring here");

  std::string colouring_path, certificate_path;
  CLI::App* check = app.add_subcommand(
      "check", "verify a colouring or certificate against a graph");
  check->add_option("file", path)->required();
  check->add_option("--colouring", colouring_path);
  check->add_option("--certificate", certificate_path);
  check->add_option("--alpha", alpha_s, "window factor for colouring checks");

  std::optional<int> bounds_t;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "evaluate t against the known upper bounds");
  bounds->add_option("file", path)->required();
  bounds->add_option("--t", bounds_t, "palette size; computed when absent");

  CLI::App* corpus = app.add_subcommand("corpus", "run a check manifest");
  corpus->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }
  if (tl >= 0) g.time_limit_ms = tl;

  // phase one: read and parse all inputs (exit 3 on failure)
  std::string input_bytes;
  icol::Graph graph(0);
  Json manifest;
  icol::EdgeColouring colouring;
  icol::NonColourabilityCertificate cert;
  try {
    if (!generate->parsed()) input_bytes = read_file(path);
    if (corpus->parsed())
      manifest = Json::parse(input_bytes);
    else if (!generate->parsed())
      graph = icol::load_graph_string(input_bytes);
    if (check->parsed()) {
      if (colouring_path.empty() == certificate_path.empty())
        throw CLI::ValidationError(
            "check", "pass exactly one of --colouring / --certificate");
      if (!colouring_path.empty())
        colouring = icol::colouring_from_json(Json::parse(read_file(colouring_path)));
      else
        cert = icol::certificate_from_json(Json::parse(read_file(certificate_path)));
    }
    if (generate->parsed()) {
      // no input file; fingerprint the parameter record instead
      Json params;
      params["family"] = family_s;
      params["s"] = gen_s;
      params["blue"] = blue_s;
      params["odd"] = odd;
      params["n"] = gen_n;
      params["a"] = gen_a;
      params["b"] = gen_b;
      params["d_a"] = gen_da;
      params["d_b"] = gen_db;
      params["t"] = gen_t;
      params["alpha"] = gen_alpha_s;
      params["p"] = p_s;
      params["trim"] = !no_trim;
      params["seed"] = g.seed;
      input_bytes = params.dump();
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "icol: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "icol: " << e.what() << "\n";
    return 3;
  }

  // phase two: run the operation (invalid parameters exit 4, the rest 3)
  try {
    auto t0 = std::chrono::steady_clock::now();

    if (solve->parsed()) {
      icol::SolveOptions opts = solve_opts(g);
      opts.alpha = icol::Rational::parse(alpha_s);
      opts.palette_max = palette_max;
      icol::SolveResult res = icol::decide_interval_colourable(graph, opts);
      return emit("solve", input_bytes, g, icol::solve_result_to_json(res),
                  ms_since(t0), solve_exit(res.status));
    }

    if (tmax->parsed()) {
      icol::TMaxResult res = icol::t_max(graph, solve_opts(g));
      Json results;
      results["status"] = res.status == icol::TMaxStatus::found ? "found"
                          : res.status == icol::TMaxStatus::not_colourable
                              ? "not-colourable"
                              : "timeout";
      results["t"] = res.value ? Json(*res.value) : Json(nullptr);
      results["nodes"] = res.nodes_explored;
      int code = res.status == icol::TMaxStatus::found ? 0
                 : res.status == icol::TMaxStatus::not_colourable ? 1 : 2;
      return emit("tmax", input_bytes, g, results, ms_since(t0), code);
    }

    if (theta->parsed()) {
      if (theta_exact_flag) {
        icol::ThetaExactOutcome out =
            icol::theta_exact(graph, kmax, solve_opts(g));
        Json results;
        results["status"] = out.status == icol::ThetaStatus::found ? "found"
                            : out.status == icol::ThetaStatus::infeasible
                                ? "infeasible"
                                : "timeout";
        results["thickness"] =
            out.result ? icol::thickness_to_json(*out.result) : Json(nullptr);
        results["nodes"] = out.nodes_explored;
        int code = out.status == icol::ThetaStatus::found ? 0
                   : out.status == icol::ThetaStatus::infeasible ? 1 : 2;
        return emit("theta", input_bytes, g, results, ms_since(t0), code);
      }
      icol::PipelineConfig cfg;
      cfg.max_cut_seed = g.seed;
      icol::ThicknessResult res = icol::theta_upper(graph, cfg);
      Json results;
      results["status"] = "upper-bound";
      results["thickness"] = icol::thickness_to_json(res);
      return emit("theta", input_bytes, g, results, ms_since(t0), 0);
    }

    if (decompose->parsed()) {
      icol::PipelineConfig cfg;
      if (!thresholds_s.empty())
        cfg.density_thresholds = parse_int_list(thresholds_s);
      cfg.min_regularity = min_regularity;
      cfg.max_cut_seed = g.seed;
      icol::Decomposition dec = icol::decompose_pipeline(graph, cfg);
      return emit("decompose", input_bytes, g,
                  icol::decomposition_to_json(dec), ms_since(t0), 0);
    }

    if (certificate->parsed()) {
      icol::CertEffort effort;
      if (effort_s == "neighbourhoods")
        effort = icol::CertEffort::neighbourhoods;
      else if (effort_s == "balls")
        effort = icol::CertEffort::balls;
      else if (effort_s == "exhaustive")
        effort = icol::CertEffort::exhaustive;
      else
        throw std::invalid_argument("unknown effort: " + effort_s);
      auto found = icol::search_certificate(graph, effort);
      Json results;
      results["found"] = static_cast<bool>(found);
      results["certificate"] =
          found ? icol::certificate_to_json(*found) : Json(nullptr);
      return emit("certificate", input_bytes, g, results, ms_since(t0),
                  found ? 0 : 1);
    }

    if (generate->parsed()) {
      icol::Graph out_graph(0);
      std::optional<icol::EdgeColouring> out_colours;
      Json extra = Json::object();
      if (family_s == "extremal") {
        icol::ExtremalSpec spec;
        spec.s = gen_s;
        spec.odd_extension = odd;
        if (blue_s == "all")
          for (int b = 1; b <= gen_s - 2; ++b) spec.blue.push_back(b);
        else if (!blue_s.empty() && blue_s != "none")
          spec.blue = parse_int_list(blue_s);
        icol::ExtremalGraph eg = icol::gen_extremal(spec);
        out_graph = eg.graph;
        out_colours = eg.colouring;
      } else if (family_s == "layer") {
        icol::LowerBoundSpec spec;
        spec.a = gen_a;
        spec.n = gen_n;
        spec.alpha = icol::Rational::parse(gen_alpha_s);
        if (!p_s.empty()) spec.p = std::stod(p_s);
        spec.seed = g.seed;
        spec.trim = !no_trim;
        out_graph = icol::gen_lower_bound_layer(spec).graph;
      } else if (family_s == "union") {
        icol::UnionSpec spec;
        spec.n = gen_n;
        spec.t = gen_t;
        spec.seed = g.seed;
        icol::UnionGraph ug = icol::gen_union(spec);
        out_graph = ug.graph;
        extra["left_block"] = ug.left_block;
      } else {
        icol::Family family;
        if (family_s == "path")
          family = icol::Family::path;
        else if (family_s == "cycle")
          family = icol::Family::cycle;
        else if (family_s == "complete")
          family = icol::Family::complete;
        else if (family_s == "complete-bipartite")
          family = icol::Family::complete_bipartite;
        else if (family_s == "random-tree")
          family = icol::Family::random_tree;
        else if (family_s == "random-biregular")
          family = icol::Family::random_biregular;
        else if (family_s == "knsqrtn")
          family = icol::Family::knsqrtn;
        else
          throw std::invalid_argument("unknown family: " + family_s);
        icol::FamilyParams p{gen_n, gen_a, gen_b, gen_da, gen_db};
        out_graph = icol::gen_standard(family, p, g.seed);
      }

      if (!g.out_path.empty())
        write_file(g.out_path, icol::save_graph(out_graph));
      if (!colours_out.empty() && out_colours)
        write_file(colours_out,
                   icol::colouring_to_json(*out_colours).dump() + "\n");
      Json results;
      results["family"] = family_s;
      results["n"] = out_graph.vertex_count();
      results["m"] = out_graph.edge_count();
      results["graph"] = icol::graph_to_json(out_graph);
      results["colouring"] =
          out_colours ? icol::colouring_to_json(*out_colours) : Json(nullptr);
      for (auto& [k, v] : extra.items()) results[k] = v;
      // the report must go to stdout here: --out held the edge list
      GlobalOpts g2 = g;
      g2.out_path.clear();
      return emit("generate", input_bytes, g2, results, ms_since(t0), 0);
    }

    if (check->parsed()) {
      Json results;
      int code;
      if (!colouring_path.empty()) {
        icol::Rational alpha = icol::Rational::parse(alpha_s);
        bool valid = alpha.num() == alpha.den()
                         ? icol::verify_interval(graph, colouring)
                         : icol::verify_alpha_interval(graph, colouring, alpha);
        results["kind"] = "colouring";
        results["valid"] = valid;
        code = valid ? 0 : 1;
      } else {
        icol::CertCheckResult res = icol::check_certificate(graph, cert);
        results["kind"] = "certificate";
        results["valid"] = res.ok;
        results["reason"] = res.reason;
        code = res.ok ? 0 : 1;
      }
      return emit("check", input_bytes, g, results, ms_since(t0), code);
    }

    if (bounds->parsed()) {
      int t;
      if (bounds_t) {
        t = *bounds_t;
      } else {
        icol::TMaxResult res = icol::t_max(graph, solve_opts(g));
        if (res.status != icol::TMaxStatus::found)
          throw std::runtime_error(
              "t could not be computed; pass --t explicitly");
        t = *res.value;
      }
      icol::TBoundsReport report = icol::check_t_bounds(graph, t);
      Json results = icol::bounds_report_to_json(report);
      Json with_t;
      with_t["t"] = t;
      for (auto& [k, v] : results.items()) with_t[k] = v;
      return emit("bounds", input_bytes, g, with_t, ms_since(t0),
                  report.all_satisfied ? 0 : 1);
    }

    // corpus
    icol::CorpusReport report = icol::run_corpus(manifest);
    return emit("corpus", input_bytes, g, icol::corpus_report_to_json(report),
                ms_since(t0), report.all_pass ? 0 : 1);
  } catch (const std::invalid_argument& e) {
    std::cerr << "icol: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "icol: " << e.what() << "\n";
    return 3;
  }
}
