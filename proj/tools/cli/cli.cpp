#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "generators.hpp"
#include "pvc/approx.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"
#include "pvc/io.hpp"
#include "pvc/planar.hpp"
#include "pvc/reductions.hpp"
#include "record.hpp"

#ifndef PVC_VERSION
#define PVC_VERSION "0.0.0"
#endif

namespace pvc::cli {

namespace {

struct Shared {
  int threads = -1;
  double ceiling = 1e8;
  std::uint64_t seed = 0;
  std::string out_json;
  bool timing = false;
};

void add_shared(CLI::App* app, Shared& s) {
  app->add_option("--threads", s.threads, "Worker threads (default: PVC_THREADS, else all cores)");
  app->add_option("--ceiling", s.ceiling, "Enumeration ceiling on candidate sets")->check(CLI::PositiveNumber);
  app->add_option("--seed", s.seed, "Seed recorded with the run");
  app->add_option("--out", s.out_json, "Also write the record as JSON to this file");
  app->add_flag("--timing", s.timing, "Include wall time in the record");
}

SolveOptions options_of(const Shared& s) {
  SolveOptions o;
  if (s.threads >= 0) {
    o.threads = s.threads;
  } else if (const char* env = std::getenv("PVC_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw InputError(std::string("PVC_THREADS='") + env + "' is not a thread count");
    o.threads = static_cast<int>(v);
  } else {
    o.threads = 0;
  }
  o.ceiling = static_cast<std::uint64_t>(s.ceiling);
  return o;
}

RunRecord start(std::string_view command, std::string_view digest, const Shared& s) {
  RunRecord rec;
  rec.add("command", std::string(command));
  rec.add("input", "crc32:" + std::string(digest));
  rec.add("seed", s.seed);
  rec.add("version", PVC_VERSION);
  return rec;
}

void emit(const RunRecord& rec, const Shared& s, std::ostream& out) {
  out << rec.line() << '\n';
  if (!s.out_json.empty()) {
    std::ofstream f(s.out_json);
    if (!f) throw InputError("cannot write '" + s.out_json + "'");
    f << rec.json().dump(2) << '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

Hypergraph load_phg(const std::string& path, std::string& digest) {
  const std::string text = read_text_file(path);
  digest = crc32_hex(text);
  std::istringstream in(text);
  return read_phg(in);
}

Graph load_graph(const std::string& path, std::string& text) {
  text = read_text_file(path);
  std::istringstream in(text);
  return read_edge_graph(in);
}

std::vector<int> parse_vertex_list(const std::string& list, int n) {
  std::vector<int> out;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("bad vertex '" + item + "' in list");
    if (v < 1 || v > n) throw InputError("vertex " + item + " outside 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  return out;
}

void check_budget(int k, int n) {
  if (k < 0 || k > n) throw InputError("budget k=" + std::to_string(k) + " outside 0.." + std::to_string(n));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial VC dimension solvers, approximations and reductions", "pvc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PVC_VERSION);
  Shared shared;
  std::function<int()> action;

  // solve
  auto* solve = app.add_subcommand("solve", "Exact max partial VC dimension, or the decision version with -l");
  std::string solve_input;
  int solve_k = 0;
  std::optional<int> solve_ell;
  solve->add_option("--input", solve_input, "Hypergraph (.phg)")->required();
  solve->add_option("-k,--budget", solve_k, "Size of the vertex set")->required();
  solve->add_option("-l,--ell", solve_ell, "Class target; switches to the decision problem");
  add_shared(solve, shared);
  solve->callback([&] {
    action = [&] {
      std::string digest;
      const Hypergraph h = load_phg(solve_input, digest);
      const SolveOptions opts = options_of(shared);
      RunRecord rec = start("solve", digest, shared);
      SolveResult r = solve_ell ? solve_partial_vc_decision(h, solve_k, *solve_ell, opts)
                                : solve_max_partial_vc(h, solve_k, opts);
      rec.add("problem", std::string(problem_tag(r.problem))).add("k", solve_k);
      if (solve_ell) rec.add("ell", *solve_ell).add("decided", r.decided);
      rec.add("value", r.value).add("witness", format_members(r.witness)).add("enumerated", r.enumerated);
      if (solve_ell) rec.add("reason", r.reason);
      if (shared.timing) rec.add("time_ms", format_double(r.elapsed_ms));
      emit(rec, shared, out);
      return solve_ell && !r.decided ? kExitNo : kExitOk;
    };
  });

  // approx
  auto* approx = app.add_subcommand("approx", "Greedy max partial VC dimension with a certified bound");
  std::string approx_input;
  int approx_k = 0;
  std::string approx_method = "greedy";
  std::optional<int> approx_vc;
  approx->add_option("--input", approx_input, "Hypergraph (.phg)")->required();
  approx->add_option("-k,--budget", approx_k, "Size of the vertex set")->required();
  approx->add_option("--method", approx_method, "greedy or double-hitting")
      ->check(CLI::IsMember({"greedy", "double-hitting"}));
  approx->add_option("--vc-bound", approx_vc, "Known upper bound on the VC dimension");
  add_shared(approx, shared);
  approx->callback([&] {
    action = [&] {
      std::string digest;
      const Hypergraph h = load_phg(approx_input, digest);
      RunRecord rec = start("approx", digest, shared);
      const auto t0 = std::chrono::steady_clock::now();
      const ApproxResult a = approx_method == "greedy" ? approx_max_partial_vc(h, approx_k, approx_vc)
                                                       : approx_via_double_hitting(h, approx_k);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rec.add("method", approx_method).add("k", approx_k).add("value", a.value);
      rec.add("upper_bound", a.upper_bound);
      rec.add("ratio", std::to_string(a.claimed_ratio.numerator()) + "/" +
                           std::to_string(a.claimed_ratio.denominator()));
      rec.add("witness", format_members(a.witness));
      if (shared.timing) rec.add("time_ms", format_double(ms));
      emit(rec, shared, out);
      return kExitOk;
    };
  });

  // vcdim
  auto* vcdim = app.add_subcommand("vcdim", "VC dimension, exact or by the 2-approximation");
  std::string vc_input;
  bool vc_approx = false;
  vcdim->add_option("--input", vc_input, "Hypergraph (.phg)")->required();
  vcdim->add_flag("--approx2", vc_approx, "Use the approximation through partial VC dimension");
  add_shared(vcdim, shared);
  vcdim->callback([&] {
    action = [&] {
      std::string digest;
      const Hypergraph h = load_phg(vc_input, digest);
      const SolveOptions opts = options_of(shared);
      RunRecord rec = start("vcdim", digest, shared);
      if (vc_approx) {
        const auto t0 = std::chrono::steady_clock::now();
        const ShatterCertificate cert = approx_max_vc_dimension(h, opts.threads);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rec.add("method", "approx2").add("value", cert.dimension);
        rec.add("witness", format_members(cert.shattered)).add("verified", verify_certificate(h, cert));
        if (shared.timing) rec.add("time_ms", format_double(ms));
      } else {
        const SolveResult r = vc_dimension(h, opts);
        rec.add("method", "exact").add("value", r.value).add("witness", format_members(r.witness));
        rec.add("enumerated", r.enumerated);
        if (shared.timing) rec.add("time_ms", format_double(r.elapsed_ms));
      }
      emit(rec, shared, out);
      return kExitOk;
    };
  });

  // dt
  auto* dt = app.add_subcommand("dt", "Minimum distinguishing transversal, exact");
  std::string dt_input;
  dt->add_option("--input", dt_input, "Hypergraph (.phg)")->required();
  add_shared(dt, shared);
  dt->callback([&] {
    action = [&] {
      std::string digest;
      const Hypergraph h = load_phg(dt_input, digest);
      RunRecord rec = start("dt", digest, shared);
      const SolveResult r = min_distinguishing_transversal(h, options_of(shared));
      rec.add("value", r.value).add("witness", format_members(r.witness)).add("enumerated", r.enumerated);
      if (shared.timing) rec.add("time_ms", format_double(r.elapsed_ms));
      emit(rec, shared, out);
      return kExitOk;
    };
  });

  // baker
  auto* baker = app.add_subcommand("baker", "Layer decomposition schemes on planar neighborhood hypergraphs");
  std::string baker_graph;
  std::string baker_levels;
  std::string baker_outer;
  double baker_eps = 1.0;
  std::optional<int> baker_k;
  bool baker_min = false;
  baker->add_option("--graph", baker_graph, "Graph (.edge)")->required();
  auto* lv = baker->add_option("--levels", baker_levels, "Level file (.lvl)");
  auto* of = baker->add_option("--outer-face", baker_outer, "Outer face vertices, comma separated");
  lv->excludes(of);
  baker->add_option("--epsilon", baker_eps, "Accuracy")->required()->check(CLI::PositiveNumber);
  baker->add_option("-k,--budget", baker_k, "Size of the vertex set (max variant)");
  baker->add_flag("--min-dt", baker_min, "Minimum distinguishing transversal instead");
  add_shared(baker, shared);
  baker->callback([&] {
    action = [&] {
      std::string text;
      const Graph g = load_graph(baker_graph, text);
      LeveledPlanarGraph lg;
      if (!baker_levels.empty()) {
        const std::string lvl = read_text_file(baker_levels);
        text += lvl;
        std::istringstream in(lvl);
        lg = make_leveled(g, read_levels(in, g.num_vertices()));
      } else if (!baker_outer.empty()) {
        const auto outer = parse_vertex_list(baker_outer, g.num_vertices());
        lg = compute_levels(g, outer);
        text += "outer " + baker_outer;
      } else {
        throw InputError("baker needs --levels or --outer-face");
      }
      const SolveOptions opts = options_of(shared);
      RunRecord rec = start("baker", crc32_hex(text), shared);
      rec.add("epsilon", format_double(baker_eps)).add("levels", lg.t);
      const auto t0 = std::chrono::steady_clock::now();
      if (baker_min) {
        const BakerMinResult r = baker_min_distinguishing(lg, baker_eps, opts);
        rec.add("problem", "min-distinguishing-transversal").add("residue", r.residue);
        rec.add("residues_tried", r.residues_tried).add("residues_skipped", r.residues_skipped);
        rec.add("value", r.result.value).add("witness", format_members(r.result.witness));
      } else {
        if (!baker_k) throw InputError("baker needs -k unless --min-dt is given");
        check_budget(*baker_k, g.num_vertices());
        const BakerMaxResult r = baker_max_partial_vc(lg, *baker_k, baker_eps, opts);
        rec.add("problem", "max-partial-vc").add("k", *baker_k).add("residue", r.residue);
        rec.add("residues_tried", r.residues_tried).add("dp_value", r.dp_value);
        rec.add("value", r.result.value).add("upper_bound", r.result.upper_bound);
        rec.add("witness", format_members(r.result.witness));
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (shared.timing) rec.add("time_ms", format_double(ms));
      emit(rec, shared, out);
      return kExitOk;
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build a hardness-reduction instance and its certificate");
  std::string red_kind;
  std::string red_graph;
  int red_k = 0;
  std::string red_variant = "bipartite";
  std::string red_output;
  bool red_verify = false;
  reduce->add_option("kind", red_kind, "clique-to-vcdim, is-to-dt or mpvc-to-mpvcd")
      ->required()
      ->check(CLI::IsMember({"clique-to-vcdim", "is-to-dt", "mpvc-to-mpvcd"}));
  reduce->add_option("--graph", red_graph, "Source graph (.edge)")->required();
  reduce->add_option("-k,--budget", red_k, "Clique size, independent set size or cover budget")->required();
  reduce->add_option("--variant", red_variant, "bipartite, split or co-bipartite (clique-to-vcdim)")
      ->check(CLI::IsMember({"bipartite", "split", "co-bipartite"}));
  reduce->add_option("--output", red_output, "Prefix for the target instance and .cert sidecar");
  reduce->add_flag("--verify", red_verify, "Solve both sides and check the identity");
  add_shared(reduce, shared);
  reduce->callback([&] {
    action = [&] {
      std::string text;
      const Graph g = load_graph(red_graph, text);
      ReductionCertificate cert;
      switch (parse_kind(red_kind)) {
        case ReductionKind::kCliqueToVcdim: cert = clique_to_vcdim(g, red_k, parse_variant(red_variant)); break;
        case ReductionKind::kIsToDt: cert = is_to_disting_transversal(g, red_k); break;
        case ReductionKind::kMpvcToMpvcd: cert = mpvc_to_mpvcd(g, red_k); break;
      }
      std::ostringstream target;
      std::string ext = ".phg";
      if (cert.target_graph) {
        write_edge_graph(target, *cert.target_graph);
        ext = ".edge";
      } else {
        write_phg(target, cert.target);
      }
      std::ostringstream sidecar;
      write_certificate(sidecar, cert);

      RunRecord rec = start("reduce", crc32_hex(text), shared);
      rec.add("kind", red_kind);
      rec.add("variant", cert.variant ? std::string(variant_tag(*cert.variant)) : std::string("none"));
      rec.add("k", cert.k).add("k_prime", cert.k_prime);
      rec.add("target_n", cert.target.num_vertices()).add("target_m", cert.target.num_edges());
      rec.add("target", "crc32:" + crc32_hex(target.str()));
      if (!red_output.empty()) {
        write_file(red_output + ext, target.str());
        write_file(red_output + ".cert", sidecar.str());
        rec.add("files", red_output + ext + "," + red_output + ".cert");
      }
      int code = kExitOk;
      if (red_verify) {
        const VerifyOutcome v = verify_reduction(cert, options_of(shared));
        rec.add("holds", v.holds).add("source_value", v.source_value).add("target_value", v.target_value);
        if (!v.holds) code = kExitNo;
      }
      emit(rec, shared, out);
      return code;
    };
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Seeded instance generators");
  bool gen_hyper = false;
  bool gen_cubic = false;
  bool gen_grid = false;
  int gen_n = 8;
  int gen_m = 12;
  double gen_density = 0.5;
  int gen_rows = 4;
  int gen_cols = 4;
  std::string gen_output;
  std::string gen_levels;
  auto* fh = gen_cmd->add_flag("--hypergraph", gen_hyper, "Random twin-free hypergraph");
  auto* fc = gen_cmd->add_flag("--cubic", gen_cubic, "Random simple cubic graph");
  auto* fg = gen_cmd->add_flag("--grid", gen_grid, "Grid graph with a level file");
  fh->excludes(fc)->excludes(fg);
  fc->excludes(fg);
  gen_cmd->add_option("--n", gen_n, "Vertices");
  gen_cmd->add_option("--m", gen_m, "Edges (hypergraph)");
  gen_cmd->add_option("--density", gen_density, "Incidence probability (hypergraph)");
  gen_cmd->add_option("--rows", gen_rows, "Grid rows");
  gen_cmd->add_option("--cols", gen_cols, "Grid columns");
  gen_cmd->add_option("--output", gen_output, "Instance file")->required();
  gen_cmd->add_option("--levels", gen_levels, "Level file for --grid (default: <output>.lvl)");
  add_shared(gen_cmd, shared);
  gen_cmd->callback([&] {
    action = [&] {
      std::ostringstream text;
      RunRecord rec;
      rec.add("command", "gen");
      rec.add("seed", shared.seed).add("version", PVC_VERSION);
      if (gen_hyper) {
        Hypergraph h = gen::random_twin_free_hypergraph(gen_n, gen_m, gen_density, shared.seed);
        h = Hypergraph(h.num_vertices(), h.edges(),
                       "random twin-free n=" + std::to_string(gen_n) + " m=" + std::to_string(gen_m) +
                           " density=" + format_double(gen_density) + " seed=" + std::to_string(shared.seed));
        write_phg(text, h);
        rec.add("kind", "hypergraph").add("n", gen_n).add("m", gen_m).add("density", format_double(gen_density));
      } else if (gen_cubic) {
        int attempts = 0;
        const Graph g = gen::random_cubic(gen_n, shared.seed, &attempts);
        write_edge_graph(text, g);
        rec.add("kind", "cubic").add("n", gen_n).add("attempts", attempts);
      } else if (gen_grid) {
        const LeveledPlanarGraph lg = gen::leveled_grid(gen_rows, gen_cols);
        write_edge_graph(text, lg.graph);
        std::ostringstream lvl;
        write_levels(lvl, lg.level);
        const std::string lvl_path = gen_levels.empty() ? gen_output + ".lvl" : gen_levels;
        write_file(lvl_path, lvl.str());
        rec.add("kind", "grid").add("rows", gen_rows).add("cols", gen_cols).add("levels", lg.t);
        rec.add("level_file", lvl_path);
      } else {
        throw InputError("gen needs one of --hypergraph, --cubic, --grid");
      }
      write_file(gen_output, text.str());
      rec.add("output", "crc32:" + crc32_hex(text.str())).add("file", gen_output);
      emit(rec, shared, out);
      return kExitOk;
    };
  });

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and print a CSV table");
  BenchConfig bench_cfg;
  std::string bench_csv;
  bench->add_option("--suite", bench_cfg.suite, "ratios, vcdim, baker or double-hitting")
      ->required()
      ->check(CLI::IsMember(bench_suites()));
  bench->add_option("--instances", bench_cfg.instances, "Random instances per suite");
  bench->add_option("--csv", bench_csv, "Also write the table to this file");
  add_shared(bench, shared);
  bench->callback([&] {
    action = [&] {
      bench_cfg.seed = shared.seed;
      bench_cfg.opts = options_of(shared);
      const auto rows = run_bench(bench_cfg);
      std::ostringstream table;
      write_bench_csv(table, rows, shared.timing);
      out << table.str();
      if (!bench_csv.empty()) write_file(bench_csv, table.str());
      if (!shared.out_json.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
          nlohmann::json row{{"instance", r.instance}, {"method", r.method}, {"value", r.value},
                             {"bound", r.bound}, {"ratio", r.ratio}};
          row["opt"] = r.opt >= 0 ? nlohmann::json(r.opt) : nlohmann::json(nullptr);
          if (shared.timing) row["time_ms"] = r.time_ms;
          arr.push_back(std::move(row));
        }
        write_file(shared.out_json, arr.dump(2) + "\n");
      }
      return kExitOk;
    };
  });
  // bench seeds default to 1 rather than 0
  bench->preparse_callback([&](std::size_t) { shared.seed = 1; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace pvc::cli
