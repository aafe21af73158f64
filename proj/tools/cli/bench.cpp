#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "generators.hpp"
#include "pvc/approx.hpp"
#include "pvc/errors.hpp"
#include "pvc/planar.hpp"
#include "record.hpp"

namespace pvc::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string ratio_text(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string instance_name(const std::string& suite, std::uint64_t seed, int index) {
  std::ostringstream s;
  s << suite << "-s" << seed << "-" << index;
  return s.str();
}

void ratios(const BenchConfig& cfg, std::vector<BenchRow>& rows) {
  gen::Rng rng(cfg.seed);
  for (int i = 0; i < cfg.instances; ++i) {
    const int n = 6 + static_cast<int>(rng() % 7);
    const int m = 8 + static_cast<int>(rng() % 23);
    const Hypergraph h = gen::random_twin_free_hypergraph(n, m, 0.4, rng());
    for (int k = 1; k <= std::min(4, n - 1); ++k) {
      const auto t0 = Clock::now();
      const ApproxResult a = approx_max_partial_vc(h, k);
      const double ms = since(t0);
      const SolveResult exact = solve_max_partial_vc(h, k, cfg.opts);
      rows.push_back({instance_name("ratios", cfg.seed, i) + "-k" + std::to_string(k), a.method, a.value,
                      a.upper_bound, ratio_text(a.claimed_ratio), exact.value, ms});
    }
  }
}

void vcdim(const BenchConfig& cfg, std::vector<BenchRow>& rows) {
  gen::Rng rng(cfg.seed);
  for (int i = 0; i < cfg.instances; ++i) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const int m = 1 + static_cast<int>(rng() % 40);
    const Hypergraph h = gen::random_hypergraph(rng, n, m, 0.5);
    const auto t0 = Clock::now();
    const ShatterCertificate cert = approx_max_vc_dimension(h, cfg.opts.threads);
    const double ms = since(t0);
    const SolveResult exact = vc_dimension(h, cfg.opts);
    int bound = 0;
    while (bound + 1 <= n && (1 << (bound + 1)) <= distinct_edge_count(h)) ++bound;
    rows.push_back({instance_name("vcdim", cfg.seed, i), "approx2", cert.dimension, bound,
                    ratio_text(ratio_of(bound, cert.dimension)), exact.value, ms});
  }
}

void baker(const BenchConfig& cfg, std::vector<BenchRow>& rows) {
  for (int side = 3; side <= 5; ++side) {
    const LeveledPlanarGraph lg = gen::leveled_grid(side, side);
    const Hypergraph h = neighborhood_hypergraph(lg.graph);
    for (int k = 2; k <= 4; ++k) {
      const SolveResult exact = solve_max_partial_vc(h, k, cfg.opts);
      for (double eps : {0.5, 1.0, 2.0}) {
        const auto t0 = Clock::now();
        const BakerMaxResult r = baker_max_partial_vc(lg, k, eps, cfg.opts);
        const double ms = since(t0);
        rows.push_back({"grid" + std::to_string(side) + "x" + std::to_string(side) + "-k" + std::to_string(k) +
                            "-eps" + format_double(eps),
                        "baker", r.result.value, r.result.upper_bound, ratio_text(r.result.claimed_ratio),
                        exact.value, ms});
      }
    }
  }
}

void double_hitting(const BenchConfig& cfg, std::vector<BenchRow>& rows) {
  gen::Rng rng(cfg.seed);
  for (int i = 0; i < cfg.instances; ++i) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = gen::random_graph(rng, n, 0.4);
    std::vector<VertexSet> edges;
    for (auto [u, v] : g.edges()) edges.push_back(make_set(n, {u, v}));
    const Hypergraph h(n, std::move(edges));
    for (int k = 2; k <= std::min(5, n); ++k) {
      const auto t0 = Clock::now();
      const ApproxResult a = approx_via_double_hitting(h, k);
      const double ms = since(t0);
      const SolveResult exact = solve_max_partial_vc(h, k, cfg.opts);
      rows.push_back({instance_name("double-hitting", cfg.seed, i) + "-k" + std::to_string(k), a.method, a.value,
                      a.upper_bound, ratio_text(a.claimed_ratio), exact.value, ms});
    }
  }
}

}  // namespace

const std::vector<std::string>& bench_suites() {
  static const std::vector<std::string> names{"ratios", "vcdim", "baker", "double-hitting"};
  return names;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.instances < 0) throw InputError("instance count must be nonnegative");
  std::vector<BenchRow> rows;
  if (config.suite == "ratios") {
    ratios(config, rows);
  } else if (config.suite == "vcdim") {
    vcdim(config, rows);
  } else if (config.suite == "baker") {
    baker(config, rows);
  } else if (config.suite == "double-hitting") {
    double_hitting(config, rows);
  } else {
    throw InputError("unknown suite '" + config.suite + "'");
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool timing) {
  out << "instance,method,value,bound,ratio,opt,time_ms\n";
  for (const auto& r : rows) {
    out << r.instance << ',' << r.method << ',' << r.value << ',' << r.bound << ',' << r.ratio << ',';
    if (r.opt >= 0) out << r.opt;
    out << ',';
    if (timing) out << format_double(r.time_ms);
    out << '\n';
  }
}

}  // namespace pvc::cli
