#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yaoconn/counterexamples.hpp"
#include "yaoconn/graphs.hpp"
#include "yaoconn/io.hpp"
#include "yaoconn/radius.hpp"
#include "yaoconn/svg.hpp"
#include "yaoconn/verify.hpp"

namespace {

using namespace yaoconn;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

InstanceModel model_from_name(const std::string& name) {
  if (name == "incremental-disk") return InstanceModel::incremental_disk;
  if (name == "perturbed-grid") return InstanceModel::perturbed_grid;
  throw std::runtime_error("unknown model '" + name +
                           "' (expected incremental-disk or perturbed-grid)");
}

struct GenArgs {
  std::string family;
  std::string out;
  std::string model = "incremental-disk";
  double d = 1.0;
  double eps = 0.0;
  double alpha = 1e-4;
  int r = 0;
  int n = 50;
  std::uint64_t seed = 0;
  bool eps_set = false;
  bool r_set = false;
};

int run_gen(const GenArgs& a) {
  PointSetFile file;
  if (a.family == "random") {
    std::cerr << "# master seed: " << a.seed << "\n";
    InstanceConfig cfg;
    cfg.n = a.n;
    cfg.seed = a.seed;
    cfg.model = model_from_name(a.model);
    file.points = random_connected_instance(cfg);
    file.metadata = {{"family", "random"},
                     {"model", a.model},
                     {"n", std::to_string(a.n)},
                     {"seed", std::to_string(a.seed)},
                     {"scale", fmt17(cfg.scale)}};
  } else {
    const auto fam = family_from_name(a.family);
    if (!fam) {
      throw std::runtime_error("unknown family '" + a.family +
                               "' (expected y4-lb, y3-lb, y2-lb, or random)");
    }
    ConstructionParams params;
    params.d = a.d;
    if (a.eps_set) params.eps = a.eps;
    params.alpha = a.alpha;
    if (a.r_set) params.r = a.r;
    switch (*fam) {
      case Family::y4_lower: file.points = gen_y4_lower(params); break;
      case Family::y3_lower: file.points = gen_y3_lower(params); break;
      case Family::y2_lower: file.points = gen_y2_lower(params); break;
    }
    const ConstructionParams eff = resolved_params(*fam, params);
    file.metadata = {{"family", a.family},
                     {"d", fmt17(eff.d)},
                     {"eps", fmt17(*eff.eps)},
                     {"alpha", fmt17(eff.alpha)},
                     {"r", std::to_string(*eff.r)}};
  }
  write_point_set(a.out, file);
  std::cout << "wrote " << file.points.size() << " points to " << a.out << "\n";
  return 0;
}

struct YaoArgs {
  std::string in, out;
  int k = 4;
  double d = 1.0;
  bool directed = false;
};

int run_yao(const YaoArgs& a) {
  const PointSetFile in = read_point_set(a.in);
  const auto pts = std::make_shared<const PointSet>(in.points);
  const GeomGraph gd = disk_graph(pts, a.d);
  const YaoParams params{a.k, TieBreak::smallest_index};
  const GeomGraph yao = a.directed ? yao_directed(gd, params) : yao_undirected(gd, params);
  EdgeListFile out;
  out.directed = a.directed;
  out.node_count = static_cast<int>(in.points.size());
  out.edges = yao.edges();
  write_edge_list(a.out, out);
  std::cout << "wrote " << out.edges.size() << (a.directed ? " arcs" : " edges") << " to "
            << a.out << "\n";
  return 0;
}

struct RadiusArgs {
  std::string in;
  int k = 4;
  double cap = 4.0;
};

int run_radius(const RadiusArgs& a) {
  const PointSetFile in = read_point_set(a.in);
  const RadiusResult res = connectivity_radius(in.points, a.k, a.cap);
  std::cout << "{\"bounded\": " << (res.bounded ? "true" : "false")
            << ", \"radius\": " << (res.bounded ? fmt17(res.radius) : "null")
            << ", \"radius_sq\": " << (res.bounded ? fmt17(res.radius_sq) : "null")
            << ", \"k\": " << a.k << ", \"n\": " << in.points.size()
            << ", \"cap\": " << fmt17(a.cap)
            << ", \"candidates_examined\": " << res.candidates_examined << "}\n";
  if (res.bounded) {
    std::cout << "connectivity radius for k=" << a.k << ": " << fmt17(res.radius) << " ("
              << res.candidates_examined << " candidates examined)\n";
    return 0;
  }
  std::cout << "no connectivity radius within cap " << fmt17(a.cap) << " for k=" << a.k
            << "\n";
  return 2;
}

struct VerifyArgs {
  std::string theorem = "all";
  int trials = 500;
  int n = 40;
  std::uint64_t seed = 20260817ull;
  bool trials_set = false;
};

int run_verify(const VerifyArgs& a) {
  std::cerr << "# master seed: " << a.seed << "\n";
  SuiteOptions opt;
  opt.trials = a.trials;
  opt.n = a.n;
  opt.seed = a.seed;
  if (a.trials_set) opt.samples = a.trials;
  const std::vector<ClaimResult> results = run_suites(a.theorem, opt);
  int failures = 0;
  int dumped = 0;
  for (const ClaimResult& c : results) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " | " << c.detail;
    std::cout << "\n";
    if (!c.pass) {
      ++failures;
      if (c.witness) {
        PointSetFile dump;
        dump.points = *c.witness;
        dump.metadata = c.witness_metadata;
        const std::string path = "verify-failure-" + std::to_string(++dumped) + ".json";
        write_point_set(path, dump);
        std::cout << "  witness dumped to " << path << "\n";
      }
    }
  }
  std::cout << "summary: " << (results.size() - failures) << "/" << results.size()
            << " claims passed\n";
  return failures == 0 ? 0 : 1;
}

struct PlotArgs {
  std::string in, out;
  std::vector<std::string> edge_paths;
  bool labels = false;
};

int run_plot(const PlotArgs& a) {
  const PointSetFile in = read_point_set(a.in);
  std::vector<EdgeLayer> layers;
  layers.reserve(a.edge_paths.size());
  for (const std::string& path : a.edge_paths) {
    const EdgeListFile edges = read_edge_list(path);
    validate_against(edges, in.points);
    layers.push_back(EdgeLayer{edges.edges});
  }
  const std::string svg = render_svg(in.points, layers, a.labels);
  std::ofstream outfile(a.out, std::ios::binary);
  if (!outfile) throw std::runtime_error("cannot open '" + a.out + "' for writing");
  outfile << svg;
  if (!outfile) throw std::runtime_error("failed writing '" + a.out + "'");
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yao subgraphs of disk graphs: generate, build, analyze, verify, plot"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a point set file");
  gen_cmd->add_option("--family", gen.family, "y4-lb, y3-lb, y2-lb, or random")->required();
  gen_cmd->add_option("--d", gen.d, "Target disk radius (construction families)");
  CLI::Option* eps_opt = gen_cmd->add_option("--eps", gen.eps, "Chain offset parameter");
  gen_cmd->add_option("--alpha", gen.alpha, "Chain tilt in radians");
  CLI::Option* r_opt = gen_cmd->add_option("--r", gen.r, "Chain length");
  gen_cmd->add_option("--n", gen.n, "Point count (random family)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed (random family)");
  gen_cmd->add_option("--model", gen.model, "incremental-disk or perturbed-grid");
  gen_cmd->add_option("--out", gen.out, "Output point-set file")->required();

  YaoArgs yao;
  CLI::App* yao_cmd = app.add_subcommand("yao", "Build a Yao edge list over a disk graph");
  yao_cmd->add_option("--k", yao.k, "Number of cones");
  yao_cmd->add_option("--d", yao.d, "Disk graph radius");
  yao_cmd->add_option("--in", yao.in, "Input point-set file")->required();
  yao_cmd->add_option("--out", yao.out, "Output edge-list file")->required();
  yao_cmd->add_flag("--directed", yao.directed, "Emit directed arcs instead of edges");

  RadiusArgs radius;
  CLI::App* radius_cmd =
      app.add_subcommand("radius", "Compute the exact connectivity radius");
  radius_cmd->add_option("--k", radius.k, "Number of cones");
  radius_cmd->add_option("--in", radius.in, "Input point-set file")->required();
  radius_cmd->add_option("--cap", radius.cap, "Upper bound on the search");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run claim suites");
  verify_cmd
      ->add_option("--theorem", verify.theorem, "Suite id: 1, 2, 3, 4, y2, lemmas, or all")
      ->required();
  CLI::Option* trials_opt =
      verify_cmd->add_option("--trials", verify.trials, "Randomized trial count");
  verify_cmd->add_option("--n", verify.n, "Instance size for randomized trials");
  verify_cmd->add_option("--seed", verify.seed, "Master seed");

  PlotArgs plot;
  CLI::App* plot_cmd = app.add_subcommand("plot", "Render points and edge layers as SVG");
  plot_cmd->add_option("--in", plot.in, "Input point-set file")->required();
  plot_cmd->add_option("--edges", plot.edge_paths, "Edge-list file (repeatable; drawn in order)");
  plot_cmd->add_option("--out", plot.out, "Output SVG file")->required();
  plot_cmd->add_flag("--labels", plot.labels, "Draw point labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's exit codes to the documented contract: 0 for help
    // requests, 1 for every usage error.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*gen_cmd) {
      gen.eps_set = eps_opt->count() > 0;
      gen.r_set = r_opt->count() > 0;
      return run_gen(gen);
    }
    if (*yao_cmd) return run_yao(yao);
    if (*radius_cmd) return run_radius(radius);
    if (*verify_cmd) {
      verify.trials_set = trials_opt->count() > 0;
      return run_verify(verify);
    }
    if (*plot_cmd) return run_plot(plot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
