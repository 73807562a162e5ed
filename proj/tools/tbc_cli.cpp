#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbc/evaluation.hpp"
#include "tbc/exact_betweenness.hpp"
#include "tbc/progressive.hpp"
#include "tbc/sample_bounds.hpp"
#include "tbc/samplers.hpp"
#include "tbc/score_io.hpp"
#include "tbc/temporal_distance.hpp"
#include "tbc/temporal_graph.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tbc;

enum Exit { kOk = 0, kValidation = 2, kGuardrail = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph;
  bool undirected = false;
  bool deduplicate = false;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::string opt = "sh";
  std::string out;
  std::string scores;
  std::string compare_with;
  std::size_t k = 50;
};

void add_common(CLI::App* cmd, Common& c, bool with_opt = true) {
  cmd->add_option("graph", c.graph, "Edge list: one 'u v t' triple per line")->required();
  cmd->add_flag("--undirected", c.undirected, "Treat every line as an undirected contact");
  cmd->add_flag("--dedup", c.deduplicate, "Drop repeated (u, v, t) lines");
  cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--out", c.out, "Write the JSON report here instead of stdout");
  if (with_opt) {
    cmd->add_option("--opt", c.opt, "Path optimality")->check(CLI::IsMember({"sh", "sfm", "pfm"}));
    cmd->add_option("--scores", c.scores, "Write node_id,score CSV here");
    cmd->add_option("--compare", c.compare_with, "Score CSV to evaluate the result against");
    cmd->add_option("--k", c.k, "Top-k size for --compare");
  }
}

TemporalGraph load(const Common& c) {
  LoadOptions opts;
  opts.undirected = c.undirected;
  opts.deduplicate = c.deduplicate;
  std::ifstream in(c.graph);
  if (!in) throw IoError("cannot open " + c.graph);
  return load_edge_list(in, opts);
}

ordered_json graph_json(const Common& c, const TemporalGraph& g) {
  const auto s = summarize(g);
  return {{"path", c.graph},
          {"nodes", s.nodes},
          {"edges", s.edges},
          {"lifetime", s.lifetime},
          {"dropped_self_loops", g.dropped_self_loops()},
          {"undirected", c.undirected},
          {"deduplicated", c.deduplicate}};
}

ordered_json eval_json(const EvalReport& r) {
  return {{"sup_deviation", r.sup_deviation},
          {"mse", r.mse},
          {"weighted_kendall", r.weighted_kendall},
          {"topk_intersection", r.topk_intersection},
          {"k", r.k}};
}

ordered_json stop_json(const StopReport& r) {
  ordered_json j = {{"final_sample_size", r.final_sample_size},
                    {"iterations", r.iterations},
                    {"stopped_by", std::string(to_string(r.stopped_by))},
                    {"checkpoints", r.checkpoints}};
  if (r.epsilon > 0) {
    j["xi"] = r.xi;
    j["rademacher_bound"] = r.rademacher;
    j["epsilon"] = r.epsilon;
  }
  if (r.cap) j["cap"] = *r.cap;
  if (r.max_total) j["max_dependency_sum"] = *r.max_total;
  if (r.threshold) j["threshold"] = *r.threshold;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

// Attaches scores (file or inline) and the optional comparison.
void emit_scores(ordered_json& report, const Common& c, const TemporalGraph& g, const ScoreVector& scores) {
  const auto ids = g.original_ids();
  if (!c.scores.empty()) {
    std::ostringstream csv;
    write_scores_csv(csv, ids, scores.values);
    write_text(c.scores, csv.str());
    report["scores"] = {{"file", c.scores}};
  } else {
    ordered_json rows = ordered_json::array();
    for (std::size_t v = 0; v < scores.values.size(); ++v) {
      rows.push_back({{"node_id", ids[v]}, {"score", scores.values[v]}});
    }
    report["scores"] = rows;
  }
  if (!c.compare_with.empty()) {
    std::vector<ScoreRow> mine;
    for (std::size_t v = 0; v < scores.values.size(); ++v) mine.emplace_back(ids[v], scores.values[v]);
    std::vector<ScoreRow> reference;
    try {
      reference = read_scores_csv_file(c.compare_with);
    } catch (const std::ios_base::failure& e) {
      throw IoError(e.what());
    }
    const auto [ref, got] = align_scores(reference, mine);
    report["evaluation"] = eval_json(compare(ref, got, c.k));
  }
}

void finish(ordered_json& report, const std::string& out, double seconds) {
  report["wall_seconds"] = seconds;
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

Optimality optimality(const Common& c) { return *parse_optimality(c.opt); }

ordered_json base_report(const std::string& command, const std::vector<std::string>& argv) {
  ordered_json r;
  r["schema_version"] = 1;
  r["command"] = argv;
  r["subcommand"] = command;
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> echo(argv, argv + argc);
  CLI::App app{"Temporal betweenness centrality: exact, sampled and progressive estimators"};
  app.require_subcommand(1);

  Common c;
  std::string arith = "exact";
  bool force = false;
  double max_work = 5e9;
  auto* exact = app.add_subcommand("exact", "Exact betweenness of every node");
  add_common(exact, c);
  exact->add_option("--arith", arith, "Dependency arithmetic")->check(CLI::IsMember({"exact", "fast"}));
  exact->add_flag("--force", force, "Run even above the work limit");
  exact->add_option("--max-work", max_work, "Work estimate above which the run is refused");

  std::string algo = "ob";
  std::uint64_t samples = 0;
  std::string bound;
  double epsilon = 0.1, delta = 0.1, c_univ = 0.5;
  std::uint64_t vd = 0;
  auto* fixed = app.add_subcommand("fixed", "Fixed sample size estimators");
  add_common(fixed, c);
  fixed->add_option("--algo", algo, "Estimator")->check(CLI::IsMember({"rtb", "ob", "trk"}));
  auto* samples_opt = fixed->add_option("--samples", samples, "Sample size r");
  auto* bound_opt = fixed->add_option("--bound", bound, "Derive r from a bound")
                        ->check(CLI::IsMember({"hoeffding", "vc"}));
  samples_opt->excludes(bound_opt);
  fixed->add_option("--epsilon", epsilon, "Accuracy for --bound");
  fixed->add_option("--delta", delta, "Failure probability for --bound");
  fixed->add_option("--vd", vd, "Vertex diameter for --bound vc (default: census diameter + 1)");
  fixed->add_option("--c-univ", c_univ, "Universal constant for --bound vc");
  fixed->add_option("--seed", c.seed, "Random seed");
  fixed->add_option("--arith", arith, "Accumulation arithmetic")->check(CLI::IsMember({"exact", "fast"}));

  double alpha = 1.5, c_threshold = 2.0;
  std::uint64_t max_samples = 1000000;
  std::optional<std::uint64_t> cap;
  auto* progressive = app.add_subcommand("progressive", "Progressive sampling until the bound is met");
  add_common(progressive, c);
  progressive->add_option("--algo", algo, "Estimator")->check(CLI::IsMember({"prtb", "ob", "trk"}));
  progressive->add_option("--epsilon", epsilon, "Target accuracy (ob, trk)");
  progressive->add_option("--delta", delta, "Failure probability (ob, trk)");
  progressive->add_option("--alpha", alpha, "Schedule growth factor (ob, trk)");
  progressive->add_option("--c", c_threshold, "Stopping constant (prtb)");
  progressive->add_option("--max-samples", max_samples, "Sample cap (prtb)");
  progressive->add_option("--cap", cap, "Sample cap (ob, trk; trk defaults to the Hoeffding size)");
  progressive->add_option("--seed", c.seed, "Random seed");
  progressive->add_option("--arith", arith, "Accumulation arithmetic (prtb)")
      ->check(CLI::IsMember({"exact", "fast"}));

  double tau = 0.9;
  bool without_replacement = false;
  std::optional<double> dist_epsilon;
  auto* diameter = app.add_subcommand("diameter", "Temporal diameter, connectivity and distance estimates");
  add_common(diameter, c, false);
  auto* dsamples = diameter->add_option("--samples", samples, "Number of sources (>= n means all)");
  diameter->add_option("--epsilon", dist_epsilon, "Pick ceil(ln n / eps^2) sources")->excludes(dsamples);
  diameter->add_option("--tau", tau, "Effective diameter quantile in (0, 1]");
  diameter->add_option("--seed", c.seed, "Random seed");
  diameter->add_flag("--without-replacement", without_replacement, "Draw distinct sources");

  std::string exact_csv, approx_csv;
  auto* cmp = app.add_subcommand("compare", "Compare two score files");
  cmp->add_option("exact", exact_csv, "Reference score CSV")->required();
  cmp->add_option("approx", approx_csv, "Approximate score CSV")->required();
  cmp->add_option("--k", c.k, "Top-k size");
  cmp->add_option("--out", c.out, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const Arithmetic arithmetic = arith == "fast" ? Arithmetic::Fast : Arithmetic::Exact;
    if (*exact) {
      const auto g = load(c);
      auto report = base_report("exact", echo);
      report["graph"] = graph_json(c, g);
      report["algorithm"] = "exact";
      report["optimality"] = c.opt;
      report["parameters"] = {{"arith", arith}, {"threads", c.threads}, {"max_work", max_work}, {"force", force}};
      report["estimated_work"] = estimate_exact_work(g, optimality(c));
      ExactOptions opts;
      opts.arithmetic = arithmetic;
      opts.threads = c.threads;
      opts.max_work = force ? 0 : max_work;
      const auto scores = exact_tbc(g, optimality(c), opts);
      emit_scores(report, c, g, scores);
      finish(report, c.out, seconds_since(start));
    } else if (*fixed) {
      const auto g = load(c);
      auto report = base_report("fixed", echo);
      report["graph"] = graph_json(c, g);
      report["algorithm"] = algo;
      report["optimality"] = c.opt;
      ordered_json params = {{"seed", c.seed}, {"threads", c.threads}, {"arith", arith}};
      std::uint64_t r = samples;
      if (!bound.empty()) {
        params["bound"] = bound;
        params["epsilon"] = epsilon;
        params["delta"] = delta;
        if (bound == "hoeffding") {
          r = hoeffding_size(epsilon, delta, std::max<std::size_t>(g.node_count(), 1));
        } else {
          if (optimality(c) != Optimality::Shortest) {
            throw std::invalid_argument("the vc bound applies to shortest paths only");
          }
          if (vd == 0) {
            DistanceOptions d;
            d.samples = std::max<std::size_t>(g.node_count(), 1);
            d.threads = c.threads;
            vd = estimate_distances(g, d).diameter + 1;
          }
          params["vd"] = vd;
          params["c_univ"] = c_univ;
          r = vc_size(epsilon, delta, vd, c_univ);
        }
      } else if (samples_opt->count() == 0) {
        throw std::invalid_argument("give --samples or --bound");
      }
      if (r == 0) throw std::invalid_argument("--samples must be positive");
      params["samples"] = r;
      report["parameters"] = params;
      SamplerConfig cfg;
      cfg.optimality = optimality(c);
      cfg.sample_size = r;
      cfg.seed = c.seed;
      cfg.arithmetic = arithmetic;
      cfg.threads = c.threads;
      const auto scores = run_sampler(*parse_algorithm(algo), g, cfg);
      emit_scores(report, c, g, scores);
      finish(report, c.out, seconds_since(start));
    } else if (*progressive) {
      const auto g = load(c);
      auto report = base_report("progressive", echo);
      report["graph"] = graph_json(c, g);
      report["algorithm"] = algo == "prtb" ? "prtb" : "progressive-" + algo;
      report["optimality"] = c.opt;
      ProgressiveResult result;
      if (algo == "prtb") {
        report["parameters"] = {{"c", c_threshold}, {"max_samples", max_samples}, {"seed", c.seed},
                                {"threads", c.threads}, {"arith", arith}};
        PrtbConfig cfg;
        cfg.optimality = optimality(c);
        cfg.c = c_threshold;
        cfg.seed = c.seed;
        cfg.max_samples = max_samples;
        cfg.arithmetic = arithmetic;
        cfg.threads = c.threads;
        result = prtb_estimate(g, cfg);
      } else {
        ordered_json params = {{"epsilon", epsilon}, {"delta", delta}, {"alpha", alpha},
                               {"seed", c.seed}, {"threads", c.threads}};
        require_unit_open(epsilon, "epsilon");
        require_unit_open(delta, "delta");
        params["initial_sample_size"] = initial_sample_size(epsilon, delta);
        if (cap) params["cap"] = *cap;
        report["parameters"] = params;
        ProgressiveConfig cfg;
        cfg.optimality = optimality(c);
        cfg.algorithm = *parse_algorithm(algo);
        cfg.epsilon = epsilon;
        cfg.delta = delta;
        cfg.alpha = alpha;
        cfg.seed = c.seed;
        cfg.iteration_cap = cap;
        cfg.threads = c.threads;
        result = progressive_estimate(g, cfg);
      }
      report["stop_report"] = stop_json(result.report);
      emit_scores(report, c, g, result.scores);
      finish(report, c.out, seconds_since(start));
    } else if (*diameter) {
      const auto g = load(c);
      auto report = base_report("diameter", echo);
      report["graph"] = graph_json(c, g);
      report["algorithm"] = "distance-sampling";
      DistanceOptions opts;
      opts.tau = tau;
      opts.seed = c.seed;
      opts.threads = c.threads;
      opts.without_replacement = without_replacement;
      if (dist_epsilon) {
        opts.samples = recommended_sample_size(g.node_count(), *dist_epsilon);
      } else if (dsamples->count() > 0) {
        opts.samples = samples;
      } else {
        opts.samples = g.node_count();
      }
      report["parameters"] = {{"samples", opts.samples}, {"tau", tau}, {"seed", c.seed},
                              {"without_replacement", without_replacement}, {"threads", c.threads}};
      if (dist_epsilon) report["parameters"]["epsilon"] = *dist_epsilon;
      const auto d = estimate_distances(g, opts);
      report["summary"] = {{"diameter", d.diameter},
                           {"effective_diameter", d.effective_diameter},
                           {"effective_diameter_interpolated", d.effective_diameter_interpolated},
                           {"tau", d.tau},
                           {"connectivity_rate", d.connectivity_rate},
                           {"avg_distance", d.avg_distance},
                           {"avg_distance_defined", d.avg_distance_defined},
                           {"reach_profile", d.reach_profile},
                           {"sample_size", d.sample_size},
                           {"census", d.census}};
      finish(report, c.out, seconds_since(start));
    } else if (*cmp) {
      std::vector<ScoreRow> a, b;
      try {
        a = read_scores_csv_file(exact_csv);
        b = read_scores_csv_file(approx_csv);
      } catch (const std::ios_base::failure& e) {
        throw IoError(e.what());
      }
      const auto [x, y] = align_scores(a, b);
      auto report = base_report("compare", echo);
      report["parameters"] = {{"exact", exact_csv}, {"approx", approx_csv}, {"k", c.k}};
      report["evaluation"] = eval_json(compare(x, y, c.k));
      finish(report, c.out, seconds_since(start));
    }
  } catch (const GuardrailExceeded& e) {
    std::cerr << "refused: " << e.what() << " (use --force)\n";
    return kGuardrail;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
